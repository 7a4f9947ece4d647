#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "posetval/errors.hpp"
#include "posetval/poset.hpp"

namespace posetval {

// Rotation system for the Hasse diagram of P extended by a bottom element
// (encoded 0) joined to all minimal elements and a top element (encoded n+1)
// joined to all maximal elements: rotation[v] is the clockwise cycle of
// neighbors around v.
struct PlanarEmbedding {
  std::map<int, std::vector<int>> rotation;
};

// A bounded face of the extended Hasse diagram avoiding the artificial
// bottom/top, reported as its extremes and the two saturated chains joining
// them (both listed min to max; chain_a is the lexicographically smaller).
struct Region {
  int min, max;
  std::vector<int> chain_a, chain_b;

  bool operator==(const Region& o) const {
    return min == o.min && max == o.max && chain_a == o.chain_a && chain_b == o.chain_b;
  }
};

// Faces of the supplied rotation system, validated two ways: the Euler count
// V - E + F = 2 (planarity of the embedding) and the requirement that every
// face boundary decomposes into exactly two monotone chains, the shape face
// boundaries take in an upward drawing. Faces touching the artificial
// bottom/top merge into the unbounded part once those are removed, so the
// regions returned are precisely the faces avoiding both.
inline std::vector<Region> bounded_regions(const Poset& p, const PlanarEmbedding& emb) {
  const int n = p.n();
  const int bot = 0, top = n + 1;

  std::set<CoverEdge> hat_covers(p.covers().begin(), p.covers().end());
  for (int m : p.minimal_elements()) hat_covers.insert({bot, m});
  for (int m : p.maximal_elements()) hat_covers.insert({m, top});

  std::map<int, std::set<int>> nbrs;
  for (int v = bot; v <= top; ++v) nbrs[v];
  for (const auto& [i, j] : hat_covers) {
    nbrs[i].insert(j);
    nbrs[j].insert(i);
  }

  // Rotation must list exactly the extended-Hasse neighbors of every vertex.
  if (emb.rotation.size() != static_cast<std::size_t>(n + 2))
    throw not_strongly_planar_error("embedding must list every vertex including 0 and n+1");
  std::map<int, std::map<int, int>> index;  // v -> neighbor -> rotation position
  for (const auto& [v, cyc] : emb.rotation) {
    if (v < bot || v > top)
      throw not_strongly_planar_error("embedding lists an unknown vertex");
    std::set<int> seen(cyc.begin(), cyc.end());
    if (seen.size() != cyc.size() || seen != nbrs[v])
      throw not_strongly_planar_error("rotation does not match the Hasse neighbors");
    for (std::size_t k = 0; k < cyc.size(); ++k)
      index[v][cyc[k]] = static_cast<int>(k);
  }

  // Face tracing: after arriving at v from u, leave along the neighbor
  // following u in clockwise order around v.
  std::vector<CoverEdge> directed;
  for (const auto& [i, j] : hat_covers) {
    directed.push_back({i, j});
    directed.push_back({j, i});
  }
  std::sort(directed.begin(), directed.end());
  std::set<CoverEdge> unvisited(directed.begin(), directed.end());

  std::vector<std::vector<int>> faces;  // vertex walks
  for (const auto& start : directed) {
    if (!unvisited.count(start)) continue;
    std::vector<int> walk;
    CoverEdge e = start;
    do {
      unvisited.erase(e);
      walk.push_back(e.first);
      const auto& cyc = emb.rotation.at(e.second);
      int k = index[e.second][e.first];
      int next = cyc[(k + 1) % cyc.size()];
      e = {e.second, next};
    } while (e != start);
    faces.push_back(std::move(walk));
  }

  const int V = n + 2;
  const int E = static_cast<int>(hat_covers.size());
  const int F = static_cast<int>(faces.size());
  if (V - E + F != 2)
    throw not_strongly_planar_error("rotation system is not planar");

  std::vector<Region> regions;
  for (const auto& walk : faces) {
    const int L = static_cast<int>(walk.size());
    std::vector<bool> up(L);
    for (int t = 0; t < L; ++t) {
      int a = walk[t], b = walk[(t + 1) % L];
      if (hat_covers.count({a, b})) up[t] = true;
      else if (hat_covers.count({b, a})) up[t] = false;
      else throw not_strongly_planar_error("face walk left the Hasse diagram");
    }
    int reversals = 0, start = -1;
    for (int t = 0; t < L; ++t) {
      bool prev = up[(t + L - 1) % L];
      if (prev != up[t]) {
        ++reversals;
        if (!prev && up[t]) start = t;
      }
    }
    if (reversals != 2)
      throw not_strongly_planar_error("a face boundary is not two monotone chains");

    bool artificial = false;
    for (int v : walk)
      if (v == bot || v == top) artificial = true;
    if (artificial) continue;

    Region r;
    r.min = walk[start];
    int k = start;
    r.chain_a.push_back(walk[k]);
    while (up[k]) {
      k = (k + 1) % L;
      r.chain_a.push_back(walk[k]);
    }
    r.max = walk[k];
    std::vector<int> desc{walk[k]};
    while (k != start) {
      k = (k + 1) % L;
      desc.push_back(walk[k]);
    }
    std::reverse(desc.begin(), desc.end());
    r.chain_b = std::move(desc);
    if (r.chain_b < r.chain_a) std::swap(r.chain_a, r.chain_b);
    regions.push_back(std::move(r));
  }

  std::sort(regions.begin(), regions.end(), [](const Region& a, const Region& b) {
    return std::tie(a.min, a.max, a.chain_a, a.chain_b) <
           std::tie(b.min, b.max, b.chain_a, b.chain_b);
  });
  return regions;
}

}  // namespace posetval
