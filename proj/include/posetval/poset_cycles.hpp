#pragma once

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

#include "posetval/poset.hpp"

namespace posetval {

// Maximal 2-edge-connected pieces of the Hasse diagram: every cover edge lies
// in exactly one block (a bridge forms a 2-vertex block). Blocks are given as
// sorted edge lists, ordered by their smallest edge.
inline std::vector<std::vector<CoverEdge>> biconnected_components(const Poset& p) {
  const int n = p.n();
  std::vector<std::vector<std::pair<int, int>>> adj(n + 1);  // (neighbor, edge idx)
  const auto& covers = p.covers();
  for (std::size_t k = 0; k < covers.size(); ++k) {
    adj[covers[k].first].push_back({covers[k].second, static_cast<int>(k)});
    adj[covers[k].second].push_back({covers[k].first, static_cast<int>(k)});
  }

  std::vector<int> num(n + 1, 0), low(n + 1, 0);
  std::vector<int> edge_stack;
  std::vector<std::vector<CoverEdge>> blocks;
  int counter = 0;

  std::function<void(int, int)> dfs = [&](int v, int parent_edge) {
    num[v] = low[v] = ++counter;
    for (const auto& [w, ei] : adj[v]) {
      if (ei == parent_edge) continue;
      if (num[w] == 0) {
        edge_stack.push_back(ei);
        dfs(w, ei);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= num[v]) {
          std::vector<CoverEdge> block;
          while (true) {
            int e = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(covers[e]);
            if (e == ei) break;
          }
          std::sort(block.begin(), block.end());
          blocks.push_back(std::move(block));
        }
      } else if (num[w] < num[v]) {
        edge_stack.push_back(ei);
        low[v] = std::min(low[v], num[w]);
      }
    }
  };

  for (int v = 1; v <= n; ++v)
    if (num[v] == 0) dfs(v, -1);

  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

// A circuit of the Hasse diagram in its canonical orientation: the vertex
// walk starts at the smallest vertex on the circuit and proceeds toward the
// smaller of its two circuit neighbors. Steps traversing a cover upward are
// flagged.
struct OrientedCircuit {
  std::vector<int> vertices;           // v_0 ... v_{k-1}, closing back to v_0
  std::vector<CoverEdge> steps;        // directed traversal pairs
  std::vector<bool> upward;            // steps[t] is a cover of P

  std::vector<CoverEdge> with_edges() const {
    std::vector<CoverEdge> r;
    for (std::size_t t = 0; t < steps.size(); ++t)
      if (upward[t]) r.push_back(steps[t]);
    return r;
  }

  std::vector<CoverEdge> against_edges() const {
    std::vector<CoverEdge> r;
    for (std::size_t t = 0; t < steps.size(); ++t)
      if (!upward[t]) r.push_back({steps[t].second, steps[t].first});
    return r;
  }

  bool operator==(const OrientedCircuit& o) const { return vertices == o.vertices; }
};

// All simple cycles of the Hasse diagram, each reported once in canonical
// orientation; sorted by vertex walk.
inline std::vector<OrientedCircuit> circuits(const Poset& p) {
  const int n = p.n();
  std::vector<std::vector<int>> adj(n + 1);
  std::vector<std::vector<bool>> is_cover(n + 1, std::vector<bool>(n + 1, false));
  for (const auto& [i, j] : p.covers()) {
    adj[i].push_back(j);
    adj[j].push_back(i);
    is_cover[i][j] = true;
  }
  for (int v = 1; v <= n; ++v) std::sort(adj[v].begin(), adj[v].end());

  std::vector<OrientedCircuit> out;
  std::vector<int> path;
  std::vector<bool> on_path(n + 1, false);

  std::function<void(int, int)> grow = [&](int s, int v) {
    for (int w : adj[v]) {
      if (w == s && path.size() >= 3) {
        if (path[1] < path.back()) {  // canonical direction, one emission
          OrientedCircuit c;
          c.vertices = path;
          for (std::size_t t = 0; t < path.size(); ++t) {
            int a = path[t], b = path[(t + 1) % path.size()];
            c.steps.push_back({a, b});
            c.upward.push_back(is_cover[a][b]);
          }
          out.push_back(std::move(c));
        }
        continue;
      }
      if (w <= s || on_path[w]) continue;
      on_path[w] = true;
      path.push_back(w);
      grow(s, w);
      path.pop_back();
      on_path[w] = false;
    }
  };

  for (int s = 1; s <= n; ++s) {
    path.assign(1, s);
    std::fill(on_path.begin(), on_path.end(), false);
    on_path[s] = true;
    grow(s, s);
  }

  std::sort(out.begin(), out.end(),
            [](const OrientedCircuit& a, const OrientedCircuit& b) {
              return a.vertices < b.vertices;
            });
  return out;
}

}  // namespace posetval
