#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "posetval/errors.hpp"
#include "posetval/poset.hpp"

namespace posetval {

enum class NotchShape { vee, wedge };

// A vee-notch (a, b, c): a is covered by both b and c, and b, c fall into
// different components once the down-set of a is removed. A wedge-notch is
// the dual (a covers b and c; up-set removed).
struct Notch {
  NotchShape shape;
  int a, b, c;  // b < c

  bool operator==(const Notch& o) const {
    return shape == o.shape && a == o.a && b == o.b && c == o.c;
  }
};

namespace detail {

// Component id per element of the Hasse diagram restricted to `keep`.
inline std::vector<int> restricted_components(const Poset& p, std::uint64_t keep) {
  const int n = p.n();
  std::vector<int> comp(n + 1, 0);
  int c = 0;
  for (int s = 1; s <= n; ++s) {
    if (comp[s] || !((keep >> (s - 1)) & 1u)) continue;
    ++c;
    std::vector<int> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& [i, j] : p.covers()) {
        int o = i == v ? j : (j == v ? i : 0);
        if (o && ((keep >> (o - 1)) & 1u) && !comp[o]) {
          comp[o] = c;
          stack.push_back(o);
        }
      }
    }
  }
  return comp;
}

inline bool notch_condition(const Poset& p, const Notch& nt) {
  std::uint64_t removed =
      nt.shape == NotchShape::vee ? p.down_mask(nt.a) : p.up_mask(nt.a);
  std::uint64_t keep = 0;
  for (int i = 1; i <= p.n(); ++i)
    if (!((removed >> (i - 1)) & 1u)) keep |= 1ull << (i - 1);
  if (!((keep >> (nt.b - 1)) & 1u) || !((keep >> (nt.c - 1)) & 1u)) return false;
  auto comp = restricted_components(p, keep);
  return comp[nt.b] != comp[nt.c];
}

}  // namespace detail

// All valid notches: vee-notches first, then wedge-notches, each sorted by
// (a, b, c).
inline std::vector<Notch> find_notches(const Poset& p) {
  std::vector<Notch> out;
  for (int shape = 0; shape < 2; ++shape) {
    NotchShape s = shape == 0 ? NotchShape::vee : NotchShape::wedge;
    for (int a = 1; a <= p.n(); ++a) {
      std::vector<int> nb =
          s == NotchShape::vee ? p.upper_covers(a) : p.lower_covers(a);
      for (std::size_t x = 0; x < nb.size(); ++x) {
        for (std::size_t y = x + 1; y < nb.size(); ++y) {
          Notch nt{s, a, nb[x], nb[y]};
          if (detail::notch_condition(p, nt)) out.push_back(nt);
        }
      }
    }
  }
  return out;
}

struct ClosedNotch {
  Poset poset;
  std::vector<int> relabel;  // relabel[x-1] is the new label of old x
};

// Identifies b with c; the merged class keeps min(b, c) and all labels are
// compacted to 1..n-1. Element count and Hasse edge count each drop by one.
inline ClosedNotch close_notch(const Poset& p, const Notch& nt) {
  const int n = p.n();
  auto check_cover = [&](int lo, int hi) {
    const auto& cs = p.covers();
    return std::find(cs.begin(), cs.end(), CoverEdge{lo, hi}) != cs.end();
  };
  bool covers_ok = nt.shape == NotchShape::vee
                       ? (check_cover(nt.a, nt.b) && check_cover(nt.a, nt.c))
                       : (check_cover(nt.b, nt.a) && check_cover(nt.c, nt.a));
  if (nt.b == nt.c || !covers_ok || !detail::notch_condition(p, nt))
    throw notch_error("fields do not form a notch");

  const int keep = std::min(nt.b, nt.c);
  const int drop = std::max(nt.b, nt.c);
  std::vector<int> relabel(n);
  for (int x = 1; x <= n; ++x) {
    int y = x == drop ? keep : x;
    relabel[x - 1] = y - (y > drop ? 1 : 0);
  }

  std::vector<CoverEdge> edges;
  for (const auto& [i, j] : p.covers())
    edges.push_back({relabel[i - 1], relabel[j - 1]});
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Poset::Build b = Poset::from_covers(n - 1, std::move(edges));
  if (!b.dropped.empty() ||
      b.poset.covers().size() + 1 != p.covers().size())
    throw notch_error("closing the notch did not collapse exactly one edge");
  return {std::move(b.poset), std::move(relabel)};
}

}  // namespace posetval
