#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "posetval/errors.hpp"

namespace posetval {

using CoverEdge = std::pair<int, int>;  // (i, j) means i is covered by j

struct PosetBuild;

// Finite poset on labels 1..n with the order kept as closure bitmasks and the
// Hasse diagram as a sorted cover list. n is capped at 64 so a row of the
// closure fits one word.
class Poset {
 public:
  using Build = PosetBuild;

  Poset() : n_(0) {}

  // Builds from cover candidates; duplicates and transitively implied edges
  // are dropped and reported. A directed cycle is an error.
  static PosetBuild from_covers(int n, std::vector<CoverEdge> edges);

  // Convenience for cover lists already known to be irredundant.
  static Poset from_covers_strict(int n, std::vector<CoverEdge> edges);

  // Builds from an arbitrary strict-relation list (closure taken, covers
  // extracted).
  static Poset from_relations(int n, const std::vector<CoverEdge>& relations) {
    check_n(n);
    Poset p;
    p.n_ = n;
    p.up_ = closure_of(n, relations);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (!p.less(i, j)) continue;
        bool cover = true;
        for (int k = 1; k <= n && cover; ++k)
          if (k != i && k != j && p.less(i, k) && p.less(k, j)) cover = false;
        if (cover) p.covers_.push_back({i, j});
      }
    }
    std::sort(p.covers_.begin(), p.covers_.end());
    return p;
  }

  int n() const { return n_; }
  const std::vector<CoverEdge>& covers() const { return covers_; }

  bool leq(int i, int j) const { return i == j || less(i, j); }
  bool less(int i, int j) const { return (up_[i - 1] >> (j - 1)) & 1u; }
  bool comparable(int i, int j) const { return leq(i, j) || leq(j, i); }

  bool operator==(const Poset& o) const { return n_ == o.n_ && covers_ == o.covers_; }
  bool operator!=(const Poset& o) const { return !(*this == o); }

  std::vector<int> minimal_elements() const {
    std::vector<int> r;
    for (int j = 1; j <= n_; ++j) {
      bool min = true;
      for (int i = 1; i <= n_ && min; ++i)
        if (less(i, j)) min = false;
      if (min) r.push_back(j);
    }
    return r;
  }

  std::vector<int> maximal_elements() const {
    std::vector<int> r;
    for (int i = 1; i <= n_; ++i) {
      bool max = true;
      for (int j = 1; j <= n_ && max; ++j)
        if (less(i, j)) max = false;
      if (max) r.push_back(i);
    }
    return r;
  }

  std::vector<int> upper_covers(int i) const {
    std::vector<int> r;
    for (const auto& [a, b] : covers_)
      if (a == i) r.push_back(b);
    std::sort(r.begin(), r.end());
    return r;
  }

  std::vector<int> lower_covers(int i) const {
    std::vector<int> r;
    for (const auto& [a, b] : covers_)
      if (b == i) r.push_back(a);
    std::sort(r.begin(), r.end());
    return r;
  }

  // Bitmask (bit k-1 = element k) of { j : j <= i }.
  std::uint64_t down_mask(int i) const {
    std::uint64_t m = bit(i);
    for (int j = 1; j <= n_; ++j)
      if (less(j, i)) m |= bit(j);
    return m;
  }

  std::uint64_t up_mask(int i) const {
    return up_[i - 1] | bit(i);
  }

  std::vector<CoverEdge> incomparable_pairs() const {
    std::vector<CoverEdge> r;
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j)
        if (!comparable(i, j)) r.push_back({i, j});
    return r;
  }

  // Every element has at most one upper cover.
  bool is_forest() const {
    std::vector<int> out(n_ + 1, 0);
    for (const auto& [i, j] : covers_)
      if (++out[i] > 1) return false;
    return true;
  }

  // Connected components of the Hasse diagram (isolated elements included),
  // each sorted, listed by smallest element.
  std::vector<std::vector<int>> components() const {
    std::vector<int> comp(n_ + 1, 0);
    int c = 0;
    for (int s = 1; s <= n_; ++s) {
      if (comp[s]) continue;
      ++c;
      std::vector<int> stack{s};
      comp[s] = c;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& [i, j] : covers_) {
          int o = i == v ? j : (j == v ? i : 0);
          if (o && !comp[o]) {
            comp[o] = c;
            stack.push_back(o);
          }
        }
      }
    }
    std::vector<std::vector<int>> r(c);
    for (int v = 1; v <= n_; ++v) r[comp[v] - 1].push_back(v);
    return r;
  }

  bool is_connected() const { return components().size() == 1; }

  // All linear extensions in lexicographic order: backtracking that always
  // tries the currently minimal elements in increasing label order.
  std::vector<std::vector<int>> linear_extensions() const {
    std::vector<std::vector<int>> out;
    for_each_linear_extension([&](const std::vector<int>& w) { out.push_back(w); });
    return out;
  }

  template <typename F>
  void for_each_linear_extension(F&& f) const {
    std::vector<int> indeg(n_ + 1, 0);
    for (const auto& [i, j] : covers_) ++indeg[j];
    std::vector<int> w;
    w.reserve(n_);
    std::vector<bool> used(n_ + 1, false);
    extend(indeg, used, w, f);
  }

  std::uint64_t linear_extension_count() const {
    std::uint64_t c = 0;
    for_each_linear_extension([&](const std::vector<int>&) { ++c; });
    return c;
  }

  // Nonempty down-closed subsets inducing a connected Hasse subgraph, sorted
  // by (size, lexicographic element list). Enumeration is over all subsets,
  // so the element count is capped.
  std::vector<std::vector<int>> connected_order_ideals() const {
    check_enumerable();
    std::vector<std::vector<int>> out;
    std::vector<std::uint64_t> down(n_ + 1);
    for (int i = 1; i <= n_; ++i) down[i] = down_mask(i);
    const std::uint64_t full = (1ull << n_) - 1;
    for (std::uint64_t mask = 1; mask <= full; ++mask) {
      bool ideal = true;
      for (int i = 1; i <= n_ && ideal; ++i)
        if ((mask & bit(i)) && (down[i] & ~mask)) ideal = false;
      if (!ideal || !mask_connected(mask)) continue;
      std::vector<int> elems;
      for (int i = 1; i <= n_; ++i)
        if (mask & bit(i)) elems.push_back(i);
      out.push_back(std::move(elems));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    return out;
  }

  // All nonempty order ideals, same sort order.
  std::vector<std::vector<int>> order_ideals() const {
    check_enumerable();
    std::vector<std::vector<int>> out;
    std::vector<std::uint64_t> down(n_ + 1);
    for (int i = 1; i <= n_; ++i) down[i] = down_mask(i);
    const std::uint64_t full = (1ull << n_) - 1;
    for (std::uint64_t mask = 1; mask <= full; ++mask) {
      bool ideal = true;
      for (int i = 1; i <= n_ && ideal; ++i)
        if ((mask & bit(i)) && (down[i] & ~mask)) ideal = false;
      if (!ideal) continue;
      std::vector<int> elems;
      for (int i = 1; i <= n_; ++i)
        if (mask & bit(i)) elems.push_back(i);
      out.push_back(std::move(elems));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    return out;
  }

  // Removes the given Hasse edges and rebuilds from the survivors; the result
  // may be disconnected. Surviving covers stay covers: a bypass path would
  // have contradicted their cover status in the original poset.
  Poset delete_hasse_edges(const std::vector<CoverEdge>& edges) const {
    std::vector<CoverEdge> keep;
    for (const auto& e : covers_) {
      if (std::find(edges.begin(), edges.end(), e) == edges.end()) keep.push_back(e);
    }
    return from_covers_strict(n_, std::move(keep));
  }

  // P with the extra relation i < j (used by the order-cone recursions).
  Poset with_relation(int i, int j) const {
    std::vector<CoverEdge> rel;
    for (int a = 1; a <= n_; ++a)
      for (int b = 1; b <= n_; ++b)
        if (a != b && less(a, b)) rel.push_back({a, b});
    rel.push_back({i, j});
    return from_relations(n_, rel);
  }

 private:
  static void check_n(int n) {
    if (n < 1 || n > 64) throw input_error("element count must be between 1 and 64");
  }

  void check_enumerable() const {
    if (n_ > 30) throw shape_error("subset enumeration capped at 30 elements");
  }

  static std::uint64_t bit(int i) { return 1ull << (i - 1); }

  bool mask_connected(std::uint64_t mask) const {
    if (mask == 0) return false;
    int start = 0;
    for (int i = 1; i <= n_; ++i)
      if (mask & bit(i)) {
        start = i;
        break;
      }
    std::uint64_t seen = bit(start);
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& [i, j] : covers_) {
        int o = i == v ? j : (j == v ? i : 0);
        if (o && (mask & bit(o)) && !(seen & bit(o))) {
          seen |= bit(o);
          stack.push_back(o);
        }
      }
    }
    return seen == mask;
  }

  // Strict-order closure as bitmask rows; throws on a directed cycle.
  static std::vector<std::uint64_t> closure_of(int n, const std::vector<CoverEdge>& edges) {
    std::vector<std::uint64_t> up(n, 0);
    for (const auto& [i, j] : edges) up[i - 1] |= bit(j);
    // Warshall over bits
    for (int k = 1; k <= n; ++k)
      for (int i = 1; i <= n; ++i)
        if ((up[i - 1] >> (k - 1)) & 1u) up[i - 1] |= up[k - 1];
    for (int i = 1; i <= n; ++i)
      if ((up[i - 1] >> (i - 1)) & 1u) throw cycle_error("cover relation contains a cycle");
    return up;
  }

  template <typename F>
  void extend(std::vector<int>& indeg, std::vector<bool>& used, std::vector<int>& w,
              F&& f) const {
    if (static_cast<int>(w.size()) == n_) {
      f(w);
      return;
    }
    for (int v = 1; v <= n_; ++v) {
      if (used[v] || indeg[v] != 0) continue;
      used[v] = true;
      w.push_back(v);
      for (const auto& [i, j] : covers_)
        if (i == v) --indeg[j];
      extend(indeg, used, w, f);
      for (const auto& [i, j] : covers_)
        if (i == v) ++indeg[j];
      w.pop_back();
      used[v] = false;
    }
  }

  int n_;
  std::vector<CoverEdge> covers_;
  std::vector<std::uint64_t> up_;
};

struct PosetBuild {
  Poset poset;
  std::vector<CoverEdge> dropped;  // transitively implied input edges
};

inline PosetBuild Poset::from_covers(int n, std::vector<CoverEdge> edges) {
  check_n(n);
  for (auto& [i, j] : edges) {
    if (i < 1 || i > n || j < 1 || j > n || i == j)
      throw input_error("cover edge out of range");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Poset p;
  p.n_ = n;
  p.up_ = closure_of(n, edges);

  PosetBuild b;
  std::vector<CoverEdge> kept;
  for (const auto& [i, j] : edges) {
    bool redundant = false;
    for (int k = 1; k <= n && !redundant; ++k)
      if (k != i && k != j && p.less(i, k) && p.less(k, j)) redundant = true;
    if (redundant) b.dropped.push_back({i, j});
    else kept.push_back({i, j});
  }
  p.covers_ = std::move(kept);
  b.poset = std::move(p);
  return b;
}

inline Poset Poset::from_covers_strict(int n, std::vector<CoverEdge> edges) {
  PosetBuild b = from_covers(n, std::move(edges));
  if (!b.dropped.empty()) throw input_error("unexpected redundant cover edge");
  return b.poset;
}

// Order induced by a permutation w of 1..n: i < j as integers and i appears
// before j in w.
inline Poset poset_from_permutation(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> pos(n + 1, 0);
  for (int k = 0; k < n; ++k) {
    if (w[k] < 1 || w[k] > n || pos[w[k]])
      throw input_error("not a permutation of 1..n");
    pos[w[k]] = k + 1;
  }
  std::vector<CoverEdge> rel;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (pos[i] < pos[j]) rel.push_back({i, j});
  return Poset::from_relations(n, rel);
}

// No indices p < q < r with w_p < w_r < w_q.
inline bool is_132_avoiding(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      for (int r = q + 1; r < n; ++r)
        if (w[p] < w[r] && w[r] < w[q]) return false;
  return true;
}

}  // namespace posetval
