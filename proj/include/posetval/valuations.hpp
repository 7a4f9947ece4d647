#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "posetval/cone.hpp"
#include "posetval/errors.hpp"
#include "posetval/geom.hpp"
#include "posetval/linden.hpp"
#include "posetval/notch.hpp"
#include "posetval/planar.hpp"
#include "posetval/poset.hpp"
#include "posetval/poset_cycles.hpp"
#include "posetval/series.hpp"
#include "posetval/skew.hpp"

namespace posetval {

namespace detail {

inline std::vector<long long> cover_vector(int n, int i, int j) {
  std::vector<long long> v(n, 0);
  v[i - 1] = 1;
  v[j - 1] = -1;
  return v;
}

inline std::vector<std::vector<long long>> cover_vectors(const Poset& p) {
  std::vector<std::vector<long long>> vs;
  for (const auto& [i, j] : p.covers()) vs.push_back(cover_vector(p.n(), i, j));
  return vs;
}

inline std::vector<long long> mask_vector(int n, std::uint64_t mask) {
  std::vector<long long> v(n, 0);
  for (int i = 1; i <= n; ++i)
    if ((mask >> (i - 1)) & 1u) v[i - 1] = 1;
  return v;
}

inline GeomFactor mask_factor(int n, std::uint64_t mask) {
  GeomFactor v(n, 0);
  for (int i = 1; i <= n; ++i)
    if ((mask >> (i - 1)) & 1u) v[i - 1] = 1;
  return v;
}

inline GeomFactor root_factor(int n, int i, int j) {
  GeomFactor v(n, 0);
  v[i - 1] = 1;
  v[j - 1] = -1;
  return v;
}

inline std::vector<GeomFactor> root_factors(const Poset& p) {
  std::vector<GeomFactor> vs;
  for (const auto& [i, j] : p.covers()) vs.push_back(root_factor(p.n(), i, j));
  return vs;
}

// m can be taken last among the elements of `ideal`.
inline bool removable(const Poset& p, std::uint64_t ideal, int m) {
  return (p.up_mask(m) & ideal) == (1ull << (m - 1));
}

}  // namespace detail

// Sum over linear extensions of 1/((x_{w1}-x_{w2})...(x_{w,n-1}-x_{wn})),
// fully reduced. Vanishes identically iff the Hasse diagram is disconnected.
//
// The sum is grouped by the prefix ideal and its last element rather than
// taken term by term: each state value is the same kind of sum for the
// restricted poset with its last element pinned, so the cancellations that
// keep the reduced form small happen at every level and wide posets with many
// extensions stay tractable.
inline LinDenRat psi_direct(const Poset& p) {
  const int n = p.n();
  std::map<std::pair<std::uint64_t, int>, LinDenRat> memo;
  auto ending_at = [&](auto&& self, std::uint64_t ideal, int m) -> const LinDenRat& {
    auto key = std::make_pair(ideal, m);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const std::uint64_t rest = ideal & ~(1ull << (m - 1));
    LinDenRat v = LinDenRat::zero(n);
    if (rest == 0) {
      v = LinDenRat::from_polynomial(Polynomial::constant(n, 1));
    } else {
      std::vector<LinDenRat> parts;
      for (int m2 = 1; m2 <= n; ++m2)
        if (((rest >> (m2 - 1)) & 1u) && detail::removable(p, rest, m2))
          parts.push_back(self(self, rest, m2)
                              .divide_linear(detail::cover_vector(n, m2, m)));
      v = balanced_sum(std::move(parts), n);
    }
    return memo.emplace(key, std::move(v)).first->second;
  };
  const std::uint64_t full = n == 0 ? 0 : (1ull << n) - 1;
  std::vector<LinDenRat> parts;
  for (int m = 1; m <= n; ++m)
    if (detail::removable(p, full, m))
      parts.push_back(ending_at(ending_at, full, m));
  return balanced_sum(std::move(parts), n);
}

// Sum over linear extensions of 1/(x_{w1} (x_{w1}+x_{w2}) ... (x_{w1}+...+x_{wn})),
// grouped by the prefix ideal: the inner sum over extensions of the
// restriction to an ideal is the same sum for the restricted poset, already
// reduced. Only genuine ideals are ever visited.
inline LinDenRat phi_direct(const Poset& p) {
  const int n = p.n();
  std::map<std::uint64_t, LinDenRat> memo;
  auto of_ideal = [&](auto&& self, std::uint64_t ideal) -> const LinDenRat& {
    if (auto it = memo.find(ideal); it != memo.end()) return it->second;
    LinDenRat v = LinDenRat::zero(n);
    if (ideal == 0) {
      v = LinDenRat::from_polynomial(Polynomial::constant(n, 1));
    } else {
      std::vector<LinDenRat> parts;
      for (int m = 1; m <= n; ++m)
        if (((ideal >> (m - 1)) & 1u) && detail::removable(p, ideal, m))
          parts.push_back(self(self, ideal & ~(1ull << (m - 1))));
      v = balanced_sum(std::move(parts), n)
              .divide_linear(detail::mask_vector(n, ideal));
    }
    return memo.emplace(ideal, std::move(v)).first->second;
  };
  const std::uint64_t full = n == 0 ? 0 : (1ull << n) - 1;
  return of_ideal(of_ideal, full);
}

// Closed form for forests: 1 / prod_i (sum of x_j over j <= i).
inline LinDenRat phi_forest(const Poset& p) {
  if (!p.is_forest()) throw shape_error("poset is not a forest");
  const int n = p.n();
  std::vector<std::vector<long long>> forms;
  for (int i = 1; i <= n; ++i)
    forms.push_back(detail::mask_vector(n, p.down_mask(i)));
  return LinDenRat::reciprocal(n, forms);
}

// Closed form when the Hasse diagram is a spanning tree: 1 / prod of covers.
inline LinDenRat psi_tree(const Poset& p) {
  if (!p.is_connected() || static_cast<int>(p.covers().size()) != p.n() - 1)
    throw shape_error("Hasse diagram is not a spanning tree");
  return LinDenRat::reciprocal(p.n(), detail::cover_vectors(p));
}

namespace detail {

// Minimal and maximal elements of the subposet induced on `verts`.
inline std::pair<std::vector<int>, std::vector<int>> induced_extremes(
    const Poset& p, const std::vector<int>& verts) {
  std::vector<int> mins, maxs;
  for (int v : verts) {
    bool has_below = false, has_above = false;
    for (int u : verts) {
      if (u == v) continue;
      if (p.less(u, v)) has_below = true;
      if (p.less(v, u)) has_above = true;
    }
    if (!has_below) mins.push_back(v);
    if (!has_above) maxs.push_back(v);
  }
  return {mins, maxs};
}

}  // namespace detail

// Closed form when the Hasse diagram is connected with exactly one circuit C:
// (sum_{i in min(C)} x_i - sum_{j in max(C)} x_j) / prod of covers, extremes
// taken in the subposet induced on C's vertices.
inline LinDenRat psi_unicyclic(const Poset& p) {
  auto cs = circuits(p);
  if (!p.is_connected() || cs.size() != 1)
    throw shape_error("Hasse diagram is not connected unicyclic");
  auto [mins, maxs] = detail::induced_extremes(p, cs.front().vertices);
  Polynomial num(p.n());
  for (int i : mins) num += Polynomial::variable(p.n(), i - 1);
  for (int j : maxs) num -= Polynomial::variable(p.n(), j - 1);
  return LinDenRat::from_parts(std::move(num), detail::cover_vectors(p));
}

// Lattice-path expansion for a connected skew diagram: sum over paths of
// 1/prod (x_i - y_j), in variables x_1..x_r, y_1..y_c (y_j stored at r+j).
inline LinDenRat psi_skew(const SkewDiagram& d) {
  const int r = d.rows(), c = d.cols();
  const int n = r + c;
  std::vector<LinDenRat> terms;
  for (const auto& path : lattice_paths(d)) {
    std::vector<std::vector<long long>> forms;
    for (const auto& [i, j] : path)
      forms.push_back(detail::cover_vector(n, i, r + j));
    terms.push_back(LinDenRat::reciprocal(n, forms));
  }
  return balanced_sum(std::move(terms), n);
}

// Region product formula: prod over bounded regions of (x_min - x_max), over
// the cover product. A disconnected poset has vanishing sum regardless of the
// embedding, and that is what is returned.
inline LinDenRat psi_planar(const Poset& p, const PlanarEmbedding& emb) {
  auto regions = bounded_regions(p, emb);
  if (!p.is_connected()) return LinDenRat::zero(p.n());
  Polynomial num = Polynomial::constant(p.n(), 1);
  for (const auto& rg : regions) {
    num *= Polynomial::variable(p.n(), rg.min - 1) -
           Polynomial::variable(p.n(), rg.max - 1);
  }
  return LinDenRat::from_parts(std::move(num), detail::cover_vectors(p));
}

struct BiconnectedFactor {
  std::vector<int> support;  // original labels, ascending
  Poset component;           // relabeled 1..|support| order-preservingly
  LinDenRat factor;          // psi of the component, in the original variables
};

// Splits the Hasse diagram into biconnected components; the product of the
// factors equals psi_direct(P) for connected P.
inline std::vector<BiconnectedFactor> factor_biconnected(const Poset& p) {
  const int n = p.n();
  std::vector<BiconnectedFactor> out;
  for (const auto& block : biconnected_components(p)) {
    BiconnectedFactor f;
    for (const auto& [i, j] : block) {
      f.support.push_back(i);
      f.support.push_back(j);
    }
    std::sort(f.support.begin(), f.support.end());
    f.support.erase(std::unique(f.support.begin(), f.support.end()),
                    f.support.end());
    std::vector<int> rank(n + 1, 0);
    for (std::size_t k = 0; k < f.support.size(); ++k)
      rank[f.support[k]] = static_cast<int>(k) + 1;
    std::vector<CoverEdge> edges;
    for (const auto& [i, j] : block) edges.push_back({rank[i], rank[j]});
    f.component =
        Poset::from_covers_strict(static_cast<int>(f.support.size()), edges);
    std::vector<int> var_map(f.support.size());
    for (std::size_t k = 0; k < f.support.size(); ++k)
      var_map[k] = f.support[k] - 1;
    f.factor = psi_direct(f.component).rename_variables(n, var_map);
    out.push_back(std::move(f));
  }
  return out;
}

// Closing a notch multiplies the specialized sum by the surviving cover form:
//   psi(closed) = (x_a - x_keep) * [psi(P)]_{x_drop = x_keep}   (vee)
//   psi(closed) = (x_keep - x_a) * [psi(P)]_{x_drop = x_keep}   (wedge)
// with keep = b, drop = c, compared after compacting labels. First of the
// pair is psi of the closed poset, second the transformed psi of P.
inline std::pair<LinDenRat, LinDenRat> notch_identity_sides(const Poset& p,
                                                            const Notch& nt) {
  const int n = p.n();
  auto closed = close_notch(p, nt);
  LinDenRat lhs = psi_direct(closed.poset);

  LinDenRat rhs = psi_direct(p).substitute_equal(nt.b - 1, nt.c - 1);
  std::vector<long long> mult(n, 0);
  mult[nt.a - 1] = nt.shape == NotchShape::vee ? 1 : -1;
  mult[nt.b - 1] = nt.shape == NotchShape::vee ? -1 : 1;
  rhs = rhs.multiply_linear(mult);
  std::vector<int> var_map(n);
  for (int x = 1; x <= n; ++x) var_map[x - 1] = closed.relabel[x - 1] - 1;
  rhs = rhs.rename_variables(n - 1, var_map);
  return {std::move(lhs), std::move(rhs)};
}

inline bool notch_identity_check(const Poset& p, const Notch& nt) {
  auto [lhs, rhs] = notch_identity_sides(p, nt);
  return lhs == rhs;
}

// Fixture with two circuits sharing a cover; its sum factors as
// (x1-x5)(x1+x4-x5-x6) over the seven cover forms.
inline LinDenRat psi_p1_figure_regression() {
  auto p = Poset::from_covers_strict(
      6, {{1, 2}, {2, 5}, {1, 3}, {3, 5}, {1, 6}, {4, 5}, {4, 6}});
  return psi_direct(p);
}

// Hilbert series of the root-cone semigroup: sum over extensions of
// 1/prod (1 - X_{wi} X_{w,i+1}^{-1}), reduced. Grouped like psi_direct, by
// the prefix ideal and its last element.
inline GeomRat hilb_root(const Poset& p) {
  const int n = p.n();
  std::map<std::pair<std::uint64_t, int>, GeomRat> memo;
  auto ending_at = [&](auto&& self, std::uint64_t ideal, int m) -> const GeomRat& {
    auto key = std::make_pair(ideal, m);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const std::uint64_t rest = ideal & ~(1ull << (m - 1));
    GeomRat v = GeomRat::zero(n);
    if (rest == 0) {
      v = GeomRat::one(n);
    } else {
      std::vector<GeomRat> parts;
      for (int m2 = 1; m2 <= n; ++m2)
        if (((rest >> (m2 - 1)) & 1u) && detail::removable(p, rest, m2))
          parts.push_back(self(self, rest, m2)
                              .divide_factor(detail::root_factor(n, m2, m)));
      v = balanced_sum(std::move(parts), n);
    }
    return memo.emplace(key, std::move(v)).first->second;
  };
  const std::uint64_t full = n == 0 ? 0 : (1ull << n) - 1;
  std::vector<GeomRat> parts;
  for (int m = 1; m <= n; ++m)
    if (detail::removable(p, full, m))
      parts.push_back(ending_at(ending_at, full, m));
  return balanced_sum(std::move(parts), n);
}

// Sum over extensions of [prod over descents w_i > w_{i+1} of X^{w1..wi}]
// divided by prod_{i=1}^n (1 - X^{w1..wi}). Grouped by the prefix ideal and
// its last element; a descent between the last two elements contributes the
// monomial on the next-to-last prefix.
inline GeomRat hilb_strict(const Poset& p) {
  const int n = p.n();
  std::map<std::pair<std::uint64_t, int>, GeomRat> memo;
  auto ending_at = [&](auto&& self, std::uint64_t ideal, int m) -> const GeomRat& {
    auto key = std::make_pair(ideal, m);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const std::uint64_t rest = ideal & ~(1ull << (m - 1));
    GeomRat v = GeomRat::zero(n);
    if (rest == 0) {
      v = GeomRat::one(n);
    } else {
      Polynomial descent(n);
      descent.add_term(Exponents(detail::mask_factor(n, rest)), Rational(1));
      const GeomRat descent_mono = GeomRat::from_polynomial(std::move(descent));
      std::vector<GeomRat> parts;
      for (int m2 = 1; m2 <= n; ++m2)
        if (((rest >> (m2 - 1)) & 1u) && detail::removable(p, rest, m2)) {
          const GeomRat& prev = self(self, rest, m2);
          parts.push_back(m2 > m ? prev * descent_mono : prev);
        }
      v = balanced_sum(std::move(parts), n);
    }
    v = v.divide_factor(detail::mask_factor(n, ideal));
    return memo.emplace(key, std::move(v)).first->second;
  };
  const std::uint64_t full = n == 0 ? 0 : (1ull << n) - 1;
  std::vector<GeomRat> parts;
  for (int m = 1; m <= n; ++m)
    if (detail::removable(p, full, m))
      parts.push_back(ending_at(ending_at, full, m));
  return balanced_sum(std::move(parts), n);
}

namespace detail {

// Lexicographically first linear extension.
inline std::vector<int> first_extension(const Poset& p) {
  std::vector<int> w;
  std::uint64_t placed = 0;
  for (int step = 0; step < p.n(); ++step) {
    for (int v = 1; v <= p.n(); ++v) {
      if ((placed >> (v - 1)) & 1u) continue;
      if ((p.down_mask(v) & ~(1ull << (v - 1)) & ~placed) != 0) continue;
      w.push_back(v);
      placed |= 1ull << (v - 1);
      break;
    }
  }
  return w;
}

}  // namespace detail

// Hilbert series of the weak cone's lattice points. The strict-shape
// decomposition applies verbatim only when P is naturally labeled, so the
// poset is first relabeled along its lexicographically first linear extension
// and the variables are mapped back afterwards.
inline GeomRat hilb_wt(const Poset& p) {
  const int n = p.n();
  auto w0 = detail::first_extension(p);
  std::vector<int> rank(n + 1, 0);
  for (int k = 0; k < n; ++k) rank[w0[k]] = k + 1;
  std::vector<CoverEdge> edges;
  for (const auto& [i, j] : p.covers()) edges.push_back({rank[i], rank[j]});
  Poset natural = Poset::from_covers_strict(n, edges);
  std::vector<int> var_map(n);
  for (int k = 0; k < n; ++k) var_map[k] = w0[k] - 1;
  return hilb_strict(natural).rename_variables(n, var_map);
}

// Principal-ideal closed form for forests:
// [prod over descent covers i <. j, i > j of X^{P_{<=i}}] / prod_i (1 - X^{P_{<=i}}).
inline GeomRat hilb_forest(const Poset& p) {
  if (!p.is_forest()) throw shape_error("poset is not a forest");
  const int n = p.n();
  std::vector<GeomFactor> factors;
  Exponents num_e(n, 0);
  for (int i = 1; i <= n; ++i)
    factors.push_back(detail::mask_factor(n, p.down_mask(i)));
  for (const auto& [i, j] : p.covers()) {
    if (i > j) {
      auto d = detail::mask_factor(n, p.down_mask(i));
      for (int k = 0; k < n; ++k) num_e[k] += d[k];
    }
  }
  Polynomial num(n);
  num.add_term(num_e, Rational(1));
  return GeomRat::from_parts(std::move(num), factors);
}

// Hook data of a forest: h(i) = |P_{<=i}|, descent covers (i <. j with
// i > j), and maj(P) = sum of h(i) over descents.
struct HookData {
  std::vector<long long> hooks;      // hooks[i-1] = h(i)
  std::vector<CoverEdge> descents;   // covers i <. j with i > j
  long long maj = 0;
};

inline HookData hook_data(const Poset& p) {
  if (!p.is_forest()) throw shape_error("poset is not a forest");
  HookData h;
  for (int i = 1; i <= p.n(); ++i)
    h.hooks.push_back(static_cast<long long>(__builtin_popcountll(p.down_mask(i))));
  for (const auto& [i, j] : p.covers()) {
    if (i > j) {
      h.descents.push_back({i, j});
      h.maj += h.hooks[i - 1];
    }
  }
  return h;
}

struct QHook {
  Polynomial direct;   // sum over extensions of q^{maj(w)}, univariate in q
  Polynomial formula;  // q^{maj(P)} [n]!_q / prod [h(i)]_q
  bool equal = false;
};

// Major-index q-hook formula for forests, computed both ways. The quotient
// of q-factorials is evaluated exactly as prod (1-q^k) / prod (1-q^{h(i)}).
inline QHook qhook_check(const Poset& p) {
  auto h = hook_data(p);
  const int n = p.n();

  QHook out;
  out.direct = Polynomial(1);
  p.for_each_linear_extension([&](const std::vector<int>& w) {
    int maj = 0;
    for (int i = 0; i + 1 < n; ++i)
      if (w[i] > w[i + 1]) maj += i + 1;
    out.direct.add_term({maj}, Rational(1));
  });

  Polynomial lead(1);
  lead.add_term({static_cast<int>(h.maj)}, Rational(1));
  GeomRat f = GeomRat::from_polynomial(std::move(lead));
  for (int k = 1; k <= n; ++k) f = f.multiply_factor({k});
  for (long long hk : h.hooks) f = f.divide_factor({static_cast<int>(hk)});
  if (!f.denominator().empty())
    throw shape_error("hook quotient failed to reduce to a polynomial");
  out.formula = f.numerator();
  out.equal = out.direct == out.formula;
  return out;
}

// Oriented circuit rendered as the binomial W(C) - A(C) in edge variables.
struct CircuitBinomial {
  OrientedCircuit circuit;
  std::vector<CoverEdge> with_edges;
  std::vector<CoverEdge> against_edges;
};

inline std::vector<CircuitBinomial> circuit_binomials(const Poset& p) {
  std::vector<CircuitBinomial> out;
  for (auto& c : circuits(p)) {
    CircuitBinomial b;
    b.with_edges = c.with_edges();
    b.against_edges = c.against_edges();
    b.circuit = std::move(c);
    out.push_back(std::move(b));
  }
  return out;
}

// Complete-intersection shape prod (1 - X^{delta_i}) / prod of cover factors.
// The caller supplies one relation degree per independent circuit, so the
// count must be #covers - dim of the root cone (= n - #components).
inline GeomRat hilb_complete_intersection(
    const Poset& p, const std::vector<std::vector<int>>& degrees) {
  const int n = p.n();
  const int dim = n - static_cast<int>(p.components().size());
  if (static_cast<int>(p.covers().size()) - dim !=
      static_cast<int>(degrees.size()))
    throw shape_error("relation degree count does not match covers - dim");
  GeomRat r = GeomRat::reciprocal(n, detail::root_factors(p));
  for (const auto& d : degrees) r = r.multiply_factor(d);
  return r;
}

// Alternating deletion identity along one circuit: with W the circuit's
// upward edge set, sum_{E subset W} (-1)^{|E|} psi(P minus E) = 0.
inline LinDenRat main_transformation_sum(const Poset& p, const OrientedCircuit& c) {
  auto W = c.with_edges();
  std::vector<LinDenRat> terms;
  for (std::uint64_t mask = 0; mask < (1ull << W.size()); ++mask) {
    std::vector<CoverEdge> del;
    for (std::size_t t = 0; t < W.size(); ++t)
      if ((mask >> t) & 1u) del.push_back(W[t]);
    LinDenRat s = psi_direct(p.delete_hasse_edges(del));
    terms.push_back(del.size() % 2 == 0 ? s : -s);
  }
  return balanced_sum(std::move(terms), p.n());
}

inline bool main_transformation_check(const Poset& p, const OrientedCircuit& c) {
  return main_transformation_sum(p, c).is_zero();
}

// All-circuits variant; a poset without circuits has nothing to check.
inline bool main_transformation_check(const Poset& p) {
  auto cs = circuits(p);
  if (cs.empty()) throw input_error("poset has no circuit");
  for (const auto& c : cs)
    if (!main_transformation_check(p, c)) return false;
  return true;
}

enum class ConeKind { root, wt };

// The residue of the Hilbert series recovers the continuous valuation:
// root cone against psi_direct (d = n-1, connected only), weak cone against
// phi_direct (d = n).
inline bool total_residue_check(const Poset& p, ConeKind kind) {
  if (kind == ConeKind::root) {
    if (!p.is_connected())
      throw shape_error("root-cone residue check needs a connected poset");
    return total_residue(hilb_root(p), p.n() - 1) == psi_direct(p);
  }
  return total_residue(hilb_wt(p), p.n()) == phi_direct(p);
}

}  // namespace posetval
