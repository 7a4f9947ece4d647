#pragma once

#include <algorithm>
#include <vector>

#include "posetval/errors.hpp"
#include "posetval/linden.hpp"
#include "posetval/poset.hpp"
#include "posetval/rational.hpp"
#include "posetval/simplex.hpp"

namespace posetval {

// Lattice a cone's integer structure is measured against: the root lattice
// with basis e_k - e_{k+1} (k = 1..n-1), or the full lattice Z^n.
enum class LatticeTag { root, weight };

// Polyhedral cone attached to a poset. Generators and rays are kept in
// ambient Z^n coordinates; rays come from the structure theorems (cover
// vectors for the order cone, connected-ideal indicators for the weight-side
// cone), not from a double-description computation.
struct Cone {
  int ambient = 0;
  LatticeTag tag = LatticeTag::root;
  std::vector<std::vector<long long>> generators;
  std::vector<std::vector<long long>> rays;
};

namespace detail {

// Coordinates of an ambient vector in the root-lattice basis: partial sums
// v_1 + ... + v_k. Requires total sum zero.
inline std::vector<long long> root_coords(const std::vector<long long>& v) {
  std::vector<long long> c(v.size() - 1);
  long long run = 0;
  for (std::size_t k = 0; k + 1 < v.size(); ++k) {
    run += v[k];
    c[k] = run;
  }
  if (run + v.back() != 0)
    throw shape_error("vector lies outside the root lattice");
  return c;
}

inline Int bareiss_det(std::vector<std::vector<Int>> a) {
  const int d = static_cast<int>(a.size());
  if (d == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < d - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < d; ++i)
        if (a[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < d; ++i) {
      for (int j = k + 1; j < d; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[d - 1][d - 1] : -a[d - 1][d - 1];
}

inline int rational_rank(const std::vector<std::vector<long long>>& vs) {
  std::vector<std::vector<Rational>> m;
  for (const auto& v : vs) m.emplace_back(v.begin(), v.end());
  int rank = 0;
  const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  for (int c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(m.size()); ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

// Index of the sublattice spanned by the vectors (given in the relevant
// lattice's basis) inside its saturation: the gcd of all maximal minors.
// Linear dependence is an error.
inline Int lattice_index(const std::vector<std::vector<long long>>& vectors) {
  const int d = static_cast<int>(vectors.size());
  if (d == 0) return 1;
  const int L = static_cast<int>(vectors[0].size());
  if (detail::rational_rank(vectors) < d)
    throw dependence_error("vectors are linearly dependent");

  // gcd over all d x d column minors
  std::vector<int> pick(d);
  for (int i = 0; i < d; ++i) pick[i] = i;
  Int g = 0;
  while (true) {
    std::vector<std::vector<Int>> sub(d, std::vector<Int>(d));
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) sub[r][c] = vectors[r][pick[c]];
    Int det = detail::bareiss_det(std::move(sub));
    if (det < 0) det = -det;
    g = gcd(g, det);
    if (g == 1) break;
    int t = d - 1;
    while (t >= 0 && pick[t] == L - d + t) --t;
    if (t < 0) break;
    ++pick[t];
    for (int s = t + 1; s < d; ++s) pick[s] = pick[s - 1] + 1;
  }
  return g;
}

// Vectors of the cone expressed in its tagged lattice's basis.
inline std::vector<std::vector<long long>> lattice_vectors(
    const Cone& k, const std::vector<std::vector<long long>>& ambient) {
  if (k.tag == LatticeTag::weight) return ambient;
  std::vector<std::vector<long long>> out;
  for (const auto& v : ambient) out.push_back(detail::root_coords(v));
  return out;
}

inline int lattice_dim(const Cone& k) {
  return k.tag == LatticeTag::root ? k.ambient - 1 : k.ambient;
}

// Cone of the order relations, R+{e_i - e_j : i < j in P}, measured against
// the root lattice. Its extreme rays are exactly the cover vectors.
inline Cone root_cone(const Poset& p) {
  Cone k;
  k.ambient = p.n();
  k.tag = LatticeTag::root;
  for (int i = 1; i <= p.n(); ++i) {
    for (int j = 1; j <= p.n(); ++j) {
      if (i != j && p.less(i, j)) {
        std::vector<long long> v(p.n(), 0);
        v[i - 1] = 1;
        v[j - 1] = -1;
        k.generators.push_back(std::move(v));
      }
    }
  }
  for (const auto& [i, j] : p.covers()) {
    std::vector<long long> v(p.n(), 0);
    v[i - 1] = 1;
    v[j - 1] = -1;
    k.rays.push_back(std::move(v));
  }
  return k;
}

// Cone { x >= 0 : x_i >= x_j for i < j in P } in the full lattice. Its
// extreme rays are the indicators of nonempty connected order ideals; those
// of all nonempty ideals generate.
inline Cone wt_cone(const Poset& p) {
  Cone k;
  k.ambient = p.n();
  k.tag = LatticeTag::weight;
  for (const auto& ideal : p.order_ideals()) {
    std::vector<long long> v(p.n(), 0);
    for (int e : ideal) v[e - 1] = 1;
    k.generators.push_back(std::move(v));
  }
  for (const auto& ideal : p.connected_order_ideals()) {
    std::vector<long long> v(p.n(), 0);
    for (int e : ideal) v[e - 1] = 1;
    k.rays.push_back(std::move(v));
  }
  return k;
}

struct Simpliciality {
  bool simplicial = false;
  bool unimodular = false;  // meaningful only when simplicial
};

// Simplicial means the rays are linearly independent; the cone need not span
// its lattice (root cones of disconnected posets do not). Unimodularity is
// the index of the ray span inside its saturation.
inline Simpliciality is_simplicial(const Cone& k) {
  Simpliciality s;
  auto lv = lattice_vectors(k, k.rays);
  if (detail::rational_rank(lv) != static_cast<int>(lv.size())) return s;
  s.simplicial = true;
  s.unimodular = lv.empty() || lattice_index(lv) == 1;
  return s;
}

// Exact membership p in cone(generators) via phase-one simplex.
inline bool cone_member(const std::vector<Rational>& p, const Cone& k) {
  std::vector<std::vector<Rational>> cols;
  for (const auto& g : k.generators) cols.emplace_back(g.begin(), g.end());
  return nonneg_solution_exists(cols, p);
}

// Laplace-transform valuation of a simplicial cone of full rank in its
// lattice: |det of the rays| / prod <x, ray>.
inline LinDenRat s_simplicial(const Cone& k) {
  auto lv = lattice_vectors(k, k.rays);
  const int d = lattice_dim(k);
  if (static_cast<int>(lv.size()) != d || detail::rational_rank(lv) != d)
    throw shape_error("cone is not simplicial of full rank");
  std::vector<std::vector<Int>> m;
  for (const auto& v : lv) m.emplace_back(v.begin(), v.end());
  // transpose-free: determinant of the square ray matrix
  Int det = detail::bareiss_det(std::move(m));
  if (det < 0) det = -det;
  return LinDenRat::from_parts(
      Polynomial::constant(k.ambient, Rational(det)), k.rays);
}

// Signed indicator identity for a cyclic family: W cyclic with respect to V
// (some positive combination of all of W lands in cone(V)) forces
//   sum_{B subset of W} (-1)^|B| [p in cone(V + B)] = 0 for every p.
// Verified on the given sample points; the cyclicity precondition itself is
// established by exact feasibility.
inline bool alternating_chi_check(int ambient,
                                  const std::vector<std::vector<long long>>& W,
                                  const std::vector<std::vector<long long>>& V,
                                  const std::vector<std::vector<Rational>>& samples) {
  if (W.empty()) throw cyclicity_error("W must be nonempty");
  // a_w >= 1, b_v >= 0 with sum a_w w = sum b_v v; substitute a = 1 + a'.
  std::vector<std::vector<Rational>> cols;
  for (const auto& w : W) cols.emplace_back(w.begin(), w.end());
  for (const auto& v : V) {
    std::vector<Rational> c(v.begin(), v.end());
    for (auto& x : c) x = -x;
    cols.push_back(std::move(c));
  }
  std::vector<Rational> rhs(ambient, Rational(0));
  for (const auto& w : W)
    for (int i = 0; i < ambient; ++i) rhs[i] -= Rational(w[i]);
  if (!nonneg_solution_exists(cols, rhs))
    throw cyclicity_error("W is not cyclic with respect to V");

  const std::size_t nw = W.size();
  for (const auto& p : samples) {
    long long total = 0;
    for (std::size_t mask = 0; mask < (1ull << nw); ++mask) {
      std::vector<std::vector<Rational>> gen;
      for (const auto& v : V) gen.emplace_back(v.begin(), v.end());
      int bits = 0;
      for (std::size_t t = 0; t < nw; ++t) {
        if ((mask >> t) & 1u) {
          gen.emplace_back(W[t].begin(), W[t].end());
          ++bits;
        }
      }
      if (nonneg_solution_exists(gen, p)) total += bits % 2 == 0 ? 1 : -1;
    }
    if (total != 0) return false;
  }
  return true;
}

}  // namespace posetval
