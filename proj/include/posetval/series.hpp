#pragma once

#include <vector>

#include "posetval/bernoulli.hpp"
#include "posetval/geom.hpp"
#include "posetval/linden.hpp"
#include "posetval/polynomial.hpp"
#include "posetval/rational.hpp"

namespace posetval {

namespace detail {

// p * (sum coeffs_i x_i), keeping only terms of total degree <= cap.
inline Polynomial mul_linear_truncated(const Polynomial& p, const std::vector<int>& coeffs,
                                       int cap) {
  const int n = p.nvars();
  Polynomial r(n);
  Exponents e(n);
  for (const auto& [e0, c] : p.terms()) {
    int deg = 0;
    for (int i = 0; i < n; ++i) deg += e0[i];
    if (deg + 1 > cap) continue;
    for (int i = 0; i < n; ++i) {
      if (coeffs[i] == 0) continue;
      e = e0;
      e[i] += 1;
      r.add_term(e, c * Rational(coeffs[i]));
    }
  }
  return r;
}

// Truncation of exp(sum coeffs_i x_i) at total degree cap, by Horner in the
// linear form: intermediate degrees never exceed cap.
inline Polynomial exp_series(int nvars, const std::vector<int>& coeffs, int cap) {
  std::vector<Rational> inv_fact(cap + 1);
  Rational f = 1;
  inv_fact[0] = 1;
  for (int k = 1; k <= cap; ++k) {
    f *= k;
    inv_fact[k] = Rational(1) / f;
  }
  Polynomial acc = Polynomial::constant(nvars, inv_fact[cap]);
  for (int k = cap - 1; k >= 0; --k) {
    acc = mul_linear_truncated(acc, coeffs, cap);
    acc += Polynomial::constant(nvars, inv_fact[k]);
  }
  return acc;
}

// p * (sum_m B_m t^m / m!) truncated at total degree cap, t the linear form
// with the given coefficients, evaluated by Horner so every multiplication is
// by a linear form.
inline Polynomial mul_bernoulli_series_truncated(const Polynomial& p,
                                                 const std::vector<int>& coeffs, int cap) {
  std::vector<Rational> c(cap + 1);
  Rational f = 1;
  for (int m = 0; m <= cap; ++m) {
    if (m > 0) f *= m;
    c[m] = bernoulli(m) / f;
  }
  Polynomial acc = p * c[cap];
  for (int m = cap - 1; m >= 0; --m) {
    acc = mul_linear_truncated(acc, coeffs, cap);
    acc += p * c[m];
  }
  return acc;
}

}  // namespace detail

// Laplace-transform valuation of a d-dimensional cone, read off from a
// Hilbert-series representation F = num / prod (1 - X^u_k), N factors with
// multiplicity. Substituting X_i = e^{x_i} makes F a Laurent series whose
// degree -d part is (-1)^d times the result:
//   F = (-1)^N * g(x) / prod <x, u_k>,   g analytic,
// so the answer is (-1)^(N+d) g_{N-d} / prod <x, u_k>. A representation whose
// expansion has no degree -d term (too shallow a pole) yields 0.
inline LinDenRat total_residue(const GeomRat& F, int d) {
  const int n = F.nvars();
  if (F.is_zero()) return LinDenRat::zero(n);
  const int N = F.denominator_size();
  const int cap = N - d;
  if (cap < 0) return LinDenRat::zero(n);

  Polynomial g(n);
  for (const auto& [e, c] : F.numerator().terms()) {
    std::vector<int> coeffs(e.begin(), e.end());
    g += detail::exp_series(n, coeffs, cap) * c;
  }
  for (const auto& [u, m] : F.denominator()) {
    std::vector<int> coeffs(u.begin(), u.end());
    for (int k = 0; k < m; ++k)
      g = detail::mul_bernoulli_series_truncated(g, coeffs, cap);
  }

  Polynomial top = g.homogeneous_component(cap);
  if (top.is_zero()) return LinDenRat::zero(n);
  if ((N + d) % 2 == 1) top = -top;

  std::vector<std::vector<long long>> den;
  for (const auto& [u, m] : F.denominator())
    for (int k = 0; k < m; ++k) den.emplace_back(u.begin(), u.end());
  return LinDenRat::from_parts(std::move(top), den);
}

}  // namespace posetval
