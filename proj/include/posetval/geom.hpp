#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "posetval/errors.hpp"
#include "posetval/polynomial.hpp"
#include "posetval/rational.hpp"

namespace posetval {

// Exponent vector of a geometric denominator factor (1 - X^u), kept with its
// first nonzero entry positive; flipping the sign of u multiplies the value's
// numerator by -X^u, which the canonicalization below accounts for.
using GeomFactor = std::vector<int>;

struct GeomFactorOrder {
  bool operator()(const GeomFactor& x, const GeomFactor& y) const {
    return detail::support_graded_less(x, y);
  }
};

namespace detail {

inline int first_nonzero(const GeomFactor& u) {
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != 0) return static_cast<int>(i);
  return -1;
}

}  // namespace detail

// Exact division of the Laurent polynomial p by (1 - X^u), u nonzero.
// Terms are grouped into residue classes modulo the line Z*u; each class is a
// univariate Laurent polynomial in T = X^u and divides iff it vanishes at
// T = 1.
inline std::optional<Polynomial> divide_by_one_minus_monomial(const Polynomial& p,
                                                              const GeomFactor& u) {
  const int n = p.nvars();
  if (p.is_zero()) return Polynomial(n);
  const int i0 = detail::first_nonzero(u);
  if (i0 < 0) throw shape_error("zero exponent vector in geometric factor");
  const long long step = u[i0];

  // class key -> (T-exponent -> coefficient)
  std::map<Exponents, std::map<long long, Rational>> classes;
  for (const auto& [e, c] : p.terms()) {
    const long long a = e[i0];
    const long long as = step > 0 ? step : -step;
    long long m = ((a % as) + as) % as;
    long long k = (a - m) / step;
    Exponents key = e;
    for (int i = 0; i < n; ++i) key[i] = e[i] - static_cast<int>(k) * u[i];
    classes[key][k] = c;
  }

  Polynomial q(n);
  for (const auto& [key, coeffs] : classes) {
    Rational running = 0;
    long long prev = coeffs.begin()->first;
    for (const auto& [k, c] : coeffs) {
      if (running != 0) {
        for (long long j = prev; j < k; ++j) {
          Exponents e = key;
          for (int i = 0; i < n; ++i) e[i] += static_cast<int>(j) * u[i];
          q.add_term(e, running);
        }
      }
      running += c;
      prev = k;
    }
    if (running != 0) return std::nullopt;
  }
  return q;
}

// Rational function num / prod (1 - X^u)^mult with Laurent numerator, fully
// reduced; the canonical form of Hilbert series computations. Zero is an
// empty numerator with empty denominator.
class GeomRat {
 public:
  using Den = std::map<GeomFactor, int, GeomFactorOrder>;

  GeomRat() : nvars_(0), num_(0) {}

  static GeomRat zero(int nvars) {
    GeomRat r;
    r.nvars_ = nvars;
    r.num_ = Polynomial(nvars);
    return r;
  }

  static GeomRat one(int nvars) {
    return from_polynomial(Polynomial::constant(nvars, 1));
  }

  static GeomRat from_polynomial(Polynomial num) {
    GeomRat r;
    r.nvars_ = num.nvars();
    r.num_ = std::move(num);
    return r;
  }

  static GeomRat from_parts(Polynomial num, const std::vector<GeomFactor>& den_vectors) {
    GeomRat r;
    r.nvars_ = num.nvars();
    r.num_ = std::move(num);
    for (const auto& u : den_vectors) r.push_factor(u);
    r.reduce();
    return r;
  }

  // 1 / prod (1 - X^u).
  static GeomRat reciprocal(int nvars, const std::vector<GeomFactor>& den_vectors) {
    return from_parts(Polynomial::constant(nvars, 1), den_vectors);
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return num_.is_zero(); }
  const Polynomial& numerator() const { return num_; }
  const Den& denominator() const { return den_; }

  int denominator_size() const {
    int s = 0;
    for (const auto& [u, m] : den_) s += m;
    return s;
  }

  bool operator==(const GeomRat& o) const {
    return nvars_ == o.nvars_ && num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const GeomRat& o) const { return !(*this == o); }

  GeomRat operator-() const {
    GeomRat r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend GeomRat operator+(const GeomRat& a, const GeomRat& b) {
    a.check_compatible(b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Den lcm = a.den_;
    for (const auto& [u, m] : b.den_) {
      auto it = lcm.find(u);
      if (it == lcm.end()) lcm.emplace(u, m);
      else it->second = std::max(it->second, m);
    }
    Polynomial na = a.num_, nb = b.num_;
    for (const auto& [u, m] : lcm) {
      int ma = 0, mb = 0;
      if (auto it = a.den_.find(u); it != a.den_.end()) ma = it->second;
      if (auto it = b.den_.find(u); it != b.den_.end()) mb = it->second;
      const Polynomial fp = one_minus_monomial(a.nvars_, u);
      for (int k = ma; k < m; ++k) na *= fp;
      for (int k = mb; k < m; ++k) nb *= fp;
    }
    GeomRat r;
    r.nvars_ = a.nvars_;
    r.num_ = na + nb;
    r.den_ = std::move(lcm);
    r.reduce();
    return r;
  }

  friend GeomRat operator-(const GeomRat& a, const GeomRat& b) { return a + (-b); }

  friend GeomRat operator*(const GeomRat& a, const GeomRat& b) {
    a.check_compatible(b);
    if (a.is_zero() || b.is_zero()) return zero(a.nvars_);
    GeomRat r;
    r.nvars_ = a.nvars_;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_;
    for (const auto& [u, m] : b.den_) r.den_[u] += m;
    r.reduce();
    return r;
  }

  // Multiplies by (1 - X^w).
  GeomRat multiply_factor(const GeomFactor& w) const {
    GeomRat r = *this;
    if (r.is_zero()) return r;
    auto [u, flip] = canonical_factor(w);
    auto it = r.den_.find(u);
    if (it != r.den_.end()) {
      if (--it->second == 0) r.den_.erase(it);
      if (flip) r.num_ = r.num_ * flip_adjuster(u);
    } else {
      Polynomial f = one_minus_monomial(nvars_, u);
      if (flip) f = f * flip_adjuster(u);
      r.num_ = r.num_ * f;
    }
    r.reduce();
    return r;
  }

  // Divides by (1 - X^w).
  GeomRat divide_factor(const GeomFactor& w) const {
    GeomRat r = *this;
    if (r.is_zero()) return r;
    auto [u, flip] = canonical_factor(w);
    if (flip) r.num_ = r.num_ * flip_adjuster_den(u);
    r.den_[u] += 1;
    r.reduce();
    return r;
  }

  // X_j := X_i at the exponent level, on numerator and denominator factors.
  GeomRat substitute_equal(int i, int j) const {
    GeomRat r;
    r.nvars_ = nvars_;
    r.num_ = num_.substitute_equal(i, j);
    for (const auto& [u, m] : den_) {
      GeomFactor w = u;
      w[i] += w[j];
      w[j] = 0;
      if (detail::first_nonzero(w) < 0)
        throw pole_error("substitution annihilates a geometric factor");
      auto [cu, flip] = canonical_factor(w);
      if (flip)
        for (int k = 0; k < m; ++k) r.num_ = r.num_ * r.flip_adjuster_den(cu);
      r.den_[cu] += m;
    }
    r.reduce();
    return r;
  }

  GeomRat rename_variables(int new_nvars, const std::vector<int>& var_map) const {
    GeomRat r;
    r.nvars_ = new_nvars;
    r.num_ = num_.rename_variables(new_nvars, var_map);
    for (const auto& [u, m] : den_) {
      GeomFactor w(new_nvars, 0);
      for (std::size_t k = 0; k < u.size(); ++k) w[var_map[k]] += u[k];
      auto [cu, flip] = canonical_factor(w);
      if (flip)
        for (int k = 0; k < m; ++k) r.num_ = r.num_ * r.flip_adjuster_den(cu);
      r.den_[cu] += m;
    }
    r.reduce();
    return r;
  }

  // nullopt when some factor vanishes at the point (coordinates must be
  // nonzero for Laurent evaluation).
  std::optional<Rational> evaluate(const std::vector<Rational>& x) const {
    Rational d = 1;
    for (const auto& [u, m] : den_) {
      Rational mono = 1;
      for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] > 0) mono *= pow(x[i], static_cast<unsigned>(u[i]));
        else if (u[i] < 0) mono /= pow(x[i], static_cast<unsigned>(-u[i]));
      }
      Rational fv = 1 - mono;
      if (fv == 0) return std::nullopt;
      d *= pow(fv, static_cast<unsigned>(m));
    }
    return num_.evaluate(x) / d;
  }

  static Polynomial one_minus_monomial(int nvars, const GeomFactor& u) {
    Polynomial f = Polynomial::constant(nvars, 1);
    Exponents e(u.begin(), u.end());
    f.add_term(e, Rational(-1));
    return f;
  }

 private:
  // Returns the sign-canonical vector and whether w was flipped.
  static std::pair<GeomFactor, bool> canonical_factor(const GeomFactor& w) {
    int i0 = detail::first_nonzero(w);
    if (i0 < 0) throw shape_error("zero exponent vector in geometric factor");
    if (w[i0] > 0) return {w, false};
    GeomFactor u(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) u[i] = -w[i];
    return {u, true};
  }

  // (1 - X^{-u}) = -X^{-u} (1 - X^u): a flipped factor in the numerator
  // leaves -X^{-u} behind.
  Polynomial flip_adjuster(const GeomFactor& u) const {
    Polynomial adj(nvars_);
    Exponents e(u.begin(), u.end());
    for (auto& v : e) v = -v;
    adj.add_term(e, Rational(-1));
    return adj;
  }

  // 1/(1 - X^{-u}) = -X^{u}/(1 - X^u): a flipped factor in the denominator
  // leaves -X^{u} on the numerator.
  Polynomial flip_adjuster_den(const GeomFactor& u) const {
    Polynomial adj(nvars_);
    Exponents e(u.begin(), u.end());
    adj.add_term(e, Rational(-1));
    return adj;
  }

  void push_factor(const GeomFactor& w) {
    auto [u, flip] = canonical_factor(w);
    if (flip) num_ = num_ * flip_adjuster_den(u);
    den_[u] += 1;
  }

  void check_compatible(const GeomRat& o) const {
    if (nvars_ != o.nvars_)
      throw shape_error("operands live in different variable counts");
  }

  void reduce() {
    if (num_.is_zero()) {
      den_.clear();
      return;
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto it = den_.begin(); it != den_.end();) {
        bool erased = false;
        while (it->second > 0) {
          auto q = divide_by_one_minus_monomial(num_, it->first);
          if (!q) break;
          num_ = std::move(*q);
          if (--it->second == 0) {
            it = den_.erase(it);
            erased = true;
          }
          changed = true;
          if (num_.is_zero()) {
            den_.clear();
            return;
          }
          if (erased) break;
        }
        if (!erased) ++it;
      }
    }
  }

  int nvars_;
  Polynomial num_;
  Den den_;
};

// Deterministic balanced pairwise summation, mirroring the linear-form case.
inline GeomRat balanced_sum(std::vector<GeomRat> terms, int nvars) {
  if (terms.empty()) return GeomRat::zero(nvars);
  while (terms.size() > 1) {
    std::vector<GeomRat> next;
    next.reserve((terms.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < terms.size(); i += 2)
      next.push_back(terms[i] + terms[i + 1]);
    if (terms.size() % 2 == 1) next.push_back(terms.back());
    terms = std::move(next);
  }
  return terms.front();
}

// Maps X^v to q^(sum v_i); the image of a Hilbert series under total-degree
// specialization, as a univariate rational function in q.
inline GeomRat q_specialize(const GeomRat& g) {
  Polynomial num(1);
  for (const auto& [e, c] : g.numerator().terms()) {
    Exponents q{std::accumulate(e.begin(), e.end(), 0)};
    num.add_term(q, c);
  }
  GeomRat r = GeomRat::from_polynomial(std::move(num));
  for (const auto& [u, m] : g.denominator()) {
    GeomFactor s{std::accumulate(u.begin(), u.end(), 0)};
    if (s[0] == 0) throw pole_error("degree specialization annihilates a factor");
    for (int k = 0; k < m; ++k) r = r.divide_factor(s);
  }
  return r;
}

}  // namespace posetval
