#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "posetval/errors.hpp"
#include "posetval/rational.hpp"

namespace posetval {

using Exponents = std::vector<int>;

// Multivariate polynomial with exact rational coefficients over a fixed
// variable count. Terms are keyed by exponent vector; map order is the
// canonical (ascending lexicographic) iteration order. No zero coefficient is
// ever stored.
class Polynomial {
 public:
  Polynomial() : nvars_(0) {}
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }

  static Polynomial variable(int nvars, int var, const Rational& c = 1) {
    Polynomial p(nvars);
    Exponents e(nvars, 0);
    e[var] = 1;
    p.add_term(e, c);
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  void add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  Polynomial operator-() const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  bool operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }
  bool operator<(const Polynomial& o) const { return terms_ < o.terms_; }

  // Exponent vector of the lexicographically greatest term.
  const Exponents& leading_exponents() const { return terms_.rbegin()->first; }
  const Rational& leading_coefficient() const { return terms_.rbegin()->second; }

  int total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_)
      d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
  }

  // Degree when homogeneous, otherwise nullopt. The zero polynomial reports 0.
  std::optional<int> homogeneous_degree() const {
    if (terms_.empty()) return 0;
    std::optional<int> d;
    for (const auto& [e, c] : terms_) {
      int s = std::accumulate(e.begin(), e.end(), 0);
      if (!d) d = s;
      else if (*d != s) return std::nullopt;
    }
    return d;
  }

  Polynomial homogeneous_component(int d) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_)
      if (std::accumulate(e.begin(), e.end(), 0) == d) r.terms_.emplace(e, c);
    return r;
  }

  // Supports Laurent terms: a negative exponent inverts (the caller must keep
  // such coordinates nonzero).
  Rational evaluate(const std::vector<Rational>& x) const {
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (int i = 0; i < nvars_; ++i) {
        if (e[i] > 0) t *= pow(x[i], static_cast<unsigned>(e[i]));
        else if (e[i] < 0) t /= pow(x[i], static_cast<unsigned>(-e[i]));
      }
      total += t;
    }
    return total;
  }

  // x_j := x_i everywhere.
  Polynomial substitute_equal(int i, int j) const {
    Polynomial r(nvars_);
    Exponents e(nvars_);
    for (const auto& [e0, c] : terms_) {
      e = e0;
      e[i] += e[j];
      e[j] = 0;
      r.add_term(e, c);
    }
    return r;
  }

  // Injective variable renaming into a ring with new_nvars variables;
  // var_map[k] is the image of variable k.
  Polynomial rename_variables(int new_nvars, const std::vector<int>& var_map) const {
    Polynomial r(new_nvars);
    Exponents e(new_nvars);
    for (const auto& [e0, c] : terms_) {
      std::fill(e.begin(), e.end(), 0);
      for (int k = 0; k < nvars_; ++k) e[var_map[k]] += e0[k];
      r.add_term(e, c);
    }
    return r;
  }

 private:
  int nvars_;
  std::map<Exponents, Rational> terms_;
};

struct LinearFormCanonical;

// Linear form with coprime integer coefficients whose first nonzero entry is
// positive. Instances are only built through canonical(), which reports the
// scalar relating the input vector to the stored representative.
struct LinearForm {
  std::vector<long long> a;

  using Canonical = LinearFormCanonical;

  // Zero input is rejected: a zero denominator factor is not a linear form.
  static LinearFormCanonical canonical(const std::vector<long long>& v);

  int nvars() const { return static_cast<int>(a.size()); }

  int leading_var() const {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0) return static_cast<int>(i);
    return -1;
  }

  Polynomial to_polynomial(int nvars) const {
    Polynomial p(nvars);
    for (int i = 0; i < nvars; ++i)
      if (a[i] != 0) p += Polynomial::variable(nvars, i, Rational(a[i]));
    return p;
  }

  Rational evaluate(const std::vector<Rational>& x) const {
    Rational t = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0) t += Rational(a[i]) * x[i];
    return t;
  }

  LinearForm substitute_equal(int i, int j) const {
    LinearForm f = *this;
    f.a[i] += f.a[j];
    f.a[j] = 0;
    return f;
  }

  LinearForm rename_variables(int new_nvars, const std::vector<int>& var_map) const {
    LinearForm f;
    f.a.assign(new_nvars, 0);
    for (std::size_t k = 0; k < a.size(); ++k) f.a[var_map[k]] += a[k];
    return f;
  }

  bool operator==(const LinearForm& o) const { return a == o.a; }
  bool operator!=(const LinearForm& o) const { return a != o.a; }
};

struct LinearFormCanonical {
  LinearForm form;
  Rational scale;  // input = scale * form
};

inline LinearFormCanonical LinearForm::canonical(const std::vector<long long>& v) {
  long long g = 0;
  int first = -1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) {
      if (first < 0) first = static_cast<int>(i);
      g = std::gcd(g, std::abs(v[i]));
    }
  }
  if (first < 0) throw shape_error("zero vector is not a linear form");
  long long s = v[first] > 0 ? g : -g;
  LinearForm f;
  f.a.resize(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) f.a[i] = v[i] / s;
  return {std::move(f), Rational(s)};
}

namespace detail {

// Display/denominator order for coefficient or exponent vectors: ascending by
// support size, then support indices, then the vector itself. Puts x1 before
// x1+x2 before x1+x3 before x1+x2+x3.
template <typename Vec>
bool support_graded_less(const Vec& a, const Vec& b) {
  std::vector<int> sa, sb;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) sa.push_back(static_cast<int>(i));
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] != 0) sb.push_back(static_cast<int>(i));
  if (sa.size() != sb.size()) return sa.size() < sb.size();
  if (sa != sb) return sa < sb;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace detail

// Total order used for denominator multisets and rendering.
struct LinearFormOrder {
  bool operator()(const LinearForm& x, const LinearForm& y) const {
    return detail::support_graded_less(x.a, y.a);
  }
};

// Exact division of p by the linear form l, performed as univariate division
// in l's leading variable; the remainder is p restricted to the hyperplane
// l = 0. Returns the quotient, or nullopt when the remainder is nonzero.
inline std::optional<Polynomial> divide_by_linear(const Polynomial& p, const LinearForm& l) {
  const int n = p.nvars();
  if (p.is_zero()) return Polynomial(n);
  const int v = l.leading_var();
  const Rational c(l.a[v]);
  Polynomial rest(n);  // l minus its leading term; contains no x_v
  for (int i = 0; i < n; ++i)
    if (i != v && l.a[i] != 0) rest += Polynomial::variable(n, i, Rational(l.a[i]));

  std::map<int, Polynomial> bucket;  // x_v-degree -> coefficient polynomial
  for (const auto& [e, coef] : p.terms()) {
    Exponents e0 = e;
    const int d = e0[v];
    e0[v] = 0;
    auto it = bucket.find(d);
    if (it == bucket.end()) it = bucket.emplace(d, Polynomial(n)).first;
    it->second.add_term(e0, coef);
  }

  Polynomial q(n);
  const int top = bucket.rbegin()->first;
  for (int d = top; d >= 1; --d) {
    auto it = bucket.find(d);
    if (it == bucket.end() || it->second.is_zero()) continue;
    Polynomial t = it->second * (Rational(1) / c);
    for (const auto& [e, coef] : t.terms()) {
      Exponents e1 = e;
      e1[v] = d - 1;
      q.add_term(e1, coef);
    }
    if (!rest.is_zero()) {
      Polynomial carry = t * rest;  // no x_v inside
      auto lo = bucket.find(d - 1);
      if (lo == bucket.end()) lo = bucket.emplace(d - 1, Polynomial(n)).first;
      lo->second -= carry;
    }
  }
  auto rem = bucket.find(0);
  if (rem != bucket.end() && !rem->second.is_zero()) return std::nullopt;
  return q;
}

}  // namespace posetval
