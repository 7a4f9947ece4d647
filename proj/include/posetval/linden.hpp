#pragma once

#include <map>
#include <optional>
#include <vector>

#include "posetval/errors.hpp"
#include "posetval/polynomial.hpp"
#include "posetval/rational.hpp"

namespace posetval {

// Rational function whose denominator is a product of linear forms, kept in a
// canonical fully reduced shape:
//   value = sign * numerator / prod(form^multiplicity)
// with the numerator's lexicographically leading coefficient positive, every
// denominator factor coprime-normalized, and no factor dividing the numerator.
// Zero is numerator 0, empty denominator, sign +1.
class LinDenRat {
 public:
  using Den = std::map<LinearForm, int, LinearFormOrder>;

  LinDenRat() : nvars_(0), sign_(1), num_(0) {}

  static LinDenRat zero(int nvars) {
    LinDenRat r;
    r.nvars_ = nvars;
    r.num_ = Polynomial(nvars);
    return r;
  }

  static LinDenRat from_polynomial(Polynomial num) {
    LinDenRat r;
    r.nvars_ = num.nvars();
    r.num_ = std::move(num);
    r.normalize();
    return r;
  }

  static LinDenRat from_parts(Polynomial num,
                              const std::vector<std::vector<long long>>& den_vectors) {
    LinDenRat r;
    r.nvars_ = num.nvars();
    r.num_ = std::move(num);
    Rational scale = 1;
    for (const auto& v : den_vectors) {
      auto c = LinearForm::canonical(v);
      scale *= c.scale;
      r.den_[c.form] += 1;
    }
    r.num_ *= Rational(1) / scale;
    r.reduce();
    r.normalize();
    return r;
  }

  // 1 / prod of the given linear forms.
  static LinDenRat reciprocal(int nvars,
                              const std::vector<std::vector<long long>>& den_vectors) {
    return from_parts(Polynomial::constant(nvars, 1), den_vectors);
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return sign_; }
  const Polynomial& numerator() const { return num_; }
  const Den& denominator() const { return den_; }

  int denominator_size() const {
    int s = 0;
    for (const auto& [f, m] : den_) s += m;
    return s;
  }

  bool operator==(const LinDenRat& o) const {
    return nvars_ == o.nvars_ && sign_ == o.sign_ && num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const LinDenRat& o) const { return !(*this == o); }

  LinDenRat operator-() const {
    LinDenRat r = *this;
    if (!r.is_zero()) r.sign_ = -r.sign_;
    return r;
  }

  friend LinDenRat operator+(const LinDenRat& a, const LinDenRat& b) {
    a.check_compatible(b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Den lcm = a.den_;
    for (const auto& [f, m] : b.den_) {
      auto it = lcm.find(f);
      if (it == lcm.end()) lcm.emplace(f, m);
      else it->second = std::max(it->second, m);
    }
    Polynomial na = a.num_ * Rational(a.sign_);
    Polynomial nb = b.num_ * Rational(b.sign_);
    for (const auto& [f, m] : lcm) {
      int ma = 0, mb = 0;
      if (auto it = a.den_.find(f); it != a.den_.end()) ma = it->second;
      if (auto it = b.den_.find(f); it != b.den_.end()) mb = it->second;
      const Polynomial fp = f.to_polynomial(a.nvars_);
      for (int k = ma; k < m; ++k) na *= fp;
      for (int k = mb; k < m; ++k) nb *= fp;
    }
    LinDenRat r;
    r.nvars_ = a.nvars_;
    r.num_ = na + nb;
    r.den_ = std::move(lcm);
    r.reduce();
    r.normalize();
    return r;
  }

  friend LinDenRat operator-(const LinDenRat& a, const LinDenRat& b) { return a + (-b); }

  friend LinDenRat operator*(const LinDenRat& a, const LinDenRat& b) {
    a.check_compatible(b);
    LinDenRat r;
    r.nvars_ = a.nvars_;
    if (a.is_zero() || b.is_zero()) return zero(a.nvars_);
    r.sign_ = a.sign_ * b.sign_;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_;
    for (const auto& [f, m] : b.den_) r.den_[f] += m;
    r.reduce();
    r.normalize();
    return r;
  }

  friend LinDenRat operator*(LinDenRat a, const Rational& c) {
    if (c == 0) return zero(a.nvars_);
    a.num_ *= c;
    a.normalize();
    return a;
  }
  friend LinDenRat operator*(const Rational& c, LinDenRat a) { return std::move(a) * c; }

  // Multiplies by the linear form described by the integer vector v.
  LinDenRat multiply_linear(const std::vector<long long>& v) const {
    auto c = LinearForm::canonical(v);
    LinDenRat r = *this;
    if (r.is_zero()) return r;
    auto it = r.den_.find(c.form);
    if (it != r.den_.end()) {
      if (--it->second == 0) r.den_.erase(it);
      r.num_ *= c.scale;
    } else {
      r.num_ *= c.form.to_polynomial(nvars_);
      r.num_ *= c.scale;
    }
    r.reduce();
    r.normalize();
    return r;
  }

  // Divides by the linear form described by v.
  LinDenRat divide_linear(const std::vector<long long>& v) const {
    auto c = LinearForm::canonical(v);
    LinDenRat r = *this;
    if (r.is_zero()) return r;
    r.num_ *= Rational(1) / c.scale;
    r.den_[c.form] += 1;
    r.reduce();
    r.normalize();
    return r;
  }

  // x_j := x_i on numerator and denominator; a denominator factor collapsing
  // to zero is a pole.
  LinDenRat substitute_equal(int i, int j) const {
    LinDenRat r;
    r.nvars_ = nvars_;
    r.num_ = num_.substitute_equal(i, j) * Rational(sign_);
    Rational scale = 1;
    for (const auto& [f, m] : den_) {
      LinearForm g = f.substitute_equal(i, j);
      bool zero_form = true;
      for (long long a : g.a)
        if (a != 0) zero_form = false;
      if (zero_form)
        throw pole_error("substitution annihilates a denominator factor");
      auto c = LinearForm::canonical(g.a);
      scale *= pow(c.scale, static_cast<unsigned>(m));
      r.den_[c.form] += m;
    }
    r.num_ *= Rational(1) / scale;
    r.reduce();
    r.normalize();
    return r;
  }

  // Injective variable renaming into a ring with new_nvars variables.
  LinDenRat rename_variables(int new_nvars, const std::vector<int>& var_map) const {
    LinDenRat r;
    r.nvars_ = new_nvars;
    r.num_ = num_.rename_variables(new_nvars, var_map) * Rational(sign_);
    Rational scale = 1;
    for (const auto& [f, m] : den_) {
      auto c = LinearForm::canonical(f.rename_variables(new_nvars, var_map).a);
      scale *= pow(c.scale, static_cast<unsigned>(m));
      r.den_[c.form] += m;
    }
    r.num_ *= Rational(1) / scale;
    r.reduce();
    r.normalize();
    return r;
  }

  // nullopt when the point lies on a denominator hyperplane.
  std::optional<Rational> evaluate(const std::vector<Rational>& x) const {
    Rational d = 1;
    for (const auto& [f, m] : den_) {
      Rational fv = f.evaluate(x);
      if (fv == 0) return std::nullopt;
      d *= pow(fv, static_cast<unsigned>(m));
    }
    return Rational(sign_) * num_.evaluate(x) / d;
  }

  // Degree of the value when the numerator is homogeneous.
  std::optional<int> homogeneous_value_degree() const {
    auto d = num_.homogeneous_degree();
    if (!d) return std::nullopt;
    return *d - denominator_size();
  }

 private:
  void check_compatible(const LinDenRat& o) const {
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
          auto q = divide_by_linear(num_, it->first);
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

  void normalize() {
    if (num_.is_zero()) {
      sign_ = 1;
      den_.clear();
      return;
    }
    if (sign_ != 1 && sign_ != -1) sign_ = 1;
    if (num_.leading_coefficient() < 0) {
      num_ *= Rational(-1);
      sign_ = -sign_;
    }
  }

  int nvars_;
  int sign_ = 1;
  Polynomial num_;
  Den den_;
};

// Deterministic balanced pairwise summation; keeps intermediate numerators
// small compared to a left fold over a common denominator.
inline LinDenRat balanced_sum(std::vector<LinDenRat> terms, int nvars) {
  if (terms.empty()) return LinDenRat::zero(nvars);
  while (terms.size() > 1) {
    std::vector<LinDenRat> next;
    next.reserve((terms.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < terms.size(); i += 2)
      next.push_back(terms[i] + terms[i + 1]);
    if (terms.size() % 2 == 1) next.push_back(terms.back());
    terms = std::move(next);
  }
  return terms.front();
}

}  // namespace posetval
