#pragma once

#include <vector>

#include "posetval/rational.hpp"

namespace posetval {

// Bernoulli numbers for x/(e^x - 1) = sum B_m x^m / m!, so B_1 = -1/2.
// Values are computed once via the defining recurrence
//   sum_{k=0}^{m} C(m+1, k) B_k = 0
// and memoized. Single-threaded use is assumed throughout the library.
inline const Rational& bernoulli(int m) {
  static std::vector<Rational> cache{Rational(1)};
  while (static_cast<int>(cache.size()) <= m) {
    const int t = static_cast<int>(cache.size());
    // C(t+1, k) running binomial over k = 0..t-1
    Rational acc = 0;
    Int binom = 1;  // C(t+1, 0)
    for (int k = 0; k < t; ++k) {
      acc += Rational(binom) * cache[k];
      binom = binom * (t + 1 - k) / (k + 1);
    }
    cache.push_back(-acc / Rational(t + 1));
  }
  return cache[m];
}

}  // namespace posetval
