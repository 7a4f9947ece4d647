#pragma once

#include <vector>

#include "posetval/rational.hpp"

namespace posetval {

// Exact feasibility of { x >= 0 : A x = b }, A given column-wise, via a
// phase-one simplex. Bland's smallest-index rule for both the entering and
// leaving choice guarantees termination and determinism.
inline bool nonneg_solution_exists(const std::vector<std::vector<Rational>>& cols,
                                   const std::vector<Rational>& b) {
  const int m = static_cast<int>(b.size());
  const int k = static_cast<int>(cols.size());
  if (k == 0) {
    for (const auto& v : b)
      if (v != 0) return false;
    return true;
  }

  // Tableau: k structural columns, m artificial columns, RHS; basis starts as
  // the artificials with nonnegative RHS.
  std::vector<std::vector<Rational>> T(m, std::vector<Rational>(k + m + 1, Rational(0)));
  for (int i = 0; i < m; ++i) {
    const bool neg = b[i] < 0;
    for (int j = 0; j < k; ++j) T[i][j] = neg ? -cols[j][i] : cols[j][i];
    T[i][k + i] = 1;
    T[i][k + m] = neg ? -b[i] : b[i];
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = k + i;

  // Reduced costs for minimizing the artificial sum: z_j = sum_i T[i][j] for
  // structural j (artificials start at zero).
  std::vector<Rational> z(k + m, Rational(0));
  Rational obj = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < k; ++j) z[j] += T[i][j];
    obj += T[i][k + m];
  }

  while (true) {
    int enter = -1;
    for (int j = 0; j < k + m; ++j) {
      if (z[j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rational ratio = T[i][k + m] / T[i][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) break;  // unbounded improvement cannot happen in phase one

    const Rational piv = T[leave][enter];
    for (auto& v : T[leave]) v /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      const Rational f = T[i][enter];
      for (int j = 0; j <= k + m; ++j) T[i][j] -= f * T[leave][j];
    }
    const Rational fz = z[enter];
    for (int j = 0; j < k + m; ++j) z[j] -= fz * T[leave][j];
    obj -= fz * T[leave][k + m];
    basis[leave] = enter;
  }

  return obj == 0;
}

}  // namespace posetval
