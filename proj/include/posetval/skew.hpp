#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "posetval/errors.hpp"
#include "posetval/poset.hpp"

namespace posetval {

// Skew shape lambda/mu in English notation, but with columns numbered 1..c
// from right to left, so cell (1,1) is the northeasternmost box and (r,c) the
// southwesternmost. Row i holds cells (i, j) for c-lambda_i < j <= c-mu_i.
struct SkewDiagram {
  std::vector<int> lambda;
  std::vector<int> mu;  // padded with zeros to len(lambda)

  SkewDiagram(std::vector<int> l, std::vector<int> m)
      : lambda(std::move(l)), mu(std::move(m)) {
    const int r = static_cast<int>(lambda.size());
    if (r == 0) throw input_error("empty shape");
    mu.resize(r, 0);
    for (int i = 0; i < r; ++i) {
      if (lambda[i] < 1) throw input_error("shape rows must be positive");
      if (mu[i] < 0 || mu[i] > lambda[i]) throw input_error("inner shape exceeds outer");
      if (i > 0 && (lambda[i] > lambda[i - 1] || mu[i] > mu[i - 1]))
        throw input_error("shape parts must be weakly decreasing");
    }
    if (mu[0] >= lambda[0]) throw input_error("cell (1,1) missing from the diagram");
    if (mu[r - 1] != 0) throw input_error("cell (r,c) missing from the diagram");
  }

  int rows() const { return static_cast<int>(lambda.size()); }
  int cols() const { return lambda[0]; }

  bool contains(int i, int j) const {
    if (i < 1 || i > rows() || j < 1 || j > cols()) return false;
    const int c = cols();
    return c - lambda[i - 1] < j && j <= c - mu[i - 1];
  }

  // Sorted (row, column) pairs.
  std::vector<std::pair<int, int>> cells() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= rows(); ++i)
      for (int j = 1; j <= cols(); ++j)
        if (contains(i, j)) out.push_back({i, j});
    return out;
  }
};

// Bipartite poset of the diagram: row elements x_i = i (1..r) sit below
// column elements y_j = r+j, with x_i < y_j exactly for cells (i,j). Every
// relation is a cover.
inline Poset skew_poset(const SkewDiagram& d) {
  const int r = d.rows();
  std::vector<CoverEdge> covers;
  for (const auto& [i, j] : d.cells()) covers.push_back({i, r + j});
  return Poset::from_covers_strict(r + d.cols(), std::move(covers));
}

// Paths from (1,1) to (r,c) moving one unit south (row+1) or west (col+1),
// staying inside the diagram; west is explored first, so the order matches
// reading the terms northeast to southwest. The diagram (as a poset) must be
// connected.
inline std::vector<std::vector<std::pair<int, int>>> lattice_paths(const SkewDiagram& d) {
  if (!skew_poset(d).is_connected())
    throw disconnected_error("skew diagram is disconnected");
  const int r = d.rows(), c = d.cols();
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> path{{1, 1}};
  auto grow = [&](auto&& self, int i, int j) -> void {
    if (i == r && j == c) {
      out.push_back(path);
      return;
    }
    if (d.contains(i, j + 1)) {
      path.push_back({i, j + 1});
      self(self, i, j + 1);
      path.pop_back();
    }
    if (d.contains(i + 1, j)) {
      path.push_back({i + 1, j});
      self(self, i + 1, j);
      path.pop_back();
    }
  };
  if (!d.contains(1, 1)) return out;
  grow(grow, 1, 1);
  return out;
}

}  // namespace posetval
