#pragma once

#include <utility>
#include <vector>

#include "sjk/exact/rational.hpp"

namespace sjk {

using Matrix = std::vector<std::vector<BigRational>>;

/// Solves a x = rhs exactly. Throws ConsistencyError when a is singular.
inline std::vector<BigRational> solve_linear(Matrix a, std::vector<BigRational> rhs) {
  const std::size_t n = a.size();
  if (rhs.size() != n) throw ValidationError("solve_linear: dimension mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw ConsistencyError("solve_linear: singular system");
    std::swap(a[piv], a[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      const BigRational f = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
      rhs[row] -= f * rhs[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= a[i][i];
  return rhs;
}

}  // namespace sjk
