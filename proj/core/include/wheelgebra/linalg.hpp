#pragma once

#include <vector>

#include "wheelgebra/rational.hpp"

namespace wg {

// Dense exact linear algebra, just enough for solving small kernel problems.
using RatMatrix = std::vector<std::vector<Rational>>;

// Basis of the null space of an m x n matrix (rows = equations).
inline std::vector<std::vector<Rational>> kernel_basis(RatMatrix a, int cols) {
  const int rows = static_cast<int>(a.size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[r], a[p]);
    Rational inv = a[r][c];
    for (int j = 0; j < cols; ++j) a[r][j] /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (int j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<char> is_pivot(cols, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  std::vector<std::vector<Rational>> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rational> v(cols, 0);
    v[c] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace wg
