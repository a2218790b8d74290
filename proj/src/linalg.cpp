#include "inscriber/linalg.hpp"

#include <utility>

namespace inscriber {

Echelon row_reduce(Matrix m) {
  Echelon out;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && sgn(m[pivot][c]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    const Scalar inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      const Scalar f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rref = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivot_cols.size(); }

Scalar determinant(Matrix m) {
  const std::size_t n = m.size();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && sgn(m[pivot][c]) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(m[c], m[pivot]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m[i][c]) == 0) continue;
      const Scalar f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

std::vector<Point> kernel_basis(const Matrix& m, std::size_t cols) {
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Point> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Point v(cols, Scalar(0));
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) v[e.pivot_cols[i]] = -e.rref[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Point> solve_unique(const Matrix& m, const Point& rhs) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  Matrix aug = m;
  for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(rhs[i]);
  const Echelon e = row_reduce(std::move(aug));
  if (e.pivot_cols.size() != cols) return std::nullopt;  // rank deficient or rhs pivot
  for (auto c : e.pivot_cols)
    if (c == cols) return std::nullopt;
  Point x(cols);
  for (std::size_t i = 0; i < cols; ++i) x[i] = e.rref[i][cols];
  return x;
}

}  // namespace inscriber
