#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace inscriber {

using Scalar = mpq_class;
using Point = std::vector<Scalar>;
using Matrix = std::vector<std::vector<Scalar>>;

// Row-reduced echelon form by exact elimination. The pivot in each column is
// the first nonzero entry at or below the current row, so results only depend
// on the input order.
struct Echelon {
  Matrix rref;
  std::vector<std::size_t> pivot_cols;
};

Echelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);
Scalar determinant(Matrix m);

// Basis of {x : m x = 0}, one vector per free column in increasing column
// order. `cols` is needed when m has no rows.
std::vector<Point> kernel_basis(const Matrix& m, std::size_t cols);

// Unique solution of m x = rhs. Empty when the system is inconsistent or
// underdetermined.
std::optional<Point> solve_unique(const Matrix& m, const Point& rhs);

}  // namespace inscriber
