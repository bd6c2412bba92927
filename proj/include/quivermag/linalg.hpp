#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quivermag/matrix.hpp"

namespace quivermag {

// Reduced row echelon form plus the pivot column of each nonzero row.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;

  std::size_t rank() const { return pivot_columns.size(); }
};

// Gauss-Jordan elimination with first-nonzero pivoting. Row updates of a
// single pivot step run in parallel on large inputs.
RowEchelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

// Exact determinant. Integer inputs go through fraction-free Bareiss
// elimination; anything else through rational elimination.
// Throws std::invalid_argument on non-square input.
Rational determinant(const Matrix& m);

// Fraction-free Bareiss determinant of an integer matrix (row-major, n*n
// entries). Parallel over the rows of each elimination step.
Integer bareiss_determinant(std::vector<Integer> entries, std::size_t n);

// std::nullopt means singular. Throws std::invalid_argument on non-square input.
std::optional<Matrix> invert(const Matrix& m);

// One exact solution of m * x = rhs with free variables set to zero, or
// std::nullopt when the system is inconsistent. Throws on row mismatch.
std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs);

// Columns form a basis of the right null space; zero columns iff m has full
// column rank.
Matrix kernel_basis(const Matrix& m);

// Linearly independent columns of m (the pivot columns) spanning its image.
Matrix column_space_basis(const Matrix& m);

// Serial implementations of the parallel kernels, kept as the baseline
// the parallel paths are tested and benchmarked against.
namespace reference {

RowEchelon row_reduce(Matrix m);
Integer bareiss_determinant(std::vector<Integer> entries, std::size_t n);

}  // namespace reference

}  // namespace quivermag
