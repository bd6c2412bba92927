#include "quivermag/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace quivermag {

namespace {

// Below this many entries per elimination step the thread fork costs more
// than the arithmetic.
constexpr std::size_t kParallelThreshold = 4096;

void require_square(const Matrix& m, const char* what) {
  if (!m.is_square()) {
    throw std::invalid_argument(std::string(what) + ": matrix is " + std::to_string(m.rows()) +
                                "x" + std::to_string(m.cols()) + ", not square");
  }
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  auto ra = m.row(a);
  auto rb = m.row(b);
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(ra[c], rb[c]);
}

// Scales the pivot row to a leading 1; returns false if column `col` has no
// nonzero entry at or below `row`.
bool select_pivot(Matrix& m, std::size_t row, std::size_t col) {
  std::size_t p = row;
  while (p < m.rows() && m(p, col) == 0) ++p;
  if (p == m.rows()) return false;
  swap_rows(m, row, p);
  const Rational inv = 1 / m(row, col);
  auto pivot = m.row(row);
  for (std::size_t c = col; c < m.cols(); ++c) pivot[c] *= inv;
  return true;
}

void eliminate_row(Matrix& m, std::size_t target, std::size_t pivot_row, std::size_t col) {
  const Rational factor = m(target, col);
  if (factor == 0) return;
  auto dst = m.row(target);
  auto src = m.row(pivot_row);
  for (std::size_t c = col; c < m.cols(); ++c) {
    if (src[c] != 0) dst[c] -= factor * src[c];
  }
}

Rational rational_determinant(Matrix m) {
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      swap_rows(m, p, k);
      det = -det;
    }
    det *= m(k, k);
    const Rational inv = 1 / m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational factor = m(i, k) * inv;
      if (factor == 0) continue;
      for (std::size_t c = k; c < n; ++c) m(i, c) -= factor * m(k, c);
    }
  }
  return det;
}

}  // namespace

RowEchelon row_reduce(Matrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    if (!select_pivot(m, row, col)) continue;
    const std::size_t rows = m.rows();
    const bool wide = rows * (m.cols() - col) >= kParallelThreshold;
#pragma omp parallel for schedule(static) if (wide)
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != row) eliminate_row(m, i, row, col);
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

Integer bareiss_determinant(std::vector<Integer> a, std::size_t n) {
  if (a.size() != n * n) throw std::invalid_argument("bareiss_determinant: entry count mismatch");
  if (n == 0) return 1;
  Integer previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[p * n + c]);
      sign = -sign;
    }
    const Integer& pivot = a[k * n + k];
    const std::size_t remaining = n - k - 1;
    const bool wide = remaining * remaining >= kParallelThreshold;
#pragma omp parallel for schedule(static) if (wide)
    for (std::size_t i = k + 1; i < n; ++i) {
      Integer t;
      for (std::size_t j = k + 1; j < n; ++j) {
        t = a[i * n + j] * pivot - a[i * n + k] * a[k * n + j];
        mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      a[i * n + k] = 0;
    }
    previous = pivot;
  }
  Integer det = a[n * n - 1];
  return sign < 0 ? Integer(-det) : det;
}

Rational determinant(const Matrix& m) {
  require_square(m, "determinant");
  const std::size_t n = m.rows();
  if (m.is_integral()) {
    std::vector<Integer> entries(n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) entries[r * n + c] = m(r, c).get_num();
    return Rational(bareiss_determinant(std::move(entries), n));
  }
  return rational_determinant(m);
}

std::optional<Matrix> invert(const Matrix& m) {
  require_square(m, "invert");
  const std::size_t n = m.rows();
  const RowEchelon rref = row_reduce(m.hstack(Matrix::identity(n)));
  if (n > 0 && (rref.rank() < n || rref.pivot_columns[n - 1] != n - 1)) return std::nullopt;
  Matrix inverse(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inverse(r, c) = rref.reduced(r, n + c);
  return inverse;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs) {
  if (m.rows() != rhs.rows()) {
    throw std::invalid_argument("solve: matrix has " + std::to_string(m.rows()) +
                                " rows but right-hand side has " + std::to_string(rhs.rows()));
  }
  const std::size_t n = m.cols();
  const RowEchelon rref = row_reduce(m.hstack(rhs));
  Matrix x(n, rhs.cols());
  for (std::size_t r = 0; r < rref.rank(); ++r) {
    const std::size_t p = rref.pivot_columns[r];
    if (p >= n) return std::nullopt;
    for (std::size_t c = 0; c < rhs.cols(); ++c) x(p, c) = rref.reduced(r, n + c);
  }
  return x;
}

Matrix kernel_basis(const Matrix& m) {
  const RowEchelon rref = row_reduce(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : rref.pivot_columns) is_pivot[p] = true;

  std::vector<std::size_t> free_columns;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_columns.push_back(c);

  Matrix basis(n, free_columns.size());
  for (std::size_t k = 0; k < free_columns.size(); ++k) {
    const std::size_t f = free_columns[k];
    basis(f, k) = 1;
    for (std::size_t r = 0; r < rref.rank(); ++r) basis(rref.pivot_columns[r], k) = -rref.reduced(r, f);
  }
  return basis;
}

Matrix column_space_basis(const Matrix& m) {
  return m.select_columns(row_reduce(m).pivot_columns);
}

namespace reference {

RowEchelon row_reduce(Matrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    if (!select_pivot(m, row, col)) continue;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i != row) eliminate_row(m, i, row, col);
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

Integer bareiss_determinant(std::vector<Integer> a, std::size_t n) {
  if (a.size() != n * n) throw std::invalid_argument("bareiss_determinant: entry count mismatch");
  if (n == 0) return 1;
  Integer previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[p * n + c]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / previous;
      }
      a[i * n + k] = 0;
    }
    previous = a[k * n + k];
  }
  return sign * a[n * n - 1];
}

}  // namespace reference

}  // namespace quivermag
