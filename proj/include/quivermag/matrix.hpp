#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "quivermag/rational.hpp"

namespace quivermag {

// Dense row-major matrix of exact rationals. Zero-sized dimensions are
// allowed and behave as empty linear maps.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static Matrix from_ints(std::initializer_list<std::initializer_list<long>> rows);
  static Matrix column_vector(const std::vector<Rational>& entries);
  static Matrix ones(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<Rational> column(std::size_t c) const;

  Matrix transpose() const;
  Matrix select_columns(const std::vector<std::size_t>& columns) const;
  // [this | other]
  Matrix hstack(const Matrix& other) const;

  bool is_zero() const;
  bool is_identity() const;
  bool is_integral() const;
  Rational sum() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// One row per line, entries separated by single spaces.
std::string to_string(const Matrix& m);

// Whitespace-separated fractions, one row per line; blank lines ignored.
Matrix parse_matrix(std::string_view text);

}  // namespace quivermag
