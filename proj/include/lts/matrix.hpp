#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lts/rational.hpp"

namespace lts {

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  /// Every row must have length `cols`; `cols` is needed when `rows` is empty.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
  static Matrix diagonal(const Vector& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;
  std::vector<Vector> row_list() const;

  Matrix transpose() const;
  Rational trace() const;
  bool is_zero() const;
  /// Entries in row-major order.
  const Vector& entries() const { return data_; }

  /// Matrix times column vector.
  Vector apply(const Vector& v) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& m);

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
/// Pivot = leftmost column with a nonzero entry at or below the current row;
/// the first such row is swapped up.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Throws SingularMatrix.
Matrix inverse(const Matrix& m);

/// Coordinates x with sum_i x_i * rows[i] = v, or nullopt if v is not in the
/// span. `rows` must be linearly independent.
std::optional<Vector> coordinates_in(const std::vector<Vector>& rows, const Vector& v);

/// One row per line, entries space separated.
std::string to_string(const Matrix& m);

}  // namespace lts
