#include "lts/matrix.hpp"

#include <utility>

#include "lts/errors.hpp"

namespace lts {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw DimensionMismatch("row " + std::to_string(r) + " has length " + std::to_string(rows[r].size()) +
                              ", expected " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  return from_rows(cols, rows).transpose();
}

Matrix Matrix::diagonal(const Vector& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::col(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Vector> Matrix::row_list() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Rational Matrix::trace() const {
  if (rows_ != cols_) throw DimensionMismatch("trace of non-square matrix");
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const { return lts::is_zero(data_); }

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& a = (*this)(r, c);
      if (!a.is_zero() && !v[c].is_zero()) out[r] += a * v[c];
    }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product size mismatch");
  Matrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) p(i, j) += aik * b(k, j);
    }
  return p;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix sum size mismatch");
  Matrix s(a);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) += b(i, j);
  return s;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + Rational(-1) * b; }

Matrix operator*(const Rational& s, const Matrix& m) {
  Matrix r(m);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) *= s;
  return r;
}

RrefResult rref(const Matrix& m) {
  RrefResult res{m, 0, {}};
  Matrix& a = res.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    const Rational inv = Rational(1) / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto red = rref(aug);
  // The identity block keeps the rank at n; the left block is invertible iff
  // its columns carry all n pivots.
  if (n > 0 && red.pivots[n - 1] != n - 1) throw SingularMatrix();
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = red.reduced(i, n + j);
  return inv;
}

std::optional<Vector> coordinates_in(const std::vector<Vector>& rows, const Vector& v) {
  const std::size_t k = rows.size();
  const std::size_t n = v.size();
  // Columns are the basis vectors, augmented with v.
  Matrix aug(n, k + 1);
  for (std::size_t j = 0; j < k; ++j) {
    if (rows[j].size() != n) throw DimensionMismatch("basis vector length mismatch");
    for (std::size_t i = 0; i < n; ++i) aug(i, j) = rows[j][i];
  }
  for (std::size_t i = 0; i < n; ++i) aug(i, k) = v[i];
  auto red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == k) return std::nullopt;
  if (red.rank != k) throw DimensionMismatch("basis vectors are linearly dependent");
  Vector x(k);
  for (std::size_t r = 0; r < red.rank; ++r) x[red.pivots[r]] = red.reduced(r, k);
  return x;
}

std::string to_string(const Matrix& m) {
  std::string s;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    s += to_string(m.row(r));
    s += '\n';
  }
  return s;
}

}  // namespace lts
