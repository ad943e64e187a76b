#include "lts/subspace.hpp"

#include "lts/errors.hpp"

namespace lts {

Subspace Subspace::full(std::size_t n) {
  std::vector<Vector> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(unit_vector(n, i));
  return span(e, n);
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector length does not match ambient dimension");
  Vector r(v);
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Rational f = r[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < ambient_; ++c)
      if (!basis_(i, c).is_zero()) r[c] -= f * basis_(i, c);
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return lts::is_zero(reduce(v)); }

Vector Subspace::coordinates(const Vector& v) const {
  Vector x(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) x[i] = v.at(pivots_[i]);
  return x;
}

Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  auto red = rref(Matrix::from_rows(vectors, ambient_dim));
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < red.rank; ++r) rows.push_back(red.reduced.row(r));
  s.basis_ = Matrix::from_rows(rows, ambient_dim);
  s.pivots_ = std::move(red.pivots);
  return s;
}

static void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch("ambient dimensions " + std::to_string(a.ambient_dim()) + " and " +
                            std::to_string(b.ambient_dim()));
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  auto v = a.basis_vectors();
  for (auto& x : b.basis_vectors()) v.push_back(std::move(x));
  return span(v, a.ambient_dim());
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  const std::size_t n = a.ambient_dim();
  const std::size_t ka = a.dim();
  const std::size_t kb = b.dim();
  if (ka == 0 || kb == 0) return Subspace(n);
  // Solve sum x_i a_i - sum y_j b_j = 0; each solution gives sum x_i a_i.
  Matrix m(n, ka + kb);
  for (std::size_t i = 0; i < ka; ++i)
    for (std::size_t r = 0; r < n; ++r) m(r, i) = a.basis()(i, r);
  for (std::size_t j = 0; j < kb; ++j)
    for (std::size_t r = 0; r < n; ++r) m(r, ka + j) = -b.basis()(j, r);
  std::vector<Vector> common;
  for (const auto& sol : kernel(m).basis_vectors()) {
    Vector v(n);
    for (std::size_t i = 0; i < ka; ++i) axpy(v, sol[i], a.basis().row(i));
    common.push_back(std::move(v));
  }
  return span(common, n);
}

bool subspace_contains(const Subspace& a, const Vector& v) { return a.contains(v); }

bool is_subspace_of(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!b.contains(a.basis().row(i))) return false;
  return true;
}

Subspace kernel(const Matrix& m) {
  const std::size_t n = m.cols();
  auto red = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < red.rank; ++r) v[red.pivots[r]] = -red.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return span(basis, n);
}

Subspace coordinate_subspace(std::size_t ambient_dim, const std::vector<std::size_t>& indices) {
  std::vector<Vector> e;
  for (auto i : indices) e.push_back(unit_vector(ambient_dim, i));
  return span(e, ambient_dim);
}

}  // namespace lts
