#pragma once

#include <cstddef>
#include <vector>

#include "lts/matrix.hpp"

namespace lts {

/// Subspace of Q^n stored by its canonical reduced row echelon basis, so two
/// subspaces are equal iff their bases are equal entrywise.
class Subspace {
 public:
  /// Zero subspace of Q^n.
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  static Subspace full(std::size_t n);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return basis_.rows() == 0; }
  bool is_full() const { return basis_.rows() == ambient_; }

  const Matrix& basis() const { return basis_; }
  std::vector<Vector> basis_vectors() const { return basis_.row_list(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its projection along the pivot columns; zero iff v is contained.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  /// Coordinates of a contained vector with respect to basis rows; these are
  /// just the pivot entries since the basis is reduced.
  Vector coordinates(const Vector& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  friend Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim);

  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Throws DimensionMismatch if some vector has the wrong length.
Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& a, const Vector& v);
/// a is a subset of b.
bool is_subspace_of(const Subspace& a, const Subspace& b);

/// Null space {v : m v = 0}, dimension cols - rank.
Subspace kernel(const Matrix& m);

/// Span of the given standard basis vectors.
Subspace coordinate_subspace(std::size_t ambient_dim, const std::vector<std::size_t>& indices);

}  // namespace lts
