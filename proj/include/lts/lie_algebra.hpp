#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lts/matrix.hpp"
#include "lts/subspace.hpp"
#include "lts/triple_system.hpp"

namespace lts {

/// Lie algebra over Q given by [e_i, e_j] = sum_k f(i,j,k) e_k, 0-based.
/// Antisymmetry is enforced at construction; Jacobi is checked by check_jacobi.
class LieAlgebra {
 public:
  class Builder;

  explicit LieAlgebra(std::size_t m = 0) : m_(m), f_(m * m * m) {}

  std::size_t dim() const { return m_; }
  const Rational& coeff(std::size_t i, std::size_t j, std::size_t k) const { return f_[(i * m_ + j) * m_ + k]; }
  Vector bracket(std::size_t i, std::size_t j) const;
  /// ad(e_i) as an m x m matrix acting on columns.
  Matrix ad(std::size_t i) const;
  Matrix ad(const Vector& x) const;

  bool is_abelian() const { return is_zero(f_); }

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  std::size_t m_;
  Vector f_;
};

class LieAlgebra::Builder {
 public:
  explicit Builder(std::size_t m) : g_(m) {}
  /// f(i,j,k) = q and f(j,i,k) = -q. Throws InvalidTensor if i == j and q != 0.
  Builder& set(std::size_t i, std::size_t j, std::size_t k, const Rational& q);
  Builder& set_bracket(std::size_t i, std::size_t j, const Vector& v);
  LieAlgebra build() const { return g_; }

 private:
  LieAlgebra g_;
};

Vector bracket(const LieAlgebra& g, const Vector& x, const Vector& y);

/// First basis triple (i,j,k), lexicographic, where the Jacobi sum
/// [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] is nonzero.
struct JacobiViolation {
  std::size_t i, j, k;
  Vector residual;
  std::string describe() const;
};

std::optional<JacobiViolation> check_jacobi(const LieAlgebra& g);

/// Span of [a, b] for a in A, b in B.
Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b);

/// g, [g,g], [g',g'], ... until zero or repeated.
std::vector<Subspace> lie_derived_series(const LieAlgebra& g);
/// g, [g,g], [g,g^2], ... until zero or repeated.
std::vector<Subspace> lower_central_series(const LieAlgebra& g);

std::vector<std::size_t> series_dims(const std::vector<Subspace>& series);

bool is_solvable(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);

/// K(i,j) = trace(ad e_i ad e_j).
Matrix killing_form(const LieAlgebra& g);

struct KillingSignature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  friend bool operator==(const KillingSignature&, const KillingSignature&) = default;
  /// "(p,n,z)"
  std::string str() const;
};

/// Inertia of a symmetric rational matrix by congruence reduction.
KillingSignature inertia(const Matrix& symmetric);
KillingSignature killing_signature(const LieAlgebra& g);

/// Radical as the Killing-orthogonal complement of [g,g] (characteristic 0).
Subspace lie_radical(const LieAlgebra& g);
Subspace lie_center(const LieAlgebra& g);
bool is_lie_ideal(const LieAlgebra& g, const Subspace& s);

/// Z2-grading: true marks an odd (sigma = -1) basis vector.
struct Grading {
  std::vector<bool> odd;

  std::size_t odd_count() const;
  friend bool operator==(const Grading&, const Grading&) = default;
};

/// First basis pair whose bracket leaves the parity-correct span.
struct GradingViolation {
  std::size_t i, j;
  std::string describe() const;
};

/// Throws DimensionMismatch if the sign vector has the wrong length.
std::optional<GradingViolation> check_grading(const LieAlgebra& g, const Grading& gr);

/// Triple system (x,y,z) = [[x,y],z] on the odd part, odd indices in
/// increasing order. Throws InvalidGrading.
TripleSystem lie_to_lts(const LieAlgebra& g, const Grading& gr);

}  // namespace lts
