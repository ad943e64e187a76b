#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lts/matrix.hpp"
#include "lts/subspace.hpp"

namespace lts {

/// Finite-dimensional triple system over Q given by structure constants:
/// (e_i, e_j, e_k) = sum_l c(i,j,k,l) e_l, indices 0-based.
///
/// The tensor is stored for every (i,j). Construction enforces
/// c(i,i,k,.) = 0 and c(i,j,k,.) = -c(j,i,k,.); the cyclic and derivation
/// identities are checked separately by check_axioms.
class TripleSystem {
 public:
  class Builder;

  explicit TripleSystem(std::size_t n = 0) : n_(n), c_(n * n * n * n) {}

  /// Full tensor in (i,j,k,l) row-major order. Throws InvalidTensor if it is
  /// not alternating in the first two slots.
  static TripleSystem from_tensor(std::size_t n, Vector coefficients);

  std::size_t dim() const { return n_; }

  const Rational& coeff(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return c_[index(i, j, k, l)];
  }
  /// Coordinate vector of (e_i, e_j, e_k).
  Vector product(std::size_t i, std::size_t j, std::size_t k) const;
  /// Operator z -> (e_i, e_j, z) as an n x n matrix acting on columns.
  Matrix operator_matrix(std::size_t i, std::size_t j) const;

  bool is_abelian() const { return is_zero(c_); }
  const Vector& coefficients() const { return c_; }

  friend bool operator==(const TripleSystem&, const TripleSystem&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return ((i * n_ + j) * n_ + k) * n_ + l;
  }

  std::size_t n_;
  Vector c_;
};

/// Sets entries pairwise so the result is alternating by construction.
class TripleSystem::Builder {
 public:
  explicit Builder(std::size_t n) : t_(n) {}
  /// c(i,j,k,l) = q and c(j,i,k,l) = -q. Throws InvalidTensor if i == j.
  Builder& set(std::size_t i, std::size_t j, std::size_t k, std::size_t l, const Rational& q);
  /// c(i,j,k,.) = v and c(j,i,k,.) = -v.
  Builder& set_product(std::size_t i, std::size_t j, std::size_t k, const Vector& v);
  TripleSystem build() const { return t_; }

 private:
  TripleSystem t_;
};

Vector triple_product(const TripleSystem& t, const Vector& x, const Vector& y, const Vector& z);

enum class Identity { Alternation, Cyclic, Derivation };

std::string to_string(Identity id);

/// First failing identity instance. Indices are 0-based: 2 for alternation
/// (x,x,y), 3 for cyclic (x,y,z), 5 for derivation (x,y,u,v,w).
struct AxiomViolation {
  Identity identity;
  std::vector<std::size_t> indices;
  Vector residual;

  /// e.g. "cyclic identity violated at (1,2,3)" with 1-based indices.
  std::string describe() const;
};

/// Evaluates every identity instance on basis vectors: alternation, then the
/// n^3 cyclic instances, then the n^5 derivation instances, each in
/// lexicographic index order. Returns the first violation, nullopt if valid.
std::optional<AxiomViolation> check_axioms(const TripleSystem& t);

inline bool is_lts(const TripleSystem& t) { return !check_axioms(t).has_value(); }

/// (d, M, M) in d.
bool is_ideal(const TripleSystem& t, const Subspace& d);
/// (d, d, d) in d.
bool is_subsystem(const TripleSystem& t, const Subspace& d);

/// Span of (x, a, b) over x in a basis of M and a, b in a basis of om.
Subspace derived_subspace(const TripleSystem& t, const Subspace& om);

struct DerivedSeries {
  std::vector<Subspace> terms;
  bool solvable = false;
  /// Number of derivation steps taken (terms.size() - 1).
  std::size_t depth = 0;

  std::vector<std::size_t> dims() const;
};

/// om, om^(1), om^(2), ... until a term is zero or repeats. Throws NotAnIdeal.
DerivedSeries derived_series(const TripleSystem& t, const Subspace& om);

/// {z : (z,x,y) = 0 and (x,y,z) = 0 for all x, y}.
Subspace lts_center(const TripleSystem& t);

/// Quotient by an ideal on the complement spanned by the non-pivot standard
/// coordinates of om. Throws NotAnIdeal.
TripleSystem quotient(const TripleSystem& t, const Subspace& om);

/// Block sum: a on the first a.dim() coordinates, b on the rest.
TripleSystem direct_sum(const TripleSystem& a, const TripleSystem& b);

/// Rewrites t in the basis f_a = sum_i T(a,i) e_i (rows of T are the new
/// basis vectors). Throws SingularMatrix.
TripleSystem transform(const TripleSystem& t, const Matrix& T);

}  // namespace lts
