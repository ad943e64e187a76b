#pragma once

#include <cstddef>
#include <vector>

#include "lts/lie_algebra.hpp"
#include "lts/matrix.hpp"
#include "lts/subspace.hpp"
#include "lts/triple_system.hpp"

namespace lts {

/// Universal enveloping Z2-graded Lie algebra G = M + h of a triple system.
///
/// Coordinates 0..n-1 of `algebra` are the basis of M (odd), coordinates
/// n..n+h_dim-1 are the matrices in `h_basis` (even). Brackets:
///   [X, Y] = D_{X,Y},   [A, X] = A X = -[X, A],   [A, B] = AB - BA.
struct StandardEmbedding {
  TripleSystem source;
  LieAlgebra algebra;
  Grading grading;
  std::vector<Matrix> h_basis;

  std::size_t m_dim() const { return source.dim(); }
  std::size_t h_dim() const { return h_basis.size(); }
  Subspace m_part() const;
  Subspace h_part() const;
};

/// Column k is (x, y, e_k).
Matrix inner_derivation(const TripleSystem& t, const Vector& x, const Vector& y);

/// h is spanned by D_{e_i,e_j}, i < j; the basis keeps each one that is
/// independent of those before it, in lexicographic (i,j) order.
/// Throws InvalidLts if t fails check_axioms.
StandardEmbedding standard_embedding(const TripleSystem& t);

/// True iff the largest ideal of the algebra inside the h-span is zero.
bool is_canonical(const StandardEmbedding& e);

/// Radical-side pieces: r = Lie radical, m_prime = r ∩ M (in source
/// coordinates), h_prime = r ∩ h (in algebra coordinates).
struct Decomposition {
  Subspace r;
  Subspace m_prime;
  Subspace h_prime;
};

Decomposition decompose(const StandardEmbedding& e);

/// Maximal solvable ideal of t, as M ∩ rad(G). Throws InvalidLts.
Subspace lts_radical(const TripleSystem& t);

}  // namespace lts
