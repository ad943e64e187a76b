#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lts/fingerprint.hpp"
#include "lts/matrix.hpp"
#include "lts/triple_system.hpp"

namespace lts::catalog {

/// Diagonal symmetric form diag(alpha, nu) on a 2-dimensional space.
struct SymmetricForm2D {
  Rational alpha;
  Rational nu;
};

/// (X,Y,Z) = beta(X,Z) Y - beta(Y,Z) X. An LTS for every rational beta.
TripleSystem from_symmetric_form(const SymmetricForm2D& beta);

/// Three-dimensional system with (e1,e2,-) = A, (e2,e3,-) = B, (e3,e1,-) = C
/// acting on coordinate columns, completed by antisymmetry. Throws
/// CyclicMismatch unless A e3 + B e1 + C e2 = 0; the remaining identities are
/// not checked here.
TripleSystem from_operators(const Matrix& A, const Matrix& B, const Matrix& C);

struct CatalogEntry {
  std::string label;
  TripleSystem system;
  /// Where the system sits in the classification, e.g. "solvable, type II".
  std::string source;
  Fingerprint expected;
  std::string notes;
};

/// Canonical systems of dimension 2 and 3, in a fixed order: dim2-*,
/// dim3-*, split-*. Every entry satisfies the LTS identities.
const std::vector<CatalogEntry>& all_entries();

/// Tabulated systems that fail the LTS identities and so cannot be catalog
/// entries. `expected` is left empty.
const std::vector<CatalogEntry>& unrealizable_entries();

/// Looks in all_entries() first, then unrealizable_entries().
const CatalogEntry* find(std::string_view label);

}  // namespace lts::catalog
