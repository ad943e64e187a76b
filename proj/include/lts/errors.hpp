#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lts {

/// Vector or matrix sizes do not agree.
struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SingularMatrix : std::domain_error {
  SingularMatrix() : std::domain_error("matrix is singular") {}
};

/// A subspace passed where an ideal of the triple system is required.
struct NotAnIdeal : std::invalid_argument {
  NotAnIdeal() : std::invalid_argument("subspace is not an ideal") {}
};

struct InvalidLts : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Structure constants fail alternation/antisymmetry at construction.
struct InvalidTensor : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidGrading : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Operator slices A, B, C violate A e3 + B e1 + C e2 = 0.
struct CyclicMismatch : std::invalid_argument {
  CyclicMismatch() : std::invalid_argument("A*e3 + B*e1 + C*e2 != 0") {}
};

struct UnsupportedDimension : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("parse error at line " + std::to_string(line) + ": " + what),
        line(line) {}
  std::size_t line;
};

}  // namespace lts
