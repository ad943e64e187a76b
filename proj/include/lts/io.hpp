#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lts/lie_algebra.hpp"
#include "lts/triple_system.hpp"

namespace lts::io {

/// "LTS n" followed by "i j k l q" for every nonzero c(i,j,k,l) with i < j,
/// 1-based, sorted lexicographically. LF line endings.
std::string serialize_lts(const TripleSystem& t);

/// Accepts '#' comment lines, blank lines and entries in any order; the
/// antisymmetric half is filled in. Throws ParseError.
TripleSystem parse_lts(std::string_view text);

struct LieFile {
  LieAlgebra algebra;
  std::optional<Grading> grading;

  friend bool operator==(const LieFile&, const LieFile&) = default;
};

/// "LIE m", then "GRADE s1 ... sm" if graded ('-' odd, '+' even), then
/// "i j k q" for every nonzero f(i,j,k) with i < j.
std::string serialize_lie(const LieFile& f);

/// Throws ParseError.
LieFile parse_lie(std::string_view text);

}  // namespace lts::io
