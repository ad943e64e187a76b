#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lts/fingerprint.hpp"
#include "lts/matrix.hpp"
#include "lts/triple_system.hpp"

namespace lts {

enum class IsoVerdict { Isomorphic, NonIsomorphic, Unknown };

std::string to_string(IsoVerdict v);

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::Unknown;
  /// Set iff isomorphic: transform(a, *witness) == b.
  std::optional<Matrix> witness;
  /// Set iff non-isomorphic: a fingerprint field that differs.
  std::optional<std::string> separator;
  /// Candidate rows tried by the search.
  std::size_t candidates_tried = 0;
};

/// Values tried for the entries of T, one list per search stage. Each stage
/// contains the previous one.
const std::vector<std::vector<Rational>>& iso_search_stages();

/// Compares fingerprints, then tries the identity, then searches the stages
/// for T with transform(a, T) == b. Rows of T are chosen one at a time and
/// every structure constant that only involves chosen rows is checked before
/// going deeper. `budget` caps the number of candidate rows tried over all
/// stages. Throws InvalidLts.
IsoResult isomorphic(const TripleSystem& a, const TripleSystem& b, std::size_t budget);

inline constexpr std::size_t kDefaultClassifyBudget = 100000;

/// Catalog labels whose fingerprint equals that of t. When several entries
/// tie, those shown isomorphic to t within the budget are returned; if none
/// is, every tied label is returned. Order follows the catalog. Throws
/// InvalidLts, UnsupportedDimension.
std::vector<std::string> classify(const TripleSystem& t, std::size_t budget = kDefaultClassifyBudget);

}  // namespace lts
