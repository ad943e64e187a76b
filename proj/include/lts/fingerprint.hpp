#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lts/lie_algebra.hpp"
#include "lts/triple_system.hpp"

namespace lts {

/// Basis-independent invariants of a triple system and its standard
/// embedding. Every field is preserved by transform().
struct Fingerprint {
  std::size_t dim_m = 0;
  std::vector<std::size_t> m_derived_dims;
  std::size_t m_center_dim = 0;
  std::size_t lts_radical_dim = 0;
  std::size_t h_dim = 0;
  std::size_t g_dim = 0;
  std::vector<std::size_t> g_derived_dims;
  std::vector<std::size_t> g_lcs_dims;
  KillingSignature g_killing;
  std::size_t g_radical_dim = 0;
  std::size_t g_center_dim = 0;
  bool canonical = false;
  /// Killing form of the embedding restricted to the odd part M.
  KillingSignature m_killing;
  /// Killing form of the embedding restricted to h.
  KillingSignature h_killing;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

/// Field names in comparison order.
const std::vector<std::string>& fingerprint_fields();

/// Name of the first field (in fingerprint_fields() order) that differs.
std::optional<std::string> first_difference(const Fingerprint& a, const Fingerprint& b);

/// "name: value" lines, one per field, LF terminated.
std::string to_string(const Fingerprint& f);

/// Throws InvalidLts.
Fingerprint fingerprint(const TripleSystem& t);

}  // namespace lts
