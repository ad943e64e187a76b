#include "lts/fingerprint.hpp"

#include <sstream>

#include "lts/embedding.hpp"

namespace lts {

namespace {

std::string dims_str(const std::vector<std::size_t>& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? " " : "") + std::to_string(d[i]);
  return s;
}

// Field values rendered as text; equal text <=> equal field.
std::vector<std::string> field_values(const Fingerprint& f) {
  return {
      std::to_string(f.dim_m),
      dims_str(f.m_derived_dims),
      std::to_string(f.m_center_dim),
      std::to_string(f.lts_radical_dim),
      std::to_string(f.h_dim),
      std::to_string(f.g_dim),
      dims_str(f.g_derived_dims),
      dims_str(f.g_lcs_dims),
      f.g_killing.str(),
      std::to_string(f.g_radical_dim),
      std::to_string(f.g_center_dim),
      f.canonical ? "yes" : "no",
      f.m_killing.str(),
      f.h_killing.str(),
  };
}

KillingSignature restricted_signature(const Matrix& k, std::size_t from, std::size_t to) {
  Matrix sub(to - from, to - from);
  for (std::size_t i = from; i < to; ++i)
    for (std::size_t j = from; j < to; ++j) sub(i - from, j - from) = k(i, j);
  return inertia(sub);
}

}  // namespace

const std::vector<std::string>& fingerprint_fields() {
  static const std::vector<std::string> names = {
      "dim_m",  "m_derived_dims", "m_center_dim",  "lts_radical_dim", "h_dim",        "g_dim",     "g_derived_dims",
      "g_lcs_dims", "g_killing",  "g_radical_dim", "g_center_dim",    "canonical",    "m_killing", "h_killing",
  };
  return names;
}

std::optional<std::string> first_difference(const Fingerprint& a, const Fingerprint& b) {
  const auto va = field_values(a);
  const auto vb = field_values(b);
  for (std::size_t i = 0; i < va.size(); ++i)
    if (va[i] != vb[i]) return fingerprint_fields()[i];
  return std::nullopt;
}

std::string to_string(const Fingerprint& f) {
  std::ostringstream os;
  const auto v = field_values(f);
  for (std::size_t i = 0; i < v.size(); ++i) os << fingerprint_fields()[i] << ": " << v[i] << '\n';
  return os.str();
}

Fingerprint fingerprint(const TripleSystem& t) {
  const StandardEmbedding e = standard_embedding(t);
  const LieAlgebra& g = e.algebra;
  const std::size_t n = t.dim();

  Fingerprint f;
  f.dim_m = n;
  f.m_derived_dims = derived_series(t, Subspace::full(n)).dims();
  f.m_center_dim = lts_center(t).dim();
  const Decomposition d = decompose(e);
  f.lts_radical_dim = d.m_prime.dim();
  f.h_dim = e.h_dim();
  f.g_dim = g.dim();
  f.g_derived_dims = series_dims(lie_derived_series(g));
  f.g_lcs_dims = series_dims(lower_central_series(g));
  const Matrix k = killing_form(g);
  f.g_killing = inertia(k);
  f.g_radical_dim = d.r.dim();
  f.g_center_dim = lie_center(g).dim();
  f.canonical = is_canonical(e);
  f.m_killing = restricted_signature(k, 0, n);
  f.h_killing = restricted_signature(k, n, g.dim());
  return f;
}

}  // namespace lts
