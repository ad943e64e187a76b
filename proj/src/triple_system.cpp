#include "lts/triple_system.hpp"

#include <algorithm>
#include <sstream>

#include "lts/errors.hpp"

namespace lts {

TripleSystem TripleSystem::from_tensor(std::size_t n, Vector coefficients) {
  if (coefficients.size() != n * n * n * n)
    throw DimensionMismatch("tensor needs n^4 = " + std::to_string(n * n * n * n) + " coefficients");
  TripleSystem t(n);
  t.c_ = std::move(coefficients);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          if (t.coeff(i, j, k, l) != -t.coeff(j, i, k, l)) {
            std::ostringstream os;
            os << "tensor is not alternating at (" << i + 1 << ',' << j + 1 << ',' << k + 1 << ")";
            throw InvalidTensor(os.str());
          }
        }
  return t;
}

Vector TripleSystem::product(std::size_t i, std::size_t j, std::size_t k) const {
  const auto base = index(i, j, k, 0);
  return Vector(c_.begin() + static_cast<std::ptrdiff_t>(base),
                c_.begin() + static_cast<std::ptrdiff_t>(base + n_));
}

Matrix TripleSystem::operator_matrix(std::size_t i, std::size_t j) const {
  Matrix m(n_, n_);
  for (std::size_t k = 0; k < n_; ++k)
    for (std::size_t l = 0; l < n_; ++l) m(l, k) = coeff(i, j, k, l);
  return m;
}

TripleSystem::Builder& TripleSystem::Builder::set(std::size_t i, std::size_t j, std::size_t k, std::size_t l,
                                                  const Rational& q) {
  const auto n = t_.n_;
  if (i >= n || j >= n || k >= n || l >= n) throw DimensionMismatch("index out of range");
  if (i == j) {
    if (q.is_zero()) return *this;
    throw InvalidTensor("(e_i, e_i, z) must vanish");
  }
  t_.c_[t_.index(i, j, k, l)] = q;
  t_.c_[t_.index(j, i, k, l)] = -q;
  return *this;
}

TripleSystem::Builder& TripleSystem::Builder::set_product(std::size_t i, std::size_t j, std::size_t k,
                                                          const Vector& v) {
  if (v.size() != t_.n_) throw DimensionMismatch("product vector length mismatch");
  for (std::size_t l = 0; l < v.size(); ++l) set(i, j, k, l, v[l]);
  return *this;
}

Vector triple_product(const TripleSystem& t, const Vector& x, const Vector& y, const Vector& z) {
  const std::size_t n = t.dim();
  if (x.size() != n || y.size() != n || z.size() != n)
    throw DimensionMismatch("triple_product arguments must have length " + std::to_string(n));
  Vector r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero() || i == j) continue;
      const Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (z[k].is_zero()) continue;
        const Rational s = xy * z[k];
        for (std::size_t l = 0; l < n; ++l) {
          const auto& c = t.coeff(i, j, k, l);
          if (!c.is_zero()) r[l] += s * c;
        }
      }
    }
  }
  return r;
}

std::string to_string(Identity id) {
  switch (id) {
    case Identity::Alternation: return "alternation";
    case Identity::Cyclic: return "cyclic";
    case Identity::Derivation: return "derivation";
  }
  return "?";
}

std::string AxiomViolation::describe() const {
  std::ostringstream os;
  os << to_string(identity) << " identity violated at (";
  for (std::size_t i = 0; i < indices.size(); ++i) os << (i ? "," : "") << indices[i] + 1;
  os << ')';
  return os.str();
}

namespace {

// sum_i a_i (e_i, e_j, e_k).
Vector product_first(const TripleSystem& t, const Vector& a, std::size_t j, std::size_t k) {
  Vector r(t.dim());
  for (std::size_t i = 0; i < t.dim(); ++i)
    if (!a[i].is_zero()) axpy(r, a[i], t.product(i, j, k));
  return r;
}

}  // namespace

std::optional<AxiomViolation> check_axioms(const TripleSystem& t) {
  const std::size_t n = t.dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto p = t.product(x, x, y);
      if (!is_zero(p)) return AxiomViolation{Identity::Alternation, {x, y}, std::move(p)};
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        auto s = t.product(x, y, z) + t.product(y, z, x) + t.product(z, x, y);
        if (!is_zero(s)) return AxiomViolation{Identity::Cyclic, {x, y, z}, std::move(s)};
      }
  // (x,y,(u,v,w)) = ((x,y,u),v,w) + (u,(x,y,v),w) + (u,v,(x,y,w)), each side
  // expanded by linearity over the basis products.
  std::vector<Vector> prod(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) prod[(i * n + j) * n + k] = t.product(i, j, k);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> const Vector& { return prod[(i * n + j) * n + k]; };
  Vector lhs(n), rhs(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
          for (std::size_t w = 0; w < n; ++w) {
            std::fill(lhs.begin(), lhs.end(), Rational(0));
            std::fill(rhs.begin(), rhs.end(), Rational(0));
            for (std::size_t s = 0; s < n; ++s) {
              if (const Rational& a = at(u, v, w)[s]; !a.is_zero()) axpy(lhs, a, at(x, y, s));
              if (const Rational& a = at(x, y, u)[s]; !a.is_zero()) axpy(rhs, a, at(s, v, w));
              if (const Rational& a = at(x, y, v)[s]; !a.is_zero()) axpy(rhs, a, at(u, s, w));
              if (const Rational& a = at(x, y, w)[s]; !a.is_zero()) axpy(rhs, a, at(u, v, s));
            }
            if (lhs != rhs) return AxiomViolation{Identity::Derivation, {x, y, u, v, w}, lhs - rhs};
          }
  return std::nullopt;
}

static void require_ambient(const TripleSystem& t, const Subspace& d) {
  if (d.ambient_dim() != t.dim())
    throw DimensionMismatch("subspace ambient dimension " + std::to_string(d.ambient_dim()) +
                            " differs from system dimension " + std::to_string(t.dim()));
}

bool is_ideal(const TripleSystem& t, const Subspace& d) {
  require_ambient(t, d);
  const std::size_t n = t.dim();
  for (const auto& v : d.basis_vectors())
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!d.contains(product_first(t, v, j, k))) return false;
  return true;
}

bool is_subsystem(const TripleSystem& t, const Subspace& d) {
  require_ambient(t, d);
  const auto b = d.basis_vectors();
  for (const auto& x : b)
    for (const auto& y : b)
      for (const auto& z : b)
        if (!d.contains(triple_product(t, x, y, z))) return false;
  return true;
}

Subspace derived_subspace(const TripleSystem& t, const Subspace& om) {
  require_ambient(t, om);
  const std::size_t n = t.dim();
  const auto b = om.basis_vectors();
  std::vector<Vector> gens;
  for (std::size_t x = 0; x < n; ++x)
    for (const auto& a : b)
      for (const auto& c : b) {
        auto p = triple_product(t, unit_vector(n, x), a, c);
        if (!is_zero(p)) gens.push_back(std::move(p));
      }
  return span(gens, n);
}

std::vector<std::size_t> DerivedSeries::dims() const {
  std::vector<std::size_t> d;
  for (const auto& s : terms) d.push_back(s.dim());
  return d;
}

DerivedSeries derived_series(const TripleSystem& t, const Subspace& om) {
  if (!is_ideal(t, om)) throw NotAnIdeal();
  DerivedSeries s;
  s.terms.push_back(om);
  while (!s.terms.back().is_zero()) {
    Subspace next = derived_subspace(t, s.terms.back());
    const bool repeated = next == s.terms.back();
    s.terms.push_back(std::move(next));
    if (repeated) break;
  }
  s.solvable = s.terms.back().is_zero();
  s.depth = s.terms.size() - 1;
  return s;
}

Subspace lts_center(const TripleSystem& t) {
  const std::size_t n = t.dim();
  // Rows: coordinate l of (z, e_x, e_y) and of (e_x, e_y, z) as linear forms in z.
  std::vector<Vector> rows;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t l = 0; l < n; ++l) {
        Vector first(n), third(n);
        for (std::size_t z = 0; z < n; ++z) {
          first[z] = t.coeff(z, x, y, l);
          third[z] = t.coeff(x, y, z, l);
        }
        if (!is_zero(first)) rows.push_back(std::move(first));
        if (!is_zero(third)) rows.push_back(std::move(third));
      }
  if (rows.empty()) return Subspace::full(n);
  return kernel(Matrix::from_rows(rows, n));
}

TripleSystem quotient(const TripleSystem& t, const Subspace& om) {
  if (!is_ideal(t, om)) throw NotAnIdeal();
  const std::size_t n = t.dim();
  std::vector<bool> pivot(n, false);
  for (auto p : om.pivots()) pivot[p] = true;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (!pivot[i]) keep.push_back(i);
  const std::size_t q = keep.size();
  TripleSystem::Builder b(q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t c = a + 1; c < q; ++c)
      for (std::size_t d = 0; d < q; ++d) {
        auto r = om.reduce(t.product(keep[a], keep[c], keep[d]));
        for (std::size_t l = 0; l < q; ++l) b.set(a, c, d, l, r[keep[l]]);
      }
  return b.build();
}

TripleSystem direct_sum(const TripleSystem& a, const TripleSystem& b) {
  const std::size_t na = a.dim();
  const std::size_t n = na + b.dim();
  TripleSystem::Builder s(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = i + 1; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k)
        for (std::size_t l = 0; l < na; ++l) s.set(i, j, k, l, a.coeff(i, j, k, l));
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = i + 1; j < b.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k)
        for (std::size_t l = 0; l < b.dim(); ++l) s.set(na + i, na + j, na + k, na + l, b.coeff(i, j, k, l));
  return s.build();
}

TripleSystem transform(const TripleSystem& t, const Matrix& T) {
  const std::size_t n = t.dim();
  if (T.rows() != n || T.cols() != n) throw DimensionMismatch("basis change must be n x n");
  const Matrix inv = inverse(T);
  const auto f = T.row_list();
  TripleSystem::Builder b(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = a + 1; c < n; ++c)
      for (std::size_t d = 0; d < n; ++d) {
        // Old coordinates v; new coordinates x solve x T = v, i.e. x = v T^{-1}.
        const Vector v = triple_product(t, f[a], f[c], f[d]);
        if (is_zero(v)) continue;
        b.set_product(a, c, d, inv.transpose().apply(v));
      }
  return b.build();
}

}  // namespace lts
