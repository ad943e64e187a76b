#include "lts/lie_algebra.hpp"

#include <sstream>
#include <utility>

#include "lts/errors.hpp"

namespace lts {

Vector LieAlgebra::bracket(std::size_t i, std::size_t j) const {
  const auto base = (i * m_ + j) * m_;
  return Vector(f_.begin() + static_cast<std::ptrdiff_t>(base), f_.begin() + static_cast<std::ptrdiff_t>(base + m_));
}

Matrix LieAlgebra::ad(std::size_t i) const {
  Matrix a(m_, m_);
  for (std::size_t j = 0; j < m_; ++j)
    for (std::size_t k = 0; k < m_; ++k) a(k, j) = coeff(i, j, k);
  return a;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  if (x.size() != m_) throw DimensionMismatch("ad argument length mismatch");
  Matrix a(m_, m_);
  for (std::size_t i = 0; i < m_; ++i)
    if (!x[i].is_zero()) a = a + x[i] * ad(i);
  return a;
}

LieAlgebra::Builder& LieAlgebra::Builder::set(std::size_t i, std::size_t j, std::size_t k, const Rational& q) {
  const auto m = g_.m_;
  if (i >= m || j >= m || k >= m) throw DimensionMismatch("index out of range");
  if (i == j) {
    if (q.is_zero()) return *this;
    throw InvalidTensor("[e_i, e_i] must vanish");
  }
  g_.f_[(i * m + j) * m + k] = q;
  g_.f_[(j * m + i) * m + k] = -q;
  return *this;
}

LieAlgebra::Builder& LieAlgebra::Builder::set_bracket(std::size_t i, std::size_t j, const Vector& v) {
  if (v.size() != g_.m_) throw DimensionMismatch("bracket vector length mismatch");
  for (std::size_t k = 0; k < v.size(); ++k) set(i, j, k, v[k]);
  return *this;
}

Vector bracket(const LieAlgebra& g, const Vector& x, const Vector& y) {
  const std::size_t m = g.dim();
  if (x.size() != m || y.size() != m) throw DimensionMismatch("bracket arguments must have length " + std::to_string(m));
  Vector r(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (y[j].is_zero() || i == j) continue;
      const Rational s = x[i] * y[j];
      for (std::size_t k = 0; k < m; ++k)
        if (!g.coeff(i, j, k).is_zero()) r[k] += s * g.coeff(i, j, k);
    }
  }
  return r;
}

std::string JacobiViolation::describe() const {
  std::ostringstream os;
  os << "jacobi identity violated at (" << i + 1 << ',' << j + 1 << ',' << k + 1 << ')';
  return os.str();
}

std::optional<JacobiViolation> check_jacobi(const LieAlgebra& g) {
  const std::size_t m = g.dim();
  std::vector<Vector> e;
  for (std::size_t i = 0; i < m; ++i) e.push_back(unit_vector(m, i));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        Vector s = bracket(g, g.bracket(i, j), e[k]);
        s = s + bracket(g, g.bracket(j, k), e[i]);
        s = s + bracket(g, g.bracket(k, i), e[j]);
        if (!is_zero(s)) return JacobiViolation{i, j, k, std::move(s)};
      }
  return std::nullopt;
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  std::vector<Vector> gens;
  const auto bb = b.basis_vectors();
  for (const auto& x : a.basis_vectors())
    for (const auto& y : bb) {
      auto v = bracket(g, x, y);
      if (!is_zero(v)) gens.push_back(std::move(v));
    }
  return span(gens, g.dim());
}

namespace {

template <class Next>
std::vector<Subspace> iterate_series(const LieAlgebra& g, Next next) {
  std::vector<Subspace> s{Subspace::full(g.dim())};
  while (!s.back().is_zero()) {
    Subspace n = next(s.back());
    const bool repeated = n == s.back();
    s.push_back(std::move(n));
    if (repeated) break;
  }
  return s;
}

}  // namespace

std::vector<Subspace> lie_derived_series(const LieAlgebra& g) {
  return iterate_series(g, [&](const Subspace& s) { return bracket_span(g, s, s); });
}

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
  const Subspace all = Subspace::full(g.dim());
  return iterate_series(g, [&](const Subspace& s) { return bracket_span(g, all, s); });
}

std::vector<std::size_t> series_dims(const std::vector<Subspace>& series) {
  std::vector<std::size_t> d;
  for (const auto& s : series) d.push_back(s.dim());
  return d;
}

bool is_solvable(const LieAlgebra& g) { return lie_derived_series(g).back().is_zero(); }
bool is_nilpotent(const LieAlgebra& g) { return lower_central_series(g).back().is_zero(); }

Matrix killing_form(const LieAlgebra& g) {
  const std::size_t m = g.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < m; ++i) ads.push_back(g.ad(i));
  Matrix k(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      k(i, j) = (ads[i] * ads[j]).trace();
      k(j, i) = k(i, j);
    }
  return k;
}

std::string KillingSignature::str() const {
  return "(" + std::to_string(positive) + "," + std::to_string(negative) + "," + std::to_string(zero) + ")";
}

KillingSignature inertia(const Matrix& symmetric) {
  if (symmetric.rows() != symmetric.cols()) throw DimensionMismatch("inertia of non-square matrix");
  Matrix a = symmetric;
  const std::size_t n = a.rows();
  auto swap_index = [&](std::size_t p, std::size_t q) {
    if (p == q) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(q, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, p), a(r, q));
  };
  // row/col p += s * row/col q
  auto add_index = [&](std::size_t p, std::size_t q, const Rational& s) {
    for (std::size_t c = 0; c < n; ++c) a(p, c) += s * a(q, c);
    for (std::size_t r = 0; r < n; ++r) a(r, p) += s * a(r, q);
  };

  KillingSignature sig;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, p).is_zero()) ++p;
    if (p == n) {
      // Zero diagonal: an off-diagonal a(i,j) != 0 yields a(i,i) = 2 a(i,j) after i += j.
      bool found = false;
      for (std::size_t i = k; i < n && !found; ++i)
        for (std::size_t j = i + 1; j < n && !found; ++j)
          if (!a(i, j).is_zero()) {
            add_index(i, j, 1);
            p = i;
            found = true;
          }
      if (!found) {
        sig.zero += n - k;
        break;
      }
    }
    swap_index(k, p);
    const Rational pivot = a(k, k);
    for (std::size_t r = k + 1; r < n; ++r)
      if (!a(r, k).is_zero()) add_index(r, k, -(a(r, k) / pivot));
    if (pivot.sign() > 0)
      ++sig.positive;
    else
      ++sig.negative;
  }
  return sig;
}

KillingSignature killing_signature(const LieAlgebra& g) { return inertia(killing_form(g)); }

Subspace lie_radical(const LieAlgebra& g) {
  const std::size_t m = g.dim();
  const Subspace all = Subspace::full(m);
  const Subspace derived = bracket_span(g, all, all);
  if (derived.is_zero()) return all;
  const Matrix k = killing_form(g);
  return kernel(derived.basis() * k);
}

Subspace lie_center(const LieAlgebra& g) {
  const std::size_t m = g.dim();
  // x is central iff sum_i x_i f(i,j,k) = 0 for all j, k.
  std::vector<Vector> rows;
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k) {
      Vector r(m);
      for (std::size_t i = 0; i < m; ++i) r[i] = g.coeff(i, j, k);
      if (!is_zero(r)) rows.push_back(std::move(r));
    }
  if (rows.empty()) return Subspace::full(m);
  return kernel(Matrix::from_rows(rows, m));
}

bool is_lie_ideal(const LieAlgebra& g, const Subspace& s) {
  return is_subspace_of(bracket_span(g, Subspace::full(g.dim()), s), s);
}

std::size_t Grading::odd_count() const {
  std::size_t c = 0;
  for (bool b : odd) c += b ? 1 : 0;
  return c;
}

std::string GradingViolation::describe() const {
  std::ostringstream os;
  os << "grading violated at (" << i + 1 << ',' << j + 1 << ')';
  return os.str();
}

std::optional<GradingViolation> check_grading(const LieAlgebra& g, const Grading& gr) {
  const std::size_t m = g.dim();
  if (gr.odd.size() != m) throw DimensionMismatch("grading length differs from algebra dimension");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const bool target_odd = gr.odd[i] != gr.odd[j];
      for (std::size_t k = 0; k < m; ++k)
        if (!g.coeff(i, j, k).is_zero() && gr.odd[k] != target_odd) return GradingViolation{i, j};
    }
  return std::nullopt;
}

TripleSystem lie_to_lts(const LieAlgebra& g, const Grading& gr) {
  if (auto bad = check_grading(g, gr)) throw InvalidGrading(bad->describe());
  std::vector<std::size_t> odd;
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (gr.odd[i]) odd.push_back(i);
  const std::size_t n = odd.size();
  TripleSystem::Builder b(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = a + 1; c < n; ++c) {
      const Vector xy = g.bracket(odd[a], odd[c]);
      for (std::size_t d = 0; d < n; ++d) {
        const Vector v = bracket(g, xy, unit_vector(g.dim(), odd[d]));
        for (std::size_t l = 0; l < n; ++l) b.set(a, c, d, l, v[odd[l]]);
      }
    }
  return b.build();
}

}  // namespace lts
