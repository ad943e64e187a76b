#include "lts/embedding.hpp"

#include <numeric>
#include <stdexcept>

#include "lts/errors.hpp"

namespace lts {

namespace {

std::vector<std::size_t> index_range(std::size_t from, std::size_t to) {
  std::vector<std::size_t> v(to - from);
  std::iota(v.begin(), v.end(), from);
  return v;
}

Vector h_coordinates(const std::vector<Vector>& flat_basis, const Matrix& a) {
  auto x = coordinates_in(flat_basis, a.entries());
  if (!x) throw InvalidLts("inner derivations do not close under commutators");
  return *x;
}

}  // namespace

Subspace StandardEmbedding::m_part() const {
  return coordinate_subspace(algebra.dim(), index_range(0, m_dim()));
}

Subspace StandardEmbedding::h_part() const {
  return coordinate_subspace(algebra.dim(), index_range(m_dim(), algebra.dim()));
}

Matrix inner_derivation(const TripleSystem& t, const Vector& x, const Vector& y) {
  const std::size_t n = t.dim();
  std::vector<Vector> cols;
  for (std::size_t k = 0; k < n; ++k) cols.push_back(triple_product(t, x, y, unit_vector(n, k)));
  return Matrix::from_columns(cols, n);
}

StandardEmbedding standard_embedding(const TripleSystem& t) {
  if (auto bad = check_axioms(t)) throw InvalidLts(bad->describe());
  const std::size_t n = t.dim();

  std::vector<Matrix> hb;
  std::vector<Vector> flat;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix d = t.operator_matrix(i, j);
      if (d.is_zero()) continue;
      auto trial = flat;
      trial.push_back(d.entries());
      if (rank(Matrix::from_rows(trial, n * n)) > flat.size()) {
        flat = std::move(trial);
        hb.push_back(std::move(d));
      }
    }

  const std::size_t h = hb.size();
  const std::size_t m = n + h;
  LieAlgebra::Builder g(m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Matrix d = t.operator_matrix(i, j);
      if (d.is_zero()) continue;
      const Vector x = h_coordinates(flat, d);
      for (std::size_t a = 0; a < h; ++a) g.set(i, j, n + a, x[a]);
    }
  for (std::size_t a = 0; a < h; ++a) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector col = hb[a].col(j);
      for (std::size_t k = 0; k < n; ++k) g.set(n + a, j, k, col[k]);
    }
    for (std::size_t b = a + 1; b < h; ++b) {
      const Vector x = h_coordinates(flat, hb[a] * hb[b] - hb[b] * hb[a]);
      for (std::size_t c = 0; c < h; ++c) g.set(n + a, n + b, n + c, x[c]);
    }
  }

  Grading gr;
  gr.odd.assign(m, false);
  for (std::size_t i = 0; i < n; ++i) gr.odd[i] = true;
  return StandardEmbedding{t, g.build(), std::move(gr), std::move(hb)};
}

bool is_canonical(const StandardEmbedding& e) {
  const LieAlgebra& g = e.algebra;
  const std::size_t m = g.dim();
  // I_0 = h, I_{k+1} = {x in I_k : [x, e_j] in I_k for all j}.
  Subspace cur = e.h_part();
  while (!cur.is_zero()) {
    const auto basis = cur.basis_vectors();
    std::vector<Vector> rows;  // residual coordinates, linear in the coefficients on `basis`
    for (std::size_t j = 0; j < m; ++j) {
      const Vector ej = unit_vector(m, j);
      std::vector<Vector> residuals;
      for (const auto& b : basis) residuals.push_back(cur.reduce(bracket(g, b, ej)));
      for (std::size_t k = 0; k < m; ++k) {
        Vector r(basis.size());
        for (std::size_t s = 0; s < basis.size(); ++s) r[s] = residuals[s][k];
        if (!is_zero(r)) rows.push_back(std::move(r));
      }
    }
    if (rows.empty()) break;
    std::vector<Vector> next;
    for (const auto& c : kernel(Matrix::from_rows(rows, basis.size())).basis_vectors()) {
      Vector v(m);
      for (std::size_t s = 0; s < basis.size(); ++s) axpy(v, c[s], basis[s]);
      next.push_back(std::move(v));
    }
    Subspace nxt = span(next, m);
    if (nxt == cur) break;
    cur = std::move(nxt);
  }
  return cur.is_zero();
}

Decomposition decompose(const StandardEmbedding& e) {
  const std::size_t n = e.m_dim();
  Subspace r = lie_radical(e.algebra);
  Subspace m_full = subspace_intersect(r, e.m_part());
  Subspace h_prime = subspace_intersect(r, e.h_part());
  if (subspace_sum(m_full, h_prime) != r)
    throw std::logic_error("radical is not the sum of its graded pieces");
  std::vector<Vector> m_rows;
  for (const auto& v : m_full.basis_vectors()) m_rows.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
  return Decomposition{std::move(r), span(m_rows, n), std::move(h_prime)};
}

Subspace lts_radical(const TripleSystem& t) { return decompose(standard_embedding(t)).m_prime; }

}  // namespace lts
