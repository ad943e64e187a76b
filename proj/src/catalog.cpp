#include "lts/catalog.hpp"

#include "lts/errors.hpp"

namespace lts::catalog {

namespace {

using Dims = std::vector<std::size_t>;

Matrix row0(const Rational& a, const Rational& b, const Rational& c) {
  Matrix m(3, 3);
  m(0, 0) = a;
  m(0, 1) = b;
  m(0, 2) = c;
  return m;
}

Matrix mat3(std::initializer_list<std::initializer_list<Rational>> rows) {
  std::vector<Vector> v;
  for (auto r : rows) v.emplace_back(r);
  return Matrix::from_rows(v, 3);
}

const Matrix kZero(3, 3);

struct Expect {
  std::size_t dim_m;
  Dims m_derived;
  std::size_t m_center, lts_radical, h_dim, g_dim;
  Dims g_derived, g_lcs;
  KillingSignature g_killing;
  std::size_t g_radical, g_center;
  KillingSignature m_killing, h_killing;

  Fingerprint fp() const {
    return Fingerprint{dim_m,   m_derived, m_center,  lts_radical, h_dim, g_dim,     g_derived,
                       g_lcs,   g_killing, g_radical, g_center,    true,  m_killing, h_killing};
  }
};

CatalogEntry entry(std::string label, TripleSystem t, std::string source, const Expect& e, std::string notes = {}) {
  return CatalogEntry{std::move(label), std::move(t), std::move(source), e.fp(), std::move(notes)};
}

TripleSystem abelian(std::size_t n) { return TripleSystem(n); }

std::vector<CatalogEntry> build_entries() {
  std::vector<CatalogEntry> out;
  const Rational q(1, 4), h(1, 2);

  // Dimension 2.
  out.push_back(entry("dim2-1", from_symmetric_form({1, 1}), "dimension 2, case 1 (spherical)",
                      {2, {2, 2}, 0, 0, 1, 3, {3, 3}, {3, 3}, {0, 3, 0}, 0, 0, {0, 2, 0}, {0, 1, 0}},
                      "G/h = so(3)/so(2)"));
  out.push_back(entry("dim2-2", from_symmetric_form({-1, -1}), "dimension 2, case 2 (Lobachevsky)",
                      {2, {2, 2}, 0, 0, 1, 3, {3, 3}, {3, 3}, {2, 1, 0}, 0, 0, {2, 0, 0}, {0, 1, 0}},
                      "G/h = sl(2,R)/so(2)"));
  out.push_back(entry("dim2-3", from_symmetric_form({1, -1}), "dimension 2, case 3 (non-compact h)",
                      {2, {2, 2}, 0, 0, 1, 3, {3, 3}, {3, 3}, {2, 1, 0}, 0, 0, {1, 1, 0}, {1, 0, 0}},
                      "G/h = sl(2,R)/R"));
  out.push_back(entry("dim2-4a", from_symmetric_form({-1, 0}), "dimension 2, case 4a (solvable)",
                      {2, {2, 1, 0}, 0, 2, 1, 3, {3, 2, 0}, {3, 2, 2}, {1, 0, 2}, 3, 0, {1, 0, 1}, {0, 0, 1}},
                      "G: [e1,e2]=e3, [e1,e3]=e2 (hyperbolic); beta = diag(-1,0) in this product convention; "
                      "tabulated tag g_{3,5}(p=0)"));
  out.push_back(entry("dim2-4b", from_symmetric_form({1, 0}), "dimension 2, case 4b (solvable)",
                      {2, {2, 1, 0}, 0, 2, 1, 3, {3, 2, 0}, {3, 2, 2}, {0, 1, 2}, 3, 0, {0, 1, 1}, {0, 0, 1}},
                      "G: [e1,e2]=e3, [e1,e3]=-e2 (rotation); beta = diag(1,0) in this product convention; "
                      "tabulated tag g_{3,4}(h=-1)"));
  out.push_back(entry("dim2-5", abelian(2), "dimension 2, case 5 (abelian)",
                      {2, {2, 0}, 2, 2, 0, 2, {2, 0}, {2, 0}, {0, 0, 2}, 2, 2, {0, 0, 2}, {0, 0, 0}}, "beta = 0"));

  // Solvable, dimension 3.
  out.push_back(entry("dim3-I", from_operators(kZero, kZero, kZero), "solvable, type I (abelian)",
                      {3, {3, 0}, 3, 3, 0, 3, {3, 0}, {3, 0}, {0, 0, 3}, 3, 3, {0, 0, 3}, {0, 0, 0}}));
  out.push_back(entry("dim3-II", from_operators(kZero, row0(0, 0, 1), kZero), "solvable, type II",
                      {3, {3, 1, 0}, 1, 3, 1, 4, {4, 2, 0}, {4, 2, 1, 0}, {0, 0, 4}, 4, 1, {0, 0, 3}, {0, 0, 1}},
                      "G nilpotent: [e2,e3]=e4, [e3,e4]=-e1; tag g_{4,1}"));
  for (int s : {1, -1}) {
    const std::string sg = s > 0 ? "+" : "-";
    const KillingSignature gk = s > 0 ? KillingSignature{1, 0, 3} : KillingSignature{0, 1, 3};
    const KillingSignature mk = s > 0 ? KillingSignature{1, 0, 2} : KillingSignature{0, 1, 2};
    out.push_back(entry("dim3-III" + sg, from_operators(row0(0, s, 0), kZero, kZero), "solvable, type III",
                        {3, {3, 1, 0}, 1, 3, 1, 4, {4, 2, 0}, {4, 2, 2}, gk, 4, 1, mk, {0, 0, 1}},
                        "direct product of a 2-dim solvable system and R; tag g_{3,4/5} + R"));
  }
  for (int s : {1, -1}) {
    const std::string sg = s > 0 ? "+" : "-";
    const KillingSignature gk = s > 0 ? KillingSignature{1, 0, 3} : KillingSignature{0, 1, 3};
    const KillingSignature mk = s > 0 ? KillingSignature{1, 0, 2} : KillingSignature{0, 1, 2};
    out.push_back(entry("dim3-IV" + sg, from_operators(row0(0, s, 1), kZero, row0(0, -1, -s)), "solvable, type IV",
                        {3, {3, 1, 0}, 1, 3, 1, 4, {4, 2, 0}, {4, 2, 2}, gk, 4, 1, mk, {0, 0, 1}},
                        "C = -s A, so h is 1-dimensional; isomorphic to dim3-III" + sg +
                            " (basis e1, e2, e3 - s e2); tag g_{4,5/6}"));
  }
  for (int s : {1, -1}) {
    const std::string sg = s > 0 ? "+" : "-";
    const KillingSignature gk = s > 0 ? KillingSignature{1, 0, 3} : KillingSignature{0, 1, 3};
    const KillingSignature mk = s > 0 ? KillingSignature{1, 0, 2} : KillingSignature{0, 1, 2};
    out.push_back(entry("dim3-V" + sg, from_operators(kZero, mat3({{0, 1, 0}, {0, 0, s}, {0, 0, 0}}), kZero),
                        "solvable, type V",
                        {3, {3, 2, 1, 0}, 1, 3, 1, 4, {4, 3, 1, 0}, {4, 3, 3}, gk, 4, 1, mk, {0, 0, 1}},
                        std::string("G: [e2,e3]=e4, [e2,e4]=-e1, [e3,e4]=") + (s > 0 ? "-" : "") +
                            "e2; tag g_{8/9}"));
  }
  out.push_back(entry("dim3-VI",
                      from_operators(kZero, row0(0, 0, 1), mat3({{0, 0, 0}, {0, 0, 1}, {0, 0, 0}})),
                      "solvable, type VI",
                      {3, {3, 2, 0}, 0, 3, 2, 5, {5, 4, 0}, {5, 4, 4}, {0, 0, 5}, 5, 0, {0, 0, 3}, {0, 0, 2}},
                      "5-dimensional G; tag g_{4,13}"));

  // Splitting: 1-dim solvable ideal <e1> plus a simple 2-dim system on <e2,e3>.
  const TripleSystem r1 = abelian(1);
  out.push_back(entry("split-1a", direct_sum(r1, from_symmetric_form({1, 1})), "splitting, type 1 (so(3)/so(2))",
                      {3, {3, 2, 2}, 1, 1, 1, 4, {4, 3, 3}, {4, 3, 3}, {0, 3, 1}, 1, 1, {0, 2, 1}, {0, 1, 0}},
                      "R + dim2-1"));
  out.push_back(entry("split-1b", direct_sum(r1, from_symmetric_form({-1, -1})),
                      "splitting, type 1 (sl(2,R)/so(2))",
                      {3, {3, 2, 2}, 1, 1, 1, 4, {4, 3, 3}, {4, 3, 3}, {2, 1, 1}, 1, 1, {2, 0, 1}, {0, 1, 0}},
                      "R + dim2-2"));
  out.push_back(entry("split-1c", direct_sum(r1, from_symmetric_form({1, -1})), "splitting, type 1 (sl(2,R)/R)",
                      {3, {3, 2, 2}, 1, 1, 1, 4, {4, 3, 3}, {4, 3, 3}, {2, 1, 1}, 1, 1, {1, 1, 1}, {1, 0, 0}},
                      "R + dim2-3"));
  out.push_back(entry("split-2",
                      from_operators(row0(0, -1, 0), mat3({{0, 0, 0}, {0, 0, -1}, {0, 1, 0}}), row0(0, 0, 1)),
                      "splitting, type 2",
                      {3, {3, 3}, 0, 1, 3, 6, {6, 6}, {6, 6}, {0, 3, 3}, 3, 0, {0, 2, 1}, {0, 1, 2}},
                      "simple part so(3)/so(2)"));
  out.push_back(entry("split-3",
                      from_operators(row0(0, 1, 0), mat3({{0, 0, 0}, {0, 0, 1}, {0, -1, 0}}), row0(0, 0, -1)),
                      "splitting, type 3",
                      {3, {3, 3}, 0, 1, 3, 6, {6, 6}, {6, 6}, {2, 1, 3}, 3, 0, {2, 0, 1}, {0, 1, 2}},
                      "simple part sl(2,R)/so(2)"));
  out.push_back(entry("split-4",
                      from_operators(row0(0, -1, 0), mat3({{0, 0, 0}, {0, 0, 1}, {0, 1, 0}}), row0(0, 0, -1)),
                      "splitting, type 4",
                      {3, {3, 3}, 0, 1, 3, 6, {6, 6}, {6, 6}, {2, 1, 3}, 3, 0, {1, 1, 1}, {1, 0, 2}},
                      "simple part tabulated as sl(2,R)/so(2); its B block is the beta = diag(1,-1) system"));
  out.push_back(entry("split-5",
                      from_operators(row0(0, -q, q), mat3({{-h, 0, 0}, {0, 0, 1}, {0, 1, 0}}), row0(0, q, -q)),
                      "splitting, type 5",
                      {3, {3, 3}, 0, 1, 2, 5, {5, 5}, {5, 5}, {2, 1, 2}, 2, 0, {1, 1, 1}, {1, 0, 1}},
                      "isomorphic to split-6 via e3 -> -e3"));
  out.push_back(entry("split-6",
                      from_operators(row0(0, -q, -q), mat3({{h, 0, 0}, {0, 0, 1}, {0, 1, 0}}), row0(0, -q, -q)),
                      "splitting, type 6",
                      {3, {3, 3}, 0, 1, 2, 5, {5, 5}, {5, 5}, {2, 1, 2}, 2, 0, {1, 1, 1}, {1, 0, 1}},
                      "isomorphic to split-5 via e3 -> -e3"));
  return out;
}

std::vector<CatalogEntry> build_unrealizable() {
  std::vector<CatalogEntry> out;
  out.push_back(CatalogEntry{"dim3-VII", from_operators(kZero, row0(1, 0, 0), row0(0, -1, 0)), "solvable, type VII",
                             Fingerprint{},
                             "fails the derivation identity at (1,3,2,3,2); no system with M' = <e1> and a "
                             "nondegenerate skew form on <e2,e3> exists; tabulated G relations fail Jacobi"});
  return out;
}

}  // namespace

TripleSystem from_symmetric_form(const SymmetricForm2D& beta) {
  const Rational b[2][2] = {{beta.alpha, 0}, {0, beta.nu}};
  TripleSystem::Builder t(2);
  // Only (e1,e2,z) is independent; (e2,e1,z) follows by antisymmetry.
  for (std::size_t z = 0; z < 2; ++z) {
    Vector v(2);
    v[1] += b[0][z];
    v[0] -= b[1][z];
    t.set_product(0, 1, z, v);
  }
  return t.build();
}

TripleSystem from_operators(const Matrix& A, const Matrix& B, const Matrix& C) {
  for (const Matrix* m : {&A, &B, &C})
    if (m->rows() != 3 || m->cols() != 3) throw DimensionMismatch("operators must be 3 x 3");
  if (!is_zero(A.col(2) + B.col(0) + C.col(1))) throw CyclicMismatch();
  TripleSystem::Builder t(3);
  for (std::size_t k = 0; k < 3; ++k) {
    t.set_product(0, 1, k, A.col(k));
    t.set_product(1, 2, k, B.col(k));
    t.set_product(2, 0, k, C.col(k));
  }
  return t.build();
}

const std::vector<CatalogEntry>& all_entries() {
  static const std::vector<CatalogEntry> entries = build_entries();
  return entries;
}

const std::vector<CatalogEntry>& unrealizable_entries() {
  static const std::vector<CatalogEntry> entries = build_unrealizable();
  return entries;
}

const CatalogEntry* find(std::string_view label) {
  for (const auto* list : {&all_entries(), &unrealizable_entries()})
    for (const auto& e : *list)
      if (e.label == label) return &e;
  return nullptr;
}

}  // namespace lts::catalog
