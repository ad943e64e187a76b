#include <gtest/gtest.h>

#include "lts/catalog.hpp"
#include "lts/embedding.hpp"
#include "lts/errors.hpp"
#include "support/generators.hpp"

namespace lts {
namespace {

using testing::entry;
using testing::Gen;
using testing::vec;

Vector e(std::size_t n, std::size_t i) { return unit_vector(n, i); }

TEST(TripleSystem, BuilderEnforcesAlternation) {
  TripleSystem t = TripleSystem::Builder(2).set(0, 1, 0, 1, 1).build();
  EXPECT_EQ(t.coeff(0, 1, 0, 1), Rational(1));
  EXPECT_EQ(t.coeff(1, 0, 0, 1), Rational(-1));
  EXPECT_THROW(TripleSystem::Builder(2).set(1, 1, 0, 0, 1), InvalidTensor);
}

TEST(TripleSystem, FromTensorRejectsNonAlternating) {
  Vector c(16);
  c[(0 * 2 + 1) * 4 + 0 * 2 + 1] = 1;  // c(0,1,0,1) without its partner
  EXPECT_THROW(TripleSystem::from_tensor(2, c), InvalidTensor);
  c[(1 * 2 + 0) * 4 + 0 * 2 + 1] = -1;
  EXPECT_NO_THROW(TripleSystem::from_tensor(2, c));
}

TEST(TripleSystem, ProductExamples) {
  const TripleSystem& sph = entry("dim2-1");
  EXPECT_EQ(triple_product(sph, e(2, 0), e(2, 1), e(2, 0)), e(2, 1));
  EXPECT_EQ(triple_product(sph, vec({1, 2}), vec({1, 2}), vec({3, -1})), zero_vector(2));
  EXPECT_EQ(triple_product(entry("dim3-II"), e(3, 1), e(3, 2), e(3, 2)), e(3, 0));
}

TEST(TripleSystem, CheckAxiomsExamples) {
  for (std::size_t n : {0, 1, 2, 3, 4}) EXPECT_FALSE(check_axioms(TripleSystem(n)).has_value());
  TripleSystem bad = TripleSystem::Builder(3).set(0, 1, 2, 0, 1).build();
  auto v = check_axioms(bad);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->identity, Identity::Cyclic);
  EXPECT_EQ(v->describe(), "cyclic identity violated at (1,2,3)");
  EXPECT_EQ(v->residual, e(3, 0));
}

TEST(TripleSystem, CheckAxiomsFindsDerivationFailure) {
  const auto& vii = catalog::unrealizable_entries().front().system;
  auto v = check_axioms(vii);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->identity, Identity::Derivation);
  EXPECT_EQ(v->describe(), "derivation identity violated at (1,3,2,3,2)");
  EXPECT_EQ(v->residual, vec({-2, 0, 0}));
}

TEST(TripleSystem, IdealAndSubsystemExamples) {
  const TripleSystem& ii = entry("dim3-II");
  EXPECT_TRUE(is_ideal(ii, Subspace::full(3)));
  EXPECT_TRUE(is_ideal(ii, Subspace(3)));
  const auto& vii = catalog::unrealizable_entries().front().system;
  EXPECT_TRUE(is_ideal(vii, coordinate_subspace(3, {0})));

  for (const auto& v : {vec({1, 0, 0}), vec({1, -2, 1, }), vec({0, 1, 3})})
    EXPECT_TRUE(is_subsystem(entry("dim3-I"), span({v}, 3)));
  EXPECT_TRUE(is_subsystem(entry("split-2"), coordinate_subspace(3, {1, 2})));
  EXPECT_TRUE(is_subsystem(entry("dim2-1"), coordinate_subspace(2, {0})));
  EXPECT_FALSE(is_ideal(entry("dim2-1"), coordinate_subspace(2, {0})));
}

TEST(TripleSystem, DerivedSubspaceExamples) {
  EXPECT_TRUE(derived_subspace(entry("dim3-I"), Subspace::full(3)).is_zero());
  const TripleSystem& c4a = entry("dim2-4a");
  EXPECT_EQ(derived_subspace(c4a, Subspace::full(2)), coordinate_subspace(2, {1}));
  EXPECT_TRUE(derived_subspace(c4a, coordinate_subspace(2, {1})).is_zero());
}

TEST(TripleSystem, DerivedSeriesExamples) {
  auto s1 = derived_series(entry("dim3-I"), Subspace::full(3));
  EXPECT_EQ(s1.dims(), (std::vector<std::size_t>{3, 0}));
  EXPECT_TRUE(s1.solvable);
  auto s2 = derived_series(entry("dim2-4a"), Subspace::full(2));
  EXPECT_EQ(s2.dims(), (std::vector<std::size_t>{2, 1, 0}));
  EXPECT_TRUE(s2.solvable);
  EXPECT_EQ(s2.depth, 2u);
  auto s3 = derived_series(entry("dim2-1"), Subspace::full(2));
  EXPECT_EQ(s3.dims(), (std::vector<std::size_t>{2, 2}));
  EXPECT_FALSE(s3.solvable);
  EXPECT_THROW(derived_series(entry("dim2-1"), coordinate_subspace(2, {0})), NotAnIdeal);
}

TEST(TripleSystem, CenterExamples) {
  EXPECT_TRUE(lts_center(entry("dim3-I")).is_full());
  EXPECT_EQ(lts_center(entry("dim3-II")), coordinate_subspace(3, {0}));
  EXPECT_TRUE(lts_center(entry("dim2-1")).is_zero());
}

TEST(TripleSystem, QuotientExamples) {
  EXPECT_EQ(quotient(entry("dim2-1"), Subspace(2)), entry("dim2-1"));
  EXPECT_EQ(quotient(entry("dim2-4a"), coordinate_subspace(2, {1})), TripleSystem(1));
  EXPECT_EQ(quotient(entry("dim3-II"), coordinate_subspace(3, {0})), TripleSystem(2));
  EXPECT_THROW(quotient(entry("dim2-1"), coordinate_subspace(2, {0})), NotAnIdeal);
}

TEST(TripleSystem, DirectSumExamples) {
  EXPECT_EQ(direct_sum(TripleSystem(1), TripleSystem(2)), TripleSystem(3));
  EXPECT_EQ(direct_sum(TripleSystem(1), entry("dim2-1")), entry("split-1a"));
  // dim2-4a + R is a Type III system, up to moving the R summand last.
  TripleSystem sum = direct_sum(entry("dim2-4a"), TripleSystem(1));
  EXPECT_TRUE(is_lts(sum));
  EXPECT_EQ(fingerprint(sum), fingerprint(entry("dim3-III+")));
}

TEST(TripleSystem, TransformExamples) {
  const TripleSystem& c4b = catalog::from_symmetric_form({1, 0});
  EXPECT_EQ(transform(c4b, Matrix::identity(2)), c4b);
  TripleSystem flipped = transform(c4b, Matrix::diagonal(vec({1, -1})));
  EXPECT_EQ(flipped.coeff(0, 1, 0, 1), Rational(1));
  TripleSystem scaled = transform(c4b, Matrix::diagonal(vec({2, 1})));
  EXPECT_EQ(scaled.coeff(0, 1, 0, 1), Rational(4));
  EXPECT_THROW(transform(c4b, Matrix(2, 2)), SingularMatrix);
}

TEST(TripleSystemProperty, AxiomsSurviveBasisChange) {
  Gen g(201);
  for (const auto& en : catalog::all_entries())
    for (int trial = 0; trial < 5; ++trial)
      EXPECT_FALSE(check_axioms(transform(en.system, g.invertible(en.system.dim()))).has_value()) << en.label;
}

TEST(TripleSystemProperty, TransformComposes) {
  Gen g(202);
  for (int trial = 0; trial < 50; ++trial) {
    TripleSystem t = g.valid_system();
    Matrix a = g.invertible(t.dim()), b = g.invertible(t.dim());
    EXPECT_EQ(transform(transform(t, a), b), transform(t, b * a));
    EXPECT_EQ(transform(transform(t, a), inverse(a)), t);
  }
}

TEST(TripleSystemProperty, DerivedTermsAreIdeals) {
  for (const auto& en : catalog::all_entries())
    for (const auto& term : derived_series(en.system, Subspace::full(en.system.dim())).terms)
      EXPECT_TRUE(is_ideal(en.system, term)) << en.label;
}

TEST(TripleSystemProperty, SumOfSolvableIdealsIsSolvable) {
  Gen g(203);
  for (const auto& en : catalog::all_entries()) {
    const TripleSystem& t = en.system;
    const std::size_t n = t.dim();
    std::vector<Subspace> solvable;
    for (int trial = 0; trial < 40; ++trial) {
      Subspace s = g.subspace(n);
      if (is_ideal(t, s) && derived_series(t, s).solvable) solvable.push_back(s);
    }
    for (std::size_t i = 0; i < solvable.size(); ++i)
      for (std::size_t j = i; j < solvable.size(); ++j) {
        Subspace sum = subspace_sum(solvable[i], solvable[j]);
        ASSERT_TRUE(is_ideal(t, sum));
        EXPECT_TRUE(derived_series(t, sum).solvable) << en.label;
      }
  }
}

TEST(TripleSystemProperty, QuotientByIdealIsLts) {
  Gen g(204);
  for (const auto& en : catalog::all_entries()) {
    const TripleSystem& t = en.system;
    std::vector<Subspace> ideals = {Subspace(t.dim()), Subspace::full(t.dim()), lts_center(t), lts_radical(t)};
    for (const auto& term : derived_series(t, Subspace::full(t.dim())).terms) ideals.push_back(term);
    for (int trial = 0; trial < 30; ++trial)
      if (Subspace s = g.subspace(t.dim()); is_ideal(t, s)) ideals.push_back(s);
    for (const auto& om : ideals) EXPECT_TRUE(is_lts(quotient(t, om))) << en.label;
  }
}

TEST(TripleSystemProperty, DirectSumPreservesSolvability) {
  const auto& entries = catalog::all_entries();
  for (const auto& a : entries)
    for (const auto& b : entries) {
      if (a.system.dim() + b.system.dim() > 4) continue;
      TripleSystem s = direct_sum(a.system, b.system);
      auto full = [](const TripleSystem& t) { return derived_series(t, Subspace::full(t.dim())).solvable; };
      EXPECT_EQ(full(s), full(a.system) && full(b.system)) << a.label << " + " << b.label;
    }
}

TEST(TripleSystemProperty, ProductIsTrilinear) {
  Gen g(205);
  for (int trial = 0; trial < 100; ++trial) {
    TripleSystem t = g.valid_system();
    const std::size_t n = t.dim();
    Vector x = g.vector(n), y = g.vector(n), z = g.vector(n), w = g.vector(n);
    Rational q = g.rational();
    Vector base = triple_product(t, x, y, z);
    EXPECT_EQ(triple_product(t, q * x, y, z), q * base);
    EXPECT_EQ(triple_product(t, x, q * y, z), q * base);
    EXPECT_EQ(triple_product(t, x, y, q * z), q * base);
    EXPECT_EQ(triple_product(t, x + w, y, z), base + triple_product(t, w, y, z));
    EXPECT_EQ(triple_product(t, x, y, z + w), base + triple_product(t, x, y, w));
    EXPECT_EQ(triple_product(t, y, x, z), Rational(-1) * base);
  }
}

}  // namespace
}  // namespace lts
