#include <gtest/gtest.h>

#include "lts/catalog.hpp"
#include "lts/embedding.hpp"
#include "lts/errors.hpp"
#include "support/generators.hpp"

namespace lts {
namespace {

using testing::entry;
using testing::Gen;
using testing::mat;
using testing::vec;

TEST(Embedding, InnerDerivationExamples) {
  EXPECT_TRUE(inner_derivation(TripleSystem(3), vec({1, 2, 3}), vec({0, 1, 0})).is_zero());
  EXPECT_EQ(inner_derivation(entry("dim2-1"), unit_vector(2, 0), unit_vector(2, 1)), mat({{0, -1}, {1, 0}}, 2));
  const auto& vii = catalog::unrealizable_entries().front().system;
  EXPECT_EQ(inner_derivation(vii, unit_vector(3, 1), unit_vector(3, 2)), mat({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}, 3));
}

TEST(Embedding, StandardEmbeddingExamples) {
  StandardEmbedding ab = standard_embedding(entry("dim3-I"));
  EXPECT_EQ(ab.h_dim(), 0u);
  EXPECT_EQ(ab.algebra, LieAlgebra(3));
  EXPECT_EQ(ab.grading.odd, (std::vector<bool>{true, true, true}));

  StandardEmbedding ii = standard_embedding(entry("dim3-II"));
  ASSERT_EQ(ii.algebra.dim(), 4u);
  EXPECT_EQ(ii.algebra.bracket(1, 2), vec({0, 0, 0, 1}));
  EXPECT_EQ(ii.algebra.bracket(2, 3), vec({-1, 0, 0, 0}));
  EXPECT_EQ(ii.algebra.bracket(0, 1), zero_vector(4));
  EXPECT_EQ(ii.grading.odd, (std::vector<bool>{true, true, true, false}));

  EXPECT_EQ(standard_embedding(entry("dim3-VI")).algebra.dim(), 5u);
}

TEST(Embedding, RejectsInvalidSystems) {
  const auto& vii = catalog::unrealizable_entries().front().system;
  try {
    standard_embedding(vii);
    FAIL() << "expected InvalidLts";
  } catch (const InvalidLts& e) {
    EXPECT_STREQ(e.what(), "derivation identity violated at (1,3,2,3,2)");
  }
}

TEST(Embedding, CanonicityExamples) {
  EXPECT_TRUE(is_canonical(standard_embedding(entry("dim3-I"))));
  EXPECT_TRUE(is_canonical(standard_embedding(entry("dim3-II"))));

  // Adjoin a central even vector to the so(3) embedding: it spans an ideal
  // inside h, so the result is not canonical.
  StandardEmbedding e = standard_embedding(entry("dim2-1"));
  const std::size_t m = e.algebra.dim();
  LieAlgebra::Builder b(m + 1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Vector v = e.algebra.bracket(i, j);
      v.push_back(0);
      b.set_bracket(i, j, v);
    }
  e.algebra = b.build();
  e.grading.odd.push_back(false);
  e.h_basis.push_back(Matrix(2, 2));
  EXPECT_FALSE(is_canonical(e));
}

TEST(Embedding, DecomposeExamples) {
  Decomposition sol = decompose(standard_embedding(entry("dim3-V+")));
  EXPECT_TRUE(sol.m_prime.is_full());
  EXPECT_TRUE(sol.r.is_full());
  Decomposition s = decompose(standard_embedding(entry("dim2-1")));
  EXPECT_TRUE(s.m_prime.is_zero());
  EXPECT_TRUE(s.r.is_zero());
  Decomposition sp = decompose(standard_embedding(entry("split-2")));
  EXPECT_EQ(sp.m_prime, coordinate_subspace(3, {0}));
}

TEST(Embedding, RadicalExamples) {
  for (const char* label : {"dim3-I", "dim3-II", "dim3-V-", "dim3-VI", "dim2-5"})
    EXPECT_TRUE(lts_radical(entry(label)).is_full()) << label;
  for (const char* label : {"dim2-1", "dim2-2", "dim2-3"}) EXPECT_TRUE(lts_radical(entry(label)).is_zero()) << label;
  EXPECT_EQ(lts_radical(entry("split-1a")), coordinate_subspace(3, {0}));
}

TEST(EmbeddingProperty, RoundTripAndGrading) {
  Gen g(401);
  for (const auto& en : catalog::all_entries()) {
    for (int trial = 0; trial < 5; ++trial) {
      TripleSystem t = trial == 0 ? en.system : transform(en.system, g.invertible(en.system.dim()));
      StandardEmbedding e = standard_embedding(t);
      EXPECT_FALSE(check_jacobi(e.algebra).has_value()) << en.label;
      EXPECT_FALSE(check_grading(e.algebra, e.grading).has_value()) << en.label;
      EXPECT_EQ(lie_to_lts(e.algebra, e.grading), t) << en.label;
      EXPECT_TRUE(is_canonical(e)) << en.label;
    }
  }
}

TEST(EmbeddingProperty, HDimIsRankOfAllDerivations) {
  Gen g(402);
  for (int trial = 0; trial < 50; ++trial) {
    TripleSystem t = g.valid_system();
    const std::size_t n = t.dim();
    std::vector<Vector> flat;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) flat.push_back(inner_derivation(t, unit_vector(n, i), unit_vector(n, j)).entries());
    EXPECT_EQ(standard_embedding(t).h_dim(), span(flat, n * n).dim());
  }
}

TEST(EmbeddingProperty, QuotientByRadicalIsSemisimple) {
  for (const auto& en : catalog::all_entries()) {
    TripleSystem q = quotient(en.system, lts_radical(en.system));
    EXPECT_TRUE(lts_radical(q).is_zero()) << en.label;
  }
}

TEST(EmbeddingProperty, DecompositionPieces) {
  for (const auto& en : catalog::all_entries()) {
    StandardEmbedding e = standard_embedding(en.system);
    Decomposition d = decompose(e);
    EXPECT_TRUE(is_ideal(en.system, d.m_prime)) << en.label;
    EXPECT_EQ(d.m_prime.dim() + d.h_prime.dim(), d.r.dim()) << en.label;
    EXPECT_EQ(d.m_prime, lts_radical(en.system));
  }
}

}  // namespace
}  // namespace lts
