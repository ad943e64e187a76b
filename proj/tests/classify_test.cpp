#include <gtest/gtest.h>

#include "lts/catalog.hpp"
#include "lts/classify.hpp"
#include "lts/errors.hpp"
#include "support/generators.hpp"

namespace lts {
namespace {

using testing::entry;
using testing::Gen;
using testing::mat;

using Labels = std::vector<std::string>;

void expect_sound(const TripleSystem& a, const TripleSystem& b, const IsoResult& r) {
  switch (r.verdict) {
    case IsoVerdict::Isomorphic:
      ASSERT_TRUE(r.witness.has_value());
      EXPECT_EQ(transform(a, *r.witness), b);
      break;
    case IsoVerdict::NonIsomorphic:
      ASSERT_TRUE(r.separator.has_value());
      EXPECT_EQ(first_difference(fingerprint(a), fingerprint(b)), r.separator);
      break;
    case IsoVerdict::Unknown:
      EXPECT_FALSE(r.witness.has_value());
      break;
  }
}

TEST(Fingerprint, Examples) {
  Fingerprint ab = fingerprint(entry("dim3-I"));
  EXPECT_EQ(ab.dim_m, 3u);
  EXPECT_EQ(ab.h_dim, 0u);
  EXPECT_EQ(ab.g_dim, 3u);
  EXPECT_EQ(ab.g_killing, (KillingSignature{0, 0, 3}));
  Fingerprint a = fingerprint(entry("dim2-4a"));
  EXPECT_EQ(a.m_derived_dims, (std::vector<std::size_t>{2, 1, 0}));
  EXPECT_EQ(a.g_dim, 3u);
  EXPECT_EQ(a.g_killing, (KillingSignature{1, 0, 2}));
  EXPECT_EQ(fingerprint(entry("dim2-4b")).g_killing, (KillingSignature{0, 1, 2}));
  EXPECT_THROW(fingerprint(catalog::unrealizable_entries().front().system), InvalidLts);
}

TEST(Fingerprint, TextForm) {
  const std::string text = to_string(fingerprint(entry("dim2-4a")));
  EXPECT_EQ(text,
            "dim_m: 2\nm_derived_dims: 2 1 0\nm_center_dim: 0\nlts_radical_dim: 2\nh_dim: 1\ng_dim: 3\n"
            "g_derived_dims: 3 2 0\ng_lcs_dims: 3 2 2\ng_killing: (1,0,2)\ng_radical_dim: 3\ng_center_dim: 0\n"
            "canonical: yes\nm_killing: (1,0,1)\nh_killing: (0,0,1)\n");
}

TEST(Isomorphic, Examples) {
  const TripleSystem& t = entry("dim3-V+");
  IsoResult same = isomorphic(t, t, 10);
  EXPECT_EQ(same.verdict, IsoVerdict::Isomorphic);
  EXPECT_EQ(*same.witness, Matrix::identity(3));
  EXPECT_EQ(same.candidates_tried, 0u);

  IsoResult ab = isomorphic(entry("dim2-4a"), entry("dim2-4b"), 1000);
  EXPECT_EQ(ab.verdict, IsoVerdict::NonIsomorphic);
  EXPECT_EQ(ab.separator, "g_killing");

  const TripleSystem& s = entry("dim2-1");
  TripleSystem moved = transform(s, mat({{1, 1}, {0, 1}}, 2));
  IsoResult r = isomorphic(s, moved, 1000000);
  EXPECT_EQ(r.verdict, IsoVerdict::Isomorphic);
  expect_sound(s, moved, r);
}

TEST(Isomorphic, UnknownWhenBudgetRunsOut) {
  const TripleSystem& s = entry("dim2-1");
  TripleSystem moved = transform(s, mat({{1, 1}, {0, 1}}, 2));
  IsoResult r = isomorphic(s, moved, 1);
  EXPECT_EQ(r.verdict, IsoVerdict::Unknown);
  EXPECT_EQ(r.candidates_tried, 1u);
}

TEST(Isomorphic, DocumentedCollisionsHaveWitnesses) {
  for (auto [a, b] : {std::pair{"dim3-III+", "dim3-IV+"}, {"dim3-III-", "dim3-IV-"}, {"split-5", "split-6"}}) {
    IsoResult r = isomorphic(entry(a), entry(b), 1000000);
    EXPECT_EQ(r.verdict, IsoVerdict::Isomorphic) << a << " " << b;
    expect_sound(entry(a), entry(b), r);
  }
}

TEST(Isomorphic, DeterministicWitness) {
  IsoResult r1 = isomorphic(entry("split-5"), entry("split-6"), 1000000);
  IsoResult r2 = isomorphic(entry("split-5"), entry("split-6"), 1000000);
  EXPECT_EQ(r1.witness, r2.witness);
  EXPECT_EQ(r1.candidates_tried, r2.candidates_tried);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(entry("dim3-II")), Labels{"dim3-II"});
  EXPECT_EQ(classify(TripleSystem(3)), Labels{"dim3-I"});
  Gen g(501);
  EXPECT_EQ(classify(transform(entry("split-2"), g.invertible(3))), Labels{"split-2"});
  EXPECT_EQ(classify(entry("dim3-IV+")), (Labels{"dim3-III+", "dim3-IV+"}));
  EXPECT_EQ(classify(entry("split-6")), (Labels{"split-5", "split-6"}));
  EXPECT_THROW(classify(TripleSystem(4)), UnsupportedDimension);
  EXPECT_THROW(classify(TripleSystem(1)), UnsupportedDimension);
  EXPECT_THROW(classify(catalog::unrealizable_entries().front().system), InvalidLts);
}

TEST(Classify, NoMatchOutsideCatalog) {
  // beta = diag(2,1) is isomorphic to dim2-1 only over R, but shares its
  // fingerprint, so it is reported against that label.
  EXPECT_EQ(classify(catalog::from_symmetric_form({2, 1})), Labels{"dim2-1"});
}

TEST(ClassifyProperty, FingerprintInvariance) {
  Gen g(502);
  for (const auto& e : catalog::all_entries())
    for (int trial = 0; trial < 20; ++trial)
      EXPECT_EQ(fingerprint(transform(e.system, g.invertible(e.system.dim()))), e.expected) << e.label;
}

TEST(ClassifyProperty, SelfRecognition) {
  for (const auto& e : catalog::all_entries()) {
    Labels got = classify(e.system);
    EXPECT_NE(std::find(got.begin(), got.end(), e.label), got.end()) << e.label;
  }
}

TEST(ClassifyProperty, VerdictsAreSound) {
  Gen g(503);
  const auto& entries = catalog::all_entries();
  for (const auto& a : entries)
    for (const auto& b : entries) {
      if (a.system.dim() != b.system.dim()) continue;
      IsoResult r = isomorphic(a.system, b.system, 20000);
      expect_sound(a.system, b.system, r);
    }
  for (int trial = 0; trial < 20; ++trial) {
    TripleSystem t = g.valid_system();
    Matrix T = mat({{1, 0, 0}, {1, 1, 0}, {0, -1, 1}}, 3);
    if (t.dim() != 3) continue;
    TripleSystem u = transform(t, T);
    IsoResult r = isomorphic(t, u, 100000);
    EXPECT_EQ(r.verdict, IsoVerdict::Isomorphic);
    expect_sound(t, u, r);
  }
}

}  // namespace
}  // namespace lts
