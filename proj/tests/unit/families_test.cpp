#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracle.hpp"
#include "printing.hpp"
#include "trop/error.hpp"
#include "trop/families.hpp"
#include "trop/ortho.hpp"

namespace {

using trop::FamilySpec;
using trop::MinimalVariant;
using trop::NormalMatrix;

TEST(FamilySpec, GenericZeroCounts) {
  EXPECT_EQ(trop::zero_count(FamilySpec::cross(4, 0, 1).generic()) - 4, 5);
  EXPECT_EQ(trop::zero_count(FamilySpec::cross(4, 0, 0).generic()) - 4, 6);
  const auto wzz = FamilySpec::punctured_cross(4, 0, 1) & FamilySpec::cell(4, 0, 1) & FamilySpec::cell(4, 1, 0);
  EXPECT_EQ(trop::zero_count(wzz.generic()) - 4, 6);
  EXPECT_EQ(trop::zero_count(FamilySpec::cross(5, 0, 1).generic()), 12);
}

TEST(FamilySpec, Contains) {
  for (int n = 2; n <= 6; ++n) {
    EXPECT_TRUE(FamilySpec::cross(n, 0, 1).contains(NormalMatrix::all_zero(n)));
    EXPECT_FALSE(FamilySpec::cross(n, 0, 1).contains(NormalMatrix::identity(n)));
  }
  EXPECT_TRUE(FamilySpec::punctured_cross(2, 1, 0).contains(NormalMatrix::identity(2)));
  EXPECT_EQ(FamilySpec::punctured_cross(2, 1, 0).generic(), NormalMatrix::identity(2));
}

TEST(FamilySpec, Parse) {
  const auto spec = FamilySpec::parse(4, "V:1,2&Z:2,1");
  EXPECT_EQ(spec.generic(), (FamilySpec::cross(4, 0, 1) & FamilySpec::cell(4, 1, 0)).generic());
  EXPECT_EQ(FamilySpec::parse(4, spec.to_string()).generic(), spec.generic());
  EXPECT_THROW(FamilySpec::parse(4, "V:1"), trop::Error);
  EXPECT_THROW(FamilySpec::parse(4, "X:1,2"), trop::Error);
  EXPECT_THROW(FamilySpec::parse(4, "V:1,5"), trop::Error);
  EXPECT_EQ(FamilySpec::parse(4, "").generic(), NormalMatrix::identity(4));
}

TEST(FamilySpec, OrderTwoCoincidences) {
  const auto u12 = NormalMatrix::single_zero(2, 0, 1);
  EXPECT_EQ(FamilySpec::cross(2, 0, 1).generic(), u12);
  EXPECT_EQ((FamilySpec::punctured_cross(2, 1, 0) & FamilySpec::cell(2, 0, 1)).generic(), u12);
}

TEST(MinimalFamily, MatchesWorkedPairs) {
  for (int variant = 0; variant < 4; ++variant) {
    const auto [a, b] = trop::minimal_family_pair(6, MinimalVariant{3, 2, variant});
    EXPECT_EQ(a, fixtures::matrix(fixtures::kFamilyA[variant])) << variant;
    EXPECT_EQ(b, fixtures::matrix(fixtures::kFamilyB[variant])) << variant;
    EXPECT_TRUE(oracle::orthogonal(oracle::dense(a), oracle::dense(b)));
  }
}

TEST(MinimalFamily, EqualIndicesCollapse) {
  const auto cross = FamilySpec::cross(3, 0, 0).generic();
  for (int variant = 0; variant < 4; ++variant) {
    const auto [a, b] = trop::minimal_family_pair(3, MinimalVariant{0, 0, variant});
    EXPECT_EQ(a, cross);
    EXPECT_EQ(b, cross);
  }
}

TEST(MinimalFamily, RejectsBadIndices) {
  EXPECT_THROW(trop::minimal_family_pair(3, MinimalVariant{3, 0, 0}), trop::Error);
  EXPECT_THROW(trop::minimal_family_pair(3, MinimalVariant{0, 1, 4}), trop::Error);
}

TEST(Classify, Examples) {
  const auto v = trop::classify_minimal_family(fixtures::matrix(fixtures::kFamilyA[2]),
                                               fixtures::matrix(fixtures::kFamilyB[2]));
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(*v, (MinimalVariant{3, 2, 2}));
  for (int n = 3; n <= 6; ++n) {
    EXPECT_FALSE(trop::classify_minimal_family(fixtures::outside_a(n), fixtures::outside_b(n))) << n;
  }
  EXPECT_FALSE(trop::classify_minimal_family(NormalMatrix::all_zero(3), NormalMatrix::identity(3)));
  EXPECT_THROW(trop::classify_minimal_family(NormalMatrix::identity(2), NormalMatrix::identity(3)),
               trop::DimensionMismatch);
}

TEST(Recover, Examples) {
  const auto rep = trop::indicator(fixtures::matrix(fixtures::kFamilyA[1]), fixtures::matrix(fixtures::kFamilyB[1]));
  EXPECT_EQ(trop::recover_minimal_family(rep), (std::pair{3, 2}));
  EXPECT_FALSE(trop::recover_minimal_family(trop::indicator(fixtures::outside_a(6), fixtures::outside_b(6))));
  testkit::Rng rng(31);
  for (int n = 4; n <= 8; ++n) {
    const auto x = testkit::random_normal(rng, n);
    EXPECT_FALSE(trop::recover_minimal_family(trop::indicator(NormalMatrix::all_zero(n), x)));
  }
}

// With three indices the gift condition has no cells to check, so the
// indicator test accepts pairs that are not generic family pairs.
TEST(Recover, OrderThreeIsWeaker) {
  const auto z = NormalMatrix::all_zero(3), id = NormalMatrix::identity(3);
  EXPECT_FALSE(trop::classify_minimal_family(z, id));
  EXPECT_EQ(trop::recover_minimal_family(trop::indicator(z, id)), (std::pair{0, 1}));
}

TEST(MinimalFamily, SufficiencyAndCounts) {
  testkit::Rng rng(32);
  for (int n = 2; n <= 10; ++n) {
    for (int k = 0; k < n; ++k) {
      for (int m = 0; m < n; ++m) {
        if (k == m) continue;
        for (int variant = 0; variant < 4; ++variant) {
          const MinimalVariant v{k, m, variant};
          const auto [a, b] = trop::minimal_family_pair(n, v);
          ASSERT_TRUE(trop::is_orthogonal(a, b));
          const auto ea = testkit::random_superset(rng, a, 0.2);
          const auto eb = testkit::random_superset(rng, b, 0.2);
          EXPECT_TRUE(trop::is_orthogonal(ea, eb));
          const auto [sa, sb] = trop::minimal_family_specs(n, v);
          EXPECT_TRUE(sa.contains(ea) && sb.contains(eb));
          if (a == b) continue;
          const auto rep = trop::indicator(a, b);
          EXPECT_EQ(trop::pair_weight(a, b), 4 * n - 6);
          EXPECT_EQ(rep.prop_count, 4 * n - 6);
          EXPECT_EQ(rep.gift_count, (n - 2) * (n - 3));
          EXPECT_EQ(rep.duplicate_count, 0);
          if (n >= 4) {
            EXPECT_EQ(trop::recover_minimal_family(rep), (std::pair{k, m}));
          }
          const auto back = trop::classify_minimal_family(a, b);
          ASSERT_TRUE(back.has_value());
          EXPECT_EQ(trop::minimal_family_pair(n, *back), (std::pair{a, b}));
        }
      }
    }
  }
}

TEST(Cross, OppositeCrossesAreOrthogonal) {
  testkit::Rng rng(33);
  for (int c = 0; c < 1000; ++c) {
    const int n = testkit::random_order(rng, 2, 10);
    const int p = testkit::random_order(rng, 0, n - 1), q = testkit::random_order(rng, 0, n - 1);
    const auto a = testkit::random_superset(rng, FamilySpec::cross(n, p, q).generic(), 0.3);
    const auto b = testkit::random_superset(rng, FamilySpec::cross(n, q, p).generic(), 0.3);
    EXPECT_TRUE(trop::is_orthogonal(a, b));
    if (p == q) {
      EXPECT_TRUE(trop::is_self_orthogonal(a));
    }
  }
}

}  // namespace
