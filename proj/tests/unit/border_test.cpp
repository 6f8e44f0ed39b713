#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracle.hpp"
#include "printing.hpp"
#include "trop/border.hpp"
#include "trop/error.hpp"
#include "trop/families.hpp"
#include "trop/ortho.hpp"

namespace {

using trop::BorderedBlocks;
using trop::BorderVector;
using trop::NormalMatrix;

TEST(Border, ComposeAndSplit) {
  for (int n = 2; n <= 8; ++n) {
    const BorderedBlocks strict{NormalMatrix::identity(n - 1), BorderVector::all_minus_one(n - 1),
                                BorderVector::all_minus_one(n - 1)};
    EXPECT_EQ(trop::border_compose(strict), NormalMatrix::identity(n));
    const auto split = trop::border_split(NormalMatrix::all_zero(n));
    EXPECT_EQ(split.inner, NormalMatrix::all_zero(n - 1));
    EXPECT_TRUE(split.column.is_all_zero());
    EXPECT_TRUE(split.row.is_all_zero());
  }
  testkit::Rng rng(41);
  for (int c = 0; c < 200; ++c) {
    const auto a = testkit::random_normal(rng, testkit::random_order(rng, 2, 10));
    EXPECT_EQ(trop::border_compose(trop::border_split(a)), a);
  }
  EXPECT_THROW(trop::border_split(NormalMatrix::identity(1)), trop::Error);
}

TEST(Border, PairConditionExamples) {
  const auto z = trop::border_split(NormalMatrix::all_zero(5));
  EXPECT_TRUE(trop::bordered_pair_condition(z, z));

  const auto a0 = fixtures::matrix(fixtures::kFamilyA[0]), b0 = fixtures::matrix(fixtures::kFamilyB[0]);
  const BorderedBlocks za{a0, BorderVector::all_zero(6), BorderVector::all_zero(6)};
  const BorderedBlocks zb{b0, BorderVector::all_zero(6), BorderVector::all_zero(6)};
  EXPECT_TRUE(trop::bordered_pair_condition(za, zb));
  EXPECT_TRUE(trop::is_orthogonal(trop::border_compose(za), trop::border_compose(zb)));

  const BorderedBlocks ma{a0, BorderVector::all_minus_one(6), BorderVector::all_minus_one(6)};
  const BorderedBlocks mb{b0, BorderVector::all_minus_one(6), BorderVector::all_minus_one(6)};
  EXPECT_FALSE(trop::bordered_pair_condition(ma, mb));
  EXPECT_FALSE(trop::oplus(trop::times_vector(b0, ma.column), ma.column).is_all_zero());
  EXPECT_FALSE(trop::is_orthogonal(trop::border_compose(ma), trop::border_compose(mb)));
}

TEST(Border, PairConditionNeedsOrthogonalInnerBlocks) {
  const auto id = trop::border_split(NormalMatrix::identity(4));
  EXPECT_THROW(trop::bordered_pair_condition(id, id), trop::PreconditionError);
}

TEST(Border, SelfConditionExamples) {
  testkit::Rng rng(42);
  for (int c = 0; c < 50; ++c) {
    const int n = testkit::random_order(rng, 1, 7);
    const BorderedBlocks x{NormalMatrix::all_zero(n), testkit::random_vector(rng, n, 0.5),
                           testkit::random_vector(rng, n, 0.5)};
    EXPECT_EQ(trop::bordered_self_condition(x), x.column.zeros != 0 && x.row.zeros != 0);
    EXPECT_EQ(trop::bordered_self_condition(x), trop::is_self_orthogonal(trop::border_compose(x)));
  }

  const BorderedBlocks circ{fixtures::matrix(fixtures::kCirculant3), BorderVector::all_minus_one(3),
                            BorderVector::all_minus_one(3)};
  EXPECT_FALSE(trop::bordered_self_condition(circ));
  EXPECT_FALSE(trop::times_vector(circ.inner, circ.column).is_all_zero());

  const BorderVector first_only{4, 0b0001};
  const BorderedBlocks cross{trop::FamilySpec::cross(4, 0, 0).generic(), first_only, first_only};
  EXPECT_TRUE(trop::bordered_self_condition(cross));
  const auto d = oracle::dense(trop::border_compose(cross));
  EXPECT_TRUE(oracle::all_zero(oracle::product(d, d)));

  EXPECT_THROW(trop::bordered_self_condition(trop::border_split(NormalMatrix::identity(3))),
               trop::PreconditionError);
}

TEST(Border, VectorProducts) {
  const auto a = trop::parse_matrix("0-0\n00-\n-00");
  const BorderVector v{3, 0b001};
  EXPECT_EQ(trop::times_vector(a, v).zeros, 0b011);
  EXPECT_EQ(trop::vector_times(v, a).zeros, 0b101);
}

TEST(Reduce, StrictlyNormal) {
  for (int n = 2; n <= 5; ++n) {
    EXPECT_EQ(trop::reduce_order(NormalMatrix::identity(n), n - 1), NormalMatrix::identity(n - 1));
    EXPECT_EQ(trop::orth_set(NormalMatrix::identity(n)).size(), 1u);
    EXPECT_EQ(trop::orth_set(NormalMatrix::identity(n - 1)).size(), 1u);
  }
  for (int n = 1; n <= 4; ++n) {
    const auto only = trop::orth_set(NormalMatrix::identity(n));
    ASSERT_EQ(only.size(), 1u);
    EXPECT_EQ(only.front(), NormalMatrix::all_zero(n));
  }
}

TEST(Reduce, SingleZero) {
  const auto a = NormalMatrix::single_zero(4, 0, 1);
  const auto r = trop::reduce_order(a, 2);
  EXPECT_EQ(r, NormalMatrix::single_zero(3, 0, 1));
  EXPECT_EQ(trop::orth_set(a).size(), trop::orth_set(r).size());
}

TEST(Reduce, Precondition) {
  const auto a = NormalMatrix::single_zero(4, 0, 2);
  EXPECT_THROW(trop::reduce_order(a, 2), trop::PreconditionError);
  EXPECT_THROW(trop::reduce_order(NormalMatrix::identity(1), 0), trop::Error);
}

// Every matrix orthogonal to the conjugated matrix is all zero in its last row
// and column, with an inner block orthogonal to the reduced matrix.
TEST(Reduce, OrthogonalSetStructure) {
  for (int n = 2; n <= 4; ++n) {
    testkit::for_each_normal(n, [&](const NormalMatrix& a) {
      for (int i = 0; i < n; ++i) {
        if (a.row(i) != (1u << i) || a.col(i) != (1u << i)) continue;
        const auto moved = trop::conjugate_by_transposition(a, n - 1, i);
        const auto reduced = trop::reduce_order(a, i);
        const auto members = trop::orth_set(moved);
        ASSERT_EQ(members.size(), trop::orth_set(reduced).size());
        ASSERT_EQ(trop::orth_set(a).size(), members.size());
        for (const auto& x : members) {
          const auto split = trop::border_split(x);
          EXPECT_TRUE(split.column.is_all_zero() && split.row.is_all_zero());
          EXPECT_TRUE(trop::is_orthogonal(split.inner, reduced));
        }
      }
    });
  }
}

}  // namespace
