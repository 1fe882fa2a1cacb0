#include <gtest/gtest.h>

#include <set>

#include "starfact/bijection.hpp"
#include "test_util.hpp"

using namespace starfact;
using starfact::testing::P;
using starfact::testing::symmetric_group;

namespace {

const char* kDelta = "(6 8)(6 1)(6 3)(6 1)(6 2)(6 5)(6 8)(6 7)(6 4)(6 4)";
const char* kDeltaPrime = "(3 1)(3 8)(3 2)(3 5)(3 7)(3 4)(3 4)(3 6)(3 7)(3 8)";

Permutation example_pi() { return P("(13)(285)(4)(67)"); }

SFPreimage alpha(DTuple d = {1, 3, 1, 2}) {
  return SFPreimage{parse_word("11122243342"), std::move(d), example_pi(), 6};
}

}  // namespace

TEST(Sf, WorkedExamples) {
  EXPECT_EQ(sf(alpha()).to_string(), kDelta);
  EXPECT_EQ(sf(alpha({2, 3, 1, 1})).to_string(), "(6 4)(6 4)(6 7)(6 8)(6 3)(6 1)(6 3)(6 2)(6 5)(6 8)");
}

TEST(Sf, SingleCycle) {
  const SFPreimage pre{parse_word("111"), {1}, P("(123)"), 1, true};
  EXPECT_EQ(sf(pre).to_string(), "(1 3)(1 2)");
}

TEST(SfInverse, WorkedExample) {
  const auto pre = sf_inverse(parse_factorization(kDelta, 8), example_pi());
  EXPECT_EQ(to_string(pre), "necklace=11122243342;origin=0;d=1,3,1,2");
  EXPECT_EQ(pre, alpha());
  EXPECT_FALSE(pre.degenerate);
}

TEST(SfInverse, SingleCycleIsFlagged) {
  const auto pre = sf_inverse(parse_factorization("(1 3)(1 2)", 3), P("(123)"));
  EXPECT_TRUE(pre.degenerate);
  EXPECT_EQ(format_word(pre.necklace), "111");
  EXPECT_EQ(pre.d, DTuple{1});
  EXPECT_EQ(sf(pre).to_string(), "(1 3)(1 2)");
}

TEST(SfInverse, RejectsNonFactorizations) {
  EXPECT_THROW(sf_inverse(parse_factorization("(6 8)(6 1)", 8), example_pi()), Error);
}

TEST(Preimage, ParseWithOrigin) {
  EXPECT_EQ(parse_preimage("necklace=11122243342;origin=0;d=1,3,1,2", example_pi(), 6), alpha());
  EXPECT_EQ(parse_preimage("necklace=21112224334;origin=1;d=1,3,1,2", example_pi(), 6), alpha());
  for (const char* bad : {"necklace=11122243342;d=1,3,1,2", "necklace=11122243342;origin=11;d=1,3,1,2",
                          "necklace=11122243342;origin=0;d=1,,2", "garbage"})
    EXPECT_THROW(parse_preimage(bad, example_pi(), 6), Error) << bad;
}

TEST(Preimage, Validation) {
  auto expect_invalid = [](const SFPreimage& pre) {
    try {
      validate_preimage(pre);
      ADD_FAILURE() << to_string(pre);
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kInvalidArgument);
    }
  };
  expect_invalid(alpha({1, 4, 1, 2}));  // d_2 > l_2
  expect_invalid(alpha({1, 3, 1}));
  expect_invalid(SFPreimage{parse_word("1112224334"), {1, 3, 1, 2}, example_pi(), 6});  // wrong type
  expect_invalid(SFPreimage{parse_word("11122243432"), {1, 3, 1, 2}, example_pi(), 6});  // crossing
}

TEST(Shift, WorkedExample) {
  const auto beta = shift(alpha(), 3);
  EXPECT_EQ(format_word(beta.necklace), "21122243344");
  EXPECT_EQ(beta.d, (DTuple{1, 3, 1, 2}));
  EXPECT_EQ(beta.pivot, 3);
  EXPECT_EQ(shift_inverse(beta, 6), alpha());
}

TEST(Shift, SamePivotCycleIsIdentity) {
  const auto pi = example_pi();
  const SFPreimage pre = sf_inverse(parse_factorization(kDelta, 8), pi);
  EXPECT_EQ(shift(pre, 7).necklace, pre.necklace);
  EXPECT_EQ(shift(pre, 7).pivot, 7);
  EXPECT_EQ(shift_inverse(pre, 6), pre);
}

TEST(Shift, KnownCollisionOnIdentityOfS4) {
  // The maximal-h rule sends two distinct preimages to the same necklace.
  const auto id = Permutation::identity(4);
  const SFPreimage a{parse_word("1324423"), {1, 1, 1, 1}, id, 1};
  const SFPreimage b{parse_word("1344223"), {1, 1, 1, 1}, id, 1};
  EXPECT_EQ(format_word(shift(a, 2).necklace), "1134423");
  EXPECT_EQ(format_word(shift(b, 2).necklace), "1134423");
}

TEST(PivotChange, WorkedExample) {
  EXPECT_EQ(pivot_change(parse_factorization(kDelta, 8), example_pi(), 3).to_string(), kDeltaPrime);
  EXPECT_EQ(pivot_change(parse_factorization(kDelta, 8), example_pi(), 6).to_string(), kDelta);
  EXPECT_EQ(pivot_change(parse_factorization("(1 3)(1 2)", 3), P("(123)"), 2).to_string(), "(2 1)(2 3)");
  EXPECT_THROW(pivot_change(parse_factorization(kDelta, 8), example_pi(), 9), Error);
}

TEST(PivotChange, LandsInTargetSet) {
  for (int n = 2; n <= 4; ++n)
    for (const auto& pi : symmetric_group(n))
      for (int k = 1; k <= n; ++k)
        for (const auto& delta : enumerate_factorizations(pi, k))
          for (int k2 = 1; k2 <= n; ++k2) {
            const auto moved = pivot_change(delta, pi, k2);
            ASSERT_EQ(moved.pivot(), k2);
            ASSERT_TRUE(verify_star_factorization(moved, pi)) << delta.to_string() << " -> " << k2;
          }
}

TEST(SfProperty, InverseRoundTripsOnEveryFactorization) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& pi : symmetric_group(n))
      for (int k = 1; k <= n; ++k) {
        std::set<std::string> preimages;
        for (const auto& delta : enumerate_factorizations(pi, k)) {
          const auto pre = sf_inverse(delta, pi);
          ASSERT_EQ(sf(pre), delta) << to_string(pre);
          if (pi.cycle_count() > 1) {
            ASSERT_EQ(parse_preimage(to_string(pre), pi, k), pre);
            ASSERT_TRUE(preimages.insert(to_string(pre)).second);
          }
        }
      }
}

TEST(SfProperty, PreimageNecklaceIsTheBarConstruction) {
  const auto pi = example_pi();
  for_each_factorization(pi, 6, [&](const StarFactorization& delta) {
    const auto pre = sf_inverse(delta, pi);
    const auto bar = bar_insert(cycle_word(delta, pi), pivot_cycle_index(pi, 6));
    EXPECT_EQ(canonical_necklace(pre.necklace), canonical_necklace(bar));
    return true;
  });
}

TEST(ShiftProperty, OutputsAreValidPreimagesForTheNewPivot) {
  for (int n = 2; n <= 4; ++n)
    for (const auto& pi : symmetric_group(n)) {
      if (pi.cycle_count() < 2) continue;
      for (int k = 1; k <= n; ++k)
        for (const auto& delta : enumerate_factorizations(pi, k)) {
          const auto pre = sf_inverse(delta, pi);
          for (int k2 = 1; k2 <= n; ++k2) {
            const auto moved = shift(pre, k2);
            EXPECT_NO_THROW(validate_preimage(moved));
            EXPECT_EQ(moved.d, pre.d);
          }
        }
    }
}
