#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "bimarket/core.hpp"

namespace bimarket {
namespace {

std::vector<std::size_t> image(const Matching& m) { return {m.image().begin(), m.image().end()}; }

TEST(MatchingFromImage, AcceptsPermutations) {
  EXPECT_EQ(matching_from_image({0, 1, 2}), Matching::identity(3));
  // Worker 1 -> h1, worker 2 -> h3, worker 3 -> h2.
  const Matching p5 = matching_from_image({0, 2, 1});
  EXPECT_EQ(p5[0], 0u);
  EXPECT_EQ(p5[1], 2u);
  EXPECT_EQ(p5[2], 1u);
}

TEST(MatchingFromImage, RejectsDuplicatesAndOutOfRange) {
  EXPECT_THROW(matching_from_image({0, 0, 1}), NotAPermutation);
  EXPECT_THROW(matching_from_image({0, 3, 1}), NotAPermutation);
}

TEST(Inverse, Examples) {
  EXPECT_EQ(inverse(Matching::identity(4)), Matching::identity(4));
  EXPECT_EQ(image(inverse(matching_from_image({1, 0, 2}))), (std::vector<std::size_t>{1, 0, 2}));
  const Matching cycle = matching_from_image({1, 2, 0});
  const Matching inv = inverse(cycle);
  EXPECT_EQ(image(inv), (std::vector<std::size_t>{2, 0, 1}));
  EXPECT_EQ(compose(cycle, inv), Matching::identity(3));
}

TEST(AllMatchings, Counts) {
  EXPECT_EQ(all_matchings(1), std::vector<Matching>{Matching::identity(1)});
  EXPECT_EQ(all_matchings(3).size(), 6u);
  EXPECT_EQ(all_matchings(4).size(), 24u);
}

TEST(AllMatchings, CapIsEnforced) {
  EXPECT_EQ(all_matchings(8).size(), 40320u);
  EXPECT_THROW(all_matchings(9), SizeTooLarge);
  EXPECT_THROW(all_matchings(0), InputError);
}

TEST(AllMatchingsProperty, FactorialDistinctAndSorted) {
  std::size_t factorial = 1;
  for (std::size_t n = 1; n <= 6; ++n) {
    factorial *= n;
    const auto all = all_matchings(n);
    ASSERT_EQ(all.size(), factorial);
    ASSERT_TRUE(std::is_sorted(all.begin(), all.end()));
    ASSERT_EQ(std::set<Matching>(all.begin(), all.end()).size(), factorial);
  }
}

TEST(MatchingProperty, InverseIsInvolutionAndComposesToIdentity) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    std::vector<std::size_t> img(n);
    std::iota(img.begin(), img.end(), std::size_t{0});
    std::shuffle(img.begin(), img.end(), rng);
    const Matching m = matching_from_image(img);
    ASSERT_EQ(inverse(inverse(m)), m);
    ASSERT_EQ(compose(m, inverse(m)), Matching::identity(n));
    ASSERT_EQ(compose(inverse(m), m), Matching::identity(n));
  }
}

TEST(UtilityMatrix, ValidatesShape) {
  EXPECT_THROW(UtilityMatrix(UtilityMatrix::Rows{}), DimensionMismatch);
  EXPECT_THROW(UtilityMatrix({{1, 2}, {3}}), DimensionMismatch);
  EXPECT_THROW(UtilityMatrix({{1, 2}, {3, 4}}, {"a"}), DimensionMismatch);
  const UtilityMatrix m({{1, 2}, {3, Rational(1, 2)}});
  EXPECT_EQ(m(1, 1), Rational(1, 2));
  EXPECT_EQ(m.row_labels(), (std::vector<std::string>{"1", "2"}));
  EXPECT_EQ(m.value_of(matching_from_image({1, 0})), Rational(5));
}

TEST(GameInstance, SizesMustAgree) {
  EXPECT_THROW(GameInstance(UtilityMatrix({{1}}), UtilityMatrix({{1, 2}, {3, 4}})), DimensionMismatch);
}

}  // namespace
}  // namespace bimarket
