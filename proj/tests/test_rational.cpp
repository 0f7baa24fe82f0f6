#include <random>

#include <gtest/gtest.h>

#include "bimarket/rational.hpp"

namespace bimarket {
namespace {

TEST(Rational, NormalizesSignAndGcd) {
  const Rational r(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(Rational(0, -7), Rational(0));
  EXPECT_EQ(Rational(0, -7).den(), 1);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(3, 4), Rational(-1, 4));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
}

TEST(Rational, ZeroDenominatorAndDivision) {
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, OverflowIsReported) {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  EXPECT_THROW(big + 1, std::overflow_error);
  EXPECT_THROW(big * big, std::overflow_error);
  EXPECT_EQ(big * Rational(1, 2) * 2, big);
}

TEST(Rational, ParseForms) {
  EXPECT_EQ(Rational::parse("3/2"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("-6/4"), Rational(-3, 2));
  EXPECT_EQ(Rational::parse("42"), Rational(42));
  EXPECT_EQ(Rational::parse("1.5"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("-0.125"), Rational(-1, 8));
  EXPECT_EQ(Rational::parse("0.1"), Rational(1, 10));
  EXPECT_EQ(Rational::parse(".5"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("2.5e2"), Rational(250));
  EXPECT_EQ(Rational::parse("25E-1"), Rational(5, 2));
  EXPECT_EQ(Rational::parse(" 7 "), Rational(7));
}

TEST(Rational, ParseRejectsGarbage) {
  for (const char* bad : {"", "abc", "1/0", "1.2/3", "--1", "1e", ".", "1..2", "3/"}) {
    EXPECT_ANY_THROW(Rational::parse(bad)) << bad;
  }
}

TEST(Rational, ToStringRoundTrips) {
  for (const Rational r : {Rational(3, 2), Rational(-7), Rational(0), Rational(-5, 9)}) {
    EXPECT_EQ(Rational::parse(r.to_string()), r);
  }
  EXPECT_EQ(Rational(3, 2).to_string(), "3/2");
  EXPECT_EQ(Rational(4, 2).to_string(), "2");
}

TEST(RationalProperty, AddThenSubtractIsIdentity) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
  std::uniform_int_distribution<std::int64_t> den(1, 1000);
  for (int trial = 0; trial < 2000; ++trial) {
    const Rational x(num(rng), den(rng));
    const Rational y(num(rng), den(rng));
    ASSERT_EQ((x + y) - y, x);
    if (y != 0) {
      ASSERT_EQ((x / y) * y, x);
    }
  }
}

}  // namespace
}  // namespace bimarket
