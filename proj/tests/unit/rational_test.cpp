#include <gtest/gtest.h>

#include "covermip/error.hpp"
#include "covermip/rational.hpp"

namespace covermip {
namespace {

TEST(ParseRational, AcceptsFractionsIntegersAndDecimals) {
  EXPECT_EQ(parse_rational("1/2"), Rational(1, 2));
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("+3"), Rational(3));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
  EXPECT_EQ(parse_rational(" 9/10 "), Rational(9, 10));
}

TEST(ParseRational, RejectsGarbage) {
  for (const char* bad : {"", "1/0", "a", "1/2/3", "1.2.3", "--1", "1e5", "/2", "."}) {
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
  }
}

TEST(ToString, Canonical) {
  EXPECT_EQ(to_string(Rational(4, 2)), "2");
  EXPECT_EQ(to_string(Rational(-1, 3)), "-1/3");
}

TEST(ToDecimal, ExactWhenTerminating) {
  EXPECT_EQ(to_decimal(Rational(1, 4)), "0.25");
  EXPECT_EQ(to_decimal(Rational(-5, 2)), "-2.5");
  EXPECT_EQ(to_decimal(Rational(1, 1024)), "0.0009765625");
  EXPECT_EQ(to_decimal(Rational(12)), "12");
  EXPECT_EQ(to_decimal(Rational(0)), "0");
}

TEST(ToDecimal, SeventeenSignificantDigitsOtherwise) {
  EXPECT_EQ(to_decimal(Rational(1, 3)), "0.33333333333333333");
  EXPECT_EQ(to_decimal(Rational(2, 3)), "0.66666666666666667");
  EXPECT_EQ(to_decimal(Rational(-200, 3)), "-66.666666666666667");
  EXPECT_EQ(to_decimal(Rational(1, 7000)), "0.00014285714285714286");
}

TEST(ToDecimal, RoundingCarriesIntoNewDigit) {
  // 0.99999999999999999999... rounds up to 1 at 17 digits
  const Rational q = Rational(1) - Rational(1, BigInt("300000000000000000000"));
  EXPECT_EQ(to_decimal(q), "1.0000000000000000");
}

TEST(FloorCeil, NegativeValues) {
  EXPECT_EQ(floor_of(Rational(-3, 2)), -2);
  EXPECT_EQ(ceil_of(Rational(-3, 2)), -1);
  EXPECT_EQ(floor_of(Rational(7, 2)), 3);
  EXPECT_EQ(ceil_of(Rational(7, 2)), 4);
  EXPECT_EQ(ceil_of(Rational(4)), 4);
  EXPECT_EQ(frac_of(Rational(-1, 4)), Rational(3, 4));
}

TEST(IsTerminating, Denominators) {
  EXPECT_TRUE(is_terminating(Rational(3, 40)));
  EXPECT_FALSE(is_terminating(Rational(1, 6)));
}

}  // namespace
}  // namespace covermip
