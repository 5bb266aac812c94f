#include "qortho/rational.hpp"

#include <gtest/gtest.h>

#include <random>

namespace qortho {
namespace {

TEST(Rational, ParseAndFormatRoundTrip) {
  EXPECT_EQ(to_string(parse_rational("3/4")), "3/4");
  EXPECT_EQ(to_string(parse_rational("-3/4")), "-3/4");
  EXPECT_EQ(to_string(parse_rational("7")), "7");
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("3/-6")), "-1/2");
  EXPECT_EQ(parse_rational("41/4"), Rational(41, 4));
}

TEST(Rational, ParseRejectsNonRationals) {
  EXPECT_THROW(parse_rational("3.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("a/b"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/2/3"), std::invalid_argument);
  EXPECT_THROW(parse_rational(" 1/2"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1e3"), std::invalid_argument);
}

TEST(Rational, ExactFieldAxiomsOnRandomTriples) {
  std::mt19937 rng(20240517);
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 30);
  for (int trial = 0; trial < 500; ++trial) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(Rational, PochhammerDirectProducts) {
  EXPECT_EQ(pochhammer(Rational(2), 3), Rational(24));  // 2*3*4
  EXPECT_EQ(pochhammer(Rational(-17, 5), 0), Rational(1));
  EXPECT_EQ(pochhammer(Rational(3, 2), 3), Rational(105, 8));  // (3/2)(5/2)(7/2)
}

// alpha_{3,1} = (2)_3 / (2^3 3! (3/2)_3) = 24/630 = 4/105, expanded by hand.
TEST(Rational, PochhammerRodriguesNormalization) {
  Rational alpha = pochhammer(Rational(2), 3) /
                   (rat_pow(Rational(2), 3) * Rational(factorial(3)) *
                    pochhammer(Rational(3, 2), 3));
  EXPECT_EQ(alpha, Rational(4, 105));
}

TEST(Rational, PowAndFactorial) {
  EXPECT_EQ(rat_pow(Rational(2, 3), 3), Rational(8, 27));
  EXPECT_EQ(rat_pow(Rational(2, 3), -2), Rational(9, 4));
  EXPECT_EQ(rat_pow(Rational(5), 0), Rational(1));
  EXPECT_THROW(rat_pow(Rational(0), -1), std::domain_error);
  EXPECT_EQ(factorial(6), Integer(720));
  EXPECT_EQ(binomial(10, 4), Integer(210));
}

TEST(Rational, DoubleBridge) {
  EXPECT_DOUBLE_EQ(to_double(Rational(1, 4)), 0.25);
  EXPECT_EQ(rational_from_double(0.375), Rational(3, 8));
  EXPECT_EQ(rational_from_double(-2.0), Rational(-2));
  EXPECT_THROW(rational_from_double(std::nan("")), std::domain_error);
}

}  // namespace
}  // namespace qortho
