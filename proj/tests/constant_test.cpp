#include "qortho/constant.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace qortho {
namespace {

TEST(Constant, FunctionalEquationAbsorbsIntegerArguments) {
  // Gamma(N+2)/Gamma(N) at N = 5 -> 30, no gammas left.
  auto c = gamma_reduce({{Rational(7), 1}, {Rational(5), -1}});
  EXPECT_EQ(c.coeff(), Rational(30));
  EXPECT_TRUE(c.gammas().empty());
  EXPECT_EQ(c.pi_half_power(), 0);

  auto one = gamma_reduce({{Rational(1), 1}});
  EXPECT_EQ(one.coeff(), Rational(1));
  EXPECT_TRUE(one.gammas().empty());
}

TEST(Constant, HalfIntegerReducesToGammaHalf) {
  // Gamma(7/2) = (5/2)(3/2)(1/2) Gamma(1/2) = 15/8 Gamma(1/2)
  auto c = gamma_reduce({{Rational(7, 2), 1}});
  EXPECT_EQ(c.coeff(), Rational(15, 8));
  ASSERT_EQ(c.gammas().size(), 1u);
  EXPECT_EQ(c.gammas()[0].arg, Rational(1, 2));
  EXPECT_EQ(c.gammas()[0].exp, 1);
}

TEST(Constant, GammaHalfPairsBecomePi) {
  // Gamma(3/2) Gamma(1/2) = (1/2) Gamma(1/2)^2 = pi/2
  auto c = gamma_reduce({{Rational(3, 2), 1}, {Rational(1, 2), 1}});
  EXPECT_EQ(c.coeff(), Rational(1, 2));
  EXPECT_TRUE(c.gammas().empty());
  EXPECT_EQ(c.pi_half_power(), 2);
}

TEST(Constant, NonpositiveArgumentRejected) {
  EXPECT_THROW(gamma_reduce({{Rational(0), 1}}), std::domain_error);
  EXPECT_THROW(gamma_reduce({{Rational(-3, 2), 1}}), std::domain_error);
}

TEST(Constant, EqualityAfterDifferentDerivations) {
  // sqrt(N pi) Gamma(N+1/2) / Gamma(N+1)  vs  sqrt(N pi) Gamma(N+1/2) / (N Gamma(N)), N = 5
  auto lhs = gamma_reduce({{Rational(11, 2), 1}, {Rational(6), -1}}, Rational(1), 1,
                          {Rational(5)});
  auto rhs = gamma_reduce({{Rational(11, 2), 1}, {Rational(5), -1}}, Rational(1, 5), 1,
                          {Rational(5)});
  EXPECT_TRUE(const_eq(lhs, rhs));

  // pi/2 vs pi * 2^{-1} * Gamma(2)/Gamma(1)
  auto a = gamma_reduce({}, Rational(1, 2), 2, {});
  auto b = gamma_reduce({{Rational(2), 1}, {Rational(1), -1}}, Rational(1, 2), 2, {});
  EXPECT_TRUE(const_eq(a, b));

  // pi/2 vs pi/3
  auto third = gamma_reduce({}, Rational(1, 3), 2, {});
  EXPECT_FALSE(const_eq(a, third));
}

TEST(Constant, SurdsMergeToSquarefreeKernel) {
  // sqrt(2) sqrt(6) = 2 sqrt(3)
  auto c = gamma_reduce({}, Rational(1), 0, {Rational(2), Rational(6)});
  EXPECT_EQ(c.coeff(), Rational(2));
  ASSERT_EQ(c.surds().size(), 1u);
  EXPECT_EQ(c.surds()[0], Rational(3));

  // sqrt(1/2) = sqrt(2)/2
  auto h = gamma_reduce({}, Rational(1), 0, {Rational(1, 2)});
  EXPECT_EQ(h.coeff(), Rational(1, 2));
  ASSERT_EQ(h.surds().size(), 1u);
  EXPECT_EQ(h.surds()[0], Rational(2));

  // sqrt(9/4) is rational
  auto r = gamma_reduce({}, Rational(1), 0, {Rational(9, 4)});
  EXPECT_EQ(r.coeff(), Rational(3, 2));
  EXPECT_TRUE(r.surds().empty());
}

TEST(Constant, FloatEvaluation) {
  auto ghalf = gamma_reduce({{Rational(1, 2), 1}});
  EXPECT_NEAR(const_to_float(ghalf), 1.7724538509055160, 1e-14);  // sqrt(pi)
  EXPECT_EQ(const_to_decimal_string(ghalf, 11), "1.7724538509");

  auto c = gamma_reduce({}, Rational(3, 8), 2, {});
  EXPECT_NEAR(const_to_float(c), 1.1780972450961724, 1e-14);  // 3 pi / 8

  EXPECT_DOUBLE_EQ(const_to_float(ClosedFormConstant{}), 1.0);
  EXPECT_DOUBLE_EQ(const_to_float(ClosedFormConstant::zero()), 0.0);
}

TEST(Constant, CanonicalizeIsIdempotent) {
  const ClosedFormConstant cases[] = {
      gamma_reduce({{Rational(7, 2), 2}, {Rational(1, 3), -1}}, Rational(-5, 7), 3,
                   {Rational(10), Rational(3, 5)}),
      gamma_reduce({{Rational(9, 4), 1}}, Rational(2), -1, {Rational(7)}),
      ClosedFormConstant::zero(),
  };
  for (const auto& c : cases) {
    std::vector<GammaTerm> gs(c.gammas().begin(), c.gammas().end());
    auto again = ClosedFormConstant::canonical(c.coeff(), c.pi_half_power(), c.surds(), gs);
    EXPECT_TRUE(const_eq(c, again)) << c.str();
  }
}

// Gamma(x+3)/Gamma(x) must canonicalize to the bare rational x(x+1)(x+2).
TEST(Constant, FunctionalEquationTripleStep) {
  for (int k = 1; k <= 20; ++k) {
    Rational x(k, 2);
    auto c = gamma_reduce({{x + 3, 1}, {x, -1}});
    EXPECT_TRUE(c.gammas().empty()) << "x = " << to_string(x);
    EXPECT_EQ(c.pi_half_power(), 0);
    EXPECT_EQ(c.coeff(), x * (x + 1) * (x + 2)) << "x = " << to_string(x);
  }
}

TEST(Constant, ProductAndInverse) {
  auto a = gamma_reduce({{Rational(1, 2), 1}}, Rational(2, 3), 0, {Rational(5)});
  auto b = gamma_reduce({{Rational(1, 2), 1}}, Rational(3), 2, {Rational(5)});
  auto prod = a * b;
  // Gamma(1/2)^2 = pi, sqrt5*sqrt5 = 5 -> 2/3*3*5 = 10, pi^2
  EXPECT_EQ(prod.coeff(), Rational(10));
  EXPECT_EQ(prod.pi_half_power(), 4);
  EXPECT_TRUE(prod.gammas().empty());
  EXPECT_TRUE(prod.surds().empty());

  auto id = a * a.inverse();
  EXPECT_TRUE(const_eq(id, ClosedFormConstant{}));
  EXPECT_NEAR(const_to_float(a) * const_to_float(b), const_to_float(prod), 1e-12);
}

TEST(Constant, ScalarMultiply) {
  auto c = gamma_reduce({}, Rational(1, 2), 2, {});
  auto d = c * Rational(3);
  EXPECT_EQ(d.coeff(), Rational(3, 2));
  auto z = c * Rational(0);
  EXPECT_TRUE(z.is_zero());
}

}  // namespace
}  // namespace qortho
