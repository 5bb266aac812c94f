#include "qortho/quadrature.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace qortho {
namespace {

TEST(Quadrature, SemicircleArea) {
  auto val = quadrature([](double x) { return std::sqrt(std::max(0.0, 1 - x * x)); },
                        Domain::interval(-1, 1), 1e-12);
  EXPECT_NEAR(val, std::numbers::pi / 2, 1e-11);
}

TEST(Quadrature, ArctangentIntegralOnTheLine) {
  auto val = quadrature([](double x) { return 1.0 / (1.0 + x * x); }, Domain::real_line(), 1e-12);
  EXPECT_NEAR(val, std::numbers::pi, 1e-11);
}

TEST(Quadrature, OddIntegrandVanishes) {
  auto val = quadrature([](double x) { return x * std::sqrt(std::max(0.0, 1 - x * x)); },
                        Domain::interval(-1, 1), 1e-13);
  EXPECT_NEAR(val, 0.0, 1e-13);
}

TEST(Quadrature, GaussianOnTheLine) {
  auto val = quadrature([](double x) { return std::exp(-x * x); }, Domain::real_line(), 1e-12);
  EXPECT_NEAR(val, std::sqrt(std::numbers::pi), 1e-11);
}

TEST(Quadrature, HeavyTailPolynomialDecay) {
  // integral of (1+x^2)^{-3} = 3 pi / 8
  auto val = quadrature([](double x) { return std::pow(1.0 + x * x, -3.0); },
                        Domain::real_line(), 1e-12);
  EXPECT_NEAR(val, 3 * std::numbers::pi / 8, 1e-11);
}

TEST(Quadrature, NonconvergenceCarriesBestEstimate) {
  // |x|^{-1/2} is integrable but the singularity defeats a tiny panel budget.
  auto f = [](double x) { return 1.0 / std::sqrt(std::abs(x) + 1e-300); };
  try {
    quadrature_interval(f, -1, 1, 1e-14, 8);
    FAIL() << "expected AccuracyError";
  } catch (const AccuracyError& e) {
    EXPECT_GT(e.estimate(), 3.0);  // true value 4
    EXPECT_LT(e.estimate(), 5.0);
    EXPECT_GT(e.error_bound(), 1e-14);
  }
}

}  // namespace
}  // namespace qortho
