#include "qortho/sampling.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

namespace qortho {
namespace {

TEST(Rng, SubstreamsAreDeterministicAndDistinct) {
  auto a = rng::SplitMix64::substream(42, 0);
  auto b = rng::SplitMix64::substream(42, 0);
  auto c = rng::SplitMix64::substream(42, 1);
  EXPECT_EQ(a.next_u64(), b.next_u64());
  EXPECT_NE(a.next_u64(), c.next_u64());
  auto g = rng::SplitMix64::substream(7, 3);
  for (int i = 0; i < 1000; ++i) {
    double u = g.next_uniform();
    EXPECT_GT(u, 0.0);
    EXPECT_LE(u, 1.0);
  }
}

TEST(Rng, NormalAndGammaMoments) {
  auto g = rng::SplitMix64::substream(123, 0);
  double sum = 0, sumsq = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    double z = rng::normal(g);
    sum += z;
    sumsq += z * z;
  }
  EXPECT_NEAR(sum / n, 0.0, 0.01);
  EXPECT_NEAR(sumsq / n, 1.0, 0.02);

  double gsum = 0;
  const double shape = 2.5;
  for (int i = 0; i < n; ++i) gsum += rng::gamma_variate(g, shape);
  EXPECT_NEAR(gsum / n, shape, 0.02);
}

TEST(Sampler, ReproducibleForFixedSeed) {
  auto a = sample_relativistic_1d(1, Rational(3), 500, 42);
  auto b = sample_relativistic_1d(1, Rational(3), 500, 42);
  EXPECT_EQ(a.values, b.values);
  auto c = sample_relativistic_1d(1, Rational(3), 500, 43);
  EXPECT_NE(a.values, c.values);
  EXPECT_GT(a.proposal_acceptance_rate, 0.0);
  EXPECT_LE(a.proposal_acceptance_rate, 1.0);
  EXPECT_THROW(sample_relativistic_1d(0, Rational(1, 2), 10, 1), std::domain_error);
}

TEST(Sampler, EmpiricalMeanNearZero) {
  const std::size_t count = 100000;
  auto batch = sample_relativistic_1d(0, Rational(3), count, 42);
  double mean = std::accumulate(batch.values.begin(), batch.values.end(), 0.0) / count;
  EXPECT_LT(std::abs(mean), 5.0 / std::sqrt(static_cast<double>(count)));
}

TEST(Sampler, MatchesAnalyticCdf) {
  const std::size_t count = 100000;
  auto batch = sample_relativistic_1d(0, Rational(3), count, 42);
  Density1D target(Density1D::Kind::Relativistic1D, 0, Rational(3));
  EXPECT_LT(ks_distance(batch.values, target), 0.02);
}

TEST(Sampler, TransformedBatchFollowsSphereDensity) {
  const std::size_t count = 100000;
  auto batch = sample_relativistic_1d(2, Rational(7, 2), count, 42);
  auto ys = transform_to_sphere(batch.values, Rational(7, 2));
  Density1D sphere(Density1D::Kind::Sphere1D, 2, Rational(7, 2));
  EXPECT_LT(ks_distance(ys, sphere), 0.02);
}

TEST(Ks, DetectsWrongDistribution) {
  // uniform( -1, 1 ) samples against the sphere ground state should fail badly
  std::vector<double> uniform(2000);
  auto g = rng::SplitMix64::substream(5, 0);
  for (auto& v : uniform) v = 2 * g.next_uniform() - 1;
  Density1D sphere(Density1D::Kind::Sphere1D, 0, Rational(5));
  EXPECT_GT(ks_distance(uniform, sphere), 0.1);
}

}  // namespace
}  // namespace qortho
