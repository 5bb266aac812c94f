#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qortho/densities.hpp"

namespace qortho {

namespace rng {

// SplitMix64 step; with a per-sample substream key this gives a splittable
// counter-based generator: sample i draws from its own stream, so parallel
// batches reproduce regardless of scheduling.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform on (0, 1]
  double next_uniform() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mixer(seed ^ (0xD1B54A32D192ED03ull * (index + 1)));
    return SplitMix64(mixer.next_u64());
  }
};

inline double normal(SplitMix64& g) {
  const double u1 = g.next_uniform();
  const double u2 = g.next_uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

// Marsaglia-Tsang for shape >= 1.
inline double gamma_variate(SplitMix64& g, double shape) {
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  while (true) {
    double z = normal(g);
    double v = 1.0 + c * z;
    if (v <= 0) continue;
    v = v * v * v;
    const double u = g.next_uniform();
    if (std::log(u) < 0.5 * z * z + d - d * v + d * std::log(v)) return d * v;
  }
}

// Student-t with df degrees of freedom: t = Z / sqrt(2 G / df), G ~ Gamma(df/2).
inline double student_t(SplitMix64& g, double df) {
  const double z = normal(g);
  const double chi2 = 2.0 * gamma_variate(g, df / 2.0);
  return z / std::sqrt(chi2 / df);
}

}  // namespace rng

struct SampleBatch {
  std::vector<double> values;
  std::uint64_t seed = 0;
  double proposal_acceptance_rate = 0;
};

// Rejection sampler for the relativistic state density f_{n,N}. The proposal
// is a Student-t with 2N+1 degrees of freedom scaled by sqrt(N/(2N+1)), whose
// density is proportional to (1+x^2/N)^(-(N+1)): the tail exponent -(2N+2)
// matches the target exactly, so the ratio
//     f(x)/g(x) = const * H_n^N(x)^2 (1+x^2/N)^(-n)
// is bounded. The bound is taken as the max over a dense grid on [-R, R]
// combined with the analytic tail bound const * C^2 N^n, where
// C = sum_j |h_j| R^(j-n) dominates |H_n^N(x)|/|x|^n for |x| >= R.
// Requires N > 1/2 so the proposal has more than two degrees of freedom.
inline SampleBatch sample_relativistic_1d(unsigned n, const Rational& N, std::size_t count,
                                          std::uint64_t seed) {
  if (!(N > Rational(1, 2)))
    throw std::domain_error("sampler requires N > 1/2, got N = " + to_string(N));
  const double Nd = to_double(N);
  const double df = 2 * Nd + 1;
  const double scale = std::sqrt(Nd / df);

  Density1D target(Density1D::Kind::Relativistic1D, n, N);
  const std::vector<double> hcoef = target.poly().coeffs_as_double();
  auto horner = [&hcoef](double x) {
    double acc = 0;
    for (std::size_t j = hcoef.size(); j-- > 0;) acc = acc * x + hcoef[j];
    return acc;
  };
  const double a_n = const_to_float(target.normalization());

  // proposal density g(x) = (1+x^2/N)^(-(N+1)) / (scale * Z_t),
  // Z_t = sqrt(df pi) Gamma(N+1/2)/Gamma(N+1)
  const double z_t = std::sqrt(df * std::numbers::pi) *
                     std::exp(std::lgamma(Nd + 0.5) - std::lgamma(Nd + 1.0));
  const double ratio_const = scale * z_t / a_n;
  auto ratio = [&](double x) {
    const double h = horner(x);
    return ratio_const * h * h * std::pow(1.0 + x * x / Nd, -static_cast<double>(n));
  };

  const double R = 50.0;
  double bound = 0;
  for (int i = 0; i <= 20000; ++i) bound = std::max(bound, ratio(-R + i * (2 * R) / 20000));
  bound *= 1.02;
  double tail_coeff = 0;
  for (std::size_t j = 0; j < hcoef.size(); ++j)
    tail_coeff += std::abs(hcoef[j]) * std::pow(R, static_cast<double>(j) -
                                                       static_cast<double>(n));
  const double tail_bound = ratio_const * tail_coeff * tail_coeff * std::pow(Nd, static_cast<double>(n));
  const double M = std::max(bound, tail_bound);
  if (!(M > 0) || !std::isfinite(M))
    throw std::runtime_error("sampler: acceptance constant search failed");

  SampleBatch batch;
  batch.seed = seed;
  batch.values.resize(count);
  std::uint64_t attempts = 0;
  for (std::size_t i = 0; i < count; ++i) {
    rng::SplitMix64 g = rng::SplitMix64::substream(seed, i);
    while (true) {
      ++attempts;
      const double x = scale * rng::student_t(g, df);
      const double u = g.next_uniform();
      if (u * M <= ratio(x)) {
        batch.values[i] = x;
        break;
      }
    }
  }
  batch.proposal_acceptance_rate = static_cast<double>(count) / static_cast<double>(attempts);
  return batch;
}

// Y_i = (X_i/sqrt(N)) / sqrt(1 + X_i^2/N), the square-root change of variables.
inline std::vector<double> transform_to_sphere(const std::vector<double>& xs, const Rational& N) {
  const double Nd = to_double(N);
  std::vector<double> ys(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    ys[i] = (xs[i] / std::sqrt(Nd)) / std::sqrt(1.0 + xs[i] * xs[i] / Nd);
  return ys;
}

// CDF of an even density at each of the sorted points: one adaptive anchor
// from the center of symmetry, then cumulative single-panel integration
// between consecutive points (panels refined adaptively if the local error
// estimate is not negligible).
inline std::vector<double> cdf_at_sorted_points(const Density1D& density,
                                                const std::vector<double>& sorted) {
  std::vector<double> cdf(sorted.size());
  if (sorted.empty()) return cdf;
  auto f = [&density](double x) { return density.eval_fast(x); };
  const double x0 = sorted.front();
  double anchor;
  if (x0 <= 0)
    anchor = 0.5 - quadrature_interval(f, x0, 0.0, 1e-13);
  else
    anchor = 0.5 + quadrature_interval(f, 0.0, x0, 1e-13);
  cdf[0] = anchor;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    const double lo = sorted[i - 1], hi = sorted[i];
    double piece = 0;
    if (hi > lo) {
      auto panel = detail::gk15(f, lo, hi);
      piece = panel.error < 1e-14 ? panel.value : quadrature_interval(f, lo, hi, 1e-14);
    }
    cdf[i] = cdf[i - 1] + piece;
  }
  return cdf;
}

// Kolmogorov-Smirnov distance between the empirical distribution of the
// samples and the analytic CDF values at the sorted sample points.
inline double ks_distance(std::vector<double> samples, const Density1D& density) {
  std::sort(samples.begin(), samples.end());
  const std::vector<double> cdf = cdf_at_sorted_points(density, samples);
  const double count = static_cast<double>(samples.size());
  double worst = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    worst = std::max(worst, std::max(cdf[i] - static_cast<double>(i) / count,
                                     static_cast<double>(i + 1) / count - cdf[i]));
  }
  return worst;
}

}  // namespace qortho
