#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "qortho/families.hpp"
#include "qortho/quadrature.hpp"
#include "qortho/rational.hpp"

namespace qortho {

// q-Gaussian density with unit-normalized shape:
//   q < 1       compact support [-sigma sqrt(d), +sigma sqrt(d)], d = 2(2-q)/(1-q)+1,
//               f = G((2-q)/(1-q)+1/2)/(G((2-q)/(1-q)) sigma sqrt(pi d)) (1-X^2/(d sigma^2))_+^(1/(1-q))
//   q = 1       the Gaussian 1/(sigma sqrt(2 pi)) exp(-X^2/(2 sigma^2))
//   1 < q < 5/3 full line, m = 2/(q-1)-1,
//               f = G(1/(q-1))/(G(1/(q-1)-1/2) sigma sqrt(pi (m-2))) (1+X^2/((m-2) sigma^2))^(1/(1-q))
// Beyond q = 5/3 the variance scaling breaks down (m - 2 <= 0): rejected.
struct QGaussianSpec {
  double q = 1.0;
  double sigma = 1.0;

  QGaussianSpec(double q_, double sigma_) : q(q_), sigma(sigma_) {
    if (!(sigma > 0)) throw std::domain_error("q-gaussian: sigma must be positive");
    if (!(q > 0)) throw std::domain_error("q-gaussian: q must be positive");
    if (q > 1 && !(m_value() - 2 > 0))
      throw std::domain_error("q-gaussian: requires q < 5/3 (m - 2 > 0), got q = " +
                              std::to_string(q));
  }

  bool compact() const { return q < 1; }
  double d_value() const { return 2 * (2 - q) / (1 - q) + 1; }   // q < 1
  double m_value() const { return 2 / (q - 1) - 1; }             // q > 1
  double support_radius() const {
    return compact() ? sigma * std::sqrt(d_value()) : std::numeric_limits<double>::infinity();
  }
  Domain domain() const {
    if (compact()) {
      const double r = support_radius();
      return Domain::interval(-r, r);
    }
    return Domain::real_line();
  }
};

inline double q_gaussian_pdf(const QGaussianSpec& spec, double x) {
  const double q = spec.q, sigma = spec.sigma;
  if (q == 1.0)
    return std::exp(-x * x / (2 * sigma * sigma)) / (sigma * std::sqrt(2 * std::numbers::pi));
  if (q < 1) {
    const double a = (2 - q) / (1 - q);
    const double d = spec.d_value();
    const double base = 1.0 - x * x / (d * sigma * sigma);
    if (base <= 0) return 0.0;  // the (.)_+ clamp
    const double prefactor =
        std::exp(std::lgamma(a + 0.5) - std::lgamma(a)) / (sigma * std::sqrt(std::numbers::pi * d));
    return prefactor * std::pow(base, 1.0 / (1.0 - q));
  }
  const double a = 1.0 / (q - 1.0);
  const double m = spec.m_value();
  const double prefactor =
      std::exp(std::lgamma(a) - std::lgamma(a - 0.5)) / (sigma * std::sqrt(std::numbers::pi * (m - 2)));
  return prefactor * std::pow(1.0 + x * x / ((m - 2) * sigma * sigma), 1.0 / (1.0 - q));
}

// Tsallis entropy H_q = (1/(q-1)) * integral(f - f^q); dispatches to the
// Shannon form -integral(f log f) at q = 1, which is its q -> 1 limit.
inline double tsallis_entropy(const std::function<double(double)>& density, double q,
                              const Domain& domain, double tol = 1e-10) {
  if (!(q > 0)) throw std::domain_error("tsallis entropy: q must be positive");
  if (q == 1.0) {
    return quadrature(
        [&density](double x) {
          const double f = density(x);
          return f > 0 ? -f * std::log(f) : 0.0;
        },
        domain, tol);
  }
  const double integral = quadrature(
      [&density, q](double x) {
        const double f = density(x);
        return f > 0 ? f - std::pow(f, q) : 0.0;
      },
      domain, tol);
  return integral / (q - 1.0);
}

enum class QBranch { BelowOne, One, AboveOne };

inline std::string branch_name(QBranch b) {
  switch (b) {
    case QBranch::BelowOne: return "q<1";
    case QBranch::One: return "q=1";
    case QBranch::AboveOne: return "q>1";
  }
  throw std::logic_error("unreachable");
}

struct QMapResult {
  Rational q;
  QBranch branch;
};

namespace detail {
inline QMapResult tag(Rational q) {
  QBranch b = q < 1 ? QBranch::BelowOne : (q > 1 ? QBranch::AboveOne : QBranch::One);
  return {std::move(q), b};
}
}  // namespace detail

// Exact nonextensivity parameter induced by each family's weight:
// the Gegenbauer weight (1-X^2)^(nu-1/2) matches the compact branch with
// 1/(1-q) = nu - 1/2, and the rational-decay weights match the heavy-tailed
// branch the same way.
inline QMapResult q_from_gegenbauer(const Rational& nu) {
  if (2 * nu - 1 == 0)
    throw std::domain_error("q map pole: nu = 1/2");
  return detail::tag((2 * nu - 3) / (2 * nu - 1));
}

inline QMapResult q_from_carinena(const Rational& Ncal) {
  if (2 * Ncal + 1 == 0) throw std::domain_error("q map pole: Ncal = -1/2");
  return detail::tag((2 * Ncal + 3) / (2 * Ncal + 1));
}

// The relativistic weight exponent depends on the pair degrees (m, n).
inline QMapResult q_from_rhp(const Rational& N, unsigned m, unsigned n) {
  const Rational denom = 1 + N + Rational(m + n, 2);
  if (denom == 0) throw std::domain_error("q map pole: 1 + N + (m+n)/2 = 0");
  return detail::tag((denom + 1) / denom);
}

// Dispatcher over the family tag; m and n only matter for the relativistic
// map, whose weight depends on the pair degrees.
inline QMapResult q_from_family(Family family, const Rational& param, unsigned m = 0,
                                unsigned n = 0) {
  switch (family) {
    case Family::Gegenbauer: return q_from_gegenbauer(param);
    case Family::CarinenaPos: return q_from_carinena(param);
    case Family::RHP: return q_from_rhp(param, m, n);
    default:
      throw std::domain_error("no q map for family " + family_name(family));
  }
}

enum class Geometry { Sphere, Hyperbolic };

// The two-dimensional oscillator densities factor into two orthogonal
// functions with different parameters; each factor induces its own q.
inline std::pair<QMapResult, QMapResult> q_pair_for_geometry(Geometry g, const Rational& param,
                                                             unsigned m) {
  if (g == Geometry::Sphere) {
    const Rational& nu = param;
    auto first = q_from_gegenbauer(nu);
    if (nu + Rational(m) == 0) throw std::domain_error("q map pole: nu + m = 0");
    auto second = detail::tag((nu + Rational(m) - 1) / (nu + Rational(m)));
    return {first, second};
  }
  const Rational& Ncal = param;
  auto first = q_from_carinena(Ncal);
  if (Ncal == Rational(m)) throw std::domain_error("q map pole: Ncal = m");
  auto second = detail::tag((Ncal - Rational(m) + 1) / (Ncal - Rational(m)));
  return {first, second};
}

// Harmonic oscillator on a constant-curvature surface or in the relativistic
// setting, with its physical constants.
struct PhysicalOscillator {
  double mass = 1, alpha = 1, kappa = 1, hbar = 1, omega = 1, lightspeed = 1;

  void validate() const {
    if (!(mass > 0 && alpha > 0 && hbar > 0 && omega > 0 && lightspeed > 0))
      throw std::domain_error("oscillator constants must be positive");
    if (kappa == 0) throw std::domain_error("curvature kappa must be nonzero");
  }
};

inline int kappa_sign(const PhysicalOscillator& osc) {
  return osc.kappa > 0 ? 1 : (osc.kappa < 0 ? -1 : 0);
}

enum class Regime { Sphere, Hyperbolic, Relativistic };

// Family parameter for the regime:
//   hyperbolic    Ncal = -m alpha / (hbar kappa) > 0, so kappa < 0
//   sphere        nu   =  m alpha / (hbar kappa) > 0, so kappa > 0
//   relativistic  N    =  m c^2 / (hbar omega)
inline double physical_to_param(const PhysicalOscillator& osc, Regime regime) {
  osc.validate();
  switch (regime) {
    case Regime::Hyperbolic:
      if (kappa_sign(osc) >= 0)
        throw std::domain_error("hyperbolic regime requires negative curvature kappa");
      return -osc.mass * osc.alpha / (osc.hbar * osc.kappa);
    case Regime::Sphere:
      if (kappa_sign(osc) <= 0)
        throw std::domain_error("sphere regime requires positive curvature kappa");
      return osc.mass * osc.alpha / (osc.hbar * osc.kappa);
    case Regime::Relativistic:
      return osc.mass * osc.lightspeed * osc.lightspeed / (osc.hbar * osc.omega);
  }
  throw std::logic_error("unreachable");
}

// Alternate published form of the relativistic q map,
// 1 + 1/(1 + m c^2/(hbar N) + (m_idx+n_idx)/2). Inconsistent with q_from_rhp
// under N = m c^2/(hbar omega); exposed for reference only and excluded from
// every check in this library.
inline double q_rhp_alternate_form(double mass, double lightspeed, double hbar, double N,
                                   unsigned m_idx, unsigned n_idx) {
  const double denom = 1 + mass * lightspeed * lightspeed / (hbar * N) + (m_idx + n_idx) / 2.0;
  if (denom == 0) throw std::domain_error("q map pole in alternate form");
  return 1 + 1 / denom;
}

}  // namespace qortho
