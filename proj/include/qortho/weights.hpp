#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qortho/constant.hpp"
#include "qortho/families.hpp"
#include "qortho/parity_poly.hpp"
#include "qortho/quadrature.hpp"
#include "qortho/rational.hpp"

namespace qortho {

// Orthogonality weight/domain pairs:
//   RationalDecay  (1+cX^2)^(-a) on the real line, c > 0
//   CompactBeta    (1-X^2/v)^(nu-1/2) on [-sqrt(v), +sqrt(v)], v > 0
// Even moments mu_k = integral of X^(2k) dw reduce to Beta integrals; the
// engine works with the exact rational ratios mu_k/mu_{k-1}.
struct WeightSpec {
  enum class Kind { RationalDecay, CompactBeta };
  Kind kind;
  Rational scale;  // c (RationalDecay) or v (CompactBeta)
  Rational expo;   // a (RationalDecay) or nu (CompactBeta)

  static WeightSpec rational_decay(const Rational& c, const Rational& a) {
    if (c <= 0) throw std::domain_error("rational decay weight: c must be positive");
    return {Kind::RationalDecay, c, a};
  }
  static WeightSpec compact_beta(const Rational& v, const Rational& nu) {
    if (v <= 0) throw std::domain_error("compact beta weight: v must be positive");
    return {Kind::CompactBeta, v, nu};
  }

  // Largest k with mu_{2k} finite; nullopt when every moment exists.
  std::optional<long> max_moment() const {
    if (kind == Kind::CompactBeta) return std::nullopt;
    // need a - k - 1/2 > 0
    Rational bound = expo - Rational(1, 2);  // k < bound
    Integer k = numerator(bound) / denominator(bound);
    if (Rational(k) >= bound) k -= 1;
    return k.convert_to<long>();
  }

  bool mu0_integrable() const {
    if (kind == Kind::RationalDecay) return expo > Rational(1, 2);
    return expo > Rational(-1, 2);
  }

  double eval(double x) const {
    const double s = to_double(scale);
    const double e = to_double(expo);
    if (kind == Kind::RationalDecay) return std::pow(1.0 + s * x * x, -e);
    const double base = 1.0 - x * x / s;
    if (base <= 0) return 0.0;
    return std::pow(base, e - 0.5);
  }

  Domain domain() const {
    if (kind == Kind::RationalDecay) return Domain::real_line();
    const double r = std::sqrt(to_double(scale));
    return Domain::interval(-r, r);
  }
};

// mu_k / mu_{k-1} for k >= 1, exact. Odd moments vanish by symmetry and are
// handled in inner_product.
inline Rational moment_ratio(const WeightSpec& w, long k) {
  if (k < 1) throw std::invalid_argument("moment_ratio: k must be >= 1");
  const Rational kr(k);
  if (w.kind == WeightSpec::Kind::RationalDecay) {
    if (!(w.expo - kr - Rational(1, 2) > 0))
      throw std::domain_error("moment 2k with k = " + std::to_string(k) +
                              " not integrable: requires a - k - 1/2 > 0, a = " +
                              to_string(w.expo));
    return (kr - Rational(1, 2)) / (w.scale * (w.expo - kr - Rational(1, 2)));
  }
  if (!(w.expo > Rational(-1, 2)))
    throw std::domain_error("compact beta weight not integrable: requires nu > -1/2, nu = " +
                            to_string(w.expo));
  return w.scale * (kr - Rational(1, 2)) / (w.expo + kr);
}

// mu_0 in closed form:
//   RationalDecay: c^(-1/2) Gamma(1/2) Gamma(a-1/2) / Gamma(a)
//   CompactBeta:   v^(1/2)  Gamma(1/2) Gamma(nu+1/2) / Gamma(nu+1)
inline ClosedFormConstant mu0_closed_form(const WeightSpec& w) {
  if (!w.mu0_integrable())
    throw std::domain_error(
        w.kind == WeightSpec::Kind::RationalDecay
            ? "mu_0 not integrable: requires a > 1/2, a = " + to_string(w.expo)
            : "mu_0 not integrable: requires nu > -1/2, nu = " + to_string(w.expo));
  if (w.kind == WeightSpec::Kind::RationalDecay) {
    return gamma_reduce({{Rational(1, 2), 1}, {w.expo - Rational(1, 2), 1}, {w.expo, -1}},
                        Rational(1), 0, {Rational(1) / w.scale});
  }
  return gamma_reduce({{Rational(1, 2), 1}, {w.expo + Rational(1, 2), 1}, {w.expo + 1, -1}},
                      Rational(1), 0, {w.scale});
}

// Exact integral as a rational multiple of mu_0.
struct ExactIntegral {
  Rational ratio_to_mu0;
  ClosedFormConstant mu0;

  ClosedFormConstant value() const { return mu0 * ratio_to_mu0; }
  double value_as_double() const { return const_to_float(value()); }
};

// integral of p(X) q(X) dw, exact. Odd powers of the product drop out by
// symmetry; even powers accumulate through the moment-ratio recurrence.
inline ExactIntegral inner_product(const ParityPoly& p, const ParityPoly& q,
                                   const WeightSpec& w) {
  ExactIntegral out{Rational(0), mu0_closed_form(w)};
  const ParityPoly prod = p * q;
  if (prod.is_zero()) return out;
  long k_max = 0;
  for (int j = prod.degree(); j >= 0; j -= 1) {
    if (j % 2 == 0 && prod.coeff(static_cast<std::size_t>(j)) != 0) {
      k_max = j / 2;
      break;
    }
  }
  if (auto lim = w.max_moment(); lim && k_max > *lim)
    throw std::domain_error("inner product needs moment 2k with k = " + std::to_string(k_max) +
                            " but integrability stops at k = " + std::to_string(*lim) +
                            " (requires a - k - 1/2 > 0, a = " + to_string(w.expo) + ")");
  Rational cumulative(1);  // mu_k / mu_0
  out.ratio_to_mu0 = prod.coeff(0);
  for (long k = 1; k <= k_max; ++k) {
    cumulative *= moment_ratio(w, k);
    out.ratio_to_mu0 += prod.coeff(static_cast<std::size_t>(2 * k)) * cumulative;
  }
  return out;
}

// Pairwise weight for a family: the relativistic Hermite weight exponent
// depends on the degrees of the pair (a = N + 1 + (m+n)/2); the other
// families use one fixed weight.
inline WeightSpec pair_weight(Family family, const Rational& param, unsigned m, unsigned n) {
  switch (family) {
    case Family::RHP:
      if (param <= 0) throw std::domain_error("rhp weight: N must be positive");
      return WeightSpec::rational_decay(Rational(1) / param,
                                        param + 1 + Rational(m + n, 2));
    case Family::CarinenaPos:
      if (param <= 0) throw std::domain_error("carinena-pos weight: Ncal must be positive");
      return WeightSpec::rational_decay(Rational(1) / param, param + Rational(1, 2));
    case Family::Gegenbauer:
      if (!(param > Rational(-1, 2)))
        throw std::domain_error("gegenbauer weight: requires nu > -1/2");
      return WeightSpec::compact_beta(Rational(1), param);
    case Family::CarinenaNeg:
      if (param <= 0) throw std::domain_error("carinena-neg weight: nu must be positive");
      return WeightSpec::compact_beta(param, param);
    default:
      throw std::domain_error("no rational-moment weight for this family");
  }
}

struct OrthoPair {
  unsigned m, n;
  bool skipped = false;
  std::string skip_reason;
  Rational ratio_to_mu0;
  ClosedFormConstant mu0;
};

struct OrthoReport {
  Family family;
  Rational param;
  unsigned n_max = 0;
  std::vector<OrthoPair> pairs;  // upper triangle, m <= n
  bool all_off_diagonal_zero = true;

  const OrthoPair* find(unsigned m, unsigned n) const {
    for (const auto& p : pairs)
      if (p.m == m && p.n == n) return &p;
    return nullptr;
  }
};

// Exact orthogonality over the (m, n) grid. Off-diagonal entries must come
// out as the rational zero; diagonals are the family's normalization
// constants (for the Carinena families these are computed, not checked:
// there is no independent closed form to compare against).
//
// Integrability is judged at the NOMINAL degrees: an even-sum pair needs
// moment k = (m+n)/2. For the positive-parameter Carinena family this bound
// (m+n < 2 Ncal) is also the family's orthogonality range: past it the
// Rodrigues construction collapses to lower degree (at Ncal = 3 the n = 5
// member equals the n = 1 member) and the integral, when it happens to
// converge against the collapsed polynomial, is genuinely nonzero. Such
// pairs are skips, not orthogonality statements.
inline OrthoReport verify_orthogonality(Family family, const Rational& param, unsigned n_max) {
  OrthoReport report{family, param, n_max, {}, true};
  std::vector<ParityPoly> polys(n_max + 1);
  for (unsigned k = 0; k <= n_max; ++k) polys[k] = family_poly({family, k, param});
  for (unsigned m = 0; m <= n_max; ++m) {
    for (unsigned n = m; n <= n_max; ++n) {
      OrthoPair entry{m, n, false, "", Rational(0), ClosedFormConstant{}};
      try {
        const WeightSpec w = pair_weight(family, param, m, n);
        if ((m + n) % 2 == 0) {
          const long k_nominal = static_cast<long>(m + n) / 2;
          if (auto lim = w.max_moment(); lim && k_nominal > *lim)
            throw std::domain_error(
                "pair (" + std::to_string(m) + "," + std::to_string(n) + ") needs moment k = " +
                std::to_string(k_nominal) + " but integrability stops at k = " +
                std::to_string(*lim) + "; the pair lies outside the orthogonality range");
        }
        ExactIntegral val = inner_product(polys[m], polys[n], w);
        entry.ratio_to_mu0 = val.ratio_to_mu0;
        entry.mu0 = val.mu0;
        if (m != n && entry.ratio_to_mu0 != 0) report.all_off_diagonal_zero = false;
      } catch (const std::domain_error& e) {
        entry.skipped = true;
        entry.skip_reason = e.what();
      }
      report.pairs.push_back(std::move(entry));
    }
  }
  return report;
}

// Closed-form diagonal constants quoted for the relativistic Hermite and
// Gegenbauer families, canonicalized:
//   RHP:        sqrt(N pi) n! Gamma(2N+n) Gamma(N+1/2) / ((n+N) N^n Gamma(2N) Gamma(N))
//   Gegenbauer: pi 2^(1-2nu) Gamma(n+2nu) / (n! (n+nu) Gamma(nu)^2)
// The Gegenbauer form carries Gamma(nu) squared; with a single Gamma(nu) the
// constant is off by Gamma(nu) (visible at any nu with Gamma(nu) != 1, e.g.
// nu = 5/2, where the true integral is rational while the single-Gamma form
// is not). Requires 2nu to be an integer so 2^(1-2nu) stays rational.
inline ClosedFormConstant paper_norm_constant(Family family, unsigned n, const Rational& param) {
  if (family == Family::RHP) {
    const Rational& N = param;
    if (N <= 0) throw std::domain_error("norm constant: N must be positive");
    return gamma_reduce(
        {{2 * N + Rational(n), 1}, {N + Rational(1, 2), 1}, {2 * N, -1}, {N, -1}},
        Rational(factorial(n)) / ((Rational(n) + N) * rat_pow(N, n)), 1, {N});
  }
  if (family == Family::Gegenbauer) {
    const Rational& nu = param;
    if (nu <= 0) throw std::domain_error("norm constant: nu must be positive");
    if (!is_integer(2 * nu))
      throw std::domain_error("closed-form Gegenbauer constant needs 2*nu integral, nu = " +
                              to_string(nu));
    const long two_nu = (2 * nu).convert_to<long>();
    return gamma_reduce({{Rational(n) + 2 * nu, 1}, {nu, -2}},
                        rat_pow(Rational(2), 1 - two_nu) /
                            (Rational(factorial(n)) * (Rational(n) + nu)),
                        2, {});
  }
  throw std::domain_error("no closed-form norm constant for this family");
}

// Structural comparison of the moment-engine diagonal against the closed form.
inline bool norm_constant_check(Family family, unsigned n, const Rational& param) {
  ParityPoly p = family_poly({family, n, param});
  ExactIntegral diag = inner_product(p, p, pair_weight(family, param, n, n));
  return const_eq(diag.value(), paper_norm_constant(family, n, param));
}

}  // namespace qortho
