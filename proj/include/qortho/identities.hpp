#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qortho/families.hpp"
#include "qortho/parity_poly.hpp"
#include "qortho/rational.hpp"

namespace qortho {

// r^(m/2) * p(X sqrt(r)) as an exact polynomial: sum_j c_j r^((j+m)/2) X^j.
// Requires m to match the parity of p so every exponent (j+m)/2 is an integer
// (then r < 0 is fine as well). m may be negative.
inline ParityPoly scale_arg_sqrt(const ParityPoly& p, const Rational& r, long m) {
  if (r == 0) throw std::domain_error("scale_arg_sqrt: r must be nonzero");
  if (p.is_zero()) return p;
  const bool p_odd = p.parity() == Parity::Odd;
  if ((((m % 2) + 2) % 2 != 0) != p_odd)
    throw std::invalid_argument("scale_arg_sqrt: m does not match the parity of p");
  std::vector<Rational> out(p.coeffs().size(), Rational(0));
  for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
    if (p.coeff(j) == 0) continue;
    long e = (static_cast<long>(j) + m) / 2;
    out[j] = p.coeff(j) * rat_pow(r, e);
  }
  return ParityPoly::from_coeffs(std::move(out));
}

// u^(n/2) (1+cX^2)^(n/2) p(X sqrt(u) / sqrt(1+cX^2)) expanded term by term:
// for p(z) = sum_j p_j z^j with parity n mod 2 and degree <= n, each term is
// p_j u^((n+j)/2) X^j (1+cX^2)^((n-j)/2), a polynomial with rational
// coefficients. The square roots cancel structurally, never numerically.
inline ParityPoly expand_sqrt_composition(const ParityPoly& p, unsigned n, const Rational& u,
                                          const Rational& c) {
  if (u == 0) throw std::domain_error("expand_sqrt_composition: u must be nonzero");
  if (p.is_zero()) return p;
  if (p.degree() > static_cast<int>(n))
    throw std::invalid_argument("expand_sqrt_composition: degree of p exceeds n");
  const bool p_odd = p.parity() == Parity::Odd;
  if (p_odd != (n % 2 == 1))
    throw std::invalid_argument("expand_sqrt_composition: parity of p does not match n");
  const ParityPoly weight = ParityPoly::from_coeffs({Rational(1), Rational(0), c});
  ParityPoly result;
  ParityPoly weight_pow = ParityPoly::one();
  // iterate k = (n-j)/2 downward in j; build (1+cX^2)^k incrementally from j = n
  std::vector<ParityPoly> powers;
  powers.push_back(ParityPoly::one());
  for (unsigned k = 1; 2 * k <= n; ++k) powers.push_back(powers.back() * weight);
  for (long j = static_cast<long>(n); j >= 0; j -= 2) {
    const Rational pj = p.coeff(static_cast<std::size_t>(j));
    if (pj == 0) continue;
    const unsigned k = static_cast<unsigned>((static_cast<long>(n) - j) / 2);
    ParityPoly term = powers[k] * ParityPoly::monomial(static_cast<std::size_t>(j),
                                                       pj * rat_pow(u, (static_cast<long>(n) + j) / 2));
    result = result.is_zero() ? term : result + term;
  }
  return result;
}

// c^(n/2) (1+cX^2)^(n/2) C_n^nu(X sqrt(c) / sqrt(1+cX^2)): the algebraic
// composition behind the Nagel-type identities, exact by parity pairing.
inline ParityPoly compose_gegenbauer_algebraic(unsigned n, const Rational& nu, const Rational& c) {
  return expand_sqrt_composition(family_poly({Family::Gegenbauer, n, nu}), n, c, c);
}

enum class Identity { Thm1, Thm2, Thm3, Nagel, HermiteLimit };

inline std::string identity_name(Identity id) {
  switch (id) {
    case Identity::Thm1: return "thm1";
    case Identity::Thm2: return "thm2";
    case Identity::Thm3: return "thm3";
    case Identity::Nagel: return "nagel";
    case Identity::HermiteLimit: return "hermite-limit";
  }
  throw std::logic_error("unreachable");
}

inline Identity identity_from_name(const std::string& s) {
  if (s == "thm1") return Identity::Thm1;
  if (s == "thm2") return Identity::Thm2;
  if (s == "thm3") return Identity::Thm3;
  if (s == "nagel") return Identity::Nagel;
  if (s == "hermite-limit") return Identity::HermiteLimit;
  throw std::invalid_argument("unknown identity '" + s + "'");
}

struct CoeffMismatch {
  unsigned power;
  Rational lhs, rhs;
};

// Result of one exact verification. For skipped parameter points
// (skip_reason set) no equality claim is made; otherwise
// exact_equal == true iff first_mismatch is absent.
struct IdentityReport {
  Identity identity;
  unsigned n = 0;
  std::vector<Rational> params;
  bool exact_equal = false;
  std::optional<CoeffMismatch> first_mismatch;
  std::optional<std::string> skip_reason;

  bool skipped() const { return skip_reason.has_value(); }
  bool passed() const { return !skipped() && exact_equal; }
  bool failed() const { return !skipped() && !exact_equal; }
};

namespace detail {
inline IdentityReport compare_sides(Identity id, unsigned n, std::vector<Rational> params,
                                    const ParityPoly& lhs, const ParityPoly& rhs) {
  IdentityReport rep{id, n, std::move(params), true, std::nullopt, std::nullopt};
  const int top = std::max(lhs.degree(), rhs.degree());
  for (int j = 0; j <= top; ++j) {
    if (lhs.coeff(static_cast<std::size_t>(j)) != rhs.coeff(static_cast<std::size_t>(j))) {
      rep.exact_equal = false;
      rep.first_mismatch = CoeffMismatch{static_cast<unsigned>(j),
                                         lhs.coeff(static_cast<std::size_t>(j)),
                                         rhs.coeff(static_cast<std::size_t>(j))};
      break;
    }
  }
  return rep;
}

inline IdentityReport skip(Identity id, unsigned n, std::vector<Rational> params,
                           std::string reason) {
  IdentityReport rep{id, n, std::move(params), false, std::nullopt, std::move(reason)};
  return rep;
}
}  // namespace detail

// Carinena(Ncal > 0) as a scaled relativistic Hermite polynomial:
//   H^cal_n(X) = (N/Ncal)^(n/2) H_n^N(X sqrt(N/Ncal)),  N = Ncal + 1/2 - n.
// Degenerate at N = 0 (the RHP weight exponent vanishes); reported as a skip.
inline IdentityReport verify_thm1(unsigned n, const Rational& Ncal) {
  if (Ncal <= 0) throw std::domain_error("thm1: Ncal must be positive");
  const Rational N = Ncal + Rational(1, 2) - Rational(n);
  if (N == 0)
    return detail::skip(Identity::Thm1, n, {Ncal}, "degenerate parameter N = Ncal + 1/2 - n = 0");
  ParityPoly lhs = family_poly({Family::CarinenaPos, n, Ncal});
  ParityPoly rhs = scale_arg_sqrt(family_poly({Family::RHP, n, N}), N / Ncal,
                                  static_cast<long>(n));
  return detail::compare_sides(Identity::Thm1, n, {Ncal}, lhs, rhs);
}

// Carinena(Ncal = -nu < 0) as a scaled Gegenbauer polynomial:
//   C^cal_n(X) = (1/alpha_{n,nu}) nu^(-n/2) C_n^nu(X / sqrt(nu)).
inline IdentityReport verify_thm2(unsigned n, const Rational& nu) {
  if (nu <= 0) throw std::domain_error("thm2: nu must be positive");
  const Rational alpha = gegenbauer_alpha(n, nu);
  if (alpha == 0)
    return detail::skip(Identity::Thm2, n, {nu}, "degenerate normalization alpha_{n,nu} = 0");
  ParityPoly lhs = family_poly({Family::CarinenaNeg, n, nu});
  ParityPoly rhs = scale_arg_sqrt(family_poly({Family::Gegenbauer, n, nu}), Rational(1) / nu,
                                  static_cast<long>(n)) *
                   (Rational(1) / alpha);
  return detail::compare_sides(Identity::Thm2, n, {nu}, lhs, rhs);
}

// Nagel's identity: H_n^N(X) = (n!/N^(n/2)) (1+X^2/N)^(n/2) C_n^N(arg), with
// arg = (X/sqrt(N)) / sqrt(1+X^2/N). The N^(-n/2) prefactor is absorbed by
// the c^(n/2) convention of compose_gegenbauer_algebraic.
inline IdentityReport verify_nagel(unsigned n, const Rational& N) {
  if (N == 0) throw std::domain_error("nagel: N must be nonzero");
  ParityPoly lhs = family_poly({Family::RHP, n, N});
  ParityPoly rhs = compose_gegenbauer_algebraic(n, N, Rational(1) / N) * Rational(factorial(n));
  return detail::compare_sides(Identity::Nagel, n, {N}, lhs, rhs);
}

// Carinena-to-Carinena:
//   H^cal_n(X sqrt(Ncal)) = alpha_{n,nu} n! (nu/Ncal)^(n/2) (1+X^2)^(n/2)
//                           C^cal_n(X sqrt(nu) / sqrt(1+X^2)),  nu = Ncal + 1/2 - n.
// Both sides are multiplied by Ncal^(n/2) so they become polynomials in X:
// the left side is then scale_arg_sqrt(H^cal_n, Ncal, n) and the right side
// alpha n! * expand_sqrt_composition(C^cal_n, n, nu, 1). Verified only for
// nu > 0, where the negative-parameter family is defined; nu <= 0 is a skip.
inline IdentityReport verify_thm3(unsigned n, const Rational& Ncal) {
  if (Ncal <= 0) throw std::domain_error("thm3: Ncal must be positive");
  const Rational nu = Ncal + Rational(1, 2) - Rational(n);
  if (nu <= 0)
    return detail::skip(Identity::Thm3, n, {Ncal},
                        "parameter nu = Ncal + 1/2 - n = " + to_string(nu) +
                            " leaves the valid range nu > 0");
  ParityPoly lhs = scale_arg_sqrt(family_poly({Family::CarinenaPos, n, Ncal}), Ncal,
                                  static_cast<long>(n));
  ParityPoly rhs = expand_sqrt_composition(family_poly({Family::CarinenaNeg, n, nu}), n, nu,
                                           Rational(1)) *
                   (gegenbauer_alpha(n, nu) * Rational(factorial(n)));
  return detail::compare_sides(Identity::Thm3, n, {Ncal}, lhs, rhs);
}

// max_j |coeff_j(H_n^N) - coeff_j(H_n)|, exact. O(1/N): N * gap is bounded.
inline Rational hermite_limit_gap(unsigned n, const Rational& N) {
  if (N <= 0) throw std::domain_error("hermite_limit_gap: N must be positive");
  ParityPoly relativistic = family_poly({Family::RHP, n, N});
  ParityPoly classical = classical_hermite(n);
  Rational gap(0);
  const int top = std::max(relativistic.degree(), classical.degree());
  for (int j = 0; j <= top; ++j) {
    Rational d = relativistic.coeff(static_cast<std::size_t>(j)) -
                 classical.coeff(static_cast<std::size_t>(j));
    if (d < 0) d = -d;
    if (d > gap) gap = d;
  }
  return gap;
}

// The two composite routes around the identity square must agree: expressing
// Ncal^(n/2) H^cal_n(X sqrt(Ncal)) through thm1 gives scale_arg_sqrt(H_n^N, N, n);
// expressing it through nagel + thm2 gives n! (1+X^2)^(n/2) C_n^N(X/sqrt(1+X^2)).
inline bool commutation_check(unsigned n, const Rational& Ncal) {
  const Rational N = Ncal + Rational(1, 2) - Rational(n);
  if (N <= 0) throw std::domain_error("commutation_check requires N = Ncal + 1/2 - n > 0");
  ParityPoly via_rhp = scale_arg_sqrt(family_poly({Family::RHP, n, N}), N, static_cast<long>(n));
  ParityPoly via_gegenbauer =
      expand_sqrt_composition(family_poly({Family::Gegenbauer, n, N}), n, Rational(1),
                              Rational(1)) *
      Rational(factorial(n));
  return via_rhp == via_gegenbauer;
}

}  // namespace qortho
