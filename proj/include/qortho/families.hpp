#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "qortho/parity_poly.hpp"
#include "qortho/rational.hpp"

namespace qortho {

// The five polynomial families built here:
//   RHP              H_n^N,  weight (1+X^2/N)^(-N) on the real line
//   ClassicalHermite H_n,    weight exp(-X^2), limit of H_n^N as N -> infinity
//   Gegenbauer       C_n^nu, weight (1-X^2)^(nu-1/2) on [-1,1]
//   CarinenaPos      curved-oscillator polynomials with parameter Ncal > 0
//   CarinenaNeg      same family at negative parameter, keyed by nu = -Ncal > 0
enum class Family { RHP, ClassicalHermite, Gegenbauer, CarinenaPos, CarinenaNeg };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::RHP: return "rhp";
    case Family::ClassicalHermite: return "hermite";
    case Family::Gegenbauer: return "gegenbauer";
    case Family::CarinenaPos: return "carinena-pos";
    case Family::CarinenaNeg: return "carinena-neg";
  }
  throw std::logic_error("unreachable");
}

inline Family family_from_name(const std::string& s) {
  if (s == "rhp") return Family::RHP;
  if (s == "hermite") return Family::ClassicalHermite;
  if (s == "gegenbauer") return Family::Gegenbauer;
  if (s == "carinena-pos") return Family::CarinenaPos;
  if (s == "carinena-neg") return Family::CarinenaNeg;
  throw std::invalid_argument("unknown family '" + s + "'");
}

struct FamilyParam {
  Family family;
  unsigned n = 0;
  Rational param;  // N, nu, or Ncal; ignored for ClassicalHermite

  void validate() const {
    switch (family) {
      case Family::RHP:
        if (param == 0) throw std::domain_error("rhp: parameter N must be nonzero");
        break;
      case Family::Gegenbauer:
        if (param == 0) throw std::domain_error("gegenbauer: parameter nu must be nonzero");
        break;
      case Family::CarinenaPos:
        if (param <= 0) throw std::domain_error("carinena-pos: parameter Ncal must be positive");
        break;
      case Family::CarinenaNeg:
        if (param <= 0) throw std::domain_error("carinena-neg: parameter nu = -Ncal must be positive");
        break;
      case Family::ClassicalHermite:
        break;
    }
  }
};

// P_n in d^n/dX^n (1+cX^2)^a = (1+cX^2)^(a-n) P_n(X), built from
//   P_0 = 1,  P_{k+1} = (1+cX^2) P_k' + 2c(a-k) X P_k.
// A formal identity: holds for any rational a, c, including non-integrable
// weight regimes. parity(P_n) = (-1)^n; degree is n unless the leading
// product vanishes (2a an integer in [0, n-1]).
inline ParityPoly rodrigues_poly(const Rational& a, const Rational& c, unsigned n) {
  ParityPoly p = ParityPoly::one();
  const ParityPoly weight =
      ParityPoly::from_coeffs({Rational(1), Rational(0), c});  // 1 + c X^2
  for (unsigned k = 0; k < n; ++k) {
    ParityPoly next = weight * p.derivative() +
                      ParityPoly::monomial(1, Rational(2) * c * (a - Rational(k))) * p;
    p = std::move(next);
  }
  return p;
}

// alpha_{n,nu} = (2nu)_n / (2^n n! (nu+1/2)_n), the Rodrigues normalization of
// the Gegenbauer family.
inline Rational gegenbauer_alpha(unsigned n, const Rational& nu) {
  Rational den_poch = pochhammer(nu + Rational(1, 2), n);
  if (den_poch == 0)
    throw std::domain_error("gegenbauer alpha undefined: (nu+1/2)_n vanishes at nu = " +
                            to_string(nu));
  return pochhammer(2 * nu, n) / (rat_pow(Rational(2), n) * Rational(factorial(n)) * den_poch);
}

// Classical Hermite via H_{n+1} = 2X H_n - H_n'.
inline ParityPoly classical_hermite(unsigned n) {
  ParityPoly h = ParityPoly::one();
  const ParityPoly twox = ParityPoly::monomial(1, Rational(2));
  for (unsigned k = 0; k < n; ++k) h = twox * h - h.derivative();
  return h;
}

// Exact coefficients of the requested family member.
inline ParityPoly family_poly(const FamilyParam& spec) {
  spec.validate();
  const Rational& p = spec.param;
  switch (spec.family) {
    case Family::RHP:
      // (-1)^n (1+X^2/N)^(N+n) d^n (1+X^2/N)^(-N)
      return rodrigues_poly(-p, Rational(1) / p, spec.n) *
             (spec.n % 2 ? Rational(-1) : Rational(1));
    case Family::CarinenaPos:
      // (-1)^n (1+X^2/Ncal)^(Ncal+1/2) d^n (1+X^2/Ncal)^(n-Ncal-1/2)
      return rodrigues_poly(Rational(spec.n) - p - Rational(1, 2), Rational(1) / p, spec.n) *
             (spec.n % 2 ? Rational(-1) : Rational(1));
    case Family::Gegenbauer:
      // alpha_{n,nu} (-1)^n (1-X^2)^(1/2-nu) d^n (1-X^2)^(n+nu-1/2)
      return rodrigues_poly(Rational(spec.n) + p - Rational(1, 2), Rational(-1), spec.n) *
             (gegenbauer_alpha(spec.n, p) * (spec.n % 2 ? Rational(-1) : Rational(1)));
    case Family::CarinenaNeg:
      // (-1)^n (1-X^2/nu)^(1/2-nu) d^n (1-X^2/nu)^(n+nu-1/2)
      return rodrigues_poly(Rational(spec.n) + p - Rational(1, 2), Rational(-1) / p, spec.n) *
             (spec.n % 2 ? Rational(-1) : Rational(1));
    case Family::ClassicalHermite:
      return classical_hermite(spec.n);
  }
  throw std::logic_error("unreachable");
}

// Independent oracle for the Gegenbauer family:
//   n C_n = 2X (n+nu-1) C_{n-1} - (n+2nu-2) C_{n-2},  C_0 = 1, C_1 = 2 nu X.
inline ParityPoly gegenbauer_recurrence(unsigned n, const Rational& nu) {
  if (nu == 0) throw std::domain_error("gegenbauer recurrence: nu must be nonzero");
  ParityPoly prev = ParityPoly::one();
  if (n == 0) return prev;
  ParityPoly cur = ParityPoly::monomial(1, 2 * nu);
  const ParityPoly twox = ParityPoly::monomial(1, Rational(2));
  for (unsigned k = 2; k <= n; ++k) {
    ParityPoly next = (twox * cur * (Rational(k) + nu - 1) - prev * (Rational(k) + 2 * nu - 2)) *
                      (Rational(1) / Rational(k));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// Orthogonal functions: the polynomial times the square root of its
// orthogonality weight, so that |w_n|^2 integrates against dX alone.
struct OrthoFunctionSpec {
  Family family;  // Gegenbauer, CarinenaPos, RHP, or ClassicalHermite
  unsigned n = 0;
  Rational param;
};

inline double ortho_function_eval(const OrthoFunctionSpec& spec, double x) {
  FamilyParam fp{spec.family, spec.n, spec.param};
  const ParityPoly poly = family_poly(fp);
  const double pval = poly.eval(x);
  const double param = to_double(spec.param);
  switch (spec.family) {
    case Family::Gegenbauer: {
      if (std::abs(x) > 1.0)
        throw std::domain_error("gegenbauer orthogonal function: |X| <= 1 required");
      return std::pow(1.0 - x * x, param / 2 - 0.25) * pval;
    }
    case Family::CarinenaPos:
      return std::pow(1.0 + x * x / param, -param / 2 - 0.25) * pval;
    case Family::RHP:
      return std::pow(1.0 + x * x / param, -(param + 1 + spec.n) / 2) * pval;
    case Family::ClassicalHermite:
      return std::exp(-x * x / 2) * pval;
    default:
      throw std::domain_error("no orthogonal function for this family");
  }
}

}  // namespace qortho
