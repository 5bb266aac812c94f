#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qortho/rational.hpp"

namespace qortho {

// A closed-form constant
//
//     coeff * pi^(pi_half_power/2) * sqrt(s) * prod_i Gamma(x_i)^(e_i)
//
// kept in a canonical form so that equality is decidable bit-for-bit:
//
//  * gamma arguments are reduced into (0,1] with Gamma(x) = (x-1) Gamma(x-1);
//    Gamma(1) is absorbed into coeff, so surviving arguments lie in (0,1);
//  * Gamma(1/2) = sqrt(pi) creates an ambiguity with pi_half_power, resolved
//    by parity: the total sqrt(pi) exponent t = pi_half_power + exp(Gamma(1/2))
//    is stored as Gamma(1/2)^(t mod 2) * pi^((t - t mod 2)/2), i.e. the
//    canonical pi_half_power is always even and the Gamma(1/2) exponent is
//    0 or 1;
//  * square roots are merged into a single squarefree integer radicand s >= 2
//    (or none); sqrt(p/q) contributes kernel p*q and a factor 1/q to coeff;
//  * coeff == 0 wipes everything else.
//
// Within the half-integer gamma arguments this library produces, structural
// equality of canonical forms coincides with mathematical equality (the only
// multiplicative relations, Gamma(1/2)^2 = pi and the functional equation,
// are both normalized away).
class ClosedFormConstant {
 public:
  struct GammaTerm {
    Rational arg;
    long exp;
  };

  ClosedFormConstant() : coeff_(1), pi_half_(0) {}

  static ClosedFormConstant zero() {
    ClosedFormConstant c;
    c.coeff_ = 0;
    return c;
  }

  static ClosedFormConstant canonical(Rational coeff, long pi_half_power,
                                      std::vector<Rational> surd_radicands,
                                      std::vector<GammaTerm> gammas) {
    ClosedFormConstant c;
    c.coeff_ = std::move(coeff);
    c.pi_half_ = pi_half_power;
    c.raw_surds_ = std::move(surd_radicands);
    c.raw_gammas_ = std::move(gammas);
    c.canonicalize();
    return c;
  }

  const Rational& coeff() const { return coeff_; }
  long pi_half_power() const { return pi_half_; }
  const std::vector<Rational>& surds() const { return surds_; }
  const std::vector<GammaTerm>& gammas() const { return gammas_; }
  bool is_zero() const { return coeff_ == 0; }

  friend bool operator==(const ClosedFormConstant& a, const ClosedFormConstant& b) {
    if (a.coeff_ != b.coeff_ || a.pi_half_ != b.pi_half_) return false;
    if (a.surds_ != b.surds_) return false;
    if (a.gammas_.size() != b.gammas_.size()) return false;
    for (std::size_t i = 0; i < a.gammas_.size(); ++i)
      if (a.gammas_[i].arg != b.gammas_[i].arg || a.gammas_[i].exp != b.gammas_[i].exp)
        return false;
    return true;
  }
  friend bool operator!=(const ClosedFormConstant& a, const ClosedFormConstant& b) {
    return !(a == b);
  }

  friend ClosedFormConstant operator*(const ClosedFormConstant& a, const ClosedFormConstant& b) {
    std::vector<Rational> surds = a.surds_;
    surds.insert(surds.end(), b.surds_.begin(), b.surds_.end());
    std::vector<GammaTerm> gammas = a.gammas_;
    gammas.insert(gammas.end(), b.gammas_.begin(), b.gammas_.end());
    return canonical(a.coeff_ * b.coeff_, a.pi_half_ + b.pi_half_, std::move(surds),
                     std::move(gammas));
  }

  friend ClosedFormConstant operator*(const ClosedFormConstant& a, const Rational& r) {
    return canonical(a.coeff_ * r, a.pi_half_, a.surds_, a.gammas_);
  }

  ClosedFormConstant inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero constant");
    std::vector<GammaTerm> gammas = gammas_;
    for (auto& g : gammas) g.exp = -g.exp;
    Rational c = Rational(1) / coeff_;
    // 1/sqrt(s) = sqrt(s)/s
    for (const auto& s : surds_) c /= s;
    return canonical(c, -pi_half_, surds_, std::move(gammas));
  }

  friend ClosedFormConstant operator/(const ClosedFormConstant& a, const ClosedFormConstant& b) {
    return a * b.inverse();
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out = to_string(coeff_);
    if (pi_half_ != 0) {
      out += " * pi";
      if (pi_half_ != 2) out += "^" + std::to_string(pi_half_ / 2);
    }
    for (const auto& s : surds_) out += " * sqrt(" + to_string(s) + ")";
    for (const auto& g : gammas_) {
      out += " * Gamma(" + to_string(g.arg) + ")";
      if (g.exp != 1) out += "^" + std::to_string(g.exp);
    }
    return out;
  }

 private:
  void canonicalize() {
    if (coeff_ == 0) {
      *this = zero();
      return;
    }
    // Merge gamma arguments, then reduce each into (0,1].
    std::map<Rational, long> merged;
    for (const auto& g : raw_gammas_) merged[g.arg] += g.exp;
    raw_gammas_.clear();
    std::map<Rational, long> reduced;
    long half_exp = 0;
    for (auto& [arg, exp] : merged) {
      if (exp == 0) continue;
      if (arg <= 0) throw std::domain_error("gamma argument must be positive, got " + to_string(arg));
      Rational x = arg;
      while (x > 1) {
        x -= 1;
        coeff_ *= rat_pow(x, exp);
      }
      if (x == 1) continue;  // Gamma(1) == 1
      if (x == Rational(1, 2))
        half_exp += exp;
      else
        reduced[x] += exp;
    }
    // sqrt(pi) parity: fold Gamma(1/2) pairs into pi powers.
    long t = pi_half_ + half_exp;
    long parity = ((t % 2) + 2) % 2;
    pi_half_ = t - parity;
    if (parity) reduced[Rational(1, 2)] += 1;
    for (auto& [arg, exp] : reduced)
      if (exp != 0) gammas_.push_back({arg, exp});
    // Surds: merge radicands into one squarefree integer kernel.
    Integer kernel(1);
    for (const auto& r : raw_surds_) {
      if (r <= 0) throw std::domain_error("surd radicand must be positive, got " + to_string(r));
      kernel *= numerator(r) * denominator(r);
      coeff_ /= denominator(r);
    }
    raw_surds_.clear();
    surds_.clear();
    if (kernel != 1) {
      Integer square_part(1);
      for (Integer d(2); d * d <= kernel; ++d) {
        while (kernel % (d * d) == 0) {
          kernel /= d * d;
          square_part *= d;
        }
      }
      coeff_ *= square_part;
      if (kernel != 1) surds_.push_back(Rational(kernel));
    }
  }

  Rational coeff_;
  long pi_half_;
  std::vector<Rational> surds_;
  std::vector<GammaTerm> gammas_;
  std::vector<Rational> raw_surds_;
  std::vector<GammaTerm> raw_gammas_;
};

using GammaTerm = ClosedFormConstant::GammaTerm;

// Canonicalization entry point: reduces every gamma argument into (0,1] by the
// functional equation and normalizes surds and sqrt(pi) parity.
inline ClosedFormConstant gamma_reduce(std::vector<GammaTerm> raw, Rational coeff = Rational(1),
                                       long pi_half_power = 0,
                                       std::vector<Rational> surds = {}) {
  return ClosedFormConstant::canonical(std::move(coeff), pi_half_power, std::move(surds),
                                       std::move(raw));
}

// Canonical forms are equal iff they are the same constant.
inline bool const_eq(const ClosedFormConstant& a, const ClosedFormConstant& b) { return a == b; }

namespace detail {
using BigFloat = boost::multiprecision::cpp_bin_float_100;

inline BigFloat big_value(const ClosedFormConstant& c) {
  if (c.is_zero()) return BigFloat(0);
  BigFloat v = BigFloat(numerator(c.coeff())) / BigFloat(denominator(c.coeff()));
  if (c.pi_half_power() != 0)
    v *= pow(boost::math::constants::pi<BigFloat>(), static_cast<int>(c.pi_half_power() / 2));
  for (const auto& s : c.surds()) v *= sqrt(BigFloat(numerator(s)));
  for (const auto& g : c.gammas()) {
    BigFloat x = BigFloat(numerator(g.arg)) / BigFloat(denominator(g.arg));
    v *= pow(boost::math::tgamma(x), static_cast<int>(g.exp));
  }
  return v;
}
}  // namespace detail

// Floating evaluation, correct to the requested significant decimal digits
// (clamped to the 17 digits a double can hold; evaluation itself is carried
// out at 100 decimal digits, gamma included).
inline double const_to_float(const ClosedFormConstant& c, unsigned precision = 17) {
  (void)precision;
  return detail::big_value(c).convert_to<double>();
}

// Decimal string with the requested number of significant digits (up to ~90).
inline std::string const_to_decimal_string(const ClosedFormConstant& c, unsigned precision) {
  if (precision == 0) precision = 1;
  if (precision > 90) precision = 90;
  return detail::big_value(c).str(precision);
}

}  // namespace qortho
