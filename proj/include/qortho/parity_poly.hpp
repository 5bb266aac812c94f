#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qortho/rational.hpp"

namespace qortho {

enum class Parity { Even, Odd, Zero };

// Dense univariate polynomial over Rational with definite parity: odd-parity
// polynomials have zero even coefficients and vice versa. The zero polynomial
// carries Parity::Zero and an empty coefficient list.
class ParityPoly {
 public:
  ParityPoly() = default;  // zero polynomial

  static ParityPoly zero() { return {}; }

  static ParityPoly constant(const Rational& c) { return monomial(0, c); }

  static ParityPoly one() { return constant(Rational(1)); }

  static ParityPoly monomial(std::size_t power, const Rational& c) {
    if (c == 0) return {};
    ParityPoly p;
    p.coeffs_.assign(power + 1, Rational(0));
    p.coeffs_[power] = c;
    p.parity_ = power % 2 ? Parity::Odd : Parity::Even;
    return p;
  }

  static ParityPoly from_coeffs(std::vector<Rational> coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.empty()) return {};
    bool has_even = false, has_odd = false;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j] == 0) continue;
      (j % 2 ? has_odd : has_even) = true;
    }
    if (has_even && has_odd)
      throw std::invalid_argument("ParityPoly: mixed even and odd powers");
    ParityPoly p;
    p.coeffs_ = std::move(coeffs);
    p.parity_ = has_odd ? Parity::Odd : Parity::Even;
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  Parity parity() const { return parity_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Rational coeff(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Rational(0);
  }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  friend bool operator==(const ParityPoly& a, const ParityPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  friend ParityPoly operator+(const ParityPoly& a, const ParityPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.parity_ != b.parity_)
      throw std::invalid_argument("ParityPoly: parity mismatch in addition");
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t j = 0; j < a.coeffs_.size(); ++j) c[j] += a.coeffs_[j];
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[j] += b.coeffs_[j];
    return from_coeffs(std::move(c));
  }

  friend ParityPoly operator-(const ParityPoly& p) {
    ParityPoly q = p;
    for (auto& c : q.coeffs_) c = -c;
    return q;
  }

  friend ParityPoly operator-(const ParityPoly& a, const ParityPoly& b) { return a + (-b); }

  friend ParityPoly operator*(const ParityPoly& a, const ParityPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        if (b.coeffs_[j] != 0) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return from_coeffs(std::move(c));
  }

  friend ParityPoly operator*(const ParityPoly& a, const Rational& s) {
    if (s == 0) return {};
    ParityPoly q = a;
    for (auto& c : q.coeffs_) c *= s;
    return q;
  }
  friend ParityPoly operator*(const Rational& s, const ParityPoly& a) { return a * s; }

  ParityPoly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> c(coeffs_.size() - 1);
    for (std::size_t j = 1; j < coeffs_.size(); ++j) c[j - 1] = coeffs_[j] * j;
    return from_coeffs(std::move(c));
  }

  Rational eval_exact(const Rational& x) const {
    Rational acc(0);
    for (std::size_t j = coeffs_.size(); j-- > 0;) acc = acc * x + coeffs_[j];
    return acc;
  }

  // Exact Horner at the dyadic rational of x, converted at the end.
  double eval(double x) const {
    return to_double(eval_exact(rational_from_double(x)));
  }

  // Plain double Horner for hot loops.
  double eval_fast(double x) const {
    double acc = 0;
    for (std::size_t j = coeffs_.size(); j-- > 0;) acc = acc * x + to_double(coeffs_[j]);
    return acc;
  }

  std::vector<double> coeffs_as_double() const {
    std::vector<double> d(coeffs_.size());
    for (std::size_t j = 0; j < coeffs_.size(); ++j) d[j] = to_double(coeffs_[j]);
    return d;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      if (coeffs_[j] == 0) continue;
      if (!out.empty()) out += " + ";
      out += to_string(coeffs_[j]);
      if (j > 0) out += "*X^" + std::to_string(j);
    }
    return out;
  }

 private:
  std::vector<Rational> coeffs_;
  Parity parity_ = Parity::Zero;
};

}  // namespace qortho
