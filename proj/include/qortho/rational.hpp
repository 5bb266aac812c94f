#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace qortho {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact rational scalar used throughout. boost::multiprecision::cpp_rational
// keeps values in lowest terms with positive denominator, so the canonical-form
// invariant comes for free.

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Exact: every finite double is a dyadic rational.
inline Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("rational_from_double: non-finite input");
  return Rational(x);
}

// Serialized as "p" when q == 1, else "p/q".
inline std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

// Strict parser for the "p" / "p/q" wire format. Rejects anything else
// (decimals in particular) so exact checks cannot be contaminated.
inline Rational parse_rational(const std::string& text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a rational \"p\" or \"p/q\": '" + text + "'");
  };
  if (text.empty()) fail();
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_int(text)) fail();
    return Rational(Integer(text));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) fail();
  Integer p(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  if (d < 0) {
    p = -p;
    d = -d;
  }
  return Rational(p, d);
}

inline Rational rat_pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base == 0) {
    if (exp < 0) throw std::domain_error("rat_pow: 0 to a negative power");
    return Rational(0);
  }
  unsigned long e = exp < 0 ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
  Rational acc(1), b = base;
  while (e) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  if (exp < 0) acc = Rational(1) / acc;
  return acc;
}

inline Integer factorial(unsigned n) {
  Integer f(1);
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

inline Integer binomial(unsigned n, unsigned k) {
  if (k > n) return Integer(0);
  if (k > n - k) k = n - k;
  Integer b(1);
  for (unsigned i = 0; i < k; ++i) {
    b *= (n - i);
    b /= (i + 1);
  }
  return b;
}

// Rising factorial (a)_n = a (a+1) ... (a+n-1); empty product for n == 0.
inline Rational pochhammer(const Rational& base, unsigned count) {
  Rational p(1), term = base;
  for (unsigned j = 0; j < count; ++j) {
    p *= term;
    term += 1;
  }
  return p;
}

}  // namespace qortho
