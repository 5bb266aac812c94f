#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <stdexcept>
#include <vector>

namespace qortho {

struct Domain {
  bool whole_line = false;
  double lo = 0, hi = 0;

  static Domain interval(double lo, double hi) { return {false, lo, hi}; }
  static Domain real_line() { return {true, 0, 0}; }
};

// Thrown when the adaptive scheme runs out of budget; carries the best
// estimate and its error bound.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(double estimate, double error_bound)
      : std::runtime_error("quadrature did not converge: estimate " +
                           std::to_string(estimate) + " +/- " + std::to_string(error_bound)),
        estimate_(estimate),
        error_bound_(error_bound) {}
  double estimate() const { return estimate_; }
  double error_bound() const { return error_bound_; }

 private:
  double estimate_, error_bound_;
};

namespace detail {

// 15-point Gauss-Kronrod pair on [-1,1] (QUADPACK dqk15 abscissae/weights).
inline constexpr double kGK15Nodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kGK15Weights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kG7Weights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo, hi, value, error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

inline Panel gk15(const std::function<double(double)>& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  long double kronrod = 0, gauss = 0;
  for (int i = 0; i < 8; ++i) {
    const double offset = half * kGK15Nodes[i];
    double fsum;
    if (i == 7) {
      fsum = f(center);
    } else {
      fsum = f(center - offset) + f(center + offset);
    }
    kronrod += static_cast<long double>(kGK15Weights[i]) * fsum;
    if (i % 2 == 1) gauss += static_cast<long double>(kG7Weights[i / 2]) * fsum;
  }
  const double value = static_cast<double>(kronrod * half);
  const double error = static_cast<double>(std::abs(static_cast<double>((kronrod - gauss) * half)));
  return {lo, hi, value, error};
}

}  // namespace detail

// Adaptive Gauss-Kronrod integration over a finite interval to absolute
// tolerance tol. Throws AccuracyError when the subdivision budget is spent.
// Totals are recomputed from the live panel set each round: incremental
// updates lose everything to cancellation when an early panel carries a
// near-singular spike.
inline double quadrature_interval(const std::function<double(double)>& f, double lo, double hi,
                                  double tol, int max_panels = 10000) {
  std::vector<detail::Panel> panels;
  panels.push_back(detail::gk15(f, lo, hi));
  auto by_error = [](const detail::Panel& a, const detail::Panel& b) { return a.error < b.error; };
  std::make_heap(panels.begin(), panels.end(), by_error);
  long double total = 0, total_err = 0;
  while (true) {
    total = 0;
    total_err = 0;
    for (const auto& p : panels) {
      total += p.value;
      total_err += p.error;
    }
    if (total_err <= tol || static_cast<int>(panels.size()) >= max_panels) break;
    std::pop_heap(panels.begin(), panels.end(), by_error);
    detail::Panel worst = panels.back();
    panels.pop_back();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(worst.lo < mid && mid < worst.hi)) {  // interval at floating resolution
      panels.push_back(worst);
      std::push_heap(panels.begin(), panels.end(), by_error);
      break;
    }
    panels.push_back(detail::gk15(f, worst.lo, mid));
    std::push_heap(panels.begin(), panels.end(), by_error);
    panels.push_back(detail::gk15(f, mid, worst.hi));
    std::push_heap(panels.begin(), panels.end(), by_error);
  }
  if (total_err > tol)
    throw AccuracyError(static_cast<double>(total), static_cast<double>(total_err));
  return static_cast<double>(total);
}

// Adaptive estimate with estimated absolute error <= tol. The real line is
// compactified algebraically with X = t/(1-t^2), dX = (1+t^2)/(1-t^2)^2 dt,
// mapping (-1,1) onto the line; suitable for integrands with polynomial decay
// |X|^(-1-eps) or faster. Non-finite integrand values in the far tails are
// treated as zero (the substitution weight overflows before the product does).
inline double quadrature(const std::function<double(double)>& f, const Domain& domain,
                         double tol) {
  if (!domain.whole_line) return quadrature_interval(f, domain.lo, domain.hi, tol);
  auto g = [&f](double t) {
    const double denom = 1.0 - t * t;
    if (denom <= 0) return 0.0;
    const double x = t / denom;
    const double fx = f(x);
    if (fx == 0.0 || !std::isfinite(fx)) return 0.0;
    const double v = fx * (1.0 + t * t) / (denom * denom);
    return std::isfinite(v) ? v : 0.0;
  };
  return quadrature_interval(g, -1.0, 1.0, tol);
}

}  // namespace qortho
