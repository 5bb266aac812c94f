#pragma once

#include <chrono>
#include <cstdio>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "qortho/densities.hpp"
#include "qortho/identities.hpp"
#include "qortho/qgaussian.hpp"
#include "qortho/sampling.hpp"
#include "qortho/weights.hpp"

namespace qortho {

enum class Profile { Quick, Full };

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  std::string detail;
};

// The full verification suite. Every tolerance is pinned here; the quick
// profile only lowers degree bounds and sample counts, never tolerances.
namespace acceptance {

inline std::string format_detail(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

namespace detail {

struct Counter {
  int checked = 0, failed = 0, skipped = 0;

  void tally(const IdentityReport& r) {
    if (r.skipped()) ++skipped;
    else {
      ++checked;
      if (!r.exact_equal) ++failed;
    }
  }
  std::string summary() const {
    std::string s = std::to_string(checked) + " checked, " + std::to_string(failed) + " failed";
    if (skipped) s += ", " + std::to_string(skipped) + " skipped";
    return s;
  }
};

template <typename F>
CriterionResult timed(int id, std::string name, F&& body) {
  CriterionResult result;
  result.id = id;
  result.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  body(result);
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace detail

// 1. Carinena(Ncal>0) = scaled relativistic Hermite, exact on the grid.
inline CriterionResult criterion_thm1(Profile profile) {
  return detail::timed(1, "thm1 exact (Carinena from relativistic Hermite)", [&](CriterionResult& r) {
    const unsigned n_max = profile == Profile::Full ? 12 : 6;
    detail::Counter c;
    for (unsigned n = 0; n <= n_max; ++n)
      for (const Rational& Ncal : {Rational(3, 2), Rational(2), Rational(7, 2), Rational(5),
                                   Rational(10), Rational(41, 4)})
        c.tally(verify_thm1(n, Ncal));
    r.pass = c.failed == 0 && c.checked > 0;
    r.detail = c.summary();
  });
}

// 2. Carinena(Ncal<0) = scaled Gegenbauer, exact on the grid.
inline CriterionResult criterion_thm2(Profile profile) {
  return detail::timed(2, "thm2 exact (Carinena from Gegenbauer)", [&](CriterionResult& r) {
    const unsigned n_max = profile == Profile::Full ? 12 : 6;
    detail::Counter c;
    for (unsigned n = 0; n <= n_max; ++n)
      for (const Rational& nu : {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2),
                                 Rational(7, 2), Rational(5)})
        c.tally(verify_thm2(n, nu));
    r.pass = c.failed == 0 && c.skipped == 0 && c.checked > 0;
    r.detail = c.summary();
  });
}

// 3. Nagel's identity, exact on the grid.
inline CriterionResult criterion_nagel(Profile profile) {
  return detail::timed(3, "nagel exact (relativistic Hermite as composed Gegenbauer)",
                       [&](CriterionResult& r) {
    const unsigned n_max = profile == Profile::Full ? 12 : 6;
    detail::Counter c;
    for (unsigned n = 0; n <= n_max; ++n)
      for (const Rational& N :
           {Rational(1), Rational(2), Rational(7, 2), Rational(5), Rational(10)})
        c.tally(verify_nagel(n, N));
    r.pass = c.failed == 0 && c.skipped == 0 && c.checked > 0;
    r.detail = c.summary();
  });
}

// 4. Carinena-to-Carinena composition, exact where nu = Ncal + 1/2 - n > 0.
inline CriterionResult criterion_thm3(Profile profile) {
  return detail::timed(4, "thm3 exact (Carinena-to-Carinena composition)", [&](CriterionResult& r) {
    const unsigned n_max = profile == Profile::Full ? 10 : 6;
    detail::Counter c;
    for (unsigned n = 0; n <= n_max; ++n)
      for (const Rational& Ncal : {Rational(21, 2), Rational(12), Rational(61, 4)})
        c.tally(verify_thm3(n, Ncal));
    r.pass = c.failed == 0 && c.skipped == 0 && c.checked > 0;
    r.detail = c.summary();
  });
}

// 5. Exact orthogonality (rational zero) for all four families.
inline CriterionResult criterion_orthogonality(Profile profile) {
  return detail::timed(5, "orthogonality exact (four families)", [&](CriterionResult& r) {
    const unsigned n_max = profile == Profile::Full ? 10 : 6;
    int pairs = 0, nonzero = 0, skipped = 0;
    auto run = [&](Family fam, const Rational& p) {
      auto rep = verify_orthogonality(fam, p, n_max);
      for (const auto& e : rep.pairs) {
        if (e.m == e.n) continue;
        if (e.skipped) ++skipped;
        else {
          ++pairs;
          if (e.ratio_to_mu0 != 0) ++nonzero;
        }
      }
    };
    for (const Rational& nu : {Rational(1), Rational(2), Rational(7, 2)}) {
      run(Family::Gegenbauer, nu);
      run(Family::CarinenaNeg, nu);
    }
    for (const Rational& Ncal : {Rational(3), Rational(5), Rational(10)})
      run(Family::CarinenaPos, Ncal);
    for (const Rational& N : {Rational(2), Rational(3), Rational(5)}) run(Family::RHP, N);
    r.pass = nonzero == 0 && pairs > 0;
    r.detail = std::to_string(pairs) + " off-diagonal pairs exactly zero, " +
               std::to_string(nonzero) + " nonzero, " + std::to_string(skipped) +
               " outside the orthogonality range";
  });
}

// 6. Normalization constants: structural equality with the closed forms and
//    float agreement with the quadrature oracle to 1e-10 relative.
inline CriterionResult criterion_norm_constants(Profile profile) {
  return detail::timed(6, "normalization constants (closed form, exact + 1e-10 numeric)",
                       [&](CriterionResult& r) {
    const unsigned n_max = profile == Profile::Full ? 8 : 4;
    int checked = 0, failed = 0;
    auto run = [&](Family fam, const Rational& p) {
      for (unsigned n = 0; n <= n_max; ++n) {
        ++checked;
        if (!norm_constant_check(fam, n, p)) {
          ++failed;
          continue;
        }
        auto poly = family_poly({fam, n, p});
        auto w = pair_weight(fam, p, n, n);
        const double engine = inner_product(poly, poly, w).value_as_double();
        const double oracle = quadrature(
            [&](double x) {
              const double v = poly.eval(x);
              return v * v * w.eval(x);
            },
            w.domain(), std::abs(engine) * 1e-12);
        if (!(std::abs(oracle / engine - 1.0) < 1e-10)) ++failed;
      }
    };
    for (const Rational& N : {Rational(2), Rational(3), Rational(7, 2), Rational(5)})
      run(Family::RHP, N);
    for (const Rational& nu : {Rational(1), Rational(2), Rational(5, 2)})
      run(Family::Gegenbauer, nu);
    r.pass = failed == 0;
    r.detail = std::to_string(checked) + " constants checked, " + std::to_string(failed) +
               " failed";
  });
}

// 7. Hermite limit: exact gaps decrease in N and N*gap is stable to 5%
//    between N = 10^4 and 10^6.
inline CriterionResult criterion_hermite_limit(Profile profile) {
  return detail::timed(7, "classical Hermite limit (exact O(1/N) gaps)", [&](CriterionResult& r) {
    const unsigned n_top = profile == Profile::Full ? 8 : 6;
    bool ok = true;
    for (unsigned n = 0; n <= n_top; ++n) {
      Rational prev(-1);
      for (long N : {10L, 100L, 1000L, 10000L}) {
        Rational g = hermite_limit_gap(n, Rational(N));
        if (prev >= 0 && g > prev) ok = false;
        prev = g;
      }
    }
    for (unsigned n = 2; n <= std::min(n_top, 6u); ++n) {
      const Rational a = Rational(10000) * hermite_limit_gap(n, Rational(10000));
      const Rational b = Rational(1000000) * hermite_limit_gap(n, Rational(1000000));
      const Rational diff = a > b ? a - b : b - a;
      if (!(diff * 20 < b)) ok = false;
    }
    r.pass = ok;
    r.detail = "gap nonincreasing over N in {10,10^2,10^3,10^4}; N*gap stable to 5%";
  });
}

// 8. q-Gaussian layer: normalization, q -> 1 continuity, exact q maps.
inline CriterionResult criterion_q_layer(Profile) {
  return detail::timed(8, "q-Gaussian layer (normalization, continuity, exact maps)",
                       [&](CriterionResult& r) {
    bool ok = true;
    std::string why;
    for (double q : {0.3, 0.7, 1.0, 1.2, 1.5}) {
      QGaussianSpec spec(q, 1.0);
      const double integral = quadrature(
          [&spec](double x) { return q_gaussian_pdf(spec, x); }, spec.domain(), 1e-12);
      if (!(std::abs(integral - 1.0) < 1e-10)) {
        ok = false;
        why += " normalization(q=" + std::to_string(q) + ")";
      }
    }
    QGaussianSpec gauss(1.0, 1.0);
    for (double q : {1.0 - 1e-4, 1.0 + 1e-4}) {
      QGaussianSpec spec(q, 1.0);
      double worst = 0;
      for (int i = 0; i <= 200; ++i) {
        const double x = -5.0 + i * 10.0 / 200;
        worst = std::max(worst, std::abs(q_gaussian_pdf(spec, x) - q_gaussian_pdf(gauss, x)));
      }
      if (!(worst < 1e-3)) {
        ok = false;
        why += " continuity(q=" + std::to_string(q) + ")";
      }
    }
    if (q_from_gegenbauer(Rational(2)).q != Rational(1, 3)) ok = false, why += " map-gegenbauer";
    if (q_from_carinena(Rational(2)).q != Rational(7, 5)) ok = false, why += " map-carinena";
    if (q_from_rhp(Rational(3), 0, 0).q != Rational(5, 4)) ok = false, why += " map-rhp";
    auto sphere = q_pair_for_geometry(Geometry::Sphere, Rational(2), 1);
    if (sphere.first.q != Rational(1, 3) || sphere.second.q != Rational(2, 3))
      ok = false, why += " pair-sphere";
    auto hyper = q_pair_for_geometry(Geometry::Hyperbolic, Rational(3), 1);
    if (hyper.first.q != Rational(9, 7) || hyper.second.q != Rational(3, 2))
      ok = false, why += " pair-hyperbolic";
    r.pass = ok;
    r.detail = ok ? "normalization 1e-10, continuity 1e-3, all exact maps reproduced"
                  : "failed:" + why;
  });
}

// 9. 1D pushforward: exact transport on dense grids plus a Monte Carlo
//    witness (seed 42, KS < 0.02).
inline CriterionResult criterion_pushforward(Profile profile) {
  return detail::timed(9, "1d density pushforward (1e-10 transport + Monte Carlo witness)",
                       [&](CriterionResult& r) {
    const int grid_points = profile == Profile::Full ? 1001 : 101;
    const std::size_t count = profile == Profile::Full ? 100000 : 20000;
    const auto grid = interior_grid(grid_points);
    double worst = 0;
    for (unsigned n = 0; n <= 5; ++n)
      for (const Rational& N : {Rational(2), Rational(3), Rational(7, 2), Rational(5)})
        worst = std::max(worst, pushforward_check_1d(n, N, grid));
    auto batch = sample_relativistic_1d(0, Rational(3), count, 42);
    auto ys = transform_to_sphere(batch.values, Rational(3));
    Density1D sphere(Density1D::Kind::Sphere1D, 0, Rational(3));
    const double ks = ks_distance(ys, sphere);
    r.pass = worst < 1e-10 && ks < 0.02;
    r.detail = "max transport error " + format_detail(worst) + ", transformed-sample KS " +
               format_detail(ks);
  });
}

// 10. 2d curvature bijection on the disk grid.
inline CriterionResult criterion_thm5(Profile) {
  return detail::timed(10, "2d curvature bijection (1e-9 pointwise + ratio guard)",
                       [&](CriterionResult& r) {
    const auto grid = disk_grid(21, 1e-3);
    struct Case {
      unsigned m, n;
      Rational N;
    } cases[] = {{0, 0, Rational(3)}, {1, 1, Rational(5)}, {2, 1, Rational(6)},
                 {0, 3, Rational(7)}};
    double worst_rel = 0, worst_spread = 0;
    for (const auto& c : cases) {
      auto rep = verify_thm5(c.m, c.n, c.N, grid, 1e-9);
      worst_rel = std::max(worst_rel, rep.max_rel_error);
      worst_spread = std::max(worst_spread, rep.ratio_spread);
    }
    r.pass = worst_rel < 1e-9 && worst_spread < 1e-9;
    r.detail = "max relative error " + format_detail(worst_rel) + ", ratio spread " +
               format_detail(worst_spread);
  });
}

// 11. Oracle cross-checks: the two polynomial construction paths agree and
//     the rational moment engine matches adaptive quadrature.
inline CriterionResult criterion_oracles(Profile profile) {
  return detail::timed(11, "oracle cross-checks (recurrence path, quadrature vs moments)",
                       [&](CriterionResult& r) {
    const unsigned n_max = profile == Profile::Full ? 15 : 8;
    bool ok = true;
    for (const Rational& nu : {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2),
                               Rational(7, 2), Rational(5)})
      for (unsigned n = 0; n <= n_max; ++n)
        if (!(family_poly({Family::Gegenbauer, n, nu}) == gegenbauer_recurrence(n, nu)))
          ok = false;
    std::mt19937 gen(20240612);
    std::uniform_int_distribution<int> knum(1, 5), vnum(1, 4), extra(2, 9);
    int quad_cases = 0;
    for (int trial = 0; trial < 20; ++trial) {
      const long k = knum(gen);
      WeightSpec w = (trial % 2 == 0)
                         ? WeightSpec::rational_decay(Rational(vnum(gen), 2),
                                                      Rational(k) + Rational(1, 2) +
                                                          Rational(extra(gen), 2))
                         : WeightSpec::compact_beta(Rational(vnum(gen)), Rational(extra(gen), 2));
      const double exact = to_double(moment_ratio(w, k));
      auto moment = [&](long kk) {
        return quadrature([&](double x) { return std::pow(x, 2.0 * kk) * w.eval(x); },
                          w.domain(), 1e-12);
      };
      const double numeric = moment(k) / moment(k - 1);
      ++quad_cases;
      if (!(std::abs(numeric / exact - 1.0) < 1e-8)) ok = false;
    }
    r.pass = ok;
    r.detail = "recurrence oracle to n = " + std::to_string(n_max) + ", " +
               std::to_string(quad_cases) + " randomized quadrature cases at 1e-8";
  });
}

}  // namespace acceptance

inline std::vector<CriterionResult> run_acceptance(Profile profile) {
  return {
      acceptance::criterion_thm1(profile),        acceptance::criterion_thm2(profile),
      acceptance::criterion_nagel(profile),       acceptance::criterion_thm3(profile),
      acceptance::criterion_orthogonality(profile), acceptance::criterion_norm_constants(profile),
      acceptance::criterion_hermite_limit(profile), acceptance::criterion_q_layer(profile),
      acceptance::criterion_pushforward(profile), acceptance::criterion_thm5(profile),
      acceptance::criterion_oracles(profile),
  };
}

}  // namespace qortho
