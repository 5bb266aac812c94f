#pragma once

#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qortho/acceptance.hpp"
#include "qortho/serialize.hpp"

namespace qortho::cli {

// exit statuses: 0 all checks passed, 1 usage/config error, 2 a mathematical
// check failed (partial results are still written with per-item pass flags)
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCheckFailed = 2;

struct RunConfig {
  enum class Command { Table, Verify, Ortho, QMap, Pushforward, Thm5, Sample, Report };
  Command command = Command::Report;

  std::string family;    // table/ortho/qmap selector
  std::string identity;  // verify selector
  std::string geometry;  // qmap geometry selector ("" = single-family map)
  unsigned n = 0;
  unsigned m = 0;
  unsigned n_max = 0;
  std::vector<Rational> params;
  bool check_norms = false;
  std::string format = "json";  // json|csv|text
  std::string output_path;
  std::uint64_t seed = 42;
  std::uint64_t count = 100000;
  int grid_points = 1001;
  int grid_axis = 21;
  double margin = 1e-3;
  std::optional<double> tol;  // overrides the pinned default of the command
  std::string profile = "full";
};

inline unsigned worker_count() {
  if (const char* env = std::getenv("QORTHO_WORKERS")) {
    const long v = std::atol(env);
    if (v >= 1 && v <= 256) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Index-sliced worker pool; results land at their own indices, so the output
// order is deterministic no matter how the work is scheduled. The first
// exception thrown by any job is rethrown on the calling thread.
template <typename Fn>
inline void parallel_for(std::size_t count, Fn&& fn) {
  const unsigned workers = std::min<std::size_t>(worker_count(), count ? count : 1);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::exception_ptr first_error;
  std::mutex error_mutex;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([count, workers, w, &fn, &first_error, &error_mutex]() {
      try {
        for (std::size_t i = w; i < count; i += workers) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

namespace detail {

inline void emit(const RunConfig& config, const std::string& body, std::ostream& out) {
  if (!config.output_path.empty()) {
    std::ofstream file(config.output_path);
    if (!file) throw std::invalid_argument("cannot open output path " + config.output_path);
    file << body;
  }
  out << body;
}

inline int run_table(const RunConfig& config, std::ostream& out) {
  const Family family = family_from_name(config.family);
  if (family != Family::ClassicalHermite && config.params.empty())
    throw std::invalid_argument("table: --param required for this family");
  const Rational param = config.params.empty() ? Rational(0) : config.params[0];
  const ParityPoly poly = family_poly({family, config.n, param});
  if (config.format == "csv") {
    emit(config, coefficients_csv(poly), out);
  } else if (config.format == "json") {
    Json j;
    j["family"] = config.family;
    j["param"] = to_string(param);
    j["n"] = config.n;
    j["coefficients"] = coefficients_json(poly);
    emit(config, j.dump(2) + "\n", out);
  } else {
    emit(config, poly.str() + "\n", out);
  }
  return kExitOk;
}

inline int run_verify(const RunConfig& config, std::ostream& out) {
  const Identity id = identity_from_name(config.identity);
  std::vector<IdentityReport> reports;

  if (id == Identity::HermiteLimit) {
    // gaps along the given N grid must be nonincreasing for each degree
    std::vector<Rational> grid = config.params;
    std::sort(grid.begin(), grid.end());
    if (grid.empty()) throw std::invalid_argument("verify: --param required");
    for (unsigned n = 0; n <= config.n_max; ++n) {
      IdentityReport rep{Identity::HermiteLimit, n, grid, true, std::nullopt, std::nullopt};
      Rational prev(-1);
      for (const auto& N : grid) {
        Rational g = hermite_limit_gap(n, N);
        if (prev >= 0 && g > prev) rep.exact_equal = false;
        prev = g;
      }
      reports.push_back(std::move(rep));
    }
  } else {
    if (config.params.empty()) throw std::invalid_argument("verify: --param required");
    struct Job {
      unsigned n;
      Rational param;
    };
    std::vector<Job> jobs;
    for (unsigned n = 0; n <= config.n_max; ++n)
      for (const auto& p : config.params) jobs.push_back({n, p});
    reports.resize(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t i) {
      switch (id) {
        case Identity::Thm1: reports[i] = verify_thm1(jobs[i].n, jobs[i].param); break;
        case Identity::Thm2: reports[i] = verify_thm2(jobs[i].n, jobs[i].param); break;
        case Identity::Thm3: reports[i] = verify_thm3(jobs[i].n, jobs[i].param); break;
        case Identity::Nagel: reports[i] = verify_nagel(jobs[i].n, jobs[i].param); break;
        case Identity::HermiteLimit: break;
      }
    });
  }

  bool any_failed = false;
  Json arr = Json::array();
  std::string text;
  for (const auto& rep : reports) {
    if (rep.failed()) any_failed = true;
    arr.push_back(to_json(rep));
    text += identity_name(rep.identity) + " n=" + std::to_string(rep.n) +
            (rep.skipped() ? " SKIP (" + *rep.skip_reason + ")"
                           : (rep.exact_equal ? " OK" : " FAIL")) +
            "\n";
  }
  emit(config, config.format == "text" ? text : arr.dump(2) + "\n", out);
  return any_failed ? kExitCheckFailed : kExitOk;
}

inline int run_ortho(const RunConfig& config, std::ostream& out) {
  if (config.params.empty()) throw std::invalid_argument("ortho: --param required");
  const Family family = family_from_name(config.family);
  bool failed = false;
  Json docs = Json::array();
  std::string text;
  for (const auto& param : config.params) {
    OrthoReport rep = verify_orthogonality(family, param, config.n_max);
    if (!rep.all_off_diagonal_zero) failed = true;
    Json j = to_json(rep);
    if (config.check_norms && (family == Family::RHP || family == Family::Gegenbauer)) {
      Json norms = Json::array();
      for (unsigned n = 0; n <= config.n_max; ++n) {
        bool ok = false;
        std::string skip;
        try {
          ok = norm_constant_check(family, n, param);
          if (!ok) failed = true;
        } catch (const std::domain_error& e) {
          skip = e.what();
        }
        Json entry{{"n", n}};
        if (skip.empty()) entry["matches_closed_form"] = ok;
        else entry["skip_reason"] = skip;
        norms.push_back(std::move(entry));
      }
      j["norm_constants"] = norms;
    }
    text += "family " + config.family + " param " + to_string(param) +
            (rep.all_off_diagonal_zero ? ": all off-diagonal pairs exactly zero\n"
                                       : ": NON-ORTHOGONAL PAIR FOUND\n");
    for (const auto& p : rep.pairs)
      if (p.m == p.n && !p.skipped)
        text += "  <p_" + std::to_string(p.n) + ", p_" + std::to_string(p.n) +
                "> = " + to_string(p.ratio_to_mu0) + " * " + p.mu0.str() + "\n";
    docs.push_back(std::move(j));
  }
  emit(config, config.format == "text" ? text : docs.dump(2) + "\n", out);
  return failed ? kExitCheckFailed : kExitOk;
}

inline int run_qmap(const RunConfig& config, std::ostream& out) {
  if (config.params.empty()) throw std::invalid_argument("qmap: --param required");
  const Rational& param = config.params[0];
  Json j;
  if (!config.geometry.empty()) {
    Geometry g;
    if (config.geometry == "sphere") g = Geometry::Sphere;
    else if (config.geometry == "hyperbolic") g = Geometry::Hyperbolic;
    else throw std::invalid_argument("qmap: geometry must be sphere or hyperbolic");
    auto [first, second] = q_pair_for_geometry(g, param, config.m);
    j["geometry"] = config.geometry;
    j["params"] = {{"param", to_string(param)}, {"m", config.m}};
    Json pair = Json::array({to_json(first), to_json(second)});
    pair[0]["q_float"] = to_double(first.q);
    pair[1]["q_float"] = to_double(second.q);
    j["q_pair"] = pair;
  } else {
    QMapResult r{Rational(0), QBranch::One};
    Json params;
    if (config.family == "gegenbauer") {
      r = q_from_gegenbauer(param);
      params = {{"nu", to_string(param)}};
    } else if (config.family == "carinena") {
      r = q_from_carinena(param);
      params = {{"Ncal", to_string(param)}};
    } else if (config.family == "rhp") {
      r = q_from_rhp(param, config.m, config.n);
      params = {{"N", to_string(param)}, {"m", config.m}, {"n", config.n}};
    } else {
      throw std::invalid_argument("qmap: family must be gegenbauer, carinena, or rhp");
    }
    j["family"] = config.family;
    j["params"] = params;
    j["q"] = to_string(r.q);
    j["q_float"] = to_double(r.q);
    j["branch"] = branch_name(r.branch);
  }
  emit(config, j.dump(2) + "\n", out);
  return kExitOk;
}

inline int run_pushforward(const RunConfig& config, std::ostream& out) {
  if (config.params.empty()) throw std::invalid_argument("pushforward: --param required");
  const double tol = config.tol.value_or(1e-10);
  const double err = pushforward_check_1d(config.n, config.params[0],
                                          interior_grid(config.grid_points));
  Json j;
  j["params"] = {{"n", config.n}, {"N", to_string(config.params[0])}};
  j["grid_size"] = config.grid_points;
  j["max_error"] = err;
  j["pass"] = err < tol;
  emit(config, j.dump(2) + "\n", out);
  return err < tol ? kExitOk : kExitCheckFailed;
}

inline int run_thm5(const RunConfig& config, std::ostream& out) {
  if (config.params.empty()) throw std::invalid_argument("thm5: --param required");
  const double tol = config.tol.value_or(1e-9);
  auto rep = verify_thm5(config.m, config.n, config.params[0],
                         disk_grid(config.grid_axis, config.margin), tol);
  emit(config, to_json(rep).dump(2) + "\n", out);
  return rep.pass ? kExitOk : kExitCheckFailed;
}

inline int run_sample(const RunConfig& config, std::ostream& out) {
  if (config.params.empty()) throw std::invalid_argument("sample: --param required");
  const Rational& N = config.params[0];
  auto batch = sample_relativistic_1d(config.n, N, config.count, config.seed);
  if (!config.output_path.empty()) {
    std::ofstream file(config.output_path);
    if (!file) throw std::invalid_argument("cannot open output path " + config.output_path);
    file << "x\n";
    for (double v : batch.values) file << format_double(v) << "\n";
  }
  Density1D target(Density1D::Kind::Relativistic1D, config.n, N);
  Json j;
  j["seed"] = batch.seed;
  j["count"] = batch.values.size();
  j["ks"] = ks_distance(batch.values, target);
  j["acceptance_rate"] = batch.proposal_acceptance_rate;
  out << j.dump(2) << "\n";
  return kExitOk;
}

inline int run_report(const RunConfig& config, std::ostream& out) {
  const Profile profile = config.profile == "quick" ? Profile::Quick : Profile::Full;
  const auto results = run_acceptance(profile);
  bool all_pass = true;
  Json arr = Json::array();
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
    arr.push_back(Json{{"id", r.id},
                       {"name", r.name},
                       {"pass", r.pass},
                       {"seconds", r.seconds},
                       {"detail", r.detail}});
    char line[256];
    std::snprintf(line, sizeof(line), "[%2d] %-62s %s (%.2f s)\n", r.id, r.name.c_str(),
                  r.pass ? "PASS" : "FAIL", r.seconds);
    out << line;
  }
  Json doc;
  doc["profile"] = config.profile;
  doc["all_pass"] = all_pass;
  doc["criteria"] = arr;
  if (!config.output_path.empty()) {
    std::ofstream file(config.output_path);
    if (!file) throw std::invalid_argument("cannot open output path " + config.output_path);
    file << doc.dump(2) << "\n";
  }
  out << (all_pass ? "all criteria passed\n" : "SOME CRITERIA FAILED\n");
  return all_pass ? kExitOk : kExitCheckFailed;
}

}  // namespace detail

inline int run(const RunConfig& config, std::ostream& out) {
  using Command = RunConfig::Command;
  try {
    switch (config.command) {
      case Command::Table: return detail::run_table(config, out);
      case Command::Verify: return detail::run_verify(config, out);
      case Command::Ortho: return detail::run_ortho(config, out);
      case Command::QMap: return detail::run_qmap(config, out);
      case Command::Pushforward: return detail::run_pushforward(config, out);
      case Command::Thm5: return detail::run_thm5(config, out);
      case Command::Sample: return detail::run_sample(config, out);
      case Command::Report: return detail::run_report(config, out);
    }
  } catch (const std::invalid_argument& e) {
    out << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    out << "domain error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

// Builds the CLI11 command tree, parses argv, and dispatches. Parameter
// strings must be exact rationals ("7/2", never "3.5"); anything else is a
// usage error before any computation starts.
inline int main_entry(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"exact orthogonal-polynomial families, q-Gaussian maps, and transform checks"};
  app.require_subcommand(1);

  RunConfig config;
  std::vector<std::string> param_strings;

  auto add_params = [&param_strings](CLI::App* cmd) {
    cmd->add_option("--param", param_strings,
                    "family/identity parameter as an exact rational p/q");
  };
  auto add_output = [&config](CLI::App* cmd) {
    cmd->add_option("--output", config.output_path, "write the document to this path as well");
  };
  auto add_format = [&config](CLI::App* cmd) {
    return cmd->add_option("--format", config.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  };

  auto* table = app.add_subcommand("table", "exact coefficient table of one polynomial");
  table->add_option("--family", config.family, "rhp|hermite|gegenbauer|carinena-pos|carinena-neg")
      ->required();
  table->add_option("--n", config.n, "degree")->required();
  add_params(table);
  auto* table_format = add_format(table);
  add_output(table);
  table->callback([&config, table_format] {
    config.command = RunConfig::Command::Table;
    if (table_format->count() == 0) config.format = "csv";  // the table default
  });

  auto* verify = app.add_subcommand("verify", "exact identity verification over a grid");
  verify->add_option("--identity", config.identity, "thm1|thm2|thm3|nagel|hermite-limit")
      ->required();
  verify->add_option("--n-max", config.n_max, "verify degrees 0..n_max")->required();
  add_params(verify);
  add_format(verify);
  add_output(verify);
  verify->callback([&] { config.command = RunConfig::Command::Verify; });

  auto* ortho = app.add_subcommand("ortho", "exact orthogonality report for one family");
  ortho->add_option("--family", config.family, "rhp|gegenbauer|carinena-pos|carinena-neg")
      ->required();
  ortho->add_option("--n-max", config.n_max, "pairs up to this degree")->required();
  ortho->add_flag("--check-norms", config.check_norms,
                  "also compare diagonals against the closed-form constants");
  add_params(ortho);
  add_format(ortho);
  add_output(ortho);
  ortho->callback([&] { config.command = RunConfig::Command::Ortho; });

  auto* qmap = app.add_subcommand("qmap", "exact nonextensivity parameter maps");
  qmap->add_option("--family", config.family, "gegenbauer|carinena|rhp");
  qmap->add_option("--geometry", config.geometry, "sphere|hyperbolic (two-factor q pair)");
  qmap->add_option("--m", config.m, "pair degree m");
  qmap->add_option("--n", config.n, "pair degree n");
  add_params(qmap);
  add_output(qmap);
  qmap->callback([&] { config.command = RunConfig::Command::QMap; });

  auto* push = app.add_subcommand("pushforward", "1d density transport check");
  push->add_option("--n", config.n, "state degree")->required();
  push->add_option("--grid-points", config.grid_points, "interior grid size");
  push->add_option("--tol", config.tol, "absolute tolerance (default 1e-10)");
  add_params(push);
  add_output(push);
  push->callback([&] { config.command = RunConfig::Command::Pushforward; });

  auto* thm5 = app.add_subcommand("thm5", "2d curvature bijection check");
  thm5->add_option("--m", config.m, "degree m")->required();
  thm5->add_option("--n", config.n, "degree n")->required();
  thm5->add_option("--grid", config.grid_axis, "lattice points per axis");
  thm5->add_option("--margin", config.margin, "distance kept from the disk boundary");
  thm5->add_option("--tol", config.tol, "relative tolerance (default 1e-9)");
  add_params(thm5);
  add_output(thm5);
  thm5->callback([&] { config.command = RunConfig::Command::Thm5; });

  auto* sample = app.add_subcommand("sample", "reproducible Monte Carlo sampling");
  sample->add_option("--n", config.n, "state degree")->required();
  sample->add_option("--count", config.count, "number of samples");
  sample->add_option("--seed", config.seed, "64-bit seed");
  add_params(sample);
  sample->add_option("--output", config.output_path, "write samples as CSV to this path");
  sample->callback([&] { config.command = RunConfig::Command::Sample; });

  auto* report = app.add_subcommand("report", "run the full verification suite");
  report->add_option("--profile", config.profile, "quick|full")
      ->check(CLI::IsMember({"quick", "full"}));
  add_output(report);
  report->callback([&] { config.command = RunConfig::Command::Report; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    out << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    for (const auto& s : param_strings) config.params.push_back(parse_rational(s));
  } catch (const std::invalid_argument& e) {
    out << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  return run(config, out);
}

}  // namespace qortho::cli
