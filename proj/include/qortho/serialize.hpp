#pragma once

#include <cstdio>
#include <string>

#include <json.hpp>

#include "qortho/constant.hpp"
#include "qortho/densities.hpp"
#include "qortho/identities.hpp"
#include "qortho/parity_poly.hpp"
#include "qortho/qgaussian.hpp"
#include "qortho/sampling.hpp"
#include "qortho/weights.hpp"

namespace qortho {

// Field order is fixed everywhere (ordered_json) so identical inputs yield
// byte-identical documents.
using Json = nlohmann::ordered_json;

// 17 significant digits: round-trips every double.
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline Json to_json(const Rational& r) { return to_string(r); }

inline Json to_json(const ClosedFormConstant& c) {
  Json j;
  j["coeff"] = to_string(c.coeff());
  j["pi_half_power"] = c.pi_half_power();
  Json surds = Json::array();
  for (const auto& s : c.surds()) surds.push_back(to_string(s));
  j["surds"] = surds;
  Json gammas = Json::array();
  for (const auto& g : c.gammas()) gammas.push_back({{"arg", to_string(g.arg)}, {"exp", g.exp}});
  j["gammas"] = gammas;
  return j;
}

inline Json to_json(const IdentityReport& rep) {
  Json j;
  j["identity"] = identity_name(rep.identity);
  j["n"] = rep.n;
  Json params = Json::array();
  for (const auto& p : rep.params) params.push_back(to_string(p));
  j["params"] = params;
  j["exact_equal"] = rep.exact_equal;
  if (rep.first_mismatch) {
    j["first_mismatch"] = {{"power", rep.first_mismatch->power},
                           {"lhs", to_string(rep.first_mismatch->lhs)},
                           {"rhs", to_string(rep.first_mismatch->rhs)}};
  }
  if (rep.skip_reason) j["skip_reason"] = *rep.skip_reason;
  return j;
}

inline Json to_json(const OrthoReport& rep) {
  Json j;
  j["family"] = family_name(rep.family);
  j["param"] = to_string(rep.param);
  j["n_max"] = rep.n_max;
  j["all_off_diagonal_zero"] = rep.all_off_diagonal_zero;
  Json pairs = Json::array();
  for (const auto& p : rep.pairs) {
    Json e;
    e["m"] = p.m;
    e["n"] = p.n;
    if (p.skipped) {
      e["skipped"] = true;
      e["skip_reason"] = p.skip_reason;
    } else {
      e["ratio_to_mu0"] = to_string(p.ratio_to_mu0);
      e["mu0"] = to_json(p.mu0);
    }
    pairs.push_back(std::move(e));
  }
  j["pairs"] = pairs;
  return j;
}

inline Json to_json(const QMapResult& r) {
  return Json{{"q", to_string(r.q)}, {"branch", branch_name(r.branch)}};
}

inline Json to_json(const Thm5Report& rep) {
  Json j;
  j["params"] = {{"m", rep.m}, {"n", rep.n}, {"N", to_string(rep.N)}, {"nu", to_string(rep.nu)}};
  j["grid_size"] = rep.grid_points;
  j["max_rel_error"] = rep.max_rel_error;
  j["ratio_spread"] = rep.ratio_spread;
  j["pass"] = rep.pass;
  j["note"] = rep.note;
  return j;
}

inline Json coefficients_json(const ParityPoly& p) {
  Json arr = Json::array();
  const int top = p.degree();
  for (int j = 0; j <= std::max(top, 0); ++j) arr.push_back(to_string(p.coeff(j)));
  return arr;
}

inline std::string coefficients_csv(const ParityPoly& p) {
  std::string out = "power,coefficient\n";
  const int top = p.degree();
  for (int j = 0; j <= std::max(top, 0); ++j)
    out += std::to_string(j) + "," + to_string(p.coeff(j)) + "\n";
  return out;
}

}  // namespace qortho
