#pragma once

#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "roughdiff/coefficient.hpp"
#include "roughdiff/errors.hpp"
#include "roughdiff/exact1d.hpp"
#include "roughdiff/piecewise.hpp"

namespace roughdiff {

/// Shortest round-trip decimal rendering of a double (17 significant digits
/// guarantee bit-exact reload).
inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline nlohmann::json to_json(const PiecewiseFunction& pf) {
  nlohmann::json j;
  j["interval"] = {pf.interval().a, pf.interval().b};
  j["breakpoints"] = pf.breakpoints();
  nlohmann::json pieces = nlohmann::json::array();
  for (std::size_t k = 0; k < pf.num_cells(); ++k) pieces.push_back(pf.piece(k).coefficients());
  j["pieces"] = pieces;
  return j;
}

inline PiecewiseFunction piecewise_from_json(const nlohmann::json& j) {
  if (!j.contains("breakpoints") || !j.contains("pieces"))
    throw UsageError("piecewise JSON needs 'breakpoints' and 'pieces'");
  std::vector<double> breaks = j.at("breakpoints").get<std::vector<double>>();
  std::vector<Polynomial> pieces;
  for (const auto& cell : j.at("pieces"))
    pieces.push_back(Polynomial(cell.get<std::vector<double>>()));
  PiecewiseFunction pf(std::move(breaks), std::move(pieces));
  if (j.contains("interval")) {
    const auto iv = j.at("interval").get<std::vector<double>>();
    if (iv.size() != 2 || !Interval(iv[0], iv[1]).matches(pf.interval()))
      throw UsageError("'interval' disagrees with the breakpoint range");
  }
  return pf;
}

inline nlohmann::json to_json(const CoefficientField& cf) {
  nlohmann::json j = to_json(cf.shape());
  j["ess_inf"] = cf.ess_inf();
  j["ess_sup"] = cf.ess_sup();
  return j;
}

inline CoefficientField coefficient_from_json(const nlohmann::json& j) {
  return CoefficientField(piecewise_from_json(j));
}

inline void save_json(const nlohmann::json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot open '" + path + "' for writing");
  out << j.dump(2) << "\n";
}

inline nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return nlohmann::json::parse(in);
}

inline nlohmann::json to_json(const MixedSolution& sol) {
  nlohmann::json j;
  j["u"] = to_json(sol.u);
  j["q"] = to_json(sol.q);
  return j;
}

/// Sampled (x, u, q) rows at a caller-specified resolution. Sample points are
/// a(1 - t) + b t with t = k/n, so both endpoints are hit exactly.
inline void write_solution_csv(std::ostream& out, const MixedSolution& sol, int samples) {
  if (samples < 2) throw UsageError("need at least two sample points");
  out << "x,u,q\n";
  const Interval iv = sol.domain;
  for (int k = 0; k < samples; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(samples - 1);
    const double x = iv.a * (1.0 - t) + iv.b * t;
    out << format_double(x) << ',' << format_double(sol.u(x)) << ',' << format_double(sol.q(x))
        << '\n';
  }
}

}  // namespace roughdiff
