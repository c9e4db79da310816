#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "tricover/constructions.hpp"
#include "tricover/graph6.hpp"
#include "tricover/solve_outcome.hpp"
#include "tricover/verify.hpp"

namespace tricover {

inline constexpr std::string_view kVersion = "0.1.0";

using Json = nlohmann::json;

// Reals are written with 12 significant digits so reports are
// byte-reproducible; a real that happens to be integral keeps a ".0".
inline std::string format_real(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  std::string s(buf);
  if (s == "-0") s = "0";
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

namespace detail {

inline void write_json(std::string& out, const Json& j, int indent, int depth) {
  auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        write_json(out, it.value(), indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      // Arrays of scalars stay on one line.
      bool flat = true;
      for (const auto& v : j) flat = flat && !v.is_structured();
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        if (!flat) newline(depth + 1);
        write_json(out, v, indent, depth + 1);
      }
      if (!flat && !j.empty()) newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float:
      out += format_real(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

}  // namespace detail

// Sorted keys, fixed real formatting. indent < 0 gives one line.
inline std::string dump(const Json& j, int indent = 2) {
  std::string out;
  detail::write_json(out, j, indent, 0);
  return out;
}

struct ReportOptions {
  bool timings = false;  // wall-clock seconds break byte-reproducibility
};

// Integer-valued problems report integers; phi keeps reals since k may be real.
inline Json value_json(Problem problem, double v) {
  if (problem == Problem::phi) return v;
  return static_cast<std::int64_t>(std::llround(v));
}

inline Json to_json(const SolveOutcome& s, const ReportOptions& opt = {}) {
  Json j = {{"problem", to_string(s.problem)},
            {"value_lower", value_json(s.problem, s.lower)},
            {"value_upper", value_json(s.problem, s.upper)},
            {"status", to_string(s.status)},
            {"certificate", s.certificate},
            {"nodes", s.stats.nodes}};
  if (s.problem == Problem::phi) j["k"] = s.k;
  if (opt.timings) j["seconds"] = s.stats.seconds;
  return j;
}

inline Json to_json(const ConstructionParams& p) {
  Json j = {{"n", p.n}, {"theta", p.theta}, {"d", p.d}, {"eps", p.eps}, {"seed", p.seed},
            {"p", p.p()}, {"k", p.k()}, {"k_int", p.k_int()}, {"phi_threshold", p.phi_threshold()}};
  if (p.p_override) j["p_override"] = *p.p_override;
  return j;
}

inline Json to_json(const TrifreeReport& r, const ReportOptions& opt = {}) {
  return {{"m0", r.m0},
          {"triangles0", r.triangles0},
          {"removed", r.removed},
          {"removed_count", r.removed.size()},
          {"removal_method", to_string(r.method)},
          {"m", r.m},
          {"bullet1", r.bullet1()},
          {"bullet1_limit", r.params.edge_upper_limit()},
          {"bullet2", r.bullet2()},
          {"bullet2_limit", r.params.edge_lower_limit()},
          {"bullet3", to_string(r.bullet3())},
          {"bullet3_threshold", r.params.phi_threshold()},
          {"phi", to_json(r.phi, opt)},
          {"no_isolated_g0", r.no_isolated0},
          {"no_isolated", r.no_isolated}};
}

inline Json to_json(const RatioReport& r, const ReportOptions& opt = {}) {
  Json j = {{"params", to_json(r.params)},
            {"c", r.c},
            {"trifree", to_json(r.trifree, opt)},
            {"g_graph6", graph6::encode(r.g)},
            {"k_int", r.k_int},
            {"skipped", r.skipped},
            {"premises",
             {{"bullet1", r.trifree.bullet1()},
              {"bullet2", r.trifree.bullet2()},
              {"bullet3", to_string(r.trifree.bullet3())},
              {"k_int_ge_1", r.premise_k_int()},
              {"k_ge_inv_eps", r.premise_k_eps()},
              {"d_ge_eps_term", r.premise_d_eps()},
              {"all", to_string(r.premises())}}},
            {"predictions",
             {{"tau_ratio", r.prediction_tau()},
              {"alpha1_ratio", r.prediction_alpha1()},
              {"sum_ratio", predicted_sum_ratio(r.params.d)},
              {"tau_slack", r.slack_tau()},
              {"alpha1_slack", r.slack_alpha1()}}},
            {"theorem",
             {{"tau_bound", r.bound_tau()},
              {"alpha1_bound", r.bound_alpha1()},
              {"vacuous", r.bounds_vacuous()},
              {"conclusion", r.conclusion()},
              {"implication", to_string(r.implication())}}}};
  if (r.skipped) return j;
  j["n_h"] = r.n_h;
  j["m_h"] = r.m_h;
  j["tau"] = to_json(r.tau, opt);
  j["tau_source"] = "join-formula";
  j["alpha1_lb"] = r.alpha1_lb;
  j["alpha1_exact_attempted"] = r.alpha1_attempted;
  if (r.alpha1) j["alpha1"] = to_json(*r.alpha1, opt);
  j["triangular_h"] = r.triangular_h;
  j["ratios"] = {{"tau", r.tau_ratio()},
                 {"tau_upper", r.tau_ratio_upper()},
                 {"alpha1", r.alpha1_ratio()},
                 {"min", r.min_ratio()},
                 {"sum", r.sum_ratio()},
                 {"c_margin", r.c_margin()}};
  return j;
}

inline Json to_json(const NorinReport& r, const ReportOptions& opt = {}) {
  return {{"n", r.n},
          {"m_h", r.m_h},
          {"alpha_h", to_json(r.alpha, opt)},
          {"effort", r.effort},
          {"kim_diagnostic", r.kim_diagnostic},
          {"m_g", r.m_g},
          {"tau_g", to_json(r.tau, opt)},
          {"alpha1_lb", r.alpha1_lb},
          {"c", r.c.str()},
          {"lhs", r.lhs()},
          {"rhs", r.rhs()},
          {"verdict", to_string(r.verdict())},
          {"predicate", r.predicate()},
          {"consistent", r.consistent()}};
}

inline Json to_json(const CheckReport& r) {
  Json j = {{"check", r.name}, {"instance", r.instance}, {"measured", r.measured}, {"verdict", to_string(r.verdict)}};
  if (!r.counterexample.is_null()) j["counterexample"] = r.counterexample;
  return j;
}

// Flat columns for sweep tables, in a fixed order.
inline const std::vector<std::string>& ratio_csv_columns() {
  static const std::vector<std::string> cols = {
      "n",          "theta",        "d",           "eps",          "seed",         "p",
      "k",          "k_int",        "skipped",     "m0",           "triangles0",   "removed",
      "removal",    "m_g",          "phi_lower",   "phi_upper",    "phi_status",   "phi_threshold",
      "bullet1",    "bullet2",      "bullet3",     "k_ge_inv_eps", "d_ge_eps_term", "premises",
      "n_h",        "m_h",          "tau_lower",   "tau_upper",    "tau_status",   "alpha1_lb",
      "triangular", "tau_ratio",    "alpha1_ratio", "min_ratio",   "sum_ratio",    "c",
      "c_margin",   "pred_tau",     "pred_alpha1", "slack_tau",    "slack_alpha1", "bound_tau",
      "bound_alpha1", "implication"};
  return cols;
}

inline std::vector<std::string> ratio_csv_row(const RatioReport& r) {
  auto b = [](bool x) { return std::string(x ? "true" : "false"); };
  auto i = [](auto x) { return std::to_string(x); };
  auto f = [](double x) { return format_real(x); };
  const auto& t = r.trifree;
  return {i(r.params.n),
          f(r.params.theta),
          f(r.params.d),
          f(r.params.eps),
          i(r.params.seed),
          f(r.params.p()),
          f(r.params.k()),
          i(r.k_int),
          b(r.skipped),
          i(t.m0),
          i(t.triangles0),
          i(t.removed.size()),
          std::string(to_string(t.method)),
          i(t.m),
          f(t.phi.lower),
          f(t.phi.upper),
          std::string(to_string(t.phi.status)),
          f(r.params.phi_threshold()),
          b(t.bullet1()),
          b(t.bullet2()),
          std::string(to_string(t.bullet3())),
          b(r.premise_k_eps()),
          b(r.premise_d_eps()),
          std::string(to_string(r.premises())),
          i(r.n_h),
          i(r.m_h),
          i(std::llround(r.tau.lower)),
          i(std::llround(r.tau.upper)),
          std::string(to_string(r.tau.status)),
          i(r.alpha1_lb),
          b(r.triangular_h),
          f(r.tau_ratio()),
          f(r.alpha1_ratio()),
          f(r.min_ratio()),
          f(r.sum_ratio()),
          f(r.c),
          f(r.c_margin()),
          f(r.prediction_tau()),
          f(r.prediction_alpha1()),
          f(r.slack_tau()),
          f(r.slack_alpha1()),
          f(r.bound_tau()),
          f(r.bound_alpha1()),
          std::string(to_string(r.implication()))};
}

}  // namespace tricover
