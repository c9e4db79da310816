#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "tricover/errors.hpp"
#include "tricover/generators.hpp"
#include "tricover/graph.hpp"
#include "tricover/rational.hpp"
#include "tricover/solvers.hpp"
#include "tricover/triangles.hpp"
#include "tricover/trifree_search.hpp"
#include "tricover/verdict.hpp"

namespace tricover {

// Parameters of the sparse random construction. p, k and the phi threshold
// are always derived on demand.
struct ConstructionParams {
  std::size_t n = 64;
  double theta = 0.75;
  double d = 1.0;
  double eps = 0.5;
  std::uint64_t seed = 1;
  std::optional<double> p_override;  // replaces n^-theta, e.g. p = 0

  void validate() const {
    if (n < 1) throw ParameterError("n must be at least 1");
    if (!(theta > 0.0 && theta < 1.0)) throw ParameterError("theta must lie in (0,1)");
    if (!(d > 0.0) || !std::isfinite(d)) throw ParameterError("d must be positive");
    if (!(eps > 0.0 && eps < 1.0)) throw ParameterError("eps must lie in (0,1)");
    if (p_override && !(*p_override >= 0.0 && *p_override <= 1.0)) throw ParameterError("p must lie in [0,1]");
  }

  double p() const { return p_override ? *p_override : std::pow(static_cast<double>(n), -theta); }
  double k() const { return d * static_cast<double>(n) * p(); }
  std::size_t k_int() const { return static_cast<std::size_t>(std::floor(k() + 1e-12)); }
  double phi_threshold() const {
    const double pp = p();
    return pp > 0.0 ? k() * k() / (2.0 * (1.0 - eps) * pp) : 0.0;
  }
  double edge_upper_limit() const { return (1.0 + eps) * p() * static_cast<double>(n * n) / 2.0; }
  double edge_lower_limit() const { return (1.0 - eps) * p() * static_cast<double>(n * n) / 2.0; }
};

enum class RemovalMethod { exact, greedy_minimal };

inline std::string_view to_string(RemovalMethod m) {
  return m == RemovalMethod::exact ? "exact" : "greedy-minimal";
}

struct TrifreeReport {
  ConstructionParams params;
  std::size_t m0 = 0;
  std::size_t triangles0 = 0;
  EdgeSet removed;  // canonical indices in G0
  RemovalMethod method = RemovalMethod::exact;
  std::size_t m = 0;
  SolveOutcome phi;
  bool no_isolated0 = false;
  bool no_isolated = false;

  bool bullet1() const { return static_cast<double>(m) <= params.edge_upper_limit() + 1e-9; }
  bool bullet2() const { return static_cast<double>(m) >= params.edge_lower_limit() - 1e-9; }
  Verdict bullet3() const { return interval_at_most(phi.lower, phi.upper, params.phi_threshold()); }
};

// Largest triangle hitting set switch for the exact removal step.
inline constexpr std::size_t kExactRemovalTriangleLimit = 5000;

// G0 = G(n, p); X = a minimum triangle hitting set of G0 when that solve
// finishes within budget, else the inclusion-minimal greedy one; G = G0 - X.
// Minimality keeps non-isolated vertices non-isolated: an edge uv of X lies
// in a triangle uvw whose other two edges survive.
inline std::pair<Graph, TrifreeReport> sample_trifree(const ConstructionParams& params, const Budget& budget = {}) {
  params.validate();
  TrifreeReport r;
  r.params = params;
  const Graph g0 = gnp(params.n, params.p(), params.seed);
  r.m0 = g0.edge_count();
  r.triangles0 = count_triangles(g0);
  r.no_isolated0 = !g0.has_isolated_vertex();

  r.method = RemovalMethod::greedy_minimal;
  if (r.triangles0 <= kExactRemovalTriangleLimit) {
    SolveOutcome tau = tau_exact(g0, budget);
    if (tau.optimal()) {
      r.method = RemovalMethod::exact;
      r.removed = std::move(tau.certificate);
    }
  }
  if (r.method == RemovalMethod::greedy_minimal) r.removed = greedy_minimal_triangle_cover(g0);

  Graph g = remove_edges(g0, r.removed);
  r.m = g.edge_count();
  r.no_isolated = !g.has_isolated_vertex();

  const double k = params.k();
  if (k > 0.0) {
    r.phi = phi_max(g, k, budget);
  } else {
    // Only the empty set matters when k = 0.
    r.phi.problem = Problem::phi;
    r.phi.k = 0.0;
  }
  return {std::move(g), std::move(r)};
}

// K̄_k ∨ G with the k hub vertices labelled 0..k-1.
inline Graph build_join_H(const Graph& g, std::size_t k_int) {
  if (k_int < 1) throw ParameterError("build_join_H: k must be a positive integer");
  if (!is_triangle_free(g)) throw PreconditionError("build_join_H: G must be triangle-free");
  return join(empty_graph(k_int), g);
}

// Closed forms in d from the ratio analysis.
inline double predicted_tau_ratio(double d) { return (2.0 * d - d * d) / (2.0 * d + 1.0); }
inline double predicted_alpha1_ratio(double d) { return 1.0 / (2.0 * d + 1.0); }
inline double predicted_sum_ratio(double d) { return (1.0 + 2.0 * (2.0 * d - d * d)) / (2.0 * d + 1.0); }

// Finite-eps lower bounds the theorem guarantees once its premises hold.
inline double theorem_tau_bound(double d, double eps) {
  return (2.0 * (1.0 - eps) * (1.0 - eps) * d - d * d) / ((2.0 * d + 1.0) * (1.0 + eps) * (1.0 - eps));
}
inline double theorem_alpha1_bound(double d, double eps) { return (1.0 - eps) / ((2.0 * d + 1.0) * (1.0 + eps)); }

struct PipelineOptions {
  bool exact_alpha1 = false;
  std::size_t alpha1_node_limit = 2000;  // conflict-graph size cap
};

struct RatioReport {
  ConstructionParams params;
  double c = 1.0;
  TrifreeReport trifree;
  Graph g;
  std::size_t k_int = 0;
  bool skipped = false;  // k_int = 0: no H built

  std::size_t n_h = 0;
  std::size_t m_h = 0;
  SolveOutcome tau;  // tau(H) via the join formula
  std::size_t alpha1_lb = 0;
  std::optional<SolveOutcome> alpha1;
  bool alpha1_attempted = false;
  bool triangular_h = false;

  double tau_ratio() const { return m_h ? tau.lower / static_cast<double>(m_h) : 0.0; }
  double tau_ratio_upper() const { return m_h ? tau.upper / static_cast<double>(m_h) : 0.0; }
  double alpha1_ratio() const { return m_h ? static_cast<double>(alpha1_lb) / static_cast<double>(m_h) : 0.0; }
  double min_ratio() const { return std::min(tau_ratio(), alpha1_ratio()); }
  double sum_ratio() const {
    return m_h ? (static_cast<double>(alpha1_lb) + 2.0 * tau.lower) / static_cast<double>(m_h) : 0.0;
  }
  double c_margin() const { return static_cast<double>(alpha1_lb) + c * tau.lower - static_cast<double>(m_h); }

  double prediction_tau() const { return predicted_tau_ratio(params.d); }
  double prediction_alpha1() const { return predicted_alpha1_ratio(params.d); }
  double slack_tau() const { return prediction_tau() - tau_ratio(); }
  double slack_alpha1() const { return prediction_alpha1() - alpha1_ratio(); }
  double bound_tau() const { return theorem_tau_bound(params.d, params.eps); }
  double bound_alpha1() const { return theorem_alpha1_bound(params.d, params.eps); }
  bool bounds_vacuous() const { return bound_tau() <= 0.0 && bound_alpha1() <= 0.0; }

  bool premise_k_int() const { return k_int >= 1; }
  bool premise_k_eps() const { return params.k() >= 1.0 / params.eps - 1e-12; }
  bool premise_d_eps() const { return params.d >= params.eps * (1.0 - params.eps / 2.0) - 1e-12; }

  // All premises as one three-valued flag; bullet 3 can be undecided.
  Verdict premises() const {
    if (!trifree.bullet1() || !trifree.bullet2() || !premise_k_int() || !premise_k_eps() || !premise_d_eps())
      return Verdict::fail;
    return trifree.bullet3() == Verdict::pass ? Verdict::pass
           : trifree.bullet3() == Verdict::fail ? Verdict::fail
                                                : Verdict::indeterminate;
  }

  bool conclusion() const {
    return !skipped && tau_ratio() >= bound_tau() - 1e-12 && alpha1_ratio() >= bound_alpha1() - 1e-12;
  }

  // premises => conclusion. Undecided premises with a failing conclusion
  // stay undecided.
  Verdict implication() const {
    if (premises() == Verdict::fail) return Verdict::pass;
    if (conclusion()) return Verdict::pass;
    return premises() == Verdict::pass ? Verdict::fail : Verdict::indeterminate;
  }
};

inline RatioReport egt_ratio_pipeline(const ConstructionParams& params, double c, const Budget& budget = {},
                                      const PipelineOptions& options = {}) {
  RatioReport r;
  r.params = params;
  r.c = c;
  auto [g, trifree] = sample_trifree(params, budget);
  r.g = std::move(g);
  r.trifree = std::move(trifree);
  r.k_int = params.k_int();
  r.tau.problem = Problem::tau;
  if (r.k_int == 0) {
    r.skipped = true;
    return r;
  }

  const Graph h = build_join_H(r.g, r.k_int);
  r.n_h = h.order();
  r.m_h = h.edge_count();
  r.tau = tau_join_formula(r.g, r.k_int, budget);
  r.alpha1_lb = r.g.edge_count();
  r.triangular_h = is_triangular(h);
  if (options.exact_alpha1 && r.m_h <= options.alpha1_node_limit) {
    r.alpha1_attempted = true;
    SolveOutcome a = alpha1_exact(h, budget);
    // G itself is triangle-independent in H.
    a.lower = std::max(a.lower, static_cast<double>(r.alpha1_lb));
    a.upper = std::max(a.upper, a.lower);
    r.alpha1 = std::move(a);
  }
  return r;
}

enum class Objective { min_ratio, sum_ratio };

struct OptimalD {
  double d = 0.0;
  double value = 0.0;
  bool grid_verified = false;
};

// Maximiser of the closed form for the objective, checked against a grid on
// (0, 2) and against its neighbours at distance 1e-4.
inline OptimalD optimal_d(Objective objective) {
  auto f = objective == Objective::min_ratio ? predicted_tau_ratio : predicted_sum_ratio;
  OptimalD out;
  out.d = objective == Objective::min_ratio ? (-1.0 + std::sqrt(5.0)) / 2.0 : (-1.0 + std::sqrt(3.0)) / 2.0;
  out.value = f(out.d);
  bool ok = out.value >= f(out.d - 1e-4) && out.value >= f(out.d + 1e-4);
  for (int i = 1; i < 20000 && ok; ++i) ok = f(i * 1e-4) <= out.value + 1e-9;
  out.grid_verified = ok;
  return out;
}

inline Objective parse_objective(std::string_view s) {
  if (s == "min-ratio") return Objective::min_ratio;
  if (s == "sum-ratio") return Objective::sum_ratio;
  throw ParameterError("unknown objective '" + std::string(s) + "'");
}

struct NorinReport {
  std::size_t n = 0;
  std::size_t m_h = 0;
  SolveOutcome alpha;  // alpha(H)
  std::size_t effort = 0;
  double kim_diagnostic = 0.0;
  std::size_t m_g = 0;
  SolveOutcome tau;  // tau(K_1 ∨ H) via the join formula
  std::size_t alpha1_lb = 0;
  Rational c;

  double lhs() const { return static_cast<double>(alpha1_lb) + c.value() * tau.lower; }
  double rhs() const { return static_cast<double>(m_g); }

  // alpha1_lb + c tau > m_G, decided in integers from the tau interval.
  Verdict verdict() const {
    auto exceeds = [&](double t) {
      const auto tau_int = static_cast<std::int64_t>(t);
      return c.den * static_cast<std::int64_t>(alpha1_lb) + c.num * tau_int > c.den * static_cast<std::int64_t>(m_g);
    };
    if (exceeds(tau.lower)) return Verdict::pass;
    if (!exceeds(tau.upper)) return Verdict::fail;
    return Verdict::indeterminate;
  }

  // alpha(H)/n < (c-1)/c, i.e. alpha num < n (num - den).
  bool predicate() const {
    return static_cast<std::int64_t>(alpha.lower) * c.num < static_cast<std::int64_t>(n) * (c.num - c.den);
  }

  // tau = n - alpha and verdict <=> predicate, when both solves are exact.
  bool consistent() const {
    if (!alpha.optimal() || !tau.optimal()) return true;
    return tau.lower == static_cast<double>(n) - alpha.lower && (verdict() == Verdict::pass) == predicate();
  }
};

inline NorinReport norin_check(const Graph& h, const Rational& c, const Budget& budget = {}) {
  if (c.num <= c.den) throw ParameterError("norin_check: c must exceed 1");
  if (!is_triangle_free(h)) throw PreconditionError("norin_check: H must be triangle-free");
  NorinReport r;
  r.n = h.order();
  r.m_h = h.edge_count();
  r.alpha = alpha_exact(h, budget);
  const double n = static_cast<double>(r.n);
  r.kim_diagnostic = r.n > 1 ? 9.0 * std::sqrt(n * std::log(n)) : 0.0;
  r.m_g = r.m_h + r.n;
  r.tau = tau_join_formula(h, 1, budget);
  r.alpha1_lb = r.m_h;
  r.c = c;
  return r;
}

inline constexpr std::size_t kDefaultNorinEffort = 200;

struct NorinRun {
  LowAlphaResult search;
  NorinReport report;
};

inline NorinRun norin_construct(std::size_t n, std::size_t effort, std::uint64_t seed, const Rational& c,
                                const Budget& budget = {}) {
  NorinRun run{low_alpha_trifree(n, effort, seed, budget), {}};
  run.report = norin_check(run.search.graph, c, budget);
  run.report.effort = run.search.effort;
  return run;
}

}  // namespace tricover
