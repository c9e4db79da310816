#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tricover/constructions.hpp"
#include "tricover/errors.hpp"
#include "tricover/generators.hpp"
#include "tricover/graph.hpp"
#include "tricover/graph6.hpp"
#include "tricover/rng.hpp"
#include "tricover/solvers.hpp"
#include "tricover/triangles.hpp"
#include "tricover/verdict.hpp"

namespace tricover {

struct CheckReport {
  std::string name;
  std::string instance;  // graph6 or generator description
  nlohmann::json measured = nlohmann::json::object();
  Verdict verdict = Verdict::pass;
  nlohmann::json counterexample;  // null unless verdict is fail
};

namespace detail {

// Combines sub-verdicts: any fail wins, then any indeterminate.
inline Verdict combine(std::initializer_list<Verdict> parts) {
  Verdict out = Verdict::pass;
  for (Verdict v : parts) {
    if (v == Verdict::fail) return Verdict::fail;
    if (v == Verdict::indeterminate) out = Verdict::indeterminate;
  }
  return out;
}

// Integer `lhs <= rhs` where lhs is known only as an interval.
inline Verdict integer_at_most(double lo, double hi, std::int64_t scale, std::int64_t rhs) {
  if (scale * static_cast<std::int64_t>(std::llround(hi)) <= rhs) return Verdict::pass;
  if (scale * static_cast<std::int64_t>(std::llround(lo)) > rhs) return Verdict::fail;
  return Verdict::indeterminate;
}

inline nlohmann::json interval_json(const SolveOutcome& s) {
  return {{"lower", s.lower}, {"upper", s.upper}, {"status", to_string(s.status)}};
}

}  // namespace detail

// alpha1 + tau <= m, 4(alpha1 + tau) <= n^2 and 2 tau <= m, judged from
// already computed intervals. A violated lower sum is a definite failure;
// a satisfied upper sum is a definite pass.
inline CheckReport inequality_check(const Graph& g, const SolveOutcome& alpha1, const SolveOutcome& tau) {
  CheckReport r;
  r.name = "inequality_suite";
  r.instance = graph6::encode(g);
  const auto n = static_cast<std::int64_t>(g.order());
  const auto m = static_cast<std::int64_t>(g.edge_count());
  const double lo = alpha1.lower + tau.lower;
  const double hi = alpha1.upper + tau.upper;
  const Verdict sum_m = detail::integer_at_most(lo, hi, 1, m);
  const Verdict sum_n2 = detail::integer_at_most(lo, hi, 4, n * n);
  const Verdict half = detail::integer_at_most(tau.lower, tau.upper, 2, m);
  r.verdict = detail::combine({sum_m, sum_n2, half});
  r.measured = {{"n", n},
                {"m", m},
                {"alpha1", detail::interval_json(alpha1)},
                {"tau", detail::interval_json(tau)},
                {"sum_le_m", to_string(sum_m)},
                {"sum_le_quarter_n2", to_string(sum_n2)},
                {"tau_le_half_m", to_string(half)}};
  if (r.verdict == Verdict::fail)
    r.counterexample = {{"graph6", r.instance},
                        {"alpha1_certificate", alpha1.certificate},
                        {"tau_certificate", tau.certificate}};
  return r;
}

inline CheckReport inequality_suite(const Graph& g, const Budget& budget = {}) {
  return inequality_check(g, alpha1_exact(g, budget), tau_exact(g, budget));
}

// All labelled graphs on n vertices, as edge masks over canonical order.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  GraphBuilder b(n);
  for (EdgeIndex i = 0; i < pair_count(n); ++i)
    if ((mask >> i) & 1U) {
      const Edge e = edge_from_index(n, i);
      b.add_edge(e.u, e.v);
    }
  return std::move(b).build();
}

// A triangle-free graph on n vertices: G(n, p) with p drawn from the seed,
// minus an inclusion-minimal triangle cover.
inline Graph sample_triangle_free(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  const double p = 0.15 + 0.7 * rng.uniform01();
  const Graph g0 = gnp(n, p, rng.next());
  const EdgeSet x = greedy_minimal_triangle_cover(g0);
  return remove_edges(g0, x);
}

struct TritauOptions {
  std::size_t n_max = 5;  // exhaustive range, at most 6
  std::vector<std::size_t> k_set{1, 2, 3};
  std::size_t samples = 0;  // extra graphs at n = 6, 7, 8 in rotation
  std::uint64_t seed = 1;
};

// tau(K̄_k ∨ G) = n k - max phi_k on every triangle-free G in range.
inline CheckReport tritau_exhaustive(const TritauOptions& options, const Budget& budget = {}) {
  if (options.n_max > 6) throw ParameterError("tritau: exhaustive range is capped at n = 6");
  for (auto k : options.k_set)
    if (k < 1) throw ParameterError("tritau: k must be positive");
  CheckReport r;
  r.name = "tritau";
  r.instance = "exhaustive n<=" + std::to_string(options.n_max) + ", samples=" + std::to_string(options.samples) +
               ", seed=" + std::to_string(options.seed);
  std::size_t graphs = 0;
  std::size_t checks = 0;
  std::size_t undecided = 0;

  auto check = [&](const Graph& g) {
    ++graphs;
    for (std::size_t k : options.k_set) {
      ++checks;
      const SolveOutcome direct = tau_exact(build_join_H(g, k), budget);
      const SolveOutcome phi = phi_max(g, static_cast<double>(k), budget);
      if (!direct.optimal() || !phi.optimal()) {
        ++undecided;
        continue;
      }
      const double formula = static_cast<double>(g.order() * k) - phi.lower;
      if (direct.lower != formula) {
        r.verdict = Verdict::fail;
        r.counterexample = {{"graph6", graph6::encode(g)},
                            {"k", k},
                            {"tau_join", direct.lower},
                            {"nk_minus_phi", formula},
                            {"tau_certificate", direct.certificate},
                            {"phi_certificate", phi.certificate}};
        return false;
      }
    }
    return true;
  };

  bool ok = true;
  for (std::size_t n = 1; n <= options.n_max && ok; ++n) {
    const std::uint64_t end = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t mask = 0; mask < end && ok; ++mask) {
      const Graph g = graph_from_mask(n, mask);
      if (is_triangle_free(g)) ok = check(g);
    }
  }
  for (std::size_t i = 0; i < options.samples && ok; ++i)
    ok = check(sample_triangle_free(6 + i % 3, derive_seed(options.seed, i)));

  if (r.verdict != Verdict::fail && undecided > 0) r.verdict = Verdict::indeterminate;
  r.measured = {{"graphs", graphs}, {"checks", checks}, {"undecided", undecided}, {"k_set", options.k_set}};
  return r;
}

namespace detail {

inline std::size_t inside_degree(const Graph& g, const Bitset& s, std::size_t v) {
  return g.neighbors(static_cast<Vertex>(v)).count_and(s);
}

}  // namespace detail

// Searches for S with |S| >= eps n and |E(G[S])| < (1-eps) p |S|^2 / 2.
//
// First peels a highest-inside-degree vertex at a time from V(G), which
// visits a sparse set of every size. Then `effort` steps of swap descent at
// size ceil(eps n) from random starts: swap the densest inside vertex for
// the sparsest outside one while that lowers the edge count. Finding
// nothing proves nothing.
inline CheckReport density_falsifier(const Graph& g, double p, double eps, std::size_t effort, std::uint64_t seed) {
  if (!(eps > 0.0 && eps < 1.0)) throw ParameterError("density: eps must lie in (0,1)");
  CheckReport r;
  r.name = "density";
  r.instance = graph6::encode(g);
  const std::size_t n = g.order();
  const auto s_min = static_cast<std::size_t>(std::ceil(eps * static_cast<double>(n) - 1e-9));
  auto limit = [&](std::size_t s) { return (1.0 - eps) * p * static_cast<double>(s * s) / 2.0; };

  bool found = false;
  Bitset witness(n);
  std::size_t witness_edges = 0;
  double best_ratio = std::numeric_limits<double>::infinity();
  auto consider = [&](const Bitset& s) {
    const std::size_t size = s.count();
    if (size < s_min || size == 0) return;
    const std::size_t e = g.induced_edge_count(s);
    const double lim = limit(size);
    if (lim > 0.0) best_ratio = std::min(best_ratio, static_cast<double>(e) / lim);
    if (!found && static_cast<double>(e) < lim) {
      found = true;
      witness = s;
      witness_edges = e;
    }
  };

  Rng rng(seed);
  {
    Bitset s = Bitset::full(n);
    consider(s);
    while (s.count() > s_min && !found) {
      std::size_t pick = Bitset::npos;
      std::size_t pick_deg = 0;
      s.for_each([&](std::size_t v) {
        const std::size_t d = detail::inside_degree(g, s, v);
        if (pick == Bitset::npos || d > pick_deg) {
          pick = v;
          pick_deg = d;
        }
      });
      s.reset(pick);
      consider(s);
    }
  }

  for (std::size_t it = 0; it < effort && !found && s_min > 0 && s_min < n; ++it) {
    std::vector<std::size_t> order(n);
    for (std::size_t v = 0; v < n; ++v) order[v] = v;
    rng.shuffle(std::span<std::size_t>(order));
    Bitset s(n);
    for (std::size_t i = 0; i < s_min; ++i) s.set(order[i]);
    while (true) {
      std::size_t out_v = Bitset::npos;
      std::size_t in_v = Bitset::npos;
      std::size_t out_deg = 0;
      std::size_t in_deg = 0;
      for (std::size_t v = 0; v < n; ++v) {
        const std::size_t d = detail::inside_degree(g, s, v);
        if (s.test(v)) {
          if (out_v == Bitset::npos || d > out_deg) out_v = v, out_deg = d;
        } else if (in_v == Bitset::npos || d < in_deg) {
          in_v = v, in_deg = d;
        }
      }
      const std::size_t gained = in_deg - (g.adjacent(static_cast<Vertex>(in_v), static_cast<Vertex>(out_v)) ? 1 : 0);
      if (gained >= out_deg) break;
      s.reset(out_v);
      s.set(in_v);
    }
    consider(s);
  }

  r.measured = {{"n", n},      {"p", p},          {"eps", eps},     {"effort", effort},
                {"seed", seed}, {"min_size", s_min}, {"found", found}};
  if (std::isfinite(best_ratio)) r.measured["best_edge_ratio"] = best_ratio;
  if (found) {
    r.verdict = Verdict::fail;
    r.counterexample = {{"graph6", r.instance},
                        {"S", witness.to_vector()},
                        {"edges", witness_edges},
                        {"limit", limit(witness.count())}};
  } else {
    r.measured["note"] = "no violation found at effort " + std::to_string(effort);
  }
  return r;
}

// max phi_k <= k^2 / (2(1-eps)p) with k = d n p.
inline CheckReport phi_bound_check(const Graph& g, double p, double d, double eps, const Budget& budget = {}) {
  if (!(eps > 0.0 && eps < 1.0)) throw ParameterError("phibound: eps must lie in (0,1)");
  if (!(d > 0.0)) throw ParameterError("phibound: d must be positive");
  if (!(p > 0.0)) throw ParameterError("phibound: p must be positive");
  CheckReport r;
  r.name = "phibound";
  r.instance = graph6::encode(g);
  const double k = d * static_cast<double>(g.order()) * p;
  const double threshold = k * k / (2.0 * (1.0 - eps) * p);
  const SolveOutcome phi = phi_max(g, k, budget);
  r.verdict = interval_at_most(phi.lower, phi.upper, threshold);
  const double peak_x = k / ((1.0 - eps) * p);
  r.measured = {{"n", g.order()},
                {"p", p},
                {"d", d},
                {"eps", eps},
                {"k", k},
                {"threshold", threshold},
                {"phi", detail::interval_json(phi)},
                {"certificate_size", phi.certificate.size()},
                {"f_peak_x", peak_x},
                {"f_peak_value", k * peak_x - (1.0 - eps) * p * peak_x * peak_x / 2.0}};
  if (r.verdict == Verdict::fail)
    r.counterexample = {{"graph6", r.instance}, {"S", phi.certificate}, {"phi_S", phi.lower}};
  return r;
}

// Exact equalities alpha1 + tau = n^2/4 for K_n and K_{n/2,n/2}, plus the
// K_s ⊔ K_{t,t} baseline ratio min(alpha1, tau)/m.
inline CheckReport tightness_and_baselines(std::size_t n_even, std::size_t s, std::size_t t,
                                           const Budget& budget = {}) {
  if (n_even % 2 != 0 || n_even == 0) throw ParameterError("tightness: n must be a positive even number");
  CheckReport r;
  r.name = "tightness";
  r.instance = "n=" + std::to_string(n_even) + ", s=" + std::to_string(s) + ", t=" + std::to_string(t);
  const auto quarter4 = static_cast<std::int64_t>(n_even * n_even);

  std::vector<Verdict> parts;
  auto identity = [&](const char* label, const Graph& g) {
    const SolveOutcome a = alpha1_exact(g, budget);
    const SolveOutcome tau = tau_exact(g, budget);
    Verdict v = Verdict::indeterminate;
    if (a.optimal() && tau.optimal())
      v = 4 * static_cast<std::int64_t>(a.lower + tau.lower) == quarter4 ? Verdict::pass : Verdict::fail;
    r.measured[label] = {{"alpha1", detail::interval_json(a)}, {"tau", detail::interval_json(tau)},
                         {"verdict", to_string(v)}};
    if (v == Verdict::fail && r.counterexample.is_null())
      r.counterexample = {{"graph6", graph6::encode(g)},
                          {"alpha1_certificate", a.certificate},
                          {"tau_certificate", tau.certificate}};
    parts.push_back(v);
  };
  identity("complete", complete_graph(n_even));
  identity("complete_bipartite", complete_bipartite(n_even / 2, n_even / 2));

  const Graph base = disjoint_union(complete_graph(s), complete_bipartite(t, t));
  const SolveOutcome a = alpha1_exact(base, budget);
  const SolveOutcome tau = tau_exact(base, budget);
  const std::size_t m = base.edge_count();
  nlohmann::json baseline = {{"graph6", graph6::encode(base)},
                             {"m", m},
                             {"alpha1", detail::interval_json(a)},
                             {"tau", detail::interval_json(tau)},
                             {"asymptote", 1.0 / 3.0}};
  if (m > 0 && a.optimal() && tau.optimal()) {
    const double low = std::min(a.lower, tau.lower);
    baseline["min_numerator"] = low;
    baseline["min_ratio"] = low / static_cast<double>(m);
  }
  r.measured["baseline"] = baseline;

  Verdict total = Verdict::pass;
  for (Verdict v : parts) total = detail::combine({total, v});
  r.verdict = total;
  return r;
}

}  // namespace tricover
