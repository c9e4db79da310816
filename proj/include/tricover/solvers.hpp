#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "tricover/errors.hpp"
#include "tricover/generators.hpp"
#include "tricover/graph.hpp"
#include "tricover/independent_set.hpp"
#include "tricover/solve_outcome.hpp"
#include "tricover/subset_functional.hpp"
#include "tricover/triangle_cover.hpp"
#include "tricover/triangles.hpp"

namespace tricover {

// tau(G): minimum number of edges meeting every triangle.
inline SolveOutcome tau_exact(const Graph& g, const Budget& budget = {}) {
  BudgetClock clock(budget);
  return detail::TriangleCoverSearch(g, clock).run();
}

// Conflict graph on E(G): vertex i is the i-th edge in canonical order, and
// two edges are adjacent iff some triangle contains both. Two edges of a
// triangle always share a vertex and then determine that triangle, so an
// edge set has at most one edge per triangle exactly when it is independent
// here.
inline Graph conflict_graph(const Graph& g) {
  const EdgeSet canonical = g.edge_indices();
  auto local = [&](Edge e) {
    return static_cast<Vertex>(std::lower_bound(canonical.begin(), canonical.end(), g.index_of(e)) -
                               canonical.begin());
  };
  GraphBuilder b(canonical.size());
  for (const Triangle& t : enumerate_triangles(g)) {
    const auto es = t.edges();
    const Vertex x = local(es[0]);
    const Vertex y = local(es[1]);
    const Vertex z = local(es[2]);
    b.add_edge(x, y);
    b.add_edge(x, z);
    b.add_edge(y, z);
  }
  return std::move(b).build();
}

// alpha_1(G): maximum triangle-independent edge set, solved as a maximum
// independent set of conflict_graph(G).
inline SolveOutcome alpha1_exact(const Graph& g, const Budget& budget = {}) {
  const EdgeSet canonical = g.edge_indices();
  const IndependentSetResult r = max_independent_set(conflict_graph(g), budget);
  SolveOutcome out;
  out.problem = Problem::alpha1;
  out.lower = static_cast<double>(r.lower);
  out.upper = static_cast<double>(r.upper);
  out.status = r.optimal ? Status::optimal : Status::bounded;
  r.set.for_each([&](std::size_t i) { out.certificate.push_back(canonical[i]); });
  out.stats = r.stats;
  return out;
}

// alpha(G): independence number.
inline SolveOutcome alpha_exact(const Graph& g, const Budget& budget = {}) {
  const IndependentSetResult r = max_independent_set(g, budget);
  SolveOutcome out;
  out.problem = Problem::alpha;
  out.lower = static_cast<double>(r.lower);
  out.upper = static_cast<double>(r.upper);
  out.status = r.optimal ? Status::optimal : Status::bounded;
  r.set.for_each([&](std::size_t v) { out.certificate.push_back(v); });
  out.stats = r.stats;
  return out;
}

// max over S ⊆ V(G) of k|S| - |E(G[S])|, for real k > 0. The empty set is
// allowed, so the value is never negative.
inline SolveOutcome phi_max(const Graph& g, double k, const Budget& budget = {}) {
  if (!(k > 0.0) || !std::isfinite(k)) throw ParameterError("phi_max: k must be a positive real");
  const std::size_t n = g.order();
  BudgetClock clock(budget);
  detail::SubsetFunctionalSearch search(g, clock);
  auto r = search.solve(Bitset::full(n), std::vector<double>(n, k));

  SolveOutcome out;
  out.problem = Problem::phi;
  out.k = k;
  // Recount the certificate from scratch; it is the authoritative lower value.
  out.lower = phi_value(g, k, r.chosen);
  out.upper = std::max(r.upper, out.lower);
  out.status = clock.exhausted() ? Status::bounded : Status::optimal;
  if (out.status == Status::optimal) out.upper = out.lower;
  r.chosen.for_each([&](std::size_t v) { out.certificate.push_back(v); });
  out.stats = clock.stats();
  return out;
}

// tau(K̄_k ∨ G) = n·k - max_S phi_k(S) for triangle-free G and integer k >= 1.
//
// The interval flips: tau_lower = nk - phi_upper, tau_upper = nk - phi_lower.
// The certificate lives on K̄_k ∨ G with the k hub vertices labelled first:
// for the phi certificate S it deletes every hub edge to a vertex outside S
// plus every edge of G[S], which is k(n-|S|) + |E(G[S])| = nk - phi_k(S)
// edges. A triangle of the join is a hub h with an edge uv of G; if both
// u,v are in S then uv is deleted, otherwise h u or h v is.
inline SolveOutcome tau_join_formula(const Graph& g, std::size_t k, const Budget& budget = {}) {
  if (k < 1) throw ParameterError("tau_join_formula: k must be a positive integer");
  if (!is_triangle_free(g)) throw PreconditionError("tau_join_formula: G must be triangle-free");
  const SolveOutcome phi = phi_max(g, static_cast<double>(k), budget);
  const double nk = static_cast<double>(g.order() * k);

  SolveOutcome out;
  out.problem = Problem::tau;
  // With integer k every phi value is an integer.
  out.lower = nk - std::floor(phi.upper + 1e-9);
  out.upper = nk - std::ceil(phi.lower - 1e-9);
  out.status = phi.status;
  out.stats = phi.stats;

  const std::size_t total = k + g.order();
  Bitset in_s(g.order());
  for (auto v : phi.certificate) in_s.set(v);
  for (Vertex h = 0; h < k; ++h)
    for (Vertex v = 0; v < g.order(); ++v)
      if (!in_s.test(v)) out.certificate.push_back(edge_index(total, Edge{h, static_cast<Vertex>(k + v)}));
  for (const Edge& e : g.edges())
    if (in_s.test(e.u) && in_s.test(e.v))
      out.certificate.push_back(
          edge_index(total, Edge{static_cast<Vertex>(k + e.u), static_cast<Vertex>(k + e.v)}));
  std::sort(out.certificate.begin(), out.certificate.end());
  return out;
}

}  // namespace tricover
