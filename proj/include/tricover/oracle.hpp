#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "tricover/errors.hpp"
#include "tricover/graph.hpp"
#include "tricover/solve_outcome.hpp"
#include "tricover/triangles.hpp"

namespace tricover {

namespace detail {

// True iff the sorted element list of `a` precedes that of `b`
// lexicographically (a proper prefix comes first).
constexpr bool lex_less(std::uint64_t a, std::uint64_t b) noexcept {
  if (a == b) return false;
  const std::uint64_t low = (a ^ b) & (~(a ^ b) + 1);
  const std::uint64_t above = ~((low << 1) - 1);
  if (a & low) return (b & above) != 0;
  return (a & above) == 0;
}

}  // namespace detail

// Exhaustive reference solver. Enumerates all 2^m edge subsets (TAU, ALPHA1)
// or 2^n vertex subsets (ALPHA, PHI) and returns the lexicographically first
// optimum. Refuses with OracleOverflow when the space exceeds `limit`.
inline SolveOutcome oracle_bruteforce(Problem problem, const Graph& g, std::uint64_t limit, double k = 1.0) {
  const bool edge_problem = problem == Problem::tau || problem == Problem::alpha1;
  const std::size_t bits = edge_problem ? g.edge_count() : g.order();
  if (bits > 62 || (std::uint64_t{1} << bits) > limit)
    throw OracleOverflow("oracle: 2^" + std::to_string(bits) + " subsets exceed the enumeration limit");
  if (problem == Problem::phi && !(k > 0.0)) throw ParameterError("oracle: k must be positive");

  const std::vector<Edge> edges = g.edges();
  std::vector<std::uint64_t> tri_masks;
  std::vector<std::uint64_t> adj(g.order(), 0);
  if (edge_problem) {
    auto local = [&](Edge e) {
      return static_cast<std::uint64_t>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
    };
    for (const Triangle& t : enumerate_triangles(g)) {
      std::uint64_t m = 0;
      for (const Edge& e : t.edges()) m |= std::uint64_t{1} << local(e);
      tri_masks.push_back(m);
    }
  } else {
    for (const Edge& e : edges) {
      adj[e.u] |= std::uint64_t{1} << e.v;
      adj[e.v] |= std::uint64_t{1} << e.u;
    }
  }

  const std::uint64_t end = std::uint64_t{1} << bits;
  std::uint64_t best_mask = 0;
  double best = 0.0;
  bool have = false;
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    const int size = std::popcount(mask);
    double value = 0.0;
    bool feasible = true;
    switch (problem) {
      case Problem::tau:
        if (have && size > best) continue;
        for (auto t : tri_masks)
          if ((mask & t) == 0) {
            feasible = false;
            break;
          }
        value = size;
        break;
      case Problem::alpha1:
        if (have && size < best) continue;
        for (auto t : tri_masks) {
          const std::uint64_t x = mask & t;
          if (x & (x - 1)) {
            feasible = false;
            break;
          }
        }
        value = size;
        break;
      case Problem::alpha:
        if (have && size < best) continue;
        for (std::uint64_t rest = mask; rest; rest &= rest - 1)
          if (adj[std::countr_zero(rest)] & mask) {
            feasible = false;
            break;
          }
        value = size;
        break;
      case Problem::phi: {
        int twice = 0;
        for (std::uint64_t rest = mask; rest; rest &= rest - 1) twice += std::popcount(adj[std::countr_zero(rest)] & mask);
        value = k * size - twice / 2;
        break;
      }
    }
    if (!feasible) continue;
    const bool better = !have || (problem == Problem::tau ? value < best : value > best + 1e-12);
    const bool tie = have && std::abs(value - best) <= 1e-12;
    if (better || (tie && detail::lex_less(mask, best_mask))) {
      best = value;
      best_mask = mask;
      have = true;
    }
  }

  SolveOutcome out;
  out.problem = problem;
  out.k = problem == Problem::phi ? k : 0.0;
  out.lower = out.upper = best;
  out.status = Status::optimal;
  for (std::uint64_t rest = best_mask; rest; rest &= rest - 1) {
    const auto i = static_cast<std::size_t>(std::countr_zero(rest));
    out.certificate.push_back(edge_problem ? g.index_of(edges[i]) : i);
  }
  out.stats.nodes = end;
  return out;
}

}  // namespace tricover
