#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tricover/graph.hpp"
#include "tricover/rng.hpp"
#include "tricover/solvers.hpp"

namespace tricover {

struct LowAlphaResult {
  Graph graph;
  SolveOutcome alpha;            // exact (or certified interval) independence number
  std::size_t effort = 0;        // local-search iterations run
  std::size_t accepted = 0;      // moves kept
  std::size_t surrogate = 0;     // best greedy independent set at the end
};

namespace detail {

// Adds every pair in `order` that closes no triangle.
inline void saturate(GraphBuilder& b, const std::vector<Edge>& order) {
  for (const Edge& e : order) {
    if (b.has_edge(e.u, e.v)) continue;
    if (!b.neighbors(e.u).intersects(b.neighbors(e.v))) b.add_edge(e.u, e.v);
  }
}

// Largest independent set over `runs` randomised min-degree greedy passes.
// It only estimates alpha from below; the search uses it as a score.
inline Bitset greedy_independent(const Graph& g, Rng& rng, int runs) {
  const std::size_t n = g.order();
  Bitset best(n);
  std::size_t best_size = 0;
  std::vector<std::size_t> ties;
  for (int r = 0; r < runs; ++r) {
    Bitset left = Bitset::full(n);
    Bitset chosen(n);
    std::size_t size = 0;
    while (left.any()) {
      std::size_t low = Bitset::npos;
      ties.clear();
      left.for_each([&](std::size_t v) {
        const std::size_t d = g.neighbors(static_cast<Vertex>(v)).count_and(left);
        if (d < low) {
          low = d;
          ties.clear();
        }
        if (d == low) ties.push_back(v);
      });
      const std::size_t pick = ties[static_cast<std::size_t>(rng.below(ties.size()))];
      chosen.set(pick);
      ++size;
      left -= g.neighbors(static_cast<Vertex>(pick));
      left.reset(pick);
    }
    if (size > best_size) {
      best_size = size;
      best = std::move(chosen);
    }
  }
  return best;
}

}  // namespace detail

// Seeded search for an n-vertex triangle-free graph with small independence
// number.
//
// 1. Random triangle-free process: visit all pairs in a random order and
//    add each one that closes no triangle (the result is maximal).
// 2. `effort` rounds of local search: take the largest independent set the
//    greedy score finds, join two of its vertices, break each triangle this
//    creates by deleting one of the two old edges at random, re-saturate,
//    and keep the move unless the score got worse.
// 3. The independence number of the final graph is computed exactly.
inline LowAlphaResult low_alpha_trifree(std::size_t n, std::size_t effort, std::uint64_t seed,
                                        const Budget& alpha_budget = {}) {
  constexpr int kScoreRuns = 4;
  Rng rng(seed);
  std::vector<Edge> pairs;
  pairs.reserve(pair_count(n));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back(Edge{u, v});

  GraphBuilder current(n);
  rng.shuffle(std::span<Edge>(pairs));
  detail::saturate(current, pairs);
  Bitset witness = detail::greedy_independent(current.view(), rng, kScoreRuns);
  std::size_t score = witness.count();

  LowAlphaResult result;
  for (std::size_t it = 0; it < effort && n >= 3; ++it) {
    const std::vector<std::size_t> members = witness.to_vector();
    if (members.size() < 2) break;
    const std::size_t i = static_cast<std::size_t>(rng.below(members.size()));
    std::size_t j = static_cast<std::size_t>(rng.below(members.size() - 1));
    if (j >= i) ++j;
    const auto u = static_cast<Vertex>(members[i]);
    const auto v = static_cast<Vertex>(members[j]);

    GraphBuilder trial = current;
    const Bitset common = trial.neighbors(u) & trial.neighbors(v);
    common.for_each([&](std::size_t w) {
      if (rng.bernoulli(0.5))
        trial.remove_edge(u, static_cast<Vertex>(w));
      else
        trial.remove_edge(v, static_cast<Vertex>(w));
    });
    trial.add_edge(u, v);
    rng.shuffle(std::span<Edge>(pairs));
    detail::saturate(trial, pairs);

    Bitset trial_witness = detail::greedy_independent(trial.view(), rng, kScoreRuns);
    if (trial_witness.count() <= score) {
      current = std::move(trial);
      witness = std::move(trial_witness);
      score = witness.count();
      ++result.accepted;
    }
    ++result.effort;
  }

  result.graph = std::move(current).build();
  result.surrogate = score;
  result.alpha = alpha_exact(result.graph, alpha_budget);
  return result;
}

}  // namespace tricover
