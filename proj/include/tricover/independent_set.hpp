#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "tricover/bitset.hpp"
#include "tricover/graph.hpp"
#include "tricover/solve_outcome.hpp"

namespace tricover {

struct IndependentSetResult {
  Bitset set;
  std::size_t lower = 0;
  std::size_t upper = 0;
  bool optimal = true;
  SolveStats stats;
};

namespace detail {

// Maximum independent set as maximum clique in the complement, searched in
// the style of Tomita's MCQ on bitsets. The colouring bound of the
// complement is a greedy clique cover of G: an independent set meets each
// clique at most once, so |I| + #cliques(P) bounds every extension of I
// inside candidate set P.
class IndependentSetSearch {
 public:
  IndependentSetSearch(const Graph& g, BudgetClock& clock) : g_(g), clock_(clock), n_(g.order()) {}

  IndependentSetResult run() {
    IndependentSetResult result;
    best_ = Bitset(n_);
    current_ = Bitset(n_);
    seed_with_greedy();
    if (n_ > 0) expand(Bitset::full(n_), 0);
    result.set = best_;
    result.lower = best_size_;
    result.upper = std::max(best_size_, abandoned_upper_);
    result.optimal = !clock_.exhausted();
    result.stats = clock_.stats();
    return result;
  }

 private:
  // Min-degree greedy: a cheap starting incumbent.
  void seed_with_greedy() {
    Bitset left = Bitset::full(n_);
    while (left.any()) {
      std::size_t pick = Bitset::npos;
      std::size_t pick_deg = 0;
      left.for_each([&](std::size_t v) {
        const std::size_t d = g_.neighbors(static_cast<Vertex>(v)).count_and(left);
        if (pick == Bitset::npos || d < pick_deg) {
          pick = v;
          pick_deg = d;
        }
      });
      best_.set(pick);
      ++best_size_;
      left -= g_.neighbors(static_cast<Vertex>(pick));
      left.reset(pick);
    }
  }

  void expand(Bitset candidates, std::size_t depth) {
    // Greedy clique cover; vertices listed class by class with class number.
    std::vector<std::pair<std::size_t, std::size_t>> order;
    {
      Bitset uncovered = candidates;
      std::size_t colour = 0;
      while (uncovered.any()) {
        ++colour;
        Bitset open = uncovered;
        while (open.any()) {
          const std::size_t v = open.first();
          open &= g_.neighbors(static_cast<Vertex>(v));
          uncovered.reset(v);
          order.emplace_back(v, colour);
        }
      }
    }
    if (!clock_.tick()) {
      if (!order.empty()) abandoned_upper_ = std::max(abandoned_upper_, depth + order.back().second);
      return;
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      const auto [v, colour] = order[i];
      if (depth + colour <= best_size_) return;
      if (clock_.exhausted()) {
        abandoned_upper_ = std::max(abandoned_upper_, depth + colour);
        return;
      }
      current_.set(v);
      Bitset next = candidates - g_.neighbors(static_cast<Vertex>(v));
      next.reset(v);
      if (next.none()) {
        if (depth + 1 > best_size_) {
          best_ = current_;
          best_size_ = depth + 1;
        }
      } else {
        expand(std::move(next), depth + 1);
      }
      current_.reset(v);
      candidates.reset(v);
    }
  }

  const Graph& g_;
  BudgetClock& clock_;
  std::size_t n_;
  Bitset current_;
  Bitset best_;
  std::size_t best_size_ = 0;
  std::size_t abandoned_upper_ = 0;
};

}  // namespace detail

// Relabels vertices by non-decreasing degree (ties by label) before
// searching, which keeps the clique cover tight near the root.
inline IndependentSetResult max_independent_set(const Graph& g, const Budget& budget) {
  const std::size_t n = g.order();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  std::vector<Vertex> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = static_cast<Vertex>(i);

  GraphBuilder relabeled(n);
  for (const Edge& e : g.edges()) relabeled.add_edge(position[e.u], position[e.v]);
  const Graph h = std::move(relabeled).build();

  BudgetClock clock(budget);
  IndependentSetResult r = detail::IndependentSetSearch(h, clock).run();
  Bitset mapped(n);
  r.set.for_each([&](std::size_t i) { mapped.set(order[i]); });
  r.set = std::move(mapped);
  return r;
}

}  // namespace tricover
