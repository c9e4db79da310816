#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <vector>

#include "tricover/bitset.hpp"
#include "tricover/detail/max_flow.hpp"
#include "tricover/graph.hpp"
#include "tricover/solve_outcome.hpp"

namespace tricover {

// phi_k(S) = k|S| - |E(G[S])|.
inline double phi_value(const Graph& g, double k, const Bitset& s) {
  return k * static_cast<double>(s.count()) - static_cast<double>(g.induced_edge_count(s));
}

namespace detail {

// Exact maximisation of phi_k by branch and reduce.
//
// Subproblems are stated over an undecided vertex set U with per-vertex
// gains w(v) = k - |N(v) ∩ S_in|: maximise sum_{v in T} w(v) - |E(G[T])|
// over T ⊆ U. At the root w ≡ k.
//
// Reductions (each keeps at least one optimum):
//  * w(v) <= 0: dropping v from any T changes the value by
//    -(w(v) - |N(v) ∩ T|) >= 0, so exclude v.
//  * w(v) >= deg_U(v): adding v to any T changes the value by
//    w(v) - |N(v) ∩ T| >= 0, so include v.
// Disconnected U is solved one component at a time.
//
// Upper bounds for T ⊆ U:
//  * sum_{v in U} max(0, w(v)): every vertex contributes at most its gain,
//    and edges only subtract. Plus the value of S_in this is
//    phi_k(S_in) + sum_{v in U} max(0, k - |N(v) ∩ S_in|).
//  * the exact optimum on a BFS spanning forest of G[U], by tree DP. Deleting
//    edges never lowers any T's value, so this is also admissible, and it
//    never exceeds the first bound.
//  * the LP relaxation max sum w x - sum_{uv} max(0, x_u + x_v - 1) over
//    x in [0,1]^U. It equals half the optimum of the same objective on the
//    bipartite double cover (one copy a_v, b_v of each vertex, edges a_u b_v),
//    and flipping the b side makes that a minimum cut. See lp_bound().
class SubsetFunctionalSearch {
 public:
  struct Result {
    double lower = 0.0;
    double upper = 0.0;
    Bitset chosen;
  };

  SubsetFunctionalSearch(const Graph& g, BudgetClock& clock) : g_(g), clock_(clock), n_(g.order()) {}

  Result solve(Bitset undecided, std::vector<double> gain) {
    Result total{0.0, 0.0, Bitset(n_)};
    reduce(undecided, gain, total.lower, total.chosen);
    total.upper = total.lower;
    for (Bitset& comp : components(undecided)) {
      Result part = solve_component(comp, gain);
      total.lower += part.lower;
      total.upper += part.upper;
      total.chosen |= part.chosen;
    }
    return total;
  }

  // Sum of positive gains over U.
  static double gain_bound(const Bitset& u, const std::vector<double>& gain) {
    double s = 0.0;
    u.for_each([&](std::size_t v) { s += std::max(0.0, gain[v]); });
    return s;
  }

  double forest_bound(const Bitset& u, const std::vector<double>& gain) const {
    std::vector<std::size_t> queue;
    std::vector<std::size_t> parent(n_, Bitset::npos);
    std::vector<double> in(n_, 0.0);
    std::vector<double> out(n_, 0.0);
    Bitset seen(n_);
    double total = 0.0;
    for (std::size_t root = u.first(); root != Bitset::npos; root = u.next(root + 1)) {
      if (seen.test(root)) continue;
      queue.clear();
      queue.push_back(root);
      seen.set(root);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::size_t v = queue[head];
        const Bitset fresh = (g_.neighbors(static_cast<Vertex>(v)) & u) - seen;
        fresh.for_each([&](std::size_t c) {
          seen.set(c);
          parent[c] = v;
          queue.push_back(c);
        });
      }
      for (std::size_t v : queue) {
        in[v] = gain[v];
        out[v] = 0.0;
      }
      for (std::size_t i = queue.size(); i-- > 1;) {
        const std::size_t c = queue[i];
        const std::size_t p = parent[c];
        in[p] += std::max(out[c], in[c] - 1.0);
        out[p] += std::max(out[c], in[c]);
      }
      total += std::max(in[root], out[root]);
    }
    return total;
  }

 private:
  static constexpr double kSlack = 1e-12;

  struct Frame {
    double best = -std::numeric_limits<double>::infinity();
    Bitset best_set;
    double abandoned = -std::numeric_limits<double>::infinity();
  };

  void reduce(Bitset& u, std::vector<double>& gain, double& acc, Bitset& chosen) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t v = u.first(); v != Bitset::npos; v = u.next(v + 1)) {
        if (gain[v] <= 0.0) {
          u.reset(v);
          changed = true;
          continue;
        }
        const Bitset& nv = g_.neighbors(static_cast<Vertex>(v));
        const auto deg = static_cast<double>(nv.count_and(u));
        if (gain[v] >= deg) {
          acc += gain[v];
          chosen.set(v);
          u.reset(v);
          (nv & u).for_each([&](std::size_t w) { gain[w] -= 1.0; });
          changed = true;
        }
      }
    }
  }

  std::vector<Bitset> components(const Bitset& u) const {
    std::vector<Bitset> out;
    Bitset left = u;
    while (left.any()) {
      Bitset comp(n_);
      Bitset frontier(n_);
      frontier.set(left.first());
      while (frontier.any()) {
        comp |= frontier;
        Bitset next(n_);
        frontier.for_each([&](std::size_t v) { next |= g_.neighbors(static_cast<Vertex>(v)); });
        next &= left;
        next -= comp;
        frontier = std::move(next);
      }
      left -= comp;
      out.push_back(std::move(comp));
    }
    return out;
  }

  // Double-cover objective F(a,b) = sum w(a+b) - sum_{uv} (a_u b_v + a_v b_u).
  // With b = 1 - c, maximising F is minimising
  //   Q = sum_v (-w_v a_v + w_v c_v) + sum_{uv} [a_u (1 - c_v) + a_v (1 - c_u)]
  // and F_max = sum w - Q_min. Q is a cut function: source side means label
  // 1, a_v gets a source arc of capacity w_v (constant -w_v), c_v a sink arc
  // of capacity w_v, and each edge gives arcs a_u -> c_v, a_v -> c_u of
  // capacity 1. Gains are positive on reduced subproblems.
  double lp_bound(const Bitset& u, const std::vector<double>& gain) const {
    std::vector<std::size_t> local(n_, 0);
    std::size_t count = 0;
    u.for_each([&](std::size_t v) { local[v] = count++; });
    const std::size_t source = 2 * count;
    const std::size_t sink = source + 1;
    MaxFlow flow(2 * count + 2);
    double constant = 0.0;
    double total_gain = 0.0;
    u.for_each([&](std::size_t v) {
      const double w = gain[v];
      total_gain += w;
      const std::size_t a = local[v];
      const std::size_t c = count + local[v];
      if (w >= 0.0) {
        flow.add_edge(source, a, w);
        constant -= w;
        flow.add_edge(c, sink, w);
      } else {
        flow.add_edge(a, sink, -w);
        flow.add_edge(source, c, -w);
        constant += w;
      }
      (g_.neighbors(static_cast<Vertex>(v)) & u).for_each([&](std::size_t x) {
        flow.add_edge(a, count + local[x], 1.0);
      });
    });
    const double q_min = constant + flow.run(source, sink);
    return 0.5 * (total_gain - q_min) + 1e-9;
  }

  double upper_bound(const Bitset& u, const std::vector<double>& gain, double target) const {
    const double cheap = std::min(gain_bound(u, gain), forest_bound(u, gain));
    if (cheap <= target + kSlack) return cheap;
    return std::min(cheap, lp_bound(u, gain));
  }

  // Marginal-gain greedy followed by dropping vertices that became negative.
  void greedy(const Bitset& comp, const std::vector<double>& gain, Frame& frame) const {
    std::vector<double> marginal = gain;
    Bitset t(n_);
    while (true) {
      std::size_t pick = Bitset::npos;
      comp.for_each([&](std::size_t v) {
        if (t.test(v) || marginal[v] <= kSlack) return;
        if (pick == Bitset::npos || marginal[v] > marginal[pick]) pick = v;
      });
      if (pick == Bitset::npos) break;
      t.set(pick);
      g_.neighbors(static_cast<Vertex>(pick)).for_each([&](std::size_t w) { marginal[w] -= 1.0; });
    }
    bool dropped = true;
    while (dropped) {
      dropped = false;
      for (std::size_t v = t.first(); v != Bitset::npos; v = t.next(v + 1)) {
        if (gain[v] < static_cast<double>(g_.neighbors(static_cast<Vertex>(v)).count_and(t))) {
          t.reset(v);
          dropped = true;
        }
      }
    }
    double value = 0.0;
    t.for_each([&](std::size_t v) {
      value += gain[v] - 0.5 * static_cast<double>(g_.neighbors(static_cast<Vertex>(v)).count_and(t));
    });
    frame.best = value;
    frame.best_set = std::move(t);
  }

  Result solve_component(const Bitset& comp, const std::vector<double>& gain) {
    Frame frame;
    greedy(comp, gain, frame);
    if (frame.best < 0.0) {
      frame.best = 0.0;
      frame.best_set = Bitset(n_);
    }
    explore(frame, comp, gain, 0.0, Bitset(n_));
    return {frame.best, std::max(frame.best, frame.abandoned), frame.best_set};
  }

  void explore(Frame& frame, Bitset u, std::vector<double> gain, double acc, Bitset chosen) {
    reduce(u, gain, acc, chosen);
    if (u.none()) {
      if (acc > frame.best) {
        frame.best = acc;
        frame.best_set = std::move(chosen);
      }
      return;
    }
    const double bound = acc + upper_bound(u, gain, frame.best - acc);
    if (bound <= frame.best + kSlack) return;
    if (!clock_.tick()) {
      frame.abandoned = std::max(frame.abandoned, bound);
      return;
    }

    std::vector<Bitset> comps = components(u);
    if (comps.size() > 1) {
      double lo = acc;
      double hi = acc;
      for (Bitset& c : comps) {
        Result part = solve_component(c, gain);
        lo += part.lower;
        hi += part.upper;
        chosen |= part.chosen;
      }
      if (lo > frame.best) {
        frame.best = lo;
        frame.best_set = std::move(chosen);
      }
      if (hi > lo) frame.abandoned = std::max(frame.abandoned, hi);
      return;
    }

    std::size_t pick = Bitset::npos;
    std::size_t pick_deg = 0;
    u.for_each([&](std::size_t v) {
      const std::size_t d = g_.neighbors(static_cast<Vertex>(v)).count_and(u);
      if (pick == Bitset::npos || d > pick_deg) {
        pick = v;
        pick_deg = d;
      }
    });

    u.reset(pick);
    {
      std::vector<double> with = gain;
      (g_.neighbors(static_cast<Vertex>(pick)) & u).for_each([&](std::size_t w) { with[w] -= 1.0; });
      Bitset chosen_with = chosen;
      chosen_with.set(pick);
      explore(frame, u, std::move(with), acc + gain[pick], std::move(chosen_with));
    }
    if (clock_.exhausted()) {
      frame.abandoned = std::max(frame.abandoned, bound);
      return;
    }
    explore(frame, std::move(u), std::move(gain), acc, std::move(chosen));
  }

  const Graph& g_;
  BudgetClock& clock_;
  std::size_t n_;
};

}  // namespace detail

}  // namespace tricover
