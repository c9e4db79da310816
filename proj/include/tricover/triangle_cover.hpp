#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "tricover/graph.hpp"
#include "tricover/solve_outcome.hpp"
#include "tricover/triangles.hpp"

namespace tricover {

namespace detail {

// Triangles of g expressed over local edge ids 0..m-1 (canonical order).
struct TriangleSystem {
  std::vector<Edge> edges;
  std::vector<EdgeIndex> canonical;
  std::vector<std::array<std::uint32_t, 3>> triangles;
  std::vector<std::vector<std::uint32_t>> edge_triangles;

  explicit TriangleSystem(const Graph& g) : edges(g.edges()) {
    const std::size_t m = edges.size();
    canonical.reserve(m);
    for (const Edge& e : edges) canonical.push_back(g.index_of(e));
    edge_triangles.resize(m);
    auto local = [&](Edge e) {
      const EdgeIndex idx = g.index_of(e);
      return static_cast<std::uint32_t>(std::lower_bound(canonical.begin(), canonical.end(), idx) -
                                        canonical.begin());
    };
    for (const Triangle& t : enumerate_triangles(g)) {
      const auto es = t.edges();
      const std::array<std::uint32_t, 3> ids{local(es[0]), local(es[1]), local(es[2])};
      const auto tid = static_cast<std::uint32_t>(triangles.size());
      triangles.push_back(ids);
      for (auto e : ids) edge_triangles[e].push_back(tid);
    }
  }
};

}  // namespace detail

// Greedy triangle edge cover: repeatedly take the edge in the most unhit
// triangles (ties: smallest canonical index), then drop edges in reverse
// insertion order while the rest still meets every triangle. The result is
// inclusion-minimal. Returned sorted.
inline EdgeSet greedy_minimal_triangle_cover(const Graph& g) {
  const detail::TriangleSystem sys(g);
  const std::size_t m = sys.edges.size();
  std::vector<std::uint32_t> hits(sys.triangles.size(), 0);
  std::vector<std::size_t> unhit_count(m);
  for (std::size_t e = 0; e < m; ++e) unhit_count[e] = sys.edge_triangles[e].size();
  std::size_t unhit = sys.triangles.size();
  std::vector<std::uint32_t> chosen;
  std::vector<char> in(m, 0);
  while (unhit > 0) {
    std::uint32_t pick = 0;
    for (std::uint32_t e = 1; e < m; ++e)
      if (unhit_count[e] > unhit_count[pick]) pick = e;
    chosen.push_back(pick);
    in[pick] = 1;
    for (auto t : sys.edge_triangles[pick]) {
      if (hits[t]++ == 0) {
        --unhit;
        for (auto f : sys.triangles[t]) --unhit_count[f];
      }
    }
  }
  for (std::size_t i = chosen.size(); i-- > 0;) {
    const auto e = chosen[i];
    const bool redundant = std::all_of(sys.edge_triangles[e].begin(), sys.edge_triangles[e].end(),
                                       [&](std::uint32_t t) { return hits[t] >= 2; });
    if (redundant) {
      in[e] = 0;
      for (auto t : sys.edge_triangles[e]) --hits[t];
    }
  }
  EdgeSet out;
  for (std::size_t e = 0; e < m; ++e)
    if (in[e]) out.push_back(sys.canonical[e]);
  return out;
}

namespace detail {

// Minimum triangle edge cover (minimum hitting set of the edge triples of
// all triangles) by branch and bound.
//
// Each edge is free, in (deleted) or out (kept). Branching is on the free
// edge lying in the most unhit triangles, in-branch first. A triangle with
// two kept edges forces its third edge in.
//
// Lower bounds at a node, with D the deleted edges:
//  * packing: unhit triangles whose free edges are pairwise disjoint each
//    need their own deletion, so |D| + #packed;
//  * Mantel: the kept graph is a triangle-free subgraph of E \ D, and a
//    triangle-free graph on c vertices has at most floor(c^2/4) edges, so
//    per connected component of E \ D the kept edges are bounded; the
//    final deletion count is at least m minus that total.
class TriangleCoverSearch {
 public:
  TriangleCoverSearch(const Graph& g, BudgetClock& clock)
      : g_(g), sys_(g), clock_(clock), m_(sys_.edges.size()) {
    state_.assign(m_, 0);
    hit_.assign(sys_.triangles.size(), 0);
    kept_.assign(sys_.triangles.size(), 0);
    unhit_ = sys_.triangles.size();
    stamp_.assign(m_, 0);
    parent_.resize(g.order());
    comp_size_.resize(g.order());
  }

  SolveOutcome run() {
    SolveOutcome out;
    out.problem = Problem::tau;
    const EdgeSet greedy = greedy_minimal_triangle_cover(g_);
    best_ = greedy.size();
    best_set_ = greedy;
    if (unhit_ > 0) search();
    out.upper = static_cast<double>(best_);
    out.lower = static_cast<double>(std::min(best_, abandoned_lower_));
    out.status = clock_.exhausted() ? Status::bounded : Status::optimal;
    out.certificate = best_set_;
    out.stats = clock_.stats();
    return out;
  }

 private:
  static constexpr std::int8_t kFree = 0;
  static constexpr std::int8_t kIn = 1;
  static constexpr std::int8_t kOut = -1;

  void assign(std::uint32_t e, std::int8_t value) {
    state_[e] = value;
    trail_.push_back(e);
    if (value == kIn) {
      ++in_count_;
      for (auto t : sys_.edge_triangles[e])
        if (hit_[t]++ == 0) --unhit_;
    } else {
      for (auto t : sys_.edge_triangles[e]) ++kept_[t];
    }
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const auto e = trail_.back();
      trail_.pop_back();
      if (state_[e] == kIn) {
        --in_count_;
        for (auto t : sys_.edge_triangles[e])
          if (--hit_[t] == 0) ++unhit_;
      } else {
        for (auto t : sys_.edge_triangles[e]) --kept_[t];
      }
      state_[e] = kFree;
    }
  }

  // Forces the last free edge of every unhit triangle with two kept edges.
  bool propagate(std::size_t from) {
    for (std::size_t i = from; i < trail_.size(); ++i) {
      const auto e = trail_[i];
      if (state_[e] != kOut) continue;
      for (auto t : sys_.edge_triangles[e]) {
        if (hit_[t] != 0) continue;
        if (kept_[t] == 3) return false;
        if (kept_[t] == 2) {
          for (auto f : sys_.triangles[t])
            if (state_[f] == kFree) {
              assign(f, kIn);
              break;
            }
        }
      }
    }
    return true;
  }

  std::size_t packing_bound() {
    ++epoch_;
    std::size_t packed = 0;
    for (int pass = 2; pass <= 3; ++pass) {
      for (std::size_t t = 0; t < sys_.triangles.size(); ++t) {
        if (hit_[t] != 0 || 3 - static_cast<int>(kept_[t]) != pass) continue;
        bool clash = false;
        for (auto f : sys_.triangles[t])
          if (state_[f] == kFree && stamp_[f] == epoch_) clash = true;
        if (clash) continue;
        for (auto f : sys_.triangles[t])
          if (state_[f] == kFree) stamp_[f] = epoch_;
        ++packed;
      }
    }
    return packed;
  }

  Vertex find(Vertex v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  std::size_t mantel_bound() {
    const std::size_t n = g_.order();
    for (Vertex v = 0; v < n; ++v) {
      parent_[v] = v;
      comp_size_[v] = 0;
    }
    std::vector<char> touched(n, 0);
    std::size_t remaining = 0;
    for (std::size_t e = 0; e < m_; ++e) {
      if (state_[e] == kIn) continue;
      ++remaining;
      const Edge& ed = sys_.edges[e];
      touched[ed.u] = touched[ed.v] = 1;
      const Vertex a = find(ed.u);
      const Vertex b = find(ed.v);
      if (a != b) parent_[a] = b;
    }
    for (Vertex v = 0; v < n; ++v)
      if (touched[v]) ++comp_size_[find(v)];
    std::size_t keepable = 0;
    for (Vertex v = 0; v < n; ++v) keepable += comp_size_[v] * comp_size_[v] / 4;
    keepable = std::min(keepable, remaining);
    return m_ - keepable;
  }

  std::size_t lower_bound() { return std::max(in_count_ + packing_bound(), mantel_bound()); }

  std::uint32_t branch_edge() {
    std::vector<std::uint32_t>& score = score_;
    score.assign(m_, 0);
    for (std::size_t t = 0; t < sys_.triangles.size(); ++t) {
      if (hit_[t] != 0) continue;
      for (auto f : sys_.triangles[t])
        if (state_[f] == kFree) ++score[f];
    }
    std::uint32_t pick = 0;
    for (std::uint32_t e = 1; e < m_; ++e)
      if (score[e] > score[pick]) pick = e;
    return pick;
  }

  void search() {
    if (unhit_ == 0) {
      if (in_count_ < best_) {
        best_ = in_count_;
        best_set_.clear();
        for (std::size_t e = 0; e < m_; ++e)
          if (state_[e] == kIn) best_set_.push_back(sys_.canonical[e]);
      }
      return;
    }
    const std::size_t bound = lower_bound();
    if (bound >= best_) return;
    if (!clock_.tick()) {
      abandoned_lower_ = std::min(abandoned_lower_, bound);
      return;
    }
    const std::uint32_t e = branch_edge();
    const std::size_t mark = trail_.size();

    assign(e, kIn);
    search();
    undo(mark);
    if (clock_.exhausted()) {
      abandoned_lower_ = std::min(abandoned_lower_, bound);
      return;
    }

    assign(e, kOut);
    if (propagate(mark)) search();
    undo(mark);
  }

  const Graph& g_;
  TriangleSystem sys_;
  BudgetClock& clock_;
  std::size_t m_;

  std::vector<std::int8_t> state_;
  std::vector<std::uint32_t> hit_;
  std::vector<std::uint32_t> kept_;
  std::vector<std::uint32_t> trail_;
  std::size_t unhit_ = 0;
  std::size_t in_count_ = 0;

  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
  std::vector<Vertex> parent_;
  std::vector<std::size_t> comp_size_;
  std::vector<std::uint32_t> score_;

  std::size_t best_ = 0;
  EdgeSet best_set_;
  std::size_t abandoned_lower_ = std::numeric_limits<std::size_t>::max();
};

}  // namespace detail

}  // namespace tricover
