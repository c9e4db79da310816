#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <vector>

namespace tricover::detail {

// Dinic's algorithm on real capacities.
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t nodes) : adj_(nodes), level_(nodes), cursor_(nodes) {}

  void add_edge(std::size_t from, std::size_t to, double capacity) {
    if (capacity <= 0.0) return;
    adj_[from].push_back(arcs_.size());
    arcs_.push_back({to, capacity});
    adj_[to].push_back(arcs_.size());
    arcs_.push_back({from, 0.0});
  }

  double run(std::size_t source, std::size_t sink) {
    double flow = 0.0;
    while (bfs(source, sink)) {
      std::fill(cursor_.begin(), cursor_.end(), 0);
      while (true) {
        const double pushed = dfs(source, sink, std::numeric_limits<double>::infinity());
        if (pushed <= kEps) break;
        flow += pushed;
      }
    }
    return flow;
  }

 private:
  static constexpr double kEps = 1e-12;

  struct Arc {
    std::size_t to;
    double residual;
  };

  bool bfs(std::size_t source, std::size_t sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<std::size_t> queue{source};
    level_[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t v = queue[head];
      for (std::size_t id : adj_[v]) {
        const Arc& a = arcs_[id];
        if (a.residual > kEps && level_[a.to] < 0) {
          level_[a.to] = level_[v] + 1;
          queue.push_back(a.to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  double dfs(std::size_t v, std::size_t sink, double limit) {
    if (v == sink) return limit;
    for (std::size_t& i = cursor_[v]; i < adj_[v].size(); ++i) {
      const std::size_t id = adj_[v][i];
      Arc& a = arcs_[id];
      if (a.residual <= kEps || level_[a.to] != level_[v] + 1) continue;
      const double pushed = dfs(a.to, sink, std::min(limit, a.residual));
      if (pushed > kEps) {
        a.residual -= pushed;
        arcs_[id ^ 1].residual += pushed;
        return pushed;
      }
    }
    return 0.0;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace tricover::detail
