#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "tricover/generators.hpp"
#include "tricover/graph.hpp"
#include "tricover/rng.hpp"

namespace tricover::testing {

inline Graph make_graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

// n and p drawn from the stream, then G(n, p).
inline Graph random_graph(Rng& rng, std::size_t n_min, std::size_t n_max) {
  const auto n = static_cast<std::size_t>(n_min + rng.below(n_max - n_min + 1));
  const double p = rng.uniform01();
  return gnp(n, p, rng.next());
}

}  // namespace tricover::testing
