#pragma once

#include <cstddef>
#include <cstdint>

#include "tricover/errors.hpp"
#include "tricover/graph.hpp"
#include "tricover/rng.hpp"

namespace tricover {

// Erdos-Renyi G(n,p). Pairs are visited in lexicographic order and each
// consumes exactly one uniform01() draw, so the output depends only on
// (n, p, seed).
inline Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("gnp: p must lie in [0,1]");
  Rng rng(seed);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.uniform01() < p) b.add_edge(u, v);
  return std::move(b).build();
}

inline Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

inline Graph empty_graph(std::size_t n) { return Graph(n); }

// Parts are 0..a-1 and a..a+b-1.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  GraphBuilder g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) g.add_edge(u, static_cast<Vertex>(a + v));
  return std::move(g).build();
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw ParameterError("cycle: n must be at least 3");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return std::move(b).build();
}

inline Graph path_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

namespace detail {
inline GraphBuilder place_side_by_side(const Graph& g, const Graph& h) {
  const std::size_t off = g.order();
  GraphBuilder b(g.order() + h.order());
  for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);
  for (const Edge& e : h.edges())
    b.add_edge(static_cast<Vertex>(e.u + off), static_cast<Vertex>(e.v + off));
  return b;
}
}  // namespace detail

// H's labels are shifted by |V(G)|.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  return std::move(detail::place_side_by_side(g, h)).build();
}

// Disjoint union plus every edge between V(G) and V(H); G's labels first.
inline Graph join(const Graph& g, const Graph& h) {
  GraphBuilder b = detail::place_side_by_side(g, h);
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < h.order(); ++v) b.add_edge(u, static_cast<Vertex>(g.order() + v));
  return std::move(b).build();
}

}  // namespace tricover
