#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>

#include "tricover/graph.hpp"
#include "tricover/solve_outcome.hpp"
#include "tricover/subset_functional.hpp"
#include "tricover/triangles.hpp"

// Polynomial-time feasibility checks, written directly against the
// definitions and independent of the solvers.
namespace tricover {

namespace detail {
inline bool edges_present(const Graph& g, std::span<const EdgeIndex> edges) {
  for (EdgeIndex idx : edges) {
    if (idx >= pair_count(g.order())) return false;
    const Edge e = g.edge_at(idx);
    if (!g.adjacent(e.u, e.v)) return false;
  }
  return true;
}
}  // namespace detail

// Deleting `edges` leaves G triangle-free.
inline bool is_triangle_cover(const Graph& g, std::span<const EdgeIndex> edges) {
  if (!detail::edges_present(g, edges)) return false;
  return is_triangle_free(remove_edges(g, edges));
}

// No triangle of G contains two of `edges`.
inline bool is_triangle_independent(const Graph& g, std::span<const EdgeIndex> edges) {
  if (!detail::edges_present(g, edges)) return false;
  for (const Triangle& t : enumerate_triangles(g)) {
    int inside = 0;
    for (const Edge& e : t.edges())
      if (std::binary_search(edges.begin(), edges.end(), g.index_of(e))) ++inside;
    if (inside > 1) return false;
  }
  return true;
}

inline bool is_independent_set(const Graph& g, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.order()) return false;
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j] || g.adjacent(vertices[i], vertices[j])) return false;
  }
  return true;
}

// Checks the certificate is feasible and attains the bound it is reported
// for: upper for TAU, lower for the maximisation problems.
inline bool certificate_valid(const Graph& g, const SolveOutcome& out, double tol = 1e-9) {
  if (!std::is_sorted(out.certificate.begin(), out.certificate.end())) return false;
  if (std::adjacent_find(out.certificate.begin(), out.certificate.end()) != out.certificate.end()) return false;
  if (out.lower > out.upper + tol) return false;
  if (out.status == Status::optimal && std::abs(out.lower - out.upper) > tol) return false;
  const auto size = static_cast<double>(out.certificate.size());
  switch (out.problem) {
    case Problem::tau:
      return is_triangle_cover(g, out.certificate) && size == out.upper;
    case Problem::alpha1:
      return is_triangle_independent(g, out.certificate) && size == out.lower;
    case Problem::alpha:
    case Problem::phi: {
      VertexSet vs;
      for (auto v : out.certificate) {
        if (v >= g.order()) return false;
        vs.push_back(static_cast<Vertex>(v));
      }
      if (out.problem == Problem::alpha) return is_independent_set(g, vs) && size == out.lower;
      return std::abs(phi_value(g, out.k, to_bitset(g.order(), vs)) - out.lower) <= tol;
    }
  }
  return false;
}

}  // namespace tricover
