#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tricover/bitset.hpp"
#include "tricover/errors.hpp"

namespace tricover {

using Vertex = std::uint32_t;

// Rank of an unordered pair {u,v}, u < v, in lexicographic order over all
// n(n-1)/2 pairs of an n-vertex graph. Certificates are sorted lists of these.
using EdgeIndex = std::uint64_t;

using VertexSet = std::vector<Vertex>;
using EdgeSet = std::vector<EdgeIndex>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

constexpr std::uint64_t pair_count(std::uint64_t n) noexcept { return n < 2 ? 0 : n * (n - 1) / 2; }

inline EdgeIndex edge_index(std::size_t n, Edge e) {
  if (e.u > e.v) std::swap(e.u, e.v);
  if (e.u == e.v || e.v >= n) throw ParameterError("edge_index: invalid pair");
  const std::uint64_t u = e.u;
  // Pairs starting with 0..u-1 come first: sum_{i<u} (n-1-i).
  return u * (2 * n - u - 1) / 2 + (e.v - e.u - 1);
}

inline Edge edge_from_index(std::size_t n, EdgeIndex idx) {
  if (idx >= pair_count(n)) throw ParameterError("edge_from_index: index out of range");
  Vertex u = 0;
  std::uint64_t row = n - 1;
  while (idx >= row) {
    idx -= row;
    --row;
    ++u;
  }
  return Edge{u, static_cast<Vertex>(u + 1 + idx)};
}

// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
// Immutable once built; use GraphBuilder to construct or edit.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : rows_(n, Bitset(n)) {}

  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return rows_.size(); }
  std::size_t edge_count() const noexcept { return m_; }

  bool adjacent(Vertex u, Vertex v) const noexcept { return rows_[u].test(v); }
  const Bitset& neighbors(Vertex v) const noexcept { return rows_[v]; }
  std::size_t degree(Vertex v) const noexcept { return rows_[v].count(); }

  // Edges in lexicographic (= canonical index) order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < order(); ++u) {
      for (std::size_t v = rows_[u].next(u + 1); v != Bitset::npos; v = rows_[u].next(v + 1))
        out.push_back(Edge{u, static_cast<Vertex>(v)});
    }
    return out;
  }

  EdgeSet edge_indices() const {
    EdgeSet out;
    out.reserve(m_);
    for (const Edge& e : edges()) out.push_back(index_of(e));
    return out;
  }

  EdgeIndex index_of(Edge e) const { return edge_index(order(), e); }
  Edge edge_at(EdgeIndex idx) const { return edge_from_index(order(), idx); }

  bool has_isolated_vertex() const noexcept {
    return std::any_of(rows_.begin(), rows_.end(), [](const Bitset& r) { return r.none(); });
  }

  // Number of edges with both endpoints in `s`.
  std::size_t induced_edge_count(const Bitset& s) const {
    std::size_t twice = 0;
    s.for_each([&](std::size_t v) { twice += rows_[v].count_and(s); });
    return twice / 2;
  }

  bool operator==(const Graph&) const = default;

 private:
  friend class GraphBuilder;

  std::vector<Bitset> rows_;
  std::size_t m_ = 0;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : g_(n) {}
  explicit GraphBuilder(Graph g) : g_(std::move(g)) {}

  std::size_t order() const noexcept { return g_.order(); }
  std::size_t edge_count() const noexcept { return g_.m_; }
  bool has_edge(Vertex u, Vertex v) const noexcept { return g_.rows_[u].test(v); }
  const Bitset& neighbors(Vertex v) const noexcept { return g_.rows_[v]; }

  // Returns false when the edge was already present.
  bool add_edge(Vertex u, Vertex v) {
    check(u, v);
    if (g_.rows_[u].test(v)) return false;
    g_.rows_[u].set(v);
    g_.rows_[v].set(u);
    ++g_.m_;
    return true;
  }

  bool remove_edge(Vertex u, Vertex v) {
    check(u, v);
    if (!g_.rows_[u].test(v)) return false;
    g_.rows_[u].reset(v);
    g_.rows_[v].reset(u);
    --g_.m_;
    return true;
  }

  const Graph& view() const noexcept { return g_; }
  Graph build() const& { return g_; }
  Graph build() && { return std::move(g_); }

 private:
  void check(Vertex u, Vertex v) const {
    if (u == v) throw ParameterError("self-loop " + std::to_string(u));
    if (u >= g_.order() || v >= g_.order())
      throw ParameterError("vertex out of range: " + std::to_string(std::max(u, v)));
  }

  Graph g_;
};

inline Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const Edge& e : edges) b.add_edge(e.u, e.v);
  return std::move(b).build();
}

// Removes the listed canonical edge indices; indices of absent edges are ignored.
inline Graph remove_edges(const Graph& g, std::span<const EdgeIndex> indices) {
  GraphBuilder b(g);
  for (EdgeIndex idx : indices) {
    const Edge e = g.edge_at(idx);
    b.remove_edge(e.u, e.v);
  }
  return std::move(b).build();
}

inline Bitset to_bitset(std::size_t n, std::span<const Vertex> s) {
  Bitset b(n);
  for (Vertex v : s) {
    if (v >= n) throw ParameterError("vertex out of range: " + std::to_string(v));
    b.set(v);
  }
  return b;
}

inline VertexSet to_vertex_set(const Bitset& b) {
  VertexSet out;
  b.for_each([&](std::size_t v) { out.push_back(static_cast<Vertex>(v)); });
  return out;
}

}  // namespace tricover
