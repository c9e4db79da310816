#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <vector>

#include "tricover/graph.hpp"

namespace tricover {

struct Triangle {
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;

  auto operator<=>(const Triangle&) const = default;

  std::array<Edge, 3> edges() const { return {Edge{a, b}, Edge{a, c}, Edge{b, c}}; }
};

// All triangles a < b < c, in lexicographic order.
inline std::vector<Triangle> enumerate_triangles(const Graph& g) {
  std::vector<Triangle> out;
  for (Vertex a = 0; a < g.order(); ++a) {
    const Bitset& na = g.neighbors(a);
    for (std::size_t b = na.next(a + 1); b != Bitset::npos; b = na.next(b + 1)) {
      const Bitset common = na & g.neighbors(static_cast<Vertex>(b));
      for (std::size_t c = common.next(b + 1); c != Bitset::npos; c = common.next(c + 1))
        out.push_back(Triangle{a, static_cast<Vertex>(b), static_cast<Vertex>(c)});
    }
  }
  return out;
}

inline std::size_t count_triangles(const Graph& g) {
  std::size_t total = 0;
  for (Vertex a = 0; a < g.order(); ++a) {
    const Bitset& na = g.neighbors(a);
    for (std::size_t b = na.next(a + 1); b != Bitset::npos; b = na.next(b + 1)) {
      const Bitset common = na & g.neighbors(static_cast<Vertex>(b));
      for (std::size_t c = common.next(b + 1); c != Bitset::npos; c = common.next(c + 1)) ++total;
    }
  }
  return total;
}

inline bool is_triangle_free(const Graph& g) {
  for (Vertex a = 0; a < g.order(); ++a) {
    const Bitset& na = g.neighbors(a);
    for (std::size_t b = na.next(a + 1); b != Bitset::npos; b = na.next(b + 1))
      if (na.intersects(g.neighbors(static_cast<Vertex>(b)))) return false;
  }
  return true;
}

// Every edge lies in a triangle. Vacuously true for edgeless graphs.
inline bool is_triangular(const Graph& g) {
  for (Vertex a = 0; a < g.order(); ++a) {
    const Bitset& na = g.neighbors(a);
    for (std::size_t b = na.next(a + 1); b != Bitset::npos; b = na.next(b + 1))
      if (!na.intersects(g.neighbors(static_cast<Vertex>(b)))) return false;
  }
  return true;
}

}  // namespace tricover
