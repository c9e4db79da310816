#include <gtest/gtest.h>

#include "support.hpp"
#include "tricover/generators.hpp"
#include "tricover/triangles.hpp"

using namespace tricover;

TEST(Triangles, CountsOnStandardGraphs) {
  EXPECT_EQ(enumerate_triangles(complete_graph(4)).size(), 4u);
  EXPECT_EQ(enumerate_triangles(complete_graph(5)).size(), 10u);
  EXPECT_EQ(count_triangles(complete_bipartite(3, 3)), 0u);
  EXPECT_TRUE(is_triangle_free(cycle_graph(5)));
  EXPECT_FALSE(is_triangle_free(complete_graph(3)));
}

TEST(Triangles, SortedDistinctAndPresent) {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const Graph g = tricover::testing::random_graph(rng, 0, 14);
    const auto ts = enumerate_triangles(g);
    std::size_t brute = 0;
    for (Vertex a = 0; a < g.order(); ++a)
      for (Vertex b = a + 1; b < g.order(); ++b)
        for (Vertex c = b + 1; c < g.order(); ++c)
          if (g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c)) ++brute;
    ASSERT_EQ(ts.size(), brute);
    ASSERT_EQ(count_triangles(g), brute);
    for (std::size_t j = 0; j < ts.size(); ++j) {
      const Triangle& t = ts[j];
      ASSERT_LT(t.a, t.b);
      ASSERT_LT(t.b, t.c);
      ASSERT_TRUE(g.adjacent(t.a, t.b) && g.adjacent(t.a, t.c) && g.adjacent(t.b, t.c));
      if (j > 0) {
        const Triangle& s = ts[j - 1];
        ASSERT_TRUE(std::tie(s.a, s.b, s.c) < std::tie(t.a, t.b, t.c));
      }
    }
  }
}

TEST(Triangular, Examples) {
  EXPECT_TRUE(is_triangular(complete_graph(3)));
  EXPECT_FALSE(is_triangular(cycle_graph(5)));
  EXPECT_TRUE(is_triangular(empty_graph(4)));
  const Graph wheel = join(empty_graph(1), cycle_graph(5));
  // Each rim edge i,i+1 lies in the hub triangle; each spoke lies in two.
  for (const Edge& e : wheel.edges()) {
    bool found = false;
    for (Vertex w = 0; w < wheel.order(); ++w)
      if (wheel.adjacent(e.u, w) && wheel.adjacent(e.v, w)) found = true;
    EXPECT_TRUE(found);
  }
  EXPECT_TRUE(is_triangular(wheel));
}
