#include <gtest/gtest.h>

#include "support.hpp"
#include "tricover/oracle.hpp"
#include "tricover/verify.hpp"

using namespace tricover;

TEST(InequalitySuite, TightExamples) {
  const auto k6 = inequality_suite(complete_graph(6));
  EXPECT_EQ(k6.verdict, Verdict::pass);
  EXPECT_EQ(k6.measured["alpha1"]["lower"], 3.0);
  EXPECT_EQ(k6.measured["tau"]["lower"], 6.0);
  EXPECT_EQ(oracle_bruteforce(Problem::alpha1, complete_graph(6), 1 << 16).value(), 3.0);
  EXPECT_EQ(oracle_bruteforce(Problem::tau, complete_graph(6), 1 << 16).value(), 6.0);

  const auto k33 = inequality_suite(complete_bipartite(3, 3));
  EXPECT_EQ(k33.verdict, Verdict::pass);
  EXPECT_EQ(k33.measured["alpha1"]["lower"], 9.0);
  EXPECT_EQ(k33.measured["tau"]["lower"], 0.0);

  EXPECT_EQ(inequality_suite(cycle_graph(5)).verdict, Verdict::pass);
}

TEST(InequalitySuite, IntervalSemantics) {
  SolveOutcome a, t;
  a.problem = Problem::alpha1;
  t.problem = Problem::tau;
  const Graph k4 = complete_graph(4);  // m = 6, n^2/4 = 4
  a.lower = 2, a.upper = 2, t.lower = 2, t.upper = 2;
  EXPECT_EQ(inequality_check(k4, a, t).verdict, Verdict::pass);
  t.upper = 3;  // 2 + 3 may exceed n^2/4, undecided
  t.status = Status::bounded;
  EXPECT_EQ(inequality_check(k4, a, t).verdict, Verdict::indeterminate);
  t.lower = 3;  // 2 + 3 > 4 for certain
  const auto bad = inequality_check(k4, a, t);
  EXPECT_EQ(bad.verdict, Verdict::fail);
  EXPECT_TRUE(bad.counterexample.contains("graph6"));
}

TEST(InequalitySuite, NeverFailsOnRandomGraphs) {
  Rng rng(61);
  for (int i = 0; i < 60; ++i) {
    const Graph g = tricover::testing::random_graph(rng, 0, 11);
    ASSERT_EQ(inequality_suite(g).verdict, Verdict::pass) << graph6::encode(g);
  }
}

TEST(Tritau, ExhaustiveUpToFour) {
  TritauOptions opt;
  opt.n_max = 4;
  const auto r = tritau_exhaustive(opt);
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_GT(r.measured["graphs"].get<int>(), 0);
  EXPECT_EQ(r.measured["undecided"], 0);
}

TEST(Tritau, SmallExamplesByOracle) {
  EXPECT_EQ(oracle_bruteforce(Problem::tau, complete_bipartite(2, 3), 1 << 20).value(), 0.0);
  EXPECT_EQ(6.0 - phi_max(empty_graph(3), 2).lower, 0.0);
  EXPECT_EQ(oracle_bruteforce(Problem::tau, complete_graph(3), 1 << 20).value(), 2.0 - phi_max(complete_graph(2), 1).lower);
  EXPECT_EQ(oracle_bruteforce(Problem::tau, join(empty_graph(2), path_graph(4)), 1 << 20).value(),
            8.0 - phi_max(path_graph(4), 2).lower);
}

TEST(Tritau, RejectsLargeRange) {
  TritauOptions opt;
  opt.n_max = 7;
  EXPECT_THROW(tritau_exhaustive(opt), ParameterError);
}

TEST(Tritau, SampledGraphsAreTriangleFree) {
  for (std::uint64_t s = 0; s < 30; ++s) EXPECT_TRUE(is_triangle_free(sample_triangle_free(6 + s % 3, s)));
}

TEST(Density, EmptyGraphFails) {
  const auto r = density_falsifier(empty_graph(10), 0.5, 0.5, 10, 1);
  EXPECT_EQ(r.verdict, Verdict::fail);
  const auto s = r.counterexample["S"].get<std::vector<std::size_t>>();
  EXPECT_GE(s.size(), 5u);
  EXPECT_EQ(r.counterexample["edges"], 0);
}

TEST(Density, CompleteGraphPasses) {
  for (double p : {0.1, 0.5, 1.0}) {
    // C(s,2) >= (1-eps) p s^2 / 2 for every s in [eps n, n].
    for (std::size_t s = 5; s <= 10; ++s)
      ASSERT_GE(static_cast<double>(s * (s - 1) / 2), 0.5 * p * static_cast<double>(s * s) / 2.0);
    EXPECT_EQ(density_falsifier(complete_graph(10), p, 0.5, 20, 2).verdict, Verdict::pass);
  }
}

TEST(Density, WitnessIsRecheckable) {
  const Graph g = disjoint_union(complete_graph(10), empty_graph(10));
  const auto r = density_falsifier(g, 0.5, 0.5, 20, 3);
  ASSERT_EQ(r.verdict, Verdict::fail);
  const auto s = r.counterexample["S"].get<std::vector<Vertex>>();
  const Bitset b = to_bitset(g.order(), s);
  EXPECT_EQ(g.induced_edge_count(b), r.counterexample["edges"].get<std::size_t>());
  EXPECT_LT(static_cast<double>(g.induced_edge_count(b)), 0.5 * 0.5 * static_cast<double>(s.size() * s.size()) / 2.0);
}

TEST(PhiBound, EmptyGraphFails) {
  EXPECT_NEAR(oracle_bruteforce(Problem::phi, empty_graph(10), 1 << 12, 0.1).value(), 1.0, 1e-12);
  const auto r = phi_bound_check(empty_graph(10), 0.1, 0.1, 0.5);
  EXPECT_EQ(r.verdict, Verdict::fail);
  EXPECT_NEAR(r.measured["threshold"].get<double>(), 0.1, 1e-12);
  EXPECT_NEAR(r.measured["phi"]["lower"].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(r.measured["f_peak_value"].get<double>(), 0.1, 1e-12);
}

TEST(PhiBound, Preconditions) {
  EXPECT_THROW(phi_bound_check(empty_graph(3), 0.0, 0.1, 0.5), ParameterError);
  EXPECT_THROW(phi_bound_check(empty_graph(3), 0.1, 0.1, 1.5), ParameterError);
}

TEST(Tightness, SixAndBaselines) {
  const auto r = tightness_and_baselines(6, 8, 3);
  EXPECT_EQ(r.verdict, Verdict::pass);
  const auto& b = r.measured["baseline"];
  EXPECT_EQ(b["m"], 37);
  EXPECT_EQ(b["alpha1"]["lower"], 13.0);
  EXPECT_EQ(b["tau"]["lower"], 12.0);
  EXPECT_DOUBLE_EQ(b["min_ratio"].get<double>(), 12.0 / 37.0);

  const auto small = tightness_and_baselines(4, 4, 1);
  const auto& s = small.measured["baseline"];
  EXPECT_EQ(s["m"], 7);
  EXPECT_EQ(s["alpha1"]["lower"], 3.0);
  EXPECT_EQ(s["tau"]["lower"], 2.0);
  EXPECT_EQ(oracle_bruteforce(Problem::alpha1, disjoint_union(complete_graph(4), complete_bipartite(1, 1)), 1 << 10).value(), 3.0);
  EXPECT_EQ(oracle_bruteforce(Problem::tau, disjoint_union(complete_graph(4), complete_bipartite(1, 1)), 1 << 10).value(), 2.0);
}

TEST(Tightness, RejectsOdd) { EXPECT_THROW(tightness_and_baselines(5, 2, 2), ParameterError); }
