#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"
#include "tricover/certificates.hpp"
#include "tricover/constructions.hpp"
#include "tricover/oracle.hpp"
#include "tricover/verify.hpp"

using namespace tricover;

namespace {

const double kGolden = (-1.0 + std::sqrt(5.0)) / 2.0;

ConstructionParams params(std::size_t n, double d, double eps, std::uint64_t seed) {
  ConstructionParams p;
  p.n = n;
  p.d = d;
  p.eps = eps;
  p.seed = seed;
  return p;
}

}  // namespace

TEST(ConstructionParams, DerivedValues) {
  const auto p = params(256, kGolden, 0.5, 1);
  EXPECT_EQ(p.p(), 1.0 / 64.0);
  EXPECT_NEAR(p.k(), 4.0 * kGolden, 1e-12);
  EXPECT_EQ(p.k_int(), 2u);
  EXPECT_NEAR(p.phi_threshold(), p.k() * p.k() * 64.0, 1e-9);
}

TEST(ConstructionParams, Validation) {
  auto p = params(10, 1.0, 0.5, 1);
  EXPECT_NO_THROW(p.validate());
  p.eps = 1.0;
  EXPECT_THROW(p.validate(), ParameterError);
  p.eps = 0.5;
  p.theta = 0.0;
  EXPECT_THROW(p.validate(), ParameterError);
  p.theta = 0.75;
  p.d = 0.0;
  EXPECT_THROW(p.validate(), ParameterError);
  p.d = 1.0;
  p.n = 0;
  EXPECT_THROW(p.validate(), ParameterError);
}

TEST(SampleTrifree, DegenerateZeroProbability) {
  auto p = params(12, 1.0, 0.5, 3);
  p.p_override = 0.0;
  const auto [g, r] = sample_trifree(p);
  EXPECT_EQ(r.m0, 0u);
  EXPECT_TRUE(r.removed.empty());
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_TRUE(r.bullet1());
  EXPECT_TRUE(r.bullet2());
  EXPECT_EQ(r.phi.lower, 0.0);
  EXPECT_EQ(r.phi.upper, 0.0);
  EXPECT_EQ(r.bullet3(), Verdict::pass);
}

TEST(SampleTrifree, TriangleFreeAndMinimal) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto p = params(64, kGolden, 0.5, seed);
    const auto [g, r] = sample_trifree(p);
    const Graph g0 = gnp(64, p.p(), seed);
    EXPECT_EQ(count_triangles(g), 0u);
    EXPECT_EQ(g, remove_edges(g0, r.removed));
    EXPECT_LE(r.removed.size(), r.triangles0);
    EXPECT_EQ(r.m, r.m0 - r.removed.size());
    EXPECT_TRUE(is_triangle_cover(g0, r.removed));
    for (Vertex v = 0; v < 64; ++v)
      if (g0.degree(v) > 0) {
        EXPECT_GT(g.degree(v), 0u);
      }
    EXPECT_EQ(r.method, RemovalMethod::exact);
    EXPECT_TRUE(r.phi.optimal());
  }
}

TEST(SampleTrifree, GreedyFallbackWhenBudgetRunsOut) {
  auto p = params(20, 1.0, 0.5, 4);
  p.p_override = 0.7;
  const auto [g, r] = sample_trifree(p, Budget::nodes(1));
  EXPECT_EQ(r.method, RemovalMethod::greedy_minimal);
  EXPECT_TRUE(is_triangle_free(g));
  const Graph g0 = gnp(20, 0.7, 4);
  for (std::size_t j = 0; j < r.removed.size(); ++j) {
    EdgeSet less = r.removed;
    less.erase(less.begin() + static_cast<std::ptrdiff_t>(j));
    ASSERT_FALSE(is_triangle_cover(g0, less));
  }
}

TEST(SampleTrifree, EdgeBulletsHoldMostSeeds) {
  int both = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto r = sample_trifree(params(64, 0.618, 0.5, seed)).second;
    if (r.bullet1() && r.bullet2()) ++both;
  }
  EXPECT_GE(both, 4);
}

TEST(BuildJoinH, Examples) {
  const Graph wheel = build_join_H(cycle_graph(5), 1);
  EXPECT_EQ(wheel.edge_count(), 10u);
  EXPECT_EQ(build_join_H(empty_graph(4), 2), complete_bipartite(2, 4));
  const auto [g, r] = sample_trifree(params(128, kGolden, 0.5, 9));
  EXPECT_EQ(build_join_H(g, 2).edge_count(), 128 * 2 + g.edge_count());
  EXPECT_THROW(build_join_H(complete_graph(3), 1), PreconditionError);
  EXPECT_THROW(build_join_H(cycle_graph(5), 0), ParameterError);
}

TEST(Pipeline, IntervalsAndRatiosRecompute) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto p = params(64, kGolden, 0.5, seed);
    const RatioReport r = egt_ratio_pipeline(p, 1.5);
    ASSERT_FALSE(r.skipped);
    const auto phi = phi_max(r.g, static_cast<double>(r.k_int));
    const double nk = static_cast<double>(64 * r.k_int);
    EXPECT_EQ(r.tau.lower, nk - phi.upper);
    EXPECT_EQ(r.tau.upper, nk - phi.lower);
    EXPECT_EQ(r.m_h, 64 * r.k_int + r.g.edge_count());
    EXPECT_EQ(r.alpha1_lb, r.g.edge_count());
    EXPECT_DOUBLE_EQ(r.alpha1_ratio(), static_cast<double>(r.g.edge_count()) / static_cast<double>(r.m_h));
    EXPECT_DOUBLE_EQ(r.tau_ratio(), r.tau.lower / static_cast<double>(r.m_h));
    if (r.trifree.no_isolated) {
      EXPECT_TRUE(r.triangular_h);
    }
    EXPECT_NEAR(r.slack_tau(), r.prediction_tau() - r.tau_ratio(), 1e-15);
  }
}

TEST(Pipeline, ExactAlpha1NotBelowLowerBound) {
  auto p = params(16, 1.2, 0.5, 5);
  const RatioReport r = egt_ratio_pipeline(p, 1.5, {}, {true, 2000});
  ASSERT_FALSE(r.skipped);
  ASSERT_TRUE(r.alpha1.has_value());
  EXPECT_GE(r.alpha1->lower, static_cast<double>(r.alpha1_lb));
  const Graph h = build_join_H(r.g, r.k_int);
  EXPECT_EQ(r.tau.lower, tau_exact(h).lower);
}

TEST(Pipeline, ZeroHubsGivesPremiseFailure) {
  const RatioReport r = egt_ratio_pipeline(params(16, 0.3, 0.5, 1), 1.5);
  EXPECT_EQ(r.k_int, 0u);
  EXPECT_TRUE(r.skipped);
  EXPECT_FALSE(r.premise_k_int());
  EXPECT_EQ(r.premises(), Verdict::fail);
  EXPECT_EQ(r.implication(), Verdict::pass);
}

TEST(Pipeline, PredictionsAtGoldenD) {
  EXPECT_NEAR(predicted_tau_ratio(kGolden), (3.0 - std::sqrt(5.0)) / 2.0, 1e-12);
  EXPECT_NEAR(predicted_alpha1_ratio(kGolden), 1.0 / std::sqrt(5.0), 1e-12);
  EXPECT_GT(predicted_tau_ratio(kGolden), 0.38);
  EXPECT_GT(predicted_alpha1_ratio(kGolden), 0.44);
  EXPECT_LE(predicted_tau_ratio(2.0), 0.0);
}

TEST(OptimalD, ClosedForms) {
  const auto a = optimal_d(Objective::min_ratio);
  EXPECT_NEAR(a.d, 0.618034, 1e-6);
  EXPECT_NEAR(a.value, 0.381966, 1e-6);
  EXPECT_TRUE(a.grid_verified);
  const auto b = optimal_d(Objective::sum_ratio);
  EXPECT_NEAR(b.d, 0.366025, 1e-6);
  EXPECT_NEAR(b.value, 3.0 - std::sqrt(3.0), 1e-12);
  EXPECT_GT(b.value, 1.26);
  EXPECT_TRUE(b.grid_verified);
  EXPECT_GE(a.value, predicted_tau_ratio(a.d + 1e-4));
  EXPECT_GE(a.value, predicted_tau_ratio(a.d - 1e-4));
}

TEST(NorinCheck, FiveCycle) {
  const Graph wheel = join(empty_graph(1), cycle_graph(5));
  EXPECT_EQ(oracle_bruteforce(Problem::tau, wheel, 1 << 20).value(), 3.0);

  const NorinReport two = norin_check(cycle_graph(5), Rational::parse("2"));
  EXPECT_EQ(two.tau.lower, 3.0);
  EXPECT_EQ(two.alpha1_lb, 5u);
  EXPECT_EQ(two.m_g, 10u);
  EXPECT_DOUBLE_EQ(two.lhs(), 11.0);
  EXPECT_EQ(two.verdict(), Verdict::pass);
  EXPECT_TRUE(two.consistent());

  const NorinReport five_thirds = norin_check(cycle_graph(5), Rational::parse("5/3"));
  EXPECT_DOUBLE_EQ(five_thirds.lhs(), 10.0);
  EXPECT_EQ(five_thirds.verdict(), Verdict::fail);
  EXPECT_FALSE(five_thirds.predicate());
  EXPECT_TRUE(five_thirds.consistent());
}

TEST(NorinCheck, Preconditions) {
  EXPECT_THROW(norin_check(complete_graph(3), Rational::parse("2")), PreconditionError);
  EXPECT_THROW(norin_check(cycle_graph(5), Rational::parse("1")), ParameterError);
}

TEST(NorinCheck, VerdictMatchesPredicate) {
  Rng rng(51);
  for (int i = 0; i < 60; ++i) {
    const Graph h = sample_triangle_free(3 + rng.below(10), rng.next());
    const Rational c{static_cast<std::int64_t>(2 + rng.below(9)), static_cast<std::int64_t>(1 + rng.below(5))};
    if (c.num <= c.den) continue;
    const NorinReport r = norin_check(h, c);
    ASSERT_TRUE(r.consistent());
    ASSERT_EQ(r.tau.lower, static_cast<double>(h.order()) - r.alpha.lower);
  }
}

TEST(LowAlpha, SmallCases) {
  const auto one = low_alpha_trifree(1, 10, 1);
  EXPECT_EQ(one.graph.order(), 1u);
  EXPECT_EQ(one.alpha.lower, 1.0);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto five = low_alpha_trifree(5, 20, seed);
    EXPECT_TRUE(is_triangle_free(five.graph));
    EXPECT_GE(five.alpha.lower, 2.0);
  }
}

TEST(LowAlpha, DeterministicAndTriangleFree) {
  const auto a = low_alpha_trifree(40, 30, 7);
  const auto b = low_alpha_trifree(40, 30, 7);
  EXPECT_EQ(a.graph, b.graph);
  EXPECT_TRUE(is_triangle_free(a.graph));
  EXPECT_TRUE(a.alpha.optimal());
  EXPECT_LE(static_cast<double>(a.surrogate), a.alpha.lower);
}

TEST(LowAlpha, HundredVerticesBelowThird) {
  const auto r = low_alpha_trifree(100, kDefaultNorinEffort, 1);
  ASSERT_TRUE(r.alpha.optimal());
  EXPECT_TRUE(is_triangle_free(r.graph));
  EXPECT_LT(r.alpha.lower, 33.0);
}
