#include <gtest/gtest.h>

#include "support.hpp"
#include "tricover/errors.hpp"
#include "tricover/generators.hpp"
#include "tricover/oracle.hpp"

using namespace tricover;

namespace {
constexpr std::uint64_t kLimit = std::uint64_t{1} << 20;
}

TEST(Oracle, SmallValues) {
  EXPECT_EQ(oracle_bruteforce(Problem::tau, complete_graph(4), kLimit).value(), 2.0);
  EXPECT_EQ(oracle_bruteforce(Problem::alpha1, complete_graph(3), kLimit).value(), 1.0);
  EXPECT_EQ(oracle_bruteforce(Problem::alpha, cycle_graph(5), kLimit).value(), 2.0);
  EXPECT_EQ(oracle_bruteforce(Problem::phi, path_graph(3), kLimit, 2.0).value(), 4.0);
}

TEST(Oracle, RefusesLargeSpaces) {
  EXPECT_THROW(oracle_bruteforce(Problem::tau, complete_graph(10), kLimit), OracleOverflow);
  EXPECT_THROW(oracle_bruteforce(Problem::alpha, empty_graph(21), kLimit), OracleOverflow);
  EXPECT_NO_THROW(oracle_bruteforce(Problem::alpha, empty_graph(20), kLimit));
}

TEST(Oracle, LexFirstOptimum) {
  // K3: every single edge covers; canonical edge 0 = {0,1} comes first.
  const auto t = oracle_bruteforce(Problem::tau, complete_graph(3), kLimit);
  EXPECT_EQ(t.certificate, (std::vector<std::uint64_t>{0}));
  // C5 independent sets of size 2, first in lex order is {0,2}.
  const auto a = oracle_bruteforce(Problem::alpha, cycle_graph(5), kLimit);
  EXPECT_EQ(a.certificate, (std::vector<std::uint64_t>{0, 2}));
}

TEST(Oracle, LexLessMatchesSortedListOrder) {
  auto list = [](std::uint64_t m) {
    std::vector<int> v;
    for (int i = 0; i < 64; ++i)
      if ((m >> i) & 1U) v.push_back(i);
    return v;
  };
  for (std::uint64_t a = 0; a < 64; ++a)
    for (std::uint64_t b = 0; b < 64; ++b) ASSERT_EQ(detail::lex_less(a, b), list(a) < list(b)) << a << " " << b;
}
