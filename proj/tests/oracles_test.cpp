#include <gtest/gtest.h>

#include "msvc/mvc_enum.hpp"
#include "msvc/oracles.hpp"
#include "test_support.hpp"

namespace msvc {
namespace {

using namespace msvc::testing;

TEST(BruteForce, Examples) {
  auto p = brute_force_optimal(p3(), 1);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->cost, 2);
  EXPECT_EQ(p->ordering, Ordering::from_sequence({1, 0, 2}));

  auto c = brute_force_optimal(c4(), 2);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->cost, 6);
  EXPECT_EQ(c->ordering, Ordering::from_sequence({0, 2, 1, 3}));

  EXPECT_FALSE(brute_force_optimal(triangle(), 1));
  EXPECT_EQ(brute_force_optimal(triangle(), 2)->cost, 4);
  EXPECT_EQ(brute_force_optimal(complete(4), 3)->cost, 10);
  EXPECT_EQ(brute_force_optimal(star(5), 1)->cost, 5);
}

TEST(BruteForce, Guard) { EXPECT_THROW(brute_force_optimal(edgeless(11), 0), InvalidInput); }

TEST(BruteForce, AllKIsMonotone) {
  for (const Graph& g : random_corpus(60, 8, 81)) {
    auto all = brute_force_all_k(g);
    ASSERT_EQ(all.size(), g.n() + 1);
    for (std::size_t k = 1; k <= g.n(); ++k)
      if (all[k - 1]) {
        ASSERT_TRUE(all[k]);
        EXPECT_LE(*all[k], *all[k - 1]);
      }
    EXPECT_TRUE(all[g.n()]);
  }
}

TEST(SubsetDp, Examples) {
  EXPECT_EQ(subset_dp_optimal(claw_chain(), 7)->cost, 60);
  EXPECT_EQ(subset_dp_optimal(claw_chain(), 6)->cost, 63);
  EXPECT_EQ(subset_dp_optimal(claw_chain(), 8)->cost, 60);
  EXPECT_EQ(subset_dp_optimal(double_star(), 2)->cost, 13);
  EXPECT_FALSE(subset_dp_optimal(triangle(), 1));
  EXPECT_EQ(subset_dp_optimal(generate({Family::star, 2}), 1)->cost, 2);
  EXPECT_EQ(subset_dp_optimal(edgeless(0), 0)->cost, 0);
}

TEST(SubsetDp, Guard) { EXPECT_THROW(subset_dp_optimal(edgeless(25), 1), InvalidInput); }

// Both oracles return the lexicographically smallest optimal ordering.
TEST(SubsetDp, MatchesBruteForceIncludingWitness) {
  std::size_t checked = 0;
  for (const Graph& g : random_corpus(220, 8, 83)) {
    for (std::size_t k = 0; k <= g.n(); ++k) {
      auto bf = brute_force_optimal(g, k);
      auto dp = subset_dp_optimal(g, k);
      ASSERT_EQ(bf.has_value(), dp.has_value()) << "n=" << g.n() << " k=" << k;
      if (!bf) continue;
      EXPECT_EQ(bf->cost, dp->cost);
      EXPECT_EQ(bf->ordering, dp->ordering);
      auto rep = evaluate(g, dp->ordering);
      EXPECT_EQ(rep.total, dp->cost);
      EXPECT_LE(rep.max_cost, k);
      ++checked;
    }
  }
  EXPECT_GT(checked, 600u);
}

// Every edge is charged once: the r(i) sum to m and weight to the cost.
TEST(SubsetDp, EdgeAccounting) {
  for (const Graph& g : random_corpus(100, 12, 85)) {
    auto dp = subset_dp_optimal(g, g.n());
    ASSERT_TRUE(dp);
    auto rep = evaluate(g, dp->ordering);
    std::size_t sum = 0;
    for (auto c : rep.r) sum += c;
    EXPECT_EQ(sum, g.m());
    EXPECT_EQ(rep.total, dp->cost);
  }
}

TEST(SubsetDp, InfeasibleExactlyWhenNoSmallCover) {
  for (const Graph& g : random_corpus(120, 10, 87)) {
    for (std::size_t k = 0; k <= g.n(); ++k) {
      const bool feasible = subset_dp_optimal(g, k).has_value();
      EXPECT_EQ(feasible, !enumerate_minimal_covers(g, k).empty());
      EXPECT_EQ(feasible, k >= tau_by_subsets(g));
    }
  }
}

TEST(RegularSolve, Examples) {
  EXPECT_FALSE(regular_solve(petersen(), 4));
  EXPECT_EQ(regular_solve(complete(4), 3)->cost, 10);
  EXPECT_EQ(regular_solve(generate({Family::disjoint_edges, 2}), 2)->cost, 3);
  EXPECT_FALSE(regular_solve(generate({Family::disjoint_edges, 3}), 2));
  EXPECT_EQ(regular_solve(edgeless(4), 0)->cost, 0);
  EXPECT_THROW(regular_solve(p3(), 2), InvalidInput);
}

TEST(RegularSolve, MatchesSubsetDp) {
  std::vector<Graph> corpus;
  for (std::size_t n = 2; n <= 8; n += 2) corpus.push_back(generate({Family::disjoint_edges, n / 2}));
  for (std::size_t n = 3; n <= 12; ++n) corpus.push_back(generate({Family::cycle, n}));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GeneratorSpec spec{Family::random_regular, 8 + 2 * (seed % 3), 0.5, 3, seed};
    corpus.push_back(generate(spec));
  }
  corpus.push_back(petersen());
  corpus.push_back(complete(5));
  for (const Graph& g : corpus) {
    for (std::size_t k = 0; k <= g.n(); ++k) {
      auto a = regular_solve(g, k);
      auto b = subset_dp_optimal(g, k);
      ASSERT_EQ(a.has_value(), b.has_value()) << "n=" << g.n() << " k=" << k;
      if (!a) continue;
      EXPECT_EQ(a->cost, b->cost);
      auto rep = evaluate(g, a->ordering);
      EXPECT_EQ(rep.total, a->cost);
      EXPECT_LE(rep.max_cost, k);
    }
  }
}

TEST(ForEachOptimalOrdering, CountsC4) {
  std::size_t count = 0;
  for_each_optimal_ordering(c4(), 2, [&](const Ordering& o) {
    EXPECT_EQ(evaluate(c4(), o).total, 6);
    ++count;
  });
  // Opposite corners first in either order, then the remaining two in either order.
  EXPECT_EQ(count, 8u);
}

}  // namespace
}  // namespace msvc
