#include <gtest/gtest.h>

#include "msvc/graph.hpp"
#include "test_support.hpp"

namespace msvc {
namespace {

using namespace msvc::testing;

TEST(BuildGraph, PathP3) {
  std::vector<Edge> e = {{0, 1}, {1, 2}};
  Graph g = build_graph(3, e);
  EXPECT_EQ(g.n(), 3u);
  EXPECT_EQ(g.m(), 2u);
  EXPECT_EQ(g.degree(0), 1u);
  EXPECT_EQ(g.degree(1), 2u);
  EXPECT_EQ(g.degree(2), 1u);
}

TEST(BuildGraph, NormalizesEndpointOrder) {
  Graph g = make(3, {{2, 1}, {1, 0}});
  EXPECT_EQ(g, p3());
  EXPECT_TRUE(g.has_edge(2, 1));
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(BuildGraph, RejectsSelfLoop) { EXPECT_THROW(make(2, {{0, 0}}), InvalidInput); }

TEST(BuildGraph, RejectsDuplicateEdge) {
  EXPECT_THROW(make(3, {{0, 1}, {1, 0}}), InvalidInput);
  EXPECT_THROW(make(3, {{0, 1}, {0, 1}}), InvalidInput);
}

TEST(BuildGraph, RejectsOutOfRange) { EXPECT_THROW(make(2, {{0, 2}}), InvalidInput); }

TEST(BuildGraph, SingleIsolatedVertex) {
  Graph g = edgeless(1);
  EXPECT_EQ(g.n(), 1u);
  EXPECT_EQ(g.m(), 0u);
}

TEST(BuildGraph, AdjacencySymmetricAndSorted) {
  for (const Graph& g : random_corpus(50, 12, 3)) {
    std::size_t deg_sum = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
      auto nb = g.neighbors(v);
      deg_sum += nb.size();
      EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
      for (Vertex x : nb) EXPECT_TRUE(g.has_edge(x, v));
    }
    EXPECT_EQ(deg_sum, 2 * g.m());
  }
}

TEST(SortedByDegree, Star) {
  auto order = sorted_by_degree(star(5));
  EXPECT_EQ(order, (std::vector<Vertex>{0, 1, 2, 3, 4, 5}));
}

TEST(SortedByDegree, P3CenterFirst) { EXPECT_EQ(sorted_by_degree(p3()), (std::vector<Vertex>{1, 0, 2})); }

TEST(SortedByDegree, EdgelessKeepsIdOrder) {
  EXPECT_EQ(sorted_by_degree(edgeless(3)), (std::vector<Vertex>{0, 1, 2}));
}

TEST(Evaluate, P3CenterFirst) {
  auto rep = evaluate(p3(), Ordering::from_sequence({1, 0, 2}));
  EXPECT_EQ(rep.total, 2);
  EXPECT_EQ(rep.max_cost, 1u);
  EXPECT_EQ(rep.r, (std::vector<std::size_t>{2, 0, 0}));
}

TEST(Evaluate, TriangleAnyOrdering) {
  std::vector<Vertex> seq = {0, 1, 2};
  do {
    auto rep = evaluate(triangle(), Ordering::from_sequence(seq));
    EXPECT_EQ(rep.total, 4);
    EXPECT_EQ(rep.max_cost, 2u);
    EXPECT_EQ(rep.r, (std::vector<std::size_t>{2, 1, 0}));
  } while (std::next_permutation(seq.begin(), seq.end()));
}

TEST(Evaluate, Edgeless) {
  auto rep = evaluate(edgeless(4), Ordering::identity(4));
  EXPECT_EQ(rep.total, 0);
  EXPECT_EQ(rep.max_cost, 0u);
}

TEST(Evaluate, RejectsWrongSize) { EXPECT_THROW(evaluate(p3(), Ordering::identity(2)), InvalidInput); }

TEST(Ordering, RejectsNonBijection) {
  EXPECT_THROW(Ordering::from_sequence({0, 0, 1}), InvalidInput);
  EXPECT_THROW(Ordering::from_sequence({0, 3, 1}), InvalidInput);
}

TEST(Ordering, PositionInverse) {
  auto o = Ordering::from_sequence({2, 0, 1});
  for (Position p = 1; p <= 3; ++p) EXPECT_EQ(o.position(o.at(p)), p);
}

// Per-edge minimum (library) against per-position counting (definition).
TEST(EvaluateProperty, TwoComputationsAgree) {
  Pcg32 rng(11);
  for (const Graph& g : random_corpus(100, 10, 5)) {
    std::vector<Vertex> seq(g.n());
    std::iota(seq.begin(), seq.end(), Vertex{0});
    for (int rep = 0; rep < 5; ++rep) {
      for (std::size_t i = seq.size(); i > 1; --i) std::swap(seq[i - 1], seq[rng.below(static_cast<std::uint32_t>(i))]);
      auto ord = Ordering::from_sequence(seq);
      auto cost = evaluate(g, ord);
      auto r = r_by_position(g, ord);
      EXPECT_EQ(cost.r, r);
      std::size_t sum = 0;
      Cost weighted = 0;
      Position last = 0;
      for (std::size_t i = 0; i < r.size(); ++i) {
        sum += r[i];
        weighted += static_cast<Cost>((i + 1) * r[i]);
        if (r[i]) last = static_cast<Position>(i + 1);
      }
      EXPECT_EQ(sum, g.m());
      EXPECT_EQ(weighted, cost.total);
      EXPECT_EQ(last, cost.max_cost);
    }
  }
}

TEST(EvaluateProperty, InvariantUnderRelabeling) {
  Pcg32 rng(12);
  for (const Graph& g : random_corpus(60, 9, 6)) {
    const std::size_t n = g.n();
    std::vector<Vertex> perm(n), seq(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::iota(seq.begin(), seq.end(), Vertex{0});
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(static_cast<std::uint32_t>(i))]);
    for (std::size_t i = n; i > 1; --i) std::swap(seq[i - 1], seq[rng.below(static_cast<std::uint32_t>(i))]);
    std::vector<Edge> relabeled;
    for (const Edge& e : g.edges()) relabeled.push_back({perm[e.u], perm[e.v]});
    Graph h = Graph::from_edges(n, relabeled);
    std::vector<Vertex> seq_h(n);
    for (std::size_t i = 0; i < n; ++i) seq_h[i] = perm[seq[i]];
    auto a = evaluate(g, Ordering::from_sequence(seq));
    auto b = evaluate(h, Ordering::from_sequence(seq_h));
    EXPECT_EQ(a.r, b.r);
    EXPECT_EQ(a.total, b.total);
  }
}

TEST(EvaluateProperty, CoverPrefixBoundsMaxCost) {
  Pcg32 rng(13);
  for (const Graph& g : random_corpus(60, 9, 7)) {
    std::vector<Vertex> seq(g.n());
    std::iota(seq.begin(), seq.end(), Vertex{0});
    for (std::size_t i = seq.size(); i > 1; --i) std::swap(seq[i - 1], seq[rng.below(static_cast<std::uint32_t>(i))]);
    auto cost = evaluate(g, Ordering::from_sequence(seq));
    for (std::size_t k = 0; k <= g.n(); ++k) {
      std::span<const Vertex> prefix(seq.data(), k);
      if (is_vertex_cover(g, prefix)) { EXPECT_LE(cost.max_cost, k); }
    }
  }
}

TEST(IsFeasible, Examples) {
  auto b_first = Ordering::from_sequence({1, 0, 2});
  EXPECT_TRUE(is_feasible(Instance(p3(), 1, 2), b_first));
  EXPECT_FALSE(is_feasible(Instance(p3(), 1, 1), b_first));
  EXPECT_FALSE(is_feasible(Instance(triangle(), 1, 100), Ordering::identity(3)));
}

TEST(IsVertexCover, Examples) {
  std::vector<Vertex> b = {1}, a = {0}, none = {};
  EXPECT_TRUE(is_vertex_cover(p3(), b));
  EXPECT_FALSE(is_vertex_cover(p3(), a));
  EXPECT_TRUE(is_vertex_cover(edgeless(3), none));
}

TEST(Instance, ClampsKToN) {
  Instance inst(p3(), 10, 5);
  EXPECT_EQ(inst.k(), 3u);
  EXPECT_THROW(Instance(p3(), 1, -1), InvalidInput);
}

TEST(CheckedArithmetic, DetectsOverflow) {
  EXPECT_THROW(checked_add(std::numeric_limits<Cost>::max(), 1), InternalError);
  EXPECT_THROW(checked_mul(std::numeric_limits<Cost>::max() / 2, 3), InternalError);
  EXPECT_EQ(checked_mul(1 << 20, 1 << 20), Cost{1} << 40);
}

}  // namespace
}  // namespace msvc
