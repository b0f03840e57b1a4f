#include <gtest/gtest.h>

#include <random>

#include "mixorient/cycles.hpp"
#include "mixorient/errors.hpp"
#include "mixorient/generators.hpp"
#include "mixorient/metrics.hpp"
#include "test_support.hpp"

namespace mixorient {
namespace {

using testing::make;

// A witness must be a closed walk through its query edge exactly once.
void expect_valid_witness(const MixedMultigraph& g, EdgeId query, const CycleWitness& w) {
  ASSERT_EQ(w.length, static_cast<int>(w.edge_ids.size()));
  ASSERT_EQ(w.edge_ids.size(), w.vertices.size());
  EXPECT_EQ(std::count(w.edge_ids.begin(), w.edge_ids.end(), query), 1);
  for (std::size_t i = 0; i < w.edge_ids.size(); ++i) {
    const Edge& e = g.edge(w.edge_ids[i]);
    const VertexId from = w.vertices[i];
    const VertexId to = w.vertices[(i + 1) % w.vertices.size()];
    EXPECT_TRUE(e.joins(from, to));
    EXPECT_TRUE(e.leaves(from));
  }
}

TEST(ShortestCycle, Examples) {
  const auto tri = testing::directed_cycle(3);
  EXPECT_EQ(shortest_cycle_through_edge(tri, 0).length, 3);
  const auto c4 = testing::undirected_cycle(4);
  EXPECT_EQ(shortest_cycle_through_edge(c4, 2).length, 4);
  expect_valid_witness(c4, 2, shortest_cycle_through_edge(c4, 2));
}

TEST(ShortestCycle, ParallelPartnerGivesTwoCycle) {
  const auto g = make(2, {{0, 1, false}, {0, 1, false}});
  const auto w = shortest_cycle_through_edge(g, 0);
  EXPECT_EQ(w.length, 2);
  expect_valid_witness(g, 0, w);
}

TEST(ShortestCycle, NoCycleThrows) {
  EXPECT_THROW(shortest_cycle_through_edge(make(2, {{0, 1, false}}), 0), NoCycle);
  EXPECT_EQ(shortest_cycle_length(make(2, {{0, 1, true}}), 0), kInfinity);
}

TEST(ShortestCycle, LowerBoundFamilyEdgesWithinTwoRPlusOne) {
  const auto fam = gen_lower_bound(3);
  for (const Edge& e : fam.graph.edges()) {
    const auto w = shortest_cycle_through_edge(fam.graph, e.id);
    EXPECT_LE(w.length, 7);
    expect_valid_witness(fam.graph, e.id, w);
  }
}

TEST(ShortestCycle, MatchesSimpleCycleEnumerationOnSmallGraphs) {
  std::mt19937_64 rng(3);
  int compared = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    MixedMultigraph g(n);
    const int m = 1 + static_cast<int>(rng() % 8);
    for (int k = 0; k < m; ++k) {
      const auto a = static_cast<VertexId>(rng() % n);
      auto b = static_cast<VertexId>(rng() % (n - 1));
      if (b >= a) ++b;
      g.add_edge(a, b, rng() % 2 ? EdgeKind::Directed : EdgeKind::Undirected);
    }
    for (const Edge& e : g.edges()) {
      const int ref = testing::cycle_enum(g, e.id);
      const int got = shortest_cycle_length(g, e.id);
      EXPECT_EQ(got == kInfinity ? testing::kInf : got, ref);
      if (got != kInfinity) expect_valid_witness(g, e.id, shortest_cycle_through_edge(g, e.id));
      ++compared;
    }
  }
  EXPECT_GT(compared, 500);
}

TEST(LValue, Examples) {
  EXPECT_EQ(l_value(make(2, {{0, 1, false}, {0, 1, false}}), 0, 1), 2);
  const auto tri = testing::undirected_cycle(3);
  EXPECT_EQ(l_value(tri, 0, 1), 3);
  EXPECT_EQ(l_value(tri, 2, 1), 3);
  EXPECT_THROW(l_value(testing::undirected_cycle(4), 0, 2), NoSuchEdge);
}

TEST(LValue, FiveCycleWithChordArcMatchesEnumeration) {
  // C5 on 0..4 plus a chord arc 0 -> 2.
  const auto g = make(5, {{0, 1, false}, {1, 2, false}, {2, 3, false}, {3, 4, false}, {4, 0, false},
                          {0, 2, true}});
  for (VertexId v : {1, 2, 4}) {
    int ref = testing::kInf;
    for (const Edge& e : g.edges())
      if (e.joins(0, v)) ref = std::min(ref, testing::cycle_enum(g, e.id));
    EXPECT_EQ(l_value(g, 0, v), ref) << v;
  }
  EXPECT_EQ(l_value(g, 0, 2), 3);
  EXPECT_EQ(l_value(g, 0, 1), 3);
  EXPECT_EQ(l_value(g, 0, 4), 4);
}

TEST(SValue, Examples) {
  const auto tri = testing::undirected_cycle(3);
  EXPECT_EQ(s_value(tri, 0, std::vector<VertexId>{}), 0);
  EXPECT_EQ(s_value(tri, 0, std::vector<VertexId>{1, 2}), 6);
  const auto star = make(4, {{0, 1, true}, {1, 0, true}, {0, 2, true}, {2, 0, true}, {0, 3, true},
                             {3, 0, true}});
  EXPECT_EQ(s_value(star, 0, std::vector<VertexId>{1, 2, 3}), 6);
}

TEST(SValue, InvariantUnderEdgePermutation) {
  std::mt19937_64 rng(9);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = gen_random_strongly_orientable(3 + static_cast<int>(seed % 8), 0.6, seed);
    std::vector<EdgeId> perm(static_cast<std::size_t>(g.edge_count()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    MixedMultigraph h(g.vertex_count());
    for (EdgeId e : perm) h.add_edge(g.edge(e).tail, g.edge(e).head, g.edge(e).kind);
    std::vector<VertexId> xs;
    for (EdgeId e : g.incident(0)) xs.push_back(g.edge(e).other(0));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (VertexId x : xs) EXPECT_EQ(l_value(g, 0, x), l_value(h, 0, x));
    EXPECT_EQ(s_value(g, 0, xs), s_value(h, 0, xs));
  }
}

TEST(Eta, Examples) {
  EXPECT_EQ(eta(testing::undirected_cycle(3)), 3);
  EXPECT_EQ(eta(testing::undirected_cycle(6)), 6);
}

TEST(Eta, BoundedByTwiceRadiusPlusOne) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = gen_random_strongly_orientable(2 + static_cast<int>(seed % 11), 0.5, seed);
    const int r = radius_center(g).radius;
    const int h = eta(g);
    EXPECT_GE(h, 2);
    EXPECT_LE(h, 2 * r + 1);
  }
}

}  // namespace
}  // namespace mixorient
