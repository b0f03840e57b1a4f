#include <gtest/gtest.h>

#include <set>

#include "mixorient/cycles.hpp"
#include "mixorient/driver.hpp"
#include "mixorient/errors.hpp"
#include "mixorient/generators.hpp"
#include "mixorient/metrics.hpp"
#include "mixorient/oracle.hpp"
#include "test_support.hpp"

namespace mixorient {
namespace {

using testing::E;
using testing::floyd;
using testing::kInf;
using testing::make;

TEST(LowerBoundFamily, SmallestInstance) {
  const auto fam = gen_lower_bound(1);
  EXPECT_EQ(fam.graph.vertex_count(), 7);
  EXPECT_EQ(fam.graph.edge_count(), 10);
  EXPECT_EQ(fam.graph.undirected_count(), 6);
  EXPECT_EQ(fam.paths.size(), 4u);
  for (const auto& p : fam.paths) {
    ASSERT_EQ(p.edges.size(), 1u);
    EXPECT_EQ(fam.graph.edge(p.middle_edge).tail, p.from);
    EXPECT_EQ(fam.graph.edge(p.middle_edge).head, p.to);
  }
  EXPECT_EQ(testing::radius_ref(fam.graph), 1);
}

TEST(LowerBoundFamily, Structure) {
  for (int r = 1; r <= 5; ++r) {
    const auto fam = gen_lower_bound(r);
    const auto& g = fam.graph;
    std::set<VertexId> tree_ids;
    for (const auto& t : fam.tree) {
      tree_ids.insert(t.id);
      if (t.role == ChildRole::Middle || t.level == r) ASSERT_FALSE(t.internal());
      else if (t.role != ChildRole::Root) ASSERT_TRUE(t.internal());
    }
    ASSERT_EQ(tree_ids.size(), fam.tree.size());
    for (const auto& p : fam.paths) {
      ASSERT_EQ(static_cast<int>(p.edges.size()), 2 * r - 2 * p.level + 1);
      int arcs = 0;
      for (std::size_t k = 0; k < p.edges.size(); ++k) {
        if (g.edge(p.edges[k]).directed()) {
          ++arcs;
          ASSERT_EQ(p.edges[k], p.middle_edge);
          ASSERT_EQ(k + 1, (p.edges.size() + 1) / 2);
        }
      }
      ASSERT_EQ(arcs, 1);
      const auto* from = fam.tree_vertex(p.from);
      const auto* to = fam.tree_vertex(p.to);
      ASSERT_NE(from, nullptr);
      ASSERT_NE(to, nullptr);
      ASSERT_EQ(from->parent, to->parent);
      ASSERT_EQ(from->copy, to->copy);
    }
    const auto d = floyd(g);
    int best = kInf;
    std::vector<VertexId> centers;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      int ecc = 0;
      for (VertexId w = 0; w < g.vertex_count(); ++w) ecc = std::max({ecc, d[v][w], d[w][v]});
      if (ecc < best) centers.clear();
      if (ecc <= best) {
        best = ecc;
        centers.push_back(v);
      }
    }
    ASSERT_EQ(best, r);
    ASSERT_EQ(centers, (std::vector<VertexId>{fam.root}));
  }
}

TEST(LowerBoundFamily, EveryEdgeOnShortCycle) {
  for (int r = 1; r <= 6; ++r) {
    const auto fam = gen_lower_bound(r);
    EXPECT_EQ(radius_center(fam.graph).radius, r);
    for (const Edge& e : fam.graph.edges())
      ASSERT_LE(shortest_cycle_through_edge(fam.graph, e.id).length, 2 * r + 1) << r << " " << e.id;
  }
}

TEST(LowerBoundFamily, RejectsZero) { EXPECT_THROW(gen_lower_bound(0), InvalidValue); }

TEST(OptimalOrientation, RadiusFormula) {
  for (int r = 1; r <= 5; ++r) {
    const auto fam = gen_lower_bound(r);
    const auto o = optimal_lower_bound_orientation(fam);
    const auto v = verify_orientation(fam.graph, o);
    ASSERT_TRUE(v.valid()) << r;
    EXPECT_EQ(v.radius, r * r + 3 * r - 1) << r;
    EXPECT_EQ(testing::radius_ref(o.apply()), r * r + 3 * r - 1) << r;
  }
}

TEST(OptimalOrientation, ParentChildDistances) {
  for (int r = 1; r <= 5; ++r) {
    const auto fam = gen_lower_bound(r);
    const auto d = floyd(optimal_lower_bound_orientation(fam).apply());
    for (const auto& p : fam.tree) {
      if (!p.internal() && p.role != ChildRole::Root) continue;
      const int depth = r - p.level;
      const std::set<int> allowed{2 * depth, 4 * depth - 1};
      // The root's children are listed per copy through the child records.
      for (const auto& c : fam.tree) {
        if (c.parent != p.id) continue;
        if (c.role == ChildRole::Left) {
          ASSERT_EQ(d[p.id][c.id], 1);
          ASSERT_TRUE(allowed.count(d[c.id][p.id])) << r << " " << c.id << " " << d[c.id][p.id];
        } else if (c.role == ChildRole::Right) {
          ASSERT_EQ(d[c.id][p.id], 1);
          ASSERT_TRUE(allowed.count(d[p.id][c.id])) << r << " " << c.id << " " << d[p.id][c.id];
        }
      }
    }
  }
}

TEST(Forcing, PathPlusArc) {
  const auto g = make(3, {{0, 1, false}, {1, 2, false}, {2, 0, true}});
  const auto f = forced_orientations(g);
  EXPECT_EQ(f.forced.size(), 2u);
  EXPECT_EQ(f.forced.at(0), 1);
  EXPECT_EQ(f.forced.at(1), 2);
  EXPECT_EQ(f.graph.undirected_count(), 0);
}

TEST(Forcing, TriangleForcesNothing) {
  EXPECT_TRUE(forced_orientations(testing::undirected_cycle(3)).forced.empty());
}

TEST(Forcing, LowerBoundFamilyLeavesMiddleEdges) {
  const auto fam = gen_lower_bound(2);
  const auto f = forced_orientations(fam.graph);
  std::set<EdgeId> free_edges;
  for (const Edge& e : f.graph.edges())
    if (!e.directed()) free_edges.insert(e.id);
  std::set<EdgeId> middle_edges;
  for (const auto& t : fam.tree)
    if (t.role == ChildRole::Middle) middle_edges.insert(t.parent_edge);
  EXPECT_EQ(free_edges, middle_edges);
  EXPECT_EQ(free_edges.size(), 6u);
}

TEST(Forcing, RejectsNonOrientable) {
  EXPECT_THROW(forced_orientations(make(2, {{0, 1, false}})), NotStronglyOrientable);
}

TEST(Oracle, Examples) {
  EXPECT_EQ(oriented_radius_exact(testing::undirected_cycle(3)).oriented_radius, 2);
  const auto c4 = oriented_radius_exact(testing::undirected_cycle(4));
  EXPECT_EQ(c4.oriented_radius, 3);
  EXPECT_EQ(verify_orientation(testing::undirected_cycle(4), c4.witness).radius, 3);
  EXPECT_EQ(oriented_radius_naive(testing::undirected_cycle(4)).explored, 16u);
}

TEST(Oracle, LowerBoundFamily) {
  for (int r = 1; r <= 2; ++r) {
    const auto fam = gen_lower_bound(r);
    const auto res = oriented_radius_exact(fam.graph);
    EXPECT_EQ(res.oriented_radius, r * r + 3 * r - 1);
    EXPECT_LE(res.free_edges, 6);
    const auto v = verify_orientation(fam.graph, res.witness);
    EXPECT_TRUE(v.valid());
    EXPECT_EQ(v.radius, res.oriented_radius);
  }
}

TEST(Oracle, TooManyFreeEdges) {
  try {
    oriented_radius_exact(testing::undirected_cycle(3), 0);
    FAIL() << "expected TooManyFreeEdges";
  } catch (const TooManyFreeEdges& e) {
    EXPECT_EQ(e.free_edges(), 3);
  }
}

TEST(Oracle, MatchesBruteForceOnTinyGraphs) {
  int checked = 0;
  for (int n = 1; n <= 4; ++n) {
    for (int m = 0; m <= 5; ++m) {
      testing::for_each_small_graph(n, m, [&](const MixedMultigraph& g) {
        if (!is_strongly_orientable(g)) return;
        const int want = testing::oriented_radius_ref(g);
        ASSERT_EQ(oriented_radius_exact(g).oriented_radius, want);
        ASSERT_EQ(oriented_radius_naive(g).oriented_radius, want);
        ++checked;
      });
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(Oracle, ForcingDoesNotChangeValue) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const auto g = gen_random_strongly_orientable(3 + static_cast<int>(seed % 7), 0.8, seed);
    if (g.undirected_count() > 10) continue;
    const auto exact = oriented_radius_exact(g);
    ASSERT_EQ(exact.oriented_radius, oriented_radius_naive(g).oriented_radius) << seed;
    ASSERT_EQ(verify_orientation(g, exact.witness).radius, exact.oriented_radius);
  }
}

TEST(RandomGenerator, AlwaysOrientableAndDeterministic) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const int n = 1 + static_cast<int>(seed % 15);
    const auto g = gen_random_strongly_orientable(n, 0.5, seed);
    ASSERT_EQ(g.vertex_count(), n);
    ASSERT_TRUE(is_strongly_orientable(g)) << seed;
    ASSERT_EQ(g, gen_random_strongly_orientable(n, 0.5, seed));
  }
}

TEST(RandomGenerator, FullyDirectedAtZeroFraction) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = gen_random_strongly_orientable(8, 0.0, seed);
    ASSERT_EQ(g.undirected_count(), 0);
    ASSERT_TRUE(testing::strong_ref(g));
  }
}

TEST(RandomGenerator, SingleVertexAndErrors) {
  const auto g = gen_random_strongly_orientable(1, 0.5, 3);
  EXPECT_EQ(g.vertex_count(), 1);
  EXPECT_EQ(g.edge_count(), 0);
  EXPECT_THROW(gen_random_strongly_orientable(0, 0.5, 3), InvalidValue);
  EXPECT_THROW(gen_random_strongly_orientable(4, 1.5, 3), InvalidValue);
}

}  // namespace
}  // namespace mixorient
