#pragma once

#include <cstdint>
#include <vector>

#include "mixorient/driver.hpp"
#include "mixorient/graph.hpp"

namespace mixorient {

enum class ChildRole { Root, Left, Middle, Right };

/// A vertex of the ternary tree underlying one copy of the family.
struct TreeVertex {
  VertexId id = kNoVertex;
  /// 1 or 2; the shared root is listed once with copy 1.
  int copy = 1;
  int level = 0;
  ChildRole role = ChildRole::Root;
  VertexId parent = kNoVertex;
  EdgeId parent_edge = kNoEdge;
  /// Left, middle, right; kNoVertex for leaves.
  VertexId children[3] = {kNoVertex, kNoVertex, kNoVertex};

  bool internal() const { return children[0] != kNoVertex; }
};

/// Sibling detour path from `from` to `to` (left to middle, or middle to
/// right) whose middle edge is the only arc, pointing from -> to.
struct DetourPath {
  VertexId from = kNoVertex;
  VertexId to = kNoVertex;
  int level = 0;
  std::vector<EdgeId> edges;
  EdgeId middle_edge = kNoEdge;
};

/// Two copies of a ternary tree of height r glued at the root. For every
/// internal vertex at level i its left/middle and middle/right children are
/// joined by paths of length 2r-2i-1. Middle children are always leaves.
struct LowerBoundFamily {
  int r = 0;
  MixedMultigraph graph;
  VertexId root = kNoVertex;
  std::vector<TreeVertex> tree;
  std::vector<DetourPath> paths;

  /// Entry of `tree` for vertex v, or nullptr for path-internal vertices.
  const TreeVertex* tree_vertex(VertexId v) const;
};

LowerBoundFamily gen_lower_bound(int r);

/// Orientation of radius r^2 + 3r - 1: forced directions along the detours
/// and tree edges, the root's middle edges outward, and every other middle
/// edge at a vertex y pointing the same way relative to y as y's own tree
/// edge: into y when the parent edge enters y, out of y when it leaves y.
Orientation optimal_lower_bound_orientation(const LowerBoundFamily& family);

/// Random strongly orientable mixed multigraph: a random Hamiltonian cycle
/// plus random extra edges, each undirected with probability
/// `undirected_fraction`, patched with undirected edges until bridgeless.
/// Deterministic per seed.
MixedMultigraph gen_random_strongly_orientable(int n, double undirected_fraction,
                                               std::uint64_t seed);

}  // namespace mixorient
