#pragma once

#include <limits>
#include <span>
#include <vector>

#include "mixorient/graph.hpp"

namespace mixorient {

/// Distance value used for unreachable vertices.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

/// Forward follows edges the way they can be walked; Backward walks them in
/// reverse, which yields distances *to* the root.
enum class Direction { Forward, Backward };

struct DistanceVector {
  VertexId source = kNoVertex;
  std::vector<int> dist;

  bool reachable(VertexId v) const { return dist[static_cast<std::size_t>(v)] != kInfinity; }
  int operator[](VertexId v) const { return dist[static_cast<std::size_t>(v)]; }
  /// Largest entry; kInfinity if some vertex is unreachable.
  int max() const;
};

/// Breadth-first tree with canonical parents: the parent of `v` is the
/// lowest-id vertex one layer closer to the root that has an edge towards
/// `v`, and among such edges the lowest edge id.
struct BfsTree {
  VertexId root = kNoVertex;
  Direction direction = Direction::Forward;
  std::vector<int> dist;
  std::vector<VertexId> parent;
  std::vector<EdgeId> parent_edge;

  /// Edge ids on the tree path between `v` and the root, starting at `v`.
  std::vector<EdgeId> path_to_root(VertexId v) const;
};

std::vector<int> bfs_distances(const MixedMultigraph& g, VertexId root, Direction direction,
                               EdgeId skip = kNoEdge);
BfsTree bfs_tree(const MixedMultigraph& g, VertexId root, Direction direction,
                 EdgeId skip = kNoEdge);

DistanceVector distances_from(const MixedMultigraph& g, VertexId s);
DistanceVector distances_to(const MixedMultigraph& g, VertexId t);

/// max(in-eccentricity, out-eccentricity) of `v`, kInfinity when some vertex
/// cannot be reached in one of the two directions.
int eccentricity(const MixedMultigraph& g, VertexId v);

/// Eccentricity of every vertex. OpenMP-parallel over source vertices.
std::vector<int> eccentricities(const MixedMultigraph& g);
/// Single-threaded reference for eccentricities().
std::vector<int> eccentricities_serial(const MixedMultigraph& g);

struct RadiusCenter {
  int radius = 0;
  std::vector<VertexId> centers;
};

/// Throws DisconnectedGraph when the graph is not strongly connected.
RadiusCenter radius_center(const MixedMultigraph& g);
int diameter(const MixedMultigraph& g);

bool is_strongly_connected(const MixedMultigraph& g);

/// Undirected edges that are cut-edges of the underlying undirected
/// multigraph, ascending. Directed edges are never reported.
std::vector<EdgeId> bridges(const MixedMultigraph& g);

/// Strongly connected and bridgeless.
bool is_strongly_orientable(const MixedMultigraph& g);

struct ContractionMap {
  MixedMultigraph quotient;
  VertexId super_vertex = kNoVertex;
  /// Quotient edge id -> original edge id.
  std::vector<EdgeId> origin_of_edge;
  /// Original vertex id -> quotient vertex id.
  std::vector<VertexId> class_of_vertex;
};

/// Merges `vertices` into one super-vertex, dropping the edges inside the
/// set. Surviving vertices keep their relative order and the super-vertex
/// takes the slot of the smallest merged id; quotient edges keep the original
/// edge order. Throws EmptySet on an empty set.
ContractionMap contract(const MixedMultigraph& g, std::span<const VertexId> vertices);

}  // namespace mixorient
