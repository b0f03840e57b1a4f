#pragma once

#include <span>
#include <vector>

#include "mixorient/graph.hpp"

namespace mixorient {

/// Closed mixed walk that uses its query edge exactly once. `vertices[i]` is
/// where `edge_ids[i]` is entered from, so the walk is
/// vertices[0] -e0-> vertices[1] -e1-> ... -> vertices[0].
struct CycleWitness {
  int length = 0;
  std::vector<EdgeId> edge_ids;
  std::vector<VertexId> vertices;
};

/// Length of a shortest closed walk through `e` using it once, or kInfinity.
int shortest_cycle_length(const MixedMultigraph& g, EdgeId e);

/// Witnessed version of shortest_cycle_length(). Throws NoCycle when none exists.
CycleWitness shortest_cycle_through_edge(const MixedMultigraph& g, EdgeId e);

/// l(v): shortest cycle length over all edges joining u and v; kInfinity if
/// none of them lies on a cycle. Throws NoSuchEdge if u and v are not adjacent.
int l_value(const MixedMultigraph& g, VertexId u, VertexId v);

/// Sum of l_value(g, u, x) over x in `xs`; kInfinity if any term is infinite.
/// OpenMP-parallel over `xs`.
int s_value(const MixedMultigraph& g, VertexId u, std::span<const VertexId> xs);
int s_value_serial(const MixedMultigraph& g, VertexId u, std::span<const VertexId> xs);

/// Smallest k such that every edge lies on a cycle of length at most k.
int eta(const MixedMultigraph& g);

}  // namespace mixorient
