#pragma once

#include <map>
#include <string>
#include <vector>

#include "mixorient/graph.hpp"

namespace mixorient {

/// Direction decisions keyed by edge id; the value is the chosen head.
using Assignment = std::map<EdgeId, VertexId>;

/// Neighbourhood of the phase center after the incident-edge stage.
/// x_in holds neighbours with an arc into the center, x_out those with only
/// arcs out of it, x_conf the conflicted ones whose single undirected edge was
/// left alone. x_un is what is still unprocessed, so it is empty once the
/// incident-edge stage has run.
struct NeighborClassification {
  VertexId center = kNoVertex;
  std::vector<VertexId> x_in;
  std::vector<VertexId> x_out;
  std::vector<VertexId> x_un;
  std::vector<VertexId> x_conf;
  std::map<VertexId, int> l_of;
  int s = 0;

  /// All classified neighbours, ascending.
  std::vector<VertexId> neighbors() const;
};

struct Stage0Result {
  MixedMultigraph graph;
  Assignment commitments;
};

/// Resolves parallel bundles at `u` so each bundle holding an undirected edge
/// ends up with arcs both ways; surplus undirected members point at `u`.
Stage0Result normalize_multiedges(const MixedMultigraph& g, VertexId u);

struct Stage1Result {
  MixedMultigraph graph;
  NeighborClassification classification;
  Assignment commitments;
};

/// Classifies the neighbours of `u` and orients every single undirected edge
/// at `u` whose orientation keeps the sum of shortest-cycle lengths s fixed,
/// preferring v -> u over u -> v. Neighbours are taken in ascending id order.
/// Throws NotNormalized if a parallel bundle at `u` still has an undirected
/// member.
Stage1Result stage1(const MixedMultigraph& g, VertexId u);

struct Guarantee {
  int max_out = 0;
  int max_in = 0;
};

/// One phase's output: the captured vertices and the directions it commits.
struct OrientedSubgraph {
  VertexId center = kNoVertex;
  /// Ascending.
  std::vector<VertexId> captured;
  Assignment assignments;
  std::vector<EdgeId> tree_out_edges;
  std::vector<EdgeId> tree_in_edges;
  Guarantee guarantee;
  NeighborClassification classification;
  /// Non-fatal findings, e.g. a conflicted neighbour missed by the out-tree.
  std::vector<std::string> diagnostics;
};

/// Out-first phase: out-distances from `u` at most 2r and in-distances at
/// most 4r-1 inside the returned subgraph, which contains every neighbour of
/// `u`. A conflicted neighbour the out-tree misses gets its edge oriented
/// away from `u`, joins the in-tree targets and is noted in `diagnostics`.
/// Requires a strongly orientable loop-free graph in which `u` has
/// eccentricity at most r; throws PreconditionViolated otherwise.
OrientedSubgraph orient_out(const MixedMultigraph& g, VertexId u, int r);

/// Mirror of orient_out(), run on the arc-reversed graph.
OrientedSubgraph orient_in(const MixedMultigraph& g, VertexId u, int r);

/// Digraph on the vertex set of `g` holding, among captured vertices, the
/// arcs of `g` plus the assigned edges. Other edges are left out.
MixedMultigraph phase_digraph(const MixedMultigraph& g, const OrientedSubgraph& h);

struct PhaseEccentricity {
  int out = 0;
  int in = 0;
};

/// Out- and in-eccentricity of the center over captured vertices, measured
/// in phase_digraph().
PhaseEccentricity phase_eccentricity(const MixedMultigraph& g, const OrientedSubgraph& h);

}  // namespace mixorient
