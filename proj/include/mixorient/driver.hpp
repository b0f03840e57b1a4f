#pragma once

#include <map>
#include <optional>
#include <vector>

#include "mixorient/engine.hpp"
#include "mixorient/graph.hpp"

namespace mixorient {

/// Direction for every undirected edge of `source`; arcs of `source` are
/// left as they are.
struct Orientation {
  MixedMultigraph source;
  std::map<EdgeId, VertexId> direction_of;

  /// The oriented digraph; edge ids match `source`. Unassigned undirected
  /// edges stay undirected.
  MixedMultigraph apply() const;
  bool total() const;
};

enum class PhaseMode { Out, In };

struct PhaseReport {
  int phase_index = 0;
  PhaseMode mode = PhaseMode::Out;
  /// Center in the phase's contracted graph.
  VertexId center = kNoVertex;
  int captured_count = 0;
  int e_out = 0;
  int e_in = 0;
};

struct OrientationReport {
  int radius_before = 0;
  VertexId center = kNoVertex;
  int radius_after = 0;
  double bound = 0.0;
  std::vector<PhaseReport> phases;
  std::optional<int> eta_used;
};

/// Everything one phase saw, kept on request for auditing.
struct PhaseTrace {
  int phase_index = 0;
  PhaseMode mode = PhaseMode::Out;
  MixedMultigraph graph;
  OrientedSubgraph subgraph;
  /// The phase's assignments translated to original edge ids and vertices.
  std::map<EdgeId, VertexId> original_assignments;
};

struct OrientationResult {
  Orientation orientation;
  OrientationReport report;
  std::vector<PhaseTrace> trace;
};

struct DriverOptions {
  bool keep_trace = false;
};

/// 1.5 r^2 + r + 1. Throws InvalidValue for r < 0.
double bound_theorem1(int r);
/// 1.5 r eta - 0.375 (eta-1)(eta-3) - 2r + 1. Throws EtaOutOfRange unless
/// 3 <= eta <= 2r+1.
double bound_theorem2(int r, int eta);
/// 3d^2 + 2d + 2.
long long diameter_bound(int d);

/// r-phase orientation with the balanced split of the odd phase weights.
/// Throws NotStronglyOrientable.
OrientationResult strong_orientation(const MixedMultigraph& g, DriverOptions options = {});

/// Variant whose phase split uses weights min(eta, 2i+1) - 2 with eta
/// measured once on `g`.
OrientationResult strong_orientation_eta(const MixedMultigraph& g, DriverOptions options = {});

struct VerificationReport {
  bool total = false;
  bool strongly_connected = false;
  int radius = 0;
  int diameter = 0;
  int source_radius = 0;
  int source_diameter = 0;
  bool within_radius_bound = false;
  bool within_diameter_bound = false;

  bool valid() const { return total && strongly_connected; }
};

/// Checks an orientation of `g`. Throws SourceMismatch if `o.source != g`.
/// Radius and diameter fields are only meaningful when the result is strong.
VerificationReport verify_orientation(const MixedMultigraph& g, const Orientation& o);

}  // namespace mixorient
