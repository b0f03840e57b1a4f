#include "mixorient/driver.hpp"

#include <algorithm>
#include <string>

#include "mixorient/cycles.hpp"
#include "mixorient/errors.hpp"
#include "mixorient/metrics.hpp"
#include "mixorient/partition.hpp"

namespace mixorient {
namespace {

OrientationResult run_phases(const MixedMultigraph& g, const DriverOptions& options,
                             bool use_eta) {
  if (g.has_loop()) throw NotStronglyOrientable("graph has a self-loop");
  if (g.vertex_count() == 0 || !is_strongly_orientable(g)) {
    throw NotStronglyOrientable("graph is not strongly connected and bridgeless");
  }
  OrientationResult result;
  result.orientation.source = g;
  OrientationReport& report = result.report;

  const RadiusCenter rc = radius_center(g);
  const int r = rc.radius;
  report.radius_before = r;
  report.center = rc.centers.front();

  PhasePlan plan;
  if (r == 0) {
    report.bound = bound_theorem1(0);
  } else if (use_eta) {
    const int measured = eta(g);
    report.eta_used = measured;
    // Every cycle of length 2 is also within 3, so eta 2 plans as 3.
    const int planned = std::max(measured, 3);
    plan = phase_plan_eta(r, planned);
    report.bound = bound_theorem2(r, planned);
  } else {
    plan = phase_plan(r);
    report.bound = bound_theorem1(r);
  }

  MixedMultigraph current = g;
  std::vector<EdgeId> origin(static_cast<std::size_t>(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) origin[static_cast<std::size_t>(e)] = e;
  std::vector<VertexId> class_of(static_cast<std::size_t>(g.vertex_count()));
  for (VertexId v = 0; v < g.vertex_count(); ++v) class_of[static_cast<std::size_t>(v)] = v;
  VertexId center = report.center;

  auto& directions = result.orientation.direction_of;
  for (int i = r; i >= 1 && current.vertex_count() > 1; --i) {
    const PhaseMode mode = plan.is_out(i) ? PhaseMode::Out : PhaseMode::In;
    OrientedSubgraph h = mode == PhaseMode::Out ? orient_out(current, center, i)
                                                : orient_in(current, center, i);
    const PhaseEccentricity ecc = phase_eccentricity(current, h);
    report.phases.push_back(PhaseReport{i, mode, center, static_cast<int>(h.captured.size()),
                                        ecc.out, ecc.in});

    std::map<EdgeId, VertexId> translated;
    for (const auto& [qe, q_head] : h.assignments) {
      const EdgeId e = origin[static_cast<std::size_t>(qe)];
      const Edge& edge = g.edge(e);
      const VertexId head =
          class_of[static_cast<std::size_t>(edge.head)] == q_head ? edge.head : edge.tail;
      if (!directions.emplace(e, head).second) {
        throw std::logic_error("phases assigned edge " + std::to_string(e) + " twice");
      }
      translated.emplace(e, head);
    }

    ContractionMap cm = contract(current, h.captured);
    if (options.keep_trace) {
      result.trace.push_back(PhaseTrace{i, mode, std::move(current), std::move(h),
                                        std::move(translated)});
    }
    for (EdgeId& e : cm.origin_of_edge) e = origin[static_cast<std::size_t>(e)];
    origin = std::move(cm.origin_of_edge);
    for (VertexId& c : class_of) c = cm.class_of_vertex[static_cast<std::size_t>(c)];
    current = std::move(cm.quotient);
    center = cm.super_vertex;
  }

  // Whatever no phase touched points from the lower id to the higher one.
  for (const Edge& e : g.edges()) {
    if (!e.directed() && !directions.contains(e.id)) {
      directions.emplace(e.id, std::max(e.tail, e.head));
    }
  }
  report.radius_after = radius_center(result.orientation.apply()).radius;
  return result;
}

}  // namespace

MixedMultigraph Orientation::apply() const {
  MixedMultigraph out = source;
  for (const auto& [e, head] : direction_of) {
    if (!source.edge(e).directed()) out.orient(e, head);
  }
  return out;
}

bool Orientation::total() const {
  for (const Edge& e : source.edges()) {
    if (e.directed()) continue;
    auto it = direction_of.find(e.id);
    if (it == direction_of.end() || (it->second != e.tail && it->second != e.head)) return false;
  }
  return true;
}

double bound_theorem1(int r) {
  if (r < 0) throw InvalidValue("negative radius");
  return 1.5 * r * r + r + 1.0;
}

double bound_theorem2(int r, int eta) {
  if (r < 0) throw InvalidValue("negative radius");
  if (eta < 3 || eta > 2 * r + 1) {
    throw EtaOutOfRange("eta " + std::to_string(eta) + " outside [3, " + std::to_string(2 * r + 1) +
                        "]");
  }
  return 1.5 * r * eta - 0.375 * (eta - 1) * (eta - 3) - 2.0 * r + 1.0;
}

long long diameter_bound(int d) {
  const long long dd = d;
  return 3 * dd * dd + 2 * dd + 2;
}

OrientationResult strong_orientation(const MixedMultigraph& g, DriverOptions options) {
  return run_phases(g, options, false);
}

OrientationResult strong_orientation_eta(const MixedMultigraph& g, DriverOptions options) {
  return run_phases(g, options, true);
}

VerificationReport verify_orientation(const MixedMultigraph& g, const Orientation& o) {
  if (!(o.source == g)) throw SourceMismatch("orientation was computed for a different graph");
  VerificationReport v;
  v.total = o.total();
  if (g.vertex_count() == 0) return v;
  const MixedMultigraph d = o.apply();
  v.strongly_connected = v.total && is_strongly_connected(d);
  if (!v.strongly_connected) return v;
  const std::vector<int> ecc = eccentricities(d);
  v.radius = *std::min_element(ecc.begin(), ecc.end());
  v.diameter = *std::max_element(ecc.begin(), ecc.end());
  // An orientation only removes walks, so a strong result implies a strong source.
  const std::vector<int> src = eccentricities(g);
  v.source_radius = *std::min_element(src.begin(), src.end());
  v.source_diameter = *std::max_element(src.begin(), src.end());
  v.within_radius_bound = v.radius <= bound_theorem1(v.source_radius);
  v.within_diameter_bound = v.diameter <= diameter_bound(v.source_diameter);
  return v;
}

}  // namespace mixorient
