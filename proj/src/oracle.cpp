#include "mixorient/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <limits>
#include <vector>

#include "mixorient/errors.hpp"
#include "mixorient/metrics.hpp"

namespace mixorient {
namespace {

void require_orientable(const MixedMultigraph& g) {
  if (g.vertex_count() == 0 || g.has_loop() || !is_strongly_orientable(g)) {
    throw NotStronglyOrientable("graph is not strongly orientable");
  }
}

/// Radius of a fully directed graph, kInfinity if it is not strong.
int digraph_radius(const MixedMultigraph& d) {
  if (!is_strongly_connected(d)) return kInfinity;
  int best = kInfinity;
  for (VertexId v = 0; v < d.vertex_count(); ++v) best = std::min(best, eccentricity(d, v));
  return best;
}

struct Best {
  int radius = kInfinity;
  std::uint64_t code = std::numeric_limits<std::uint64_t>::max();

  void offer(int r, std::uint64_t c) {
    if (r < radius || (r == radius && c < code)) {
      radius = r;
      code = c;
    }
  }
};

void set_bit(MixedMultigraph& d, const MixedMultigraph& base, EdgeId e, bool flipped) {
  const Edge& edge = base.edge(e);
  d.orient(e, flipped ? edge.tail : edge.head);
}

OracleResult finish(const MixedMultigraph& g, const MixedMultigraph& base,
                    const std::vector<EdgeId>& free_edges, const Best& best) {
  if (best.radius == kInfinity) throw NotStronglyOrientable("no strong orientation exists");
  OracleResult result;
  result.oriented_radius = best.radius;
  result.free_edges = static_cast<int>(free_edges.size());
  result.explored = std::uint64_t{1} << free_edges.size();
  result.witness.source = g;
  for (const Edge& e : base.edges()) {
    if (!g.edge(e.id).directed()) result.witness.direction_of[e.id] = e.head;
  }
  for (std::size_t k = 0; k < free_edges.size(); ++k) {
    const Edge& e = base.edge(free_edges[k]);
    const bool flipped = (best.code >> k) & 1U;
    result.witness.direction_of[e.id] = flipped ? e.tail : e.head;
  }
  return result;
}

}  // namespace

ForcedResult forced_orientations(const MixedMultigraph& g) {
  require_orientable(g);
  ForcedResult result{g, {}};
  for (bool changed = true; changed;) {
    changed = false;
    for (const Edge& e : g.edges()) {
      if (result.graph.edge(e.id).directed()) continue;
      bool viable[2];
      const VertexId heads[2] = {e.head, e.tail};
      for (int k = 0; k < 2; ++k) {
        MixedMultigraph trial = result.graph;
        trial.orient(e.id, heads[k]);
        viable[k] = is_strongly_orientable(trial);
      }
      if (viable[0] == viable[1]) continue;
      const VertexId head = viable[0] ? heads[0] : heads[1];
      result.graph.orient(e.id, head);
      result.forced[e.id] = head;
      changed = true;
    }
  }
  return result;
}

OracleResult oriented_radius_exact(const MixedMultigraph& g, int max_free) {
  const ForcedResult forced = forced_orientations(g);
  std::vector<EdgeId> free_edges;
  for (const Edge& e : forced.graph.edges()) {
    if (!e.directed()) free_edges.push_back(e.id);
  }
  const int k = static_cast<int>(free_edges.size());
  if (k > max_free) throw TooManyFreeEdges(k);

  // Code bit j set means free edge j runs head -> tail relative to `base`.
  MixedMultigraph base = forced.graph;
  for (EdgeId e : free_edges) base.orient(e, base.edge(e).head);

  const std::uint64_t total = std::uint64_t{1} << k;
  Best best;
#pragma omp parallel
  {
    const auto threads = static_cast<std::uint64_t>(omp_get_num_threads());
    const auto id = static_cast<std::uint64_t>(omp_get_thread_num());
    const std::uint64_t lo = total * id / threads;
    const std::uint64_t hi = total * (id + 1) / threads;
    Best local;
    if (lo < hi) {
      MixedMultigraph d = base;
      std::uint64_t code = lo ^ (lo >> 1);
      for (int j = 0; j < k; ++j) set_bit(d, base, free_edges[static_cast<std::size_t>(j)], (code >> j) & 1U);
      for (std::uint64_t i = lo;;) {
        local.offer(digraph_radius(d), code);
        if (++i == hi) break;
        // Gray codes of i-1 and i differ in the lowest set bit of i.
        const int j = std::countr_zero(i);
        code ^= std::uint64_t{1} << j;
        set_bit(d, base, free_edges[static_cast<std::size_t>(j)], (code >> j) & 1U);
      }
    }
#pragma omp critical
    best.offer(local.radius, local.code);
  }
  OracleResult result = finish(g, base, free_edges, best);
  result.forced_count = static_cast<int>(forced.forced.size());
  return result;
}

OracleResult oriented_radius_naive(const MixedMultigraph& g, int max_free) {
  require_orientable(g);
  std::vector<EdgeId> free_edges;
  for (const Edge& e : g.edges()) {
    if (!e.directed()) free_edges.push_back(e.id);
  }
  const int k = static_cast<int>(free_edges.size());
  if (k > max_free) throw TooManyFreeEdges(k);
  MixedMultigraph base = g;
  for (EdgeId e : free_edges) base.orient(e, base.edge(e).head);
  Best best;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << k); ++code) {
    MixedMultigraph d = base;
    for (int j = 0; j < k; ++j) set_bit(d, base, free_edges[static_cast<std::size_t>(j)], (code >> j) & 1U);
    best.offer(digraph_radius(d), code);
  }
  return finish(g, base, free_edges, best);
}

}  // namespace mixorient
