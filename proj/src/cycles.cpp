#include "mixorient/cycles.hpp"

#include <algorithm>
#include <string>

#include "mixorient/errors.hpp"
#include "mixorient/metrics.hpp"

namespace mixorient {
namespace {

// Return distance from `from` to `to` that avoids `skip`.
int return_distance(const MixedMultigraph& g, VertexId from, VertexId to, EdgeId skip) {
  return bfs_distances(g, from, Direction::Forward, skip)[static_cast<std::size_t>(to)];
}

int saturating_add(int a, int b) { return (a == kInfinity || b == kInfinity) ? kInfinity : a + b; }

}  // namespace

int shortest_cycle_length(const MixedMultigraph& g, EdgeId id) {
  const Edge& e = g.edge(id);
  if (e.is_loop()) return 1;
  if (e.directed()) return saturating_add(1, return_distance(g, e.head, e.tail, id));
  const int forward = return_distance(g, e.head, e.tail, id);
  const int backward = return_distance(g, e.tail, e.head, id);
  return saturating_add(1, std::min(forward, backward));
}

CycleWitness shortest_cycle_through_edge(const MixedMultigraph& g, EdgeId id) {
  const Edge& e = g.edge(id);
  CycleWitness w;
  if (e.is_loop()) {
    w.length = 1;
    w.edge_ids = {id};
    w.vertices = {e.tail};
    return w;
  }
  // Walk e as p -> q, then return q ~> p without e. For an undirected edge the
  // tail-to-head traversal wins ties.
  VertexId p = e.tail;
  VertexId q = e.head;
  if (!e.directed() &&
      return_distance(g, p, q, id) < return_distance(g, q, p, id)) {
    std::swap(p, q);
  }
  // A backward tree rooted at p gives every vertex's canonical path to p.
  const BfsTree tree = bfs_tree(g, p, Direction::Backward, id);
  if (tree.dist[static_cast<std::size_t>(q)] == kInfinity) {
    throw NoCycle("edge " + std::to_string(id) + " lies on no cycle");
  }
  w.edge_ids.push_back(id);
  w.vertices.push_back(p);
  VertexId at = q;
  while (at != p) {
    const auto i = static_cast<std::size_t>(at);
    w.vertices.push_back(at);
    w.edge_ids.push_back(tree.parent_edge[i]);
    at = tree.parent[i];
  }
  w.length = static_cast<int>(w.edge_ids.size());
  return w;
}

int l_value(const MixedMultigraph& g, VertexId u, VertexId v) {
  int best = kInfinity;
  bool adjacent = false;
  for (EdgeId id : g.incident(u)) {
    if (!g.edge(id).joins(u, v)) continue;
    adjacent = true;
    best = std::min(best, shortest_cycle_length(g, id));
  }
  if (!adjacent) {
    throw NoSuchEdge("no edge between " + std::to_string(u) + " and " + std::to_string(v));
  }
  return best;
}

int s_value(const MixedMultigraph& g, VertexId u, std::span<const VertexId> xs) {
  const int count = static_cast<int>(xs.size());
  std::vector<int> terms(xs.size());
  // Exceptions must not escape the parallel region; adjacency is checked first.
  for (VertexId x : xs) {
    const auto inc = g.incident(u);
    if (std::none_of(inc.begin(), inc.end(), [&](EdgeId id) { return g.edge(id).joins(u, x); })) {
      throw NoSuchEdge("no edge between " + std::to_string(u) + " and " + std::to_string(x));
    }
  }
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < count; ++i) {
    terms[static_cast<std::size_t>(i)] = l_value(g, u, xs[static_cast<std::size_t>(i)]);
  }
  int sum = 0;
  for (int t : terms) sum = saturating_add(sum, t);
  return sum;
}

int s_value_serial(const MixedMultigraph& g, VertexId u, std::span<const VertexId> xs) {
  int sum = 0;
  for (VertexId x : xs) sum = saturating_add(sum, l_value(g, u, x));
  return sum;
}

int eta(const MixedMultigraph& g) {
  if (g.edge_count() == 0) throw NoCycle("graph has no edges");
  int best = 0;
  for (const Edge& e : g.edges()) {
    const int len = shortest_cycle_length(g, e.id);
    if (len == kInfinity) throw NoCycle("edge " + std::to_string(e.id) + " lies on no cycle");
    best = std::max(best, len);
  }
  return best;
}

}  // namespace mixorient
