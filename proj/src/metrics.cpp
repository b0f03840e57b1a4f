#include "mixorient/metrics.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "mixorient/errors.hpp"

namespace mixorient {
namespace {

bool walkable(const Edge& e, VertexId from, Direction direction) {
  return direction == Direction::Forward ? e.leaves(from) : e.enters(from);
}

void check_vertex(const MixedMultigraph& g, VertexId v) {
  if (!g.contains(v)) throw std::out_of_range("vertex out of range: " + std::to_string(v));
}

}  // namespace

int DistanceVector::max() const {
  int best = 0;
  for (int d : dist) best = std::max(best, d);
  return best;
}

std::vector<EdgeId> BfsTree::path_to_root(VertexId v) const {
  std::vector<EdgeId> path;
  while (v != root) {
    const auto i = static_cast<std::size_t>(v);
    if (parent_edge[i] == kNoEdge) throw std::logic_error("vertex not in BFS tree");
    path.push_back(parent_edge[i]);
    v = parent[i];
  }
  return path;
}

std::vector<int> bfs_distances(const MixedMultigraph& g, VertexId root, Direction direction,
                               EdgeId skip) {
  check_vertex(g, root);
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), kInfinity);
  std::vector<VertexId> queue;
  queue.reserve(dist.size());
  dist[static_cast<std::size_t>(root)] = 0;
  queue.push_back(root);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId x = queue[head];
    const int next = dist[static_cast<std::size_t>(x)] + 1;
    for (EdgeId id : g.incident(x)) {
      if (id == skip) continue;
      const Edge& e = g.edge(id);
      if (!walkable(e, x, direction)) continue;
      const VertexId y = e.other(x);
      if (dist[static_cast<std::size_t>(y)] == kInfinity) {
        dist[static_cast<std::size_t>(y)] = next;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

BfsTree bfs_tree(const MixedMultigraph& g, VertexId root, Direction direction, EdgeId skip) {
  BfsTree tree;
  tree.root = root;
  tree.direction = direction;
  tree.dist = bfs_distances(g, root, direction, skip);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  tree.parent.assign(n, kNoVertex);
  tree.parent_edge.assign(n, kNoEdge);
  // A parent edge runs from the parent towards v in the traversal direction,
  // i.e. seen from v it is walkable in the opposite direction.
  const Direction back = direction == Direction::Forward ? Direction::Backward : Direction::Forward;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const int d = tree.dist[static_cast<std::size_t>(v)];
    if (v == root || d == kInfinity) continue;
    for (EdgeId id : g.incident(v)) {
      if (id == skip) continue;
      const Edge& e = g.edge(id);
      if (e.is_loop() || !walkable(e, v, back)) continue;
      const VertexId p = e.other(v);
      if (tree.dist[static_cast<std::size_t>(p)] != d - 1) continue;
      const auto i = static_cast<std::size_t>(v);
      if (tree.parent[i] == kNoVertex || p < tree.parent[i] ||
          (p == tree.parent[i] && id < tree.parent_edge[i])) {
        tree.parent[i] = p;
        tree.parent_edge[i] = id;
      }
    }
  }
  return tree;
}

DistanceVector distances_from(const MixedMultigraph& g, VertexId s) {
  return DistanceVector{s, bfs_distances(g, s, Direction::Forward)};
}

DistanceVector distances_to(const MixedMultigraph& g, VertexId t) {
  return DistanceVector{t, bfs_distances(g, t, Direction::Backward)};
}

int eccentricity(const MixedMultigraph& g, VertexId v) {
  const int out = distances_from(g, v).max();
  if (out == kInfinity) return kInfinity;
  return std::max(out, distances_to(g, v).max());
}

std::vector<int> eccentricities(const MixedMultigraph& g) {
  const int n = g.vertex_count();
  std::vector<int> ecc(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 4)
  for (int v = 0; v < n; ++v) ecc[static_cast<std::size_t>(v)] = eccentricity(g, v);
  return ecc;
}

std::vector<int> eccentricities_serial(const MixedMultigraph& g) {
  std::vector<int> ecc(static_cast<std::size_t>(g.vertex_count()));
  for (VertexId v = 0; v < g.vertex_count(); ++v) ecc[static_cast<std::size_t>(v)] = eccentricity(g, v);
  return ecc;
}

RadiusCenter radius_center(const MixedMultigraph& g) {
  if (g.vertex_count() == 0) throw InvalidValue("radius of an empty graph");
  const std::vector<int> ecc = eccentricities(g);
  RadiusCenter rc;
  rc.radius = *std::min_element(ecc.begin(), ecc.end());
  if (*std::max_element(ecc.begin(), ecc.end()) == kInfinity) {
    throw DisconnectedGraph("graph is not strongly connected");
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (ecc[static_cast<std::size_t>(v)] == rc.radius) rc.centers.push_back(v);
  }
  return rc;
}

int diameter(const MixedMultigraph& g) {
  if (g.vertex_count() == 0) throw InvalidValue("diameter of an empty graph");
  const std::vector<int> ecc = eccentricities(g);
  const int d = *std::max_element(ecc.begin(), ecc.end());
  if (d == kInfinity) throw DisconnectedGraph("graph is not strongly connected");
  return d;
}

bool is_strongly_connected(const MixedMultigraph& g) {
  if (g.vertex_count() == 0) return true;
  for (Direction dir : {Direction::Forward, Direction::Backward}) {
    const auto dist = bfs_distances(g, 0, dir);
    if (std::find(dist.begin(), dist.end(), kInfinity) != dist.end()) return false;
  }
  return true;
}

std::vector<EdgeId> bridges(const MixedMultigraph& g) {
  // Iterative lowlink search on the underlying undirected multigraph. The
  // tree edge is skipped by id, so a parallel partner counts as a back edge.
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> order(n, -1), low(n, 0);
  std::vector<EdgeId> result;
  struct Frame {
    VertexId v;
    EdgeId via;
    std::size_t next;
  };
  int clock = 0;
  for (VertexId start = 0; start < g.vertex_count(); ++start) {
    if (order[static_cast<std::size_t>(start)] != -1) continue;
    std::vector<Frame> stack{{start, kNoEdge, 0}};
    order[static_cast<std::size_t>(start)] = low[static_cast<std::size_t>(start)] = clock++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto inc = g.incident(f.v);
      if (f.next < inc.size()) {
        const EdgeId id = inc[f.next++];
        if (id == f.via) continue;
        const Edge& e = g.edge(id);
        if (e.is_loop()) continue;
        const VertexId w = e.other(f.v);
        const auto wi = static_cast<std::size_t>(w);
        if (order[wi] == -1) {
          order[wi] = low[wi] = clock++;
          stack.push_back({w, id, 0});
        } else {
          low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], order[wi]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (stack.empty()) break;
      const auto pv = static_cast<std::size_t>(stack.back().v);
      const auto dv = static_cast<std::size_t>(done.v);
      low[pv] = std::min(low[pv], low[dv]);
      if (low[dv] > order[pv] && !g.edge(done.via).directed()) result.push_back(done.via);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

bool is_strongly_orientable(const MixedMultigraph& g) {
  return is_strongly_connected(g) && bridges(g).empty();
}

ContractionMap contract(const MixedMultigraph& g, std::span<const VertexId> vertices) {
  if (vertices.empty()) throw EmptySet("cannot contract an empty vertex set");
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<bool> merged(n, false);
  for (VertexId v : vertices) {
    check_vertex(g, v);
    merged[static_cast<std::size_t>(v)] = true;
  }
  ContractionMap cm;
  cm.class_of_vertex.assign(n, kNoVertex);
  VertexId next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (!merged[v]) {
      cm.class_of_vertex[v] = next++;
    } else if (cm.super_vertex == kNoVertex) {
      cm.super_vertex = next++;
      cm.class_of_vertex[v] = cm.super_vertex;
    } else {
      cm.class_of_vertex[v] = cm.super_vertex;
    }
  }
  cm.quotient = MixedMultigraph(next);
  for (const Edge& e : g.edges()) {
    if (merged[static_cast<std::size_t>(e.tail)] && merged[static_cast<std::size_t>(e.head)]) continue;
    cm.quotient.add_edge(cm.class_of_vertex[static_cast<std::size_t>(e.tail)],
                         cm.class_of_vertex[static_cast<std::size_t>(e.head)], e.kind);
    cm.origin_of_edge.push_back(e.id);
  }
  return cm;
}

}  // namespace mixorient
