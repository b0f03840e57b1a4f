#include "mixorient/engine.hpp"

#include <algorithm>
#include <set>

#include "mixorient/cycles.hpp"
#include "mixorient/errors.hpp"
#include "mixorient/metrics.hpp"

namespace mixorient {
namespace {

/// Edges between u and each neighbour, grouped per neighbour.
std::map<VertexId, std::vector<EdgeId>> bundles_at(const MixedMultigraph& g, VertexId u) {
  std::map<VertexId, std::vector<EdgeId>> out;
  for (EdgeId id : g.incident(u)) {
    const Edge& e = g.edge(id);
    if (!e.is_loop()) out[e.other(u)].push_back(id);
  }
  return out;
}

void commit(MixedMultigraph& g, Assignment& log, EdgeId e, VertexId head) {
  g.orient(e, head);
  log[e] = head;
}

void merge_into(Assignment& dst, const Assignment& src) {
  for (const auto& [e, head] : src) {
    if (!dst.emplace(e, head).second) throw std::logic_error("edge assigned twice in one phase");
  }
}

}  // namespace

std::vector<VertexId> NeighborClassification::neighbors() const {
  std::vector<VertexId> all;
  for (const auto* part : {&x_in, &x_out, &x_un, &x_conf}) all.insert(all.end(), part->begin(), part->end());
  std::sort(all.begin(), all.end());
  return all;
}

Stage0Result normalize_multiedges(const MixedMultigraph& g, VertexId u) {
  Stage0Result result{g, {}};
  for (const auto& [v, ids] : bundles_at(g, u)) {
    if (ids.size() < 2) continue;
    bool has_out = false;
    bool has_in = false;
    std::vector<EdgeId> loose;
    for (EdgeId id : ids) {
      const Edge& e = g.edge(id);
      if (!e.directed()) {
        loose.push_back(id);
      } else if (e.tail == u) {
        has_out = true;
      } else {
        has_in = true;
      }
    }
    for (EdgeId id : loose) {
      if (!has_out) {
        commit(result.graph, result.commitments, id, v);
        has_out = true;
      } else if (!has_in) {
        commit(result.graph, result.commitments, id, u);
        has_in = true;
      } else {
        commit(result.graph, result.commitments, id, u);
      }
    }
  }
  return result;
}

Stage1Result stage1(const MixedMultigraph& g, VertexId u) {
  Stage1Result result{g, {}, {}};
  NeighborClassification& cls = result.classification;
  cls.center = u;

  std::vector<VertexId> xs;
  std::map<VertexId, EdgeId> single_edge;
  for (const auto& [v, ids] : bundles_at(g, u)) {
    xs.push_back(v);
    bool into_u = false;
    bool out_of_u = false;
    bool loose = false;
    for (EdgeId id : ids) {
      const Edge& e = g.edge(id);
      if (!e.directed()) {
        loose = true;
      } else if (e.head == u) {
        into_u = true;
      } else {
        out_of_u = true;
      }
    }
    if (loose && ids.size() > 1) {
      throw NotNormalized("parallel bundle between " + std::to_string(u) + " and " +
                          std::to_string(v) + " still has an undirected edge");
    }
    if (into_u) {
      cls.x_in.push_back(v);
    } else if (out_of_u) {
      cls.x_out.push_back(v);
    } else {
      cls.x_un.push_back(v);
      single_edge[v] = ids.front();
    }
  }

  for (VertexId v : xs) {
    const int l = l_value(g, u, v);
    if (l == kInfinity) {
      throw PreconditionViolated("edge between " + std::to_string(u) + " and " + std::to_string(v) +
                                 " lies on no cycle");
    }
    cls.l_of[v] = l;
    cls.s += l;
  }

  const std::vector<VertexId> pending = std::move(cls.x_un);
  cls.x_un.clear();
  for (VertexId v : pending) {
    const EdgeId e = single_edge.at(v);
    bool placed = false;
    for (VertexId head : {u, v}) {
      MixedMultigraph trial = result.graph;
      trial.orient(e, head);
      if (s_value(trial, u, xs) != cls.s) continue;
      result.graph = std::move(trial);
      result.commitments[e] = head;
      (head == u ? cls.x_in : cls.x_out).push_back(v);
      placed = true;
      break;
    }
    if (!placed) cls.x_conf.push_back(v);
  }
  return result;
}

OrientedSubgraph orient_out(const MixedMultigraph& g, VertexId u, int r) {
  if (!g.contains(u)) throw PreconditionViolated("center out of range");
  if (g.has_loop()) throw PreconditionViolated("graph has a self-loop");
  if (!is_strongly_orientable(g)) throw PreconditionViolated("graph is not strongly orientable");
  const int ecc = eccentricity(g, u);
  if (ecc > r) {
    throw PreconditionViolated("center eccentricity " + std::to_string(ecc) + " exceeds " +
                               std::to_string(r));
  }

  OrientedSubgraph h;
  h.center = u;
  h.guarantee = {2 * r, 4 * r - 1};
  h.classification.center = u;
  if (g.vertex_count() == 1) {
    h.captured = {u};
    h.guarantee = {0, 0};
    return h;
  }

  Stage0Result s0 = normalize_multiedges(g, u);
  Stage1Result s1 = stage1(s0.graph, u);
  h.classification = s1.classification;
  merge_into(h.assignments, s0.commitments);
  merge_into(h.assignments, s1.commitments);
  const NeighborClassification& cls = h.classification;

  // Out-tree: canonical BFS tree from u pruned to the paths reaching x_in.
  MixedMultigraph g2 = std::move(s1.graph);
  const BfsTree out_tree = bfs_tree(g2, u, Direction::Forward);
  std::vector<bool> in_s1(static_cast<std::size_t>(g.vertex_count()), false);
  in_s1[static_cast<std::size_t>(u)] = true;
  std::set<EdgeId> out_edges;
  Assignment tree_dirs;
  for (VertexId x : cls.x_in) {
    if (out_tree.dist[static_cast<std::size_t>(x)] == kInfinity) {
      throw PreconditionViolated("neighbour " + std::to_string(x) + " unreachable from center");
    }
    for (VertexId v = x; v != u && !in_s1[static_cast<std::size_t>(v)];
         v = out_tree.parent[static_cast<std::size_t>(v)]) {
      in_s1[static_cast<std::size_t>(v)] = true;
      const EdgeId e = out_tree.parent_edge[static_cast<std::size_t>(v)];
      out_edges.insert(e);
      if (!g2.edge(e).directed()) tree_dirs[e] = v;
    }
  }
  for (const auto& [e, head] : tree_dirs) g2.orient(e, head);
  merge_into(h.assignments, tree_dirs);
  h.tree_out_edges.assign(out_edges.begin(), out_edges.end());

  // A conflicted neighbour the out-tree missed is handled like an x_out
  // neighbour: its edge is oriented away from u and the in-tree picks it up.
  std::vector<VertexId> pending_out;
  Assignment conf_dirs;
  for (VertexId v : cls.x_conf) {
    if (in_s1[static_cast<std::size_t>(v)]) continue;
    h.diagnostics.push_back("conflicted neighbour " + std::to_string(v) +
                            " is not on the out-tree; edge oriented away from the center");
    for (EdgeId id : g2.incident(u)) {
      if (g2.edge(id).joins(u, v)) conf_dirs[id] = v;
    }
    pending_out.push_back(v);
  }
  for (const auto& [e, head] : conf_dirs) g2.orient(e, head);
  merge_into(h.assignments, conf_dirs);

  std::vector<VertexId> s1_vertices;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (in_s1[static_cast<std::size_t>(v)]) s1_vertices.push_back(v);
  }
  std::vector<bool> captured = in_s1;

  // In-tree: reverse BFS towards the contracted out-tree, pruned to the paths
  // leaving the x_out neighbours it missed.
  for (VertexId y : cls.x_out) {
    if (!in_s1[static_cast<std::size_t>(y)]) pending_out.push_back(y);
  }
  std::sort(pending_out.begin(), pending_out.end());
  if (!pending_out.empty()) {
    const ContractionMap cm = contract(g2, s1_vertices);
    std::vector<VertexId> original_of(static_cast<std::size_t>(cm.quotient.vertex_count()), kNoVertex);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (!in_s1[static_cast<std::size_t>(v)]) {
        original_of[static_cast<std::size_t>(cm.class_of_vertex[static_cast<std::size_t>(v)])] = v;
      }
    }
    const BfsTree in_tree = bfs_tree(cm.quotient, cm.super_vertex, Direction::Backward);
    std::set<EdgeId> in_edges;
    Assignment in_dirs;
    for (VertexId y : pending_out) {
      VertexId q = cm.class_of_vertex[static_cast<std::size_t>(y)];
      if (in_tree.dist[static_cast<std::size_t>(q)] == kInfinity) {
        throw PreconditionViolated("neighbour " + std::to_string(y) + " cannot reach the out-tree");
      }
      while (q != cm.super_vertex) {
        const VertexId orig = original_of[static_cast<std::size_t>(q)];
        if (captured[static_cast<std::size_t>(orig)]) break;
        captured[static_cast<std::size_t>(orig)] = true;
        const EdgeId qe = in_tree.parent_edge[static_cast<std::size_t>(q)];
        const EdgeId e = cm.origin_of_edge[static_cast<std::size_t>(qe)];
        in_edges.insert(e);
        if (!g2.edge(e).directed()) in_dirs[e] = g2.edge(e).other(orig);
        q = in_tree.parent[static_cast<std::size_t>(q)];
      }
    }
    merge_into(h.assignments, in_dirs);
    h.tree_in_edges.assign(in_edges.begin(), in_edges.end());
  }

  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (captured[static_cast<std::size_t>(v)]) h.captured.push_back(v);
  }
  return h;
}

OrientedSubgraph orient_in(const MixedMultigraph& g, VertexId u, int r) {
  OrientedSubgraph h = orient_out(g.reversed(), u, r);
  Assignment flipped;
  for (const auto& [e, head] : h.assignments) flipped[e] = g.edge(e).other(head);
  h.assignments = std::move(flipped);
  std::swap(h.tree_out_edges, h.tree_in_edges);
  std::swap(h.guarantee.max_out, h.guarantee.max_in);
  return h;
}

MixedMultigraph phase_digraph(const MixedMultigraph& g, const OrientedSubgraph& h) {
  std::vector<bool> captured(static_cast<std::size_t>(g.vertex_count()), false);
  for (VertexId v : h.captured) captured[static_cast<std::size_t>(v)] = true;
  MixedMultigraph d(g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (!captured[static_cast<std::size_t>(e.tail)] || !captured[static_cast<std::size_t>(e.head)]) continue;
    if (auto it = h.assignments.find(e.id); it != h.assignments.end()) {
      d.add_arc(e.other(it->second), it->second);
    } else if (e.directed()) {
      d.add_arc(e.tail, e.head);
    }
  }
  return d;
}

PhaseEccentricity phase_eccentricity(const MixedMultigraph& g, const OrientedSubgraph& h) {
  const MixedMultigraph d = phase_digraph(g, h);
  const DistanceVector from = distances_from(d, h.center);
  const DistanceVector to = distances_to(d, h.center);
  PhaseEccentricity ecc;
  for (VertexId v : h.captured) {
    ecc.out = std::max(ecc.out, from[v]);
    ecc.in = std::max(ecc.in, to[v]);
  }
  return ecc;
}

}  // namespace mixorient
