#include "mixorient/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "mixorient/errors.hpp"
#include "mixorient/metrics.hpp"

namespace mixorient {
namespace {

/// Adds a path of `length` edges from `from` to `to` with fresh inner
/// vertices; edge (length+1)/2 counted from `from` is the arc.
DetourPath add_detour(MixedMultigraph& g, VertexId from, VertexId to, int length, int level) {
  DetourPath path{from, to, level, {}, kNoEdge};
  const int middle = (length + 1) / 2;
  VertexId at = from;
  for (int k = 1; k <= length; ++k) {
    const VertexId next = k == length ? to : g.add_vertex();
    const EdgeId e = k == middle ? g.add_arc(at, next) : g.add_undirected(at, next);
    if (k == middle) path.middle_edge = e;
    path.edges.push_back(e);
    at = next;
  }
  return path;
}

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace

const TreeVertex* LowerBoundFamily::tree_vertex(VertexId v) const {
  for (const TreeVertex& t : tree) {
    if (t.id == v) return &t;
  }
  return nullptr;
}

LowerBoundFamily gen_lower_bound(int r) {
  if (r < 1) throw InvalidValue("lower-bound family needs r >= 1");
  LowerBoundFamily fam;
  fam.r = r;
  fam.root = fam.graph.add_vertex();
  fam.tree.push_back(TreeVertex{fam.root, 1, 0, ChildRole::Root});

  for (int copy = 1; copy <= 2; ++copy) {
    // Breadth-first over internal vertices of this copy, starting at the root.
    std::vector<std::size_t> frontier{0};
    for (int level = 0; level < r; ++level) {
      std::vector<std::size_t> next_frontier;
      for (std::size_t idx : frontier) {
        VertexId kids[3];
        constexpr ChildRole roles[3] = {ChildRole::Left, ChildRole::Middle, ChildRole::Right};
        for (int c = 0; c < 3; ++c) {
          const VertexId parent = fam.tree[idx].id;
          kids[c] = fam.graph.add_vertex();
          const EdgeId e = fam.graph.add_undirected(parent, kids[c]);
          fam.tree.push_back(TreeVertex{kids[c], copy, level + 1, roles[c], parent, e});
          const bool internal = level + 1 < r && c != 1;
          if (internal) next_frontier.push_back(fam.tree.size() - 1);
        }
        // Children occupy the three most recent slots; the root is shared,
        // so its children are recorded per copy below.
        if (idx != 0) std::copy(std::begin(kids), std::end(kids), fam.tree[idx].children);
        const int length = 2 * r - 2 * level - 1;
        fam.paths.push_back(add_detour(fam.graph, kids[0], kids[1], length, level + 1));
        fam.paths.push_back(add_detour(fam.graph, kids[1], kids[2], length, level + 1));
      }
      frontier = std::move(next_frontier);
    }
  }
  // The shared root keeps copy 1's children.
  for (const TreeVertex& t : fam.tree) {
    if (t.parent == fam.root && t.copy == 1) {
      fam.tree[0].children[t.role == ChildRole::Left ? 0 : t.role == ChildRole::Middle ? 1 : 2] = t.id;
    }
  }
  return fam;
}

Orientation optimal_lower_bound_orientation(const LowerBoundFamily& fam) {
  Orientation o;
  o.source = fam.graph;
  for (const DetourPath& p : fam.paths) {
    VertexId at = p.from;
    for (EdgeId e : p.edges) {
      const VertexId next = fam.graph.edge(e).other(at);
      if (!fam.graph.edge(e).directed()) o.direction_of[e] = next;
      at = next;
    }
  }
  // Tree edges, top-down so a parent's own edge is decided before its middle child's.
  std::vector<const TreeVertex*> order;
  for (const TreeVertex& t : fam.tree) {
    if (t.role != ChildRole::Root) order.push_back(&t);
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const TreeVertex* a, const TreeVertex* b) { return a->level < b->level; });
  for (const TreeVertex* t : order) {
    switch (t->role) {
      case ChildRole::Left:
        o.direction_of[t->parent_edge] = t->id;
        break;
      case ChildRole::Right:
        o.direction_of[t->parent_edge] = t->parent;
        break;
      case ChildRole::Middle: {
        if (t->parent == fam.root) {
          o.direction_of[t->parent_edge] = t->id;
          break;
        }
        const TreeVertex* y = fam.tree_vertex(t->parent);
        const bool y_entered = o.direction_of.at(y->parent_edge) == y->id;
        o.direction_of[t->parent_edge] = y_entered ? y->id : t->id;
        break;
      }
      case ChildRole::Root:
        break;
    }
  }
  return o;
}

MixedMultigraph gen_random_strongly_orientable(int n, double undirected_fraction,
                                               std::uint64_t seed) {
  if (n < 1) throw InvalidValue("need at least one vertex");
  if (!(undirected_fraction >= 0.0 && undirected_fraction <= 1.0)) {
    throw InvalidValue("undirected fraction must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  auto coin = [&] {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < undirected_fraction;
  };
  MixedMultigraph g(n);
  if (n == 1) return g;

  std::vector<VertexId> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = order.size() - 1; i > 0; --i) std::swap(order[i], order[below(rng, i + 1)]);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const VertexId a = order[i];
    const VertexId b = order[(i + 1) % order.size()];
    g.add_edge(a, b, coin() ? EdgeKind::Undirected : EdgeKind::Directed);
  }
  const auto extra = below(rng, static_cast<std::uint64_t>(n) + 1);
  for (std::uint64_t k = 0; k < extra; ++k) {
    const auto a = static_cast<VertexId>(below(rng, static_cast<std::uint64_t>(n)));
    auto b = static_cast<VertexId>(below(rng, static_cast<std::uint64_t>(n - 1)));
    if (b >= a) ++b;
    g.add_edge(a, b, coin() ? EdgeKind::Undirected : EdgeKind::Directed);
  }
  // The cycle already makes the graph strong and bridgeless; patching is a
  // fallback that parallels each reported bridge.
  for (int guard = 0; guard < 2 * n && !is_strongly_orientable(g); ++guard) {
    for (EdgeId b : bridges(g)) {
      const Edge e = g.edge(b);
      g.add_undirected(e.tail, e.head);
    }
  }
  return g;
}

}  // namespace mixorient
