#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace mixorient {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr VertexId kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;

enum class EdgeKind : std::uint8_t { Undirected, Directed };

/// One edge of a mixed multigraph. For a directed edge `tail -> head`; for an
/// undirected edge the two fields are just its endpoints in insertion order.
struct Edge {
  EdgeId id = kNoEdge;
  VertexId tail = kNoVertex;
  VertexId head = kNoVertex;
  EdgeKind kind = EdgeKind::Undirected;

  bool directed() const { return kind == EdgeKind::Directed; }
  bool is_loop() const { return tail == head; }
  bool joins(VertexId a, VertexId b) const {
    return (tail == a && head == b) || (tail == b && head == a);
  }
  VertexId other(VertexId v) const { return v == tail ? head : tail; }

  /// True if the edge can be walked starting at `from`.
  bool leaves(VertexId from) const {
    return directed() ? tail == from : (tail == from || head == from);
  }
  /// True if the edge can be walked ending at `to`.
  bool enters(VertexId to) const {
    return directed() ? head == to : (tail == to || head == to);
  }

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Vertices 0..n-1 plus a dense sequence of edges, each undirected or
/// directed. Parallel edges and loops are representable.
class MixedMultigraph {
 public:
  MixedMultigraph() = default;
  explicit MixedMultigraph(int vertex_count);

  int vertex_count() const { return static_cast<int>(incidence_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int undirected_count() const;
  bool has_loop() const;

  VertexId add_vertex();
  EdgeId add_undirected(VertexId a, VertexId b);
  EdgeId add_arc(VertexId from, VertexId to);
  EdgeId add_edge(VertexId a, VertexId b, EdgeKind kind);

  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Edge> edges() const { return edges_; }
  /// Incident edge ids of `v`, ascending. A loop is listed once.
  std::span<const EdgeId> incident(VertexId v) const {
    return incidence_[static_cast<std::size_t>(v)];
  }

  /// Turns edge `e` into the arc ending at `head`. `head` must be an endpoint.
  void orient(EdgeId e, VertexId head);

  /// Copy with every arc reversed; undirected edges untouched.
  MixedMultigraph reversed() const;

  bool contains(VertexId v) const { return v >= 0 && v < vertex_count(); }

  friend bool operator==(const MixedMultigraph&, const MixedMultigraph&) = default;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

}  // namespace mixorient
