#include "mixorient/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mixorient {

MixedMultigraph::MixedMultigraph(int vertex_count)
    : incidence_(static_cast<std::size_t>(std::max(vertex_count, 0))) {}

int MixedMultigraph::undirected_count() const {
  return static_cast<int>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return !e.directed(); }));
}

bool MixedMultigraph::has_loop() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

VertexId MixedMultigraph::add_vertex() {
  incidence_.emplace_back();
  return vertex_count() - 1;
}

EdgeId MixedMultigraph::add_undirected(VertexId a, VertexId b) {
  return add_edge(a, b, EdgeKind::Undirected);
}

EdgeId MixedMultigraph::add_arc(VertexId from, VertexId to) {
  return add_edge(from, to, EdgeKind::Directed);
}

EdgeId MixedMultigraph::add_edge(VertexId a, VertexId b, EdgeKind kind) {
  if (!contains(a) || !contains(b)) {
    throw std::out_of_range("edge endpoint out of range: " + std::to_string(a) + " " +
                            std::to_string(b));
  }
  const EdgeId id = edge_count();
  edges_.push_back(Edge{id, a, b, kind});
  incidence_[static_cast<std::size_t>(a)].push_back(id);
  if (b != a) incidence_[static_cast<std::size_t>(b)].push_back(id);
  return id;
}

void MixedMultigraph::orient(EdgeId e, VertexId head) {
  Edge& edge = edges_.at(static_cast<std::size_t>(e));
  if (edge.tail != head && edge.head != head) {
    throw std::invalid_argument("vertex " + std::to_string(head) + " is not an endpoint of edge " +
                                std::to_string(e));
  }
  if (edge.head != head) std::swap(edge.tail, edge.head);
  edge.kind = EdgeKind::Directed;
}

MixedMultigraph MixedMultigraph::reversed() const {
  MixedMultigraph out = *this;
  for (Edge& e : out.edges_) {
    if (e.directed()) std::swap(e.tail, e.head);
  }
  return out;
}

}  // namespace mixorient
