#include "mixorient/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "mixorient/errors.hpp"

namespace mixorient {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok, int line) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(ParseError::Kind::Syntax, line, "expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

MixedMultigraph parse_graph(std::string_view text) {
  MixedMultigraph g;
  bool have_header = false;
  long long expected_edges = 0;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (have_header) throw ParseError(ParseError::Kind::Syntax, line_no, "duplicate problem line");
      if (tok.size() != 4 || tok[1] != "mixed") {
        throw ParseError(ParseError::Kind::Syntax, line_no, "expected 'p mixed <n> <m>'");
      }
      const long long n = to_int(tok[2], line_no);
      expected_edges = to_int(tok[3], line_no);
      if (n < 0 || expected_edges < 0 || n > 100'000'000) {
        throw ParseError(ParseError::Kind::Syntax, line_no, "bad vertex or edge count");
      }
      g = MixedMultigraph(static_cast<int>(n));
      have_header = true;
      continue;
    }
    if (tok[0] != "e" && tok[0] != "a") {
      throw ParseError(ParseError::Kind::Syntax, line_no, "unknown record '" + std::string(tok[0]) + "'");
    }
    if (!have_header) throw ParseError(ParseError::Kind::Syntax, line_no, "edge before problem line");
    if (tok.size() != 3) throw ParseError(ParseError::Kind::Syntax, line_no, "expected two vertex ids");
    const long long u = to_int(tok[1], line_no);
    const long long v = to_int(tok[2], line_no);
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count()) {
      throw ParseError(ParseError::Kind::IndexOutOfRange, line_no, "vertex id out of range");
    }
    if (u == v) throw ParseError(ParseError::Kind::SelfLoop, line_no, "self-loop");
    if (g.edge_count() >= expected_edges) {
      throw ParseError(ParseError::Kind::Syntax, line_no, "more edge records than declared");
    }
    g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v),
               tok[0] == "a" ? EdgeKind::Directed : EdgeKind::Undirected);
  }
  if (!have_header) throw ParseError(ParseError::Kind::Syntax, line_no, "missing problem line");
  if (g.edge_count() != expected_edges) {
    throw ParseError(ParseError::Kind::Syntax, line_no,
                     "declared " + std::to_string(expected_edges) + " edges, found " +
                         std::to_string(g.edge_count()));
  }
  return g;
}

std::string emit_graph(const MixedMultigraph& g) {
  std::ostringstream out;
  out << "p mixed " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) {
    out << (e.directed() ? 'a' : 'e') << ' ' << e.tail << ' ' << e.head << '\n';
  }
  return out.str();
}

Orientation orientation_from_digraph(const MixedMultigraph& source, const MixedMultigraph& oriented) {
  if (source.vertex_count() != oriented.vertex_count() || source.edge_count() != oriented.edge_count()) {
    throw SourceMismatch("vertex or edge count differs from the source graph");
  }
  Orientation o;
  o.source = source;
  for (const Edge& e : source.edges()) {
    const Edge& d = oriented.edge(e.id);
    if (!d.directed()) {
      throw SourceMismatch("edge " + std::to_string(e.id) + " is not oriented");
    }
    if (!e.joins(d.tail, d.head)) {
      throw SourceMismatch("edge " + std::to_string(e.id) + " has different endpoints");
    }
    if (e.directed()) {
      if (d.head != e.head) throw SourceMismatch("arc " + std::to_string(e.id) + " was reversed");
      continue;
    }
    o.direction_of[e.id] = d.head;
  }
  return o;
}

}  // namespace mixorient
