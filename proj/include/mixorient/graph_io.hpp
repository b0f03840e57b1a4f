#pragma once

#include <string>
#include <string_view>

#include "mixorient/driver.hpp"
#include "mixorient/graph.hpp"

namespace mixorient {

/// Line-oriented text format, 0-based vertex ids:
///
///   c <comment>
///   p mixed <n> <m>
///   e <u> <v>      undirected edge
///   a <u> <v>      arc u -> v
///
/// Exactly m edge records follow the problem line; edge ids are record
/// order. Throws ParseError on malformed input, out-of-range ids and loops.
MixedMultigraph parse_graph(std::string_view text);

/// Canonical text for `g`; parse_graph(emit_graph(g)) == g.
std::string emit_graph(const MixedMultigraph& g);

/// Reads an oriented copy of `source` (one `a` record per source edge, same
/// order) back into an Orientation. Throws SourceMismatch when the records
/// disagree with `source`.
Orientation orientation_from_digraph(const MixedMultigraph& source, const MixedMultigraph& oriented);

}  // namespace mixorient
