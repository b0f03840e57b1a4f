#pragma once

#include <cstdint>

#include "mixorient/driver.hpp"
#include "mixorient/engine.hpp"
#include "mixorient/graph.hpp"

namespace mixorient {

struct ForcedResult {
  MixedMultigraph graph;
  Assignment forced;
};

/// Repeatedly fixes every undirected edge for which only one direction keeps
/// the graph strongly orientable, until nothing changes. Throws
/// NotStronglyOrientable.
ForcedResult forced_orientations(const MixedMultigraph& g);

struct OracleResult {
  int oriented_radius = 0;
  Orientation witness;
  /// Assignments enumerated (2^free_edges).
  std::uint64_t explored = 0;
  int forced_count = 0;
  int free_edges = 0;
};

inline constexpr int kDefaultMaxFree = 20;

/// Exact oriented radius: forcing first, then every direction assignment of
/// the remaining free edges in Gray-code order, sharded over OpenMP threads.
/// Ties go to the lowest assignment code so the witness is deterministic.
/// Throws TooManyFreeEdges when more than `max_free` edges stay free.
OracleResult oriented_radius_exact(const MixedMultigraph& g, int max_free = kDefaultMaxFree);

/// Single-threaded reference without forcing: plain binary enumeration over
/// all undirected edges.
OracleResult oriented_radius_naive(const MixedMultigraph& g, int max_free = kDefaultMaxFree);

}  // namespace mixorient
