#pragma once
#include <cstdint>
#include <span>
#include <vector>

#include "dynpr/graph.hpp"
#include "dynpr/partition.hpp"

namespace dynpr {

/// Per-vertex byte flags driving the frontier engines: vertexAffected
/// marks vertices whose rank gets recomputed, neighborsPending marks
/// vertices whose out-neighbors still need to be pulled into the
/// affected set. All values are 0 or 1.
struct AffectedFlags {
  std::vector<std::uint8_t> vertexAffected;   // delta_V
  std::vector<std::uint8_t> neighborsPending; // delta_N

  explicit AffectedFlags(Vertex vertexCount = 0)
      : vertexAffected(vertexCount, 0), neighborsPending(vertexCount, 0) {}

  Vertex size() const { return static_cast<Vertex>(vertexAffected.size()); }
};

/// Seeds the affected set from a batch: each deletion (u,v) marks
/// neighborsPending[u] and vertexAffected[v]; each insertion (u,v) marks
/// neighborsPending[u]. Throws std::invalid_argument on out-of-range ids.
AffectedFlags initialAffected(const CsrGraph& g, const EdgeList& deletions,
                              const EdgeList& insertions);

/// For every u with neighborsPending[u] set, marks all of g.out(u) as
/// affected. neighborsPending itself is left untouched (the engine loop
/// clears it). `part` is an out-degree partition of g, or null for
/// selective per-vertex dispatch.
void expandAffected(AffectedFlags& flags, const CsrGraph& g,
                    const DegreePartition* part);

/// Marks every vertex reachable from `seeds` in g (seeds included) via
/// level-synchronous BFS. neighborsPending comes back all zero.
AffectedFlags markReachable(const CsrGraph& g, std::span<const Vertex> seeds);

}  // namespace dynpr
