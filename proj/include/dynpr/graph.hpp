#pragma once
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace dynpr {

using Vertex = std::uint32_t;
using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

/// Directed graph in compressed sparse row form. Immutable once built.
/// Target slices are sorted ascending and deduplicated, so structural
/// equality is plain buffer comparison and edge membership is a binary
/// search. The same type stores a graph and its transpose (in that case
/// out(v) enumerates in-neighbors).
class CsrGraph {
 public:
  CsrGraph() : vertexCount_(0), offsets_{0} {}

  /// Takes ownership of prebuilt CSR arrays; validates all invariants.
  CsrGraph(Vertex vertexCount, std::vector<std::uint64_t> offsets,
           std::vector<Vertex> targets);

  Vertex vertexCount() const { return vertexCount_; }
  std::uint64_t edgeCount() const { return targets_.size(); }

  std::uint32_t degree(Vertex v) const {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }

  std::span<const Vertex> out(Vertex v) const {
    return {targets_.data() + offsets_[v],
            targets_.data() + offsets_[v + 1]};
  }

  bool hasEdge(Vertex source, Vertex target) const;
  bool hasSelfLoop(Vertex v) const { return hasEdge(v, v); }

  const std::vector<std::uint64_t>& offsets() const { return offsets_; }
  const std::vector<Vertex>& targets() const { return targets_; }

  bool operator==(const CsrGraph&) const = default;

 private:
  Vertex vertexCount_;
  std::vector<std::uint64_t> offsets_;  // |V|+1, non-decreasing
  std::vector<Vertex> targets_;         // |E|, sorted within each slice
};

/// Ordered edge deletions and insertions transforming one snapshot into
/// the next. Valid w.r.t. a graph when all ids are in range, no pair
/// appears in both lists, and no deletion targets a self-loop.
struct BatchUpdate {
  EdgeList deletions;
  EdgeList insertions;
};

/// Tally of batch entries that were no-ops (absent deletions, duplicate
/// insertions). Informational only.
struct BatchApplyStats {
  std::uint64_t missingDeletions = 0;
  std::uint64_t duplicateInsertions = 0;
};

/// Builds a CSR graph from an arbitrary edge list. Duplicate pairs are
/// collapsed. Throws std::invalid_argument if any id >= vertexCount.
CsrGraph buildCsr(const EdgeList& edges, Vertex vertexCount);

/// Reverses every edge: (u,v) in g iff (v,u) in the result.
CsrGraph transpose(const CsrGraph& g);

/// Ensures every vertex has an edge to itself. Idempotent.
CsrGraph addSelfLoops(const CsrGraph& g);

/// Produces the next snapshot: (E \ deletions) U insertions, with
/// self-loops re-ensured on every vertex. Deleting an absent edge or
/// inserting an existing one is a no-op recorded in `stats`.
CsrGraph applyBatch(const CsrGraph& g, const BatchUpdate& batch,
                    BatchApplyStats* stats = nullptr);

}  // namespace dynpr
