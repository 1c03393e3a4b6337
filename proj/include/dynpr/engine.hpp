#pragma once
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "dynpr/frontier.hpp"
#include "dynpr/graph.hpp"
#include "dynpr/rank.hpp"

namespace dynpr {

/// Final ranks plus per-run telemetry. affectedVertexIterations counts
/// vertices actually processed, accumulated across sweeps; it is the
/// engine's work proxy (for a full sweep it grows by |V| per iteration).
struct RankResult {
  std::vector<double> ranks;
  int iterations = 0;
  std::uint64_t affectedVertexIterations = 0;
  bool converged = false;
  double finalDelta = 0.0;
};

/// Called after each sweep with the 1-based iteration number and the
/// buffer holding the latest ranks. Used by tests and telemetry.
using IterationObserver =
    std::function<void(int iteration, std::span<const double> ranks)>;

/// Full PageRank from a uniform start: sweep, measure the L-infinity
/// delta, swap, stop at the tolerance or the iteration cap. Expects a
/// mutually transposed, self-loop-augmented graph pair (spot-checked by
/// vertex/edge counts).
RankResult staticPageRank(const CsrGraph& gTranspose, const CsrGraph& gForward,
                          const EngineConfig& cfg,
                          const IterationObserver& observer = {});

/// Same loop as staticPageRank but warm-started from an existing rank
/// vector (typically the previous snapshot's).
RankResult naiveDynamic(const CsrGraph& gTranspose, const CsrGraph& gForward,
                        std::span<const double> previousRanks,
                        const EngineConfig& cfg,
                        const IterationObserver& observer = {});

/// Warm-started sweeps restricted to vertices reachable from the batch's
/// endpoints (sources of all updates plus targets of deletions). No
/// frontier expansion, no pruning. The batch must already be applied to
/// the graphs.
RankResult dynamicTraversal(const CsrGraph& gForward, const CsrGraph& gTranspose,
                            const EdgeList& deletions, const EdgeList& insertions,
                            std::span<const double> previousRanks,
                            const EngineConfig& cfg,
                            const IterationObserver& observer = {});

/// Incremental frontier engine: seeds affected flags from the batch,
/// expands them, then sweeps only affected vertices, re-expanding between
/// iterations. With `pruning` the closed-loop formula is used and vertices
/// whose rank settled drop out of the frontier.
RankResult dynamicFrontier(const CsrGraph& gForward, const CsrGraph& gTranspose,
                           const EdgeList& deletions, const EdgeList& insertions,
                           std::span<const double> previousRanks,
                           const EngineConfig& cfg, bool pruning,
                           const IterationObserver& observer = {});

/// The dynamicFrontier iteration loop started from caller-supplied flags
/// instead of a batch.
RankResult dynamicFrontierFromFlags(const CsrGraph& gForward,
                                    const CsrGraph& gTranspose,
                                    AffectedFlags flags,
                                    std::span<const double> previousRanks,
                                    const EngineConfig& cfg, bool pruning,
                                    const IterationObserver& observer = {});

}  // namespace dynpr
