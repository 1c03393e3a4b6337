#include "dynpr/engine.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

#include "dynpr/parallel.hpp"
#include "dynpr/partition.hpp"

namespace dynpr {

namespace {

void checkTransposedPair(const CsrGraph& gTranspose, const CsrGraph& gForward) {
  // Spot check only: a full structural verification would cost a transpose.
  if (gTranspose.vertexCount() != gForward.vertexCount() ||
      gTranspose.edgeCount() != gForward.edgeCount())
    throw std::invalid_argument(
        "engine: graph pair is not mutually transposed (count mismatch)");
  if (gTranspose.vertexCount() == 0)
    throw std::invalid_argument("engine: empty graph");
}

std::uint64_t countOnes(const std::vector<std::uint8_t>& flags) {
  std::uint64_t count = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : count)
#endif
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(flags.size()); ++i)
    count += flags[i];
  return count;
}

struct Partitions {
  std::optional<DegreePartition> rank;    // in-degree order for sweeps
  std::optional<DegreePartition> expand;  // out-degree order for marking
};

Partitions makePartitions(const CsrGraph& gTranspose, const CsrGraph* gForward,
                          const EngineConfig& cfg) {
  Partitions p;
  switch (cfg.partitionStrategy) {
    case PartitionStrategy::DontPartition:
      break;
    case PartitionStrategy::PartitionTranspose:
      p.rank = partitionByDegree(gTranspose, cfg.lowDegreeThreshold);
      break;
    case PartitionStrategy::PartitionBoth:
      p.rank = partitionByDegree(gTranspose, cfg.lowDegreeThreshold);
      if (gForward)
        p.expand = partitionByDegree(*gForward, cfg.lowDegreeThreshold);
      break;
  }
  return p;
}

// Shared synchronous iteration loop. `flags` null means a full sweep every
// iteration (Static/ND). `expand` re-marks neighbors between iterations
// (DF/DF-P); the loop clears neighborsPending before each sweep either way.
RankResult convergeLoop(const CsrGraph& gTranspose, const CsrGraph& gForward,
                        RankState& state, AffectedFlags* flags, bool expand,
                        RankMode mode, const Partitions& parts,
                        const EngineConfig& cfg,
                        const IterationObserver& observer) {
  const Vertex n = gTranspose.vertexCount();
  const DegreePartition* rankPart = parts.rank ? &*parts.rank : nullptr;
  const DegreePartition* expandPart = parts.expand ? &*parts.expand : nullptr;

  RankResult result;
  for (int iter = 0; iter < cfg.maxIterations; ++iter) {
    const std::uint64_t processed =
        flags ? countOnes(flags->vertexAffected) : n;
    if (flags)
      std::fill(flags->neighborsPending.begin(), flags->neighborsPending.end(),
                std::uint8_t{0});

    updateRanks(flags, state, gTranspose, gForward, rankPart, cfg, mode);
    const double delta = linfNormDelta(state.current, state.previous);
    std::swap(state.current, state.previous);

    result.iterations = iter + 1;
    result.affectedVertexIterations += processed;
    result.finalDelta = delta;
    if (observer) observer(result.iterations, state.previous);

    if (!cfg.convergenceCheckDisabled && delta <= cfg.iterationTolerance) {
      result.converged = true;
      break;
    }
    if (expand) expandAffected(*flags, gForward, expandPart);
  }
  result.ranks = std::move(state.previous);
  return result;
}

}  // namespace

RankResult staticPageRank(const CsrGraph& gTranspose, const CsrGraph& gForward,
                          const EngineConfig& cfg,
                          const IterationObserver& observer) {
  cfg.validate();
  checkTransposedPair(gTranspose, gForward);
  RankState state = initRanksUniform(gTranspose.vertexCount());
  Partitions parts = makePartitions(gTranspose, nullptr, cfg);
  return convergeLoop(gTranspose, gForward, state, nullptr, false,
                      RankMode::Plain, parts, cfg, observer);
}

RankResult naiveDynamic(const CsrGraph& gTranspose, const CsrGraph& gForward,
                        std::span<const double> previousRanks,
                        const EngineConfig& cfg,
                        const IterationObserver& observer) {
  cfg.validate();
  checkTransposedPair(gTranspose, gForward);
  if (previousRanks.size() != gTranspose.vertexCount())
    throw std::invalid_argument("naiveDynamic: previousRanks length mismatch");
  RankState state = initRanksFrom(previousRanks);
  Partitions parts = makePartitions(gTranspose, nullptr, cfg);
  return convergeLoop(gTranspose, gForward, state, nullptr, false,
                      RankMode::Plain, parts, cfg, observer);
}

RankResult dynamicTraversal(const CsrGraph& gForward, const CsrGraph& gTranspose,
                            const EdgeList& deletions, const EdgeList& insertions,
                            std::span<const double> previousRanks,
                            const EngineConfig& cfg,
                            const IterationObserver& observer) {
  cfg.validate();
  checkTransposedPair(gTranspose, gForward);
  if (previousRanks.size() != gTranspose.vertexCount())
    throw std::invalid_argument("dynamicTraversal: previousRanks length mismatch");

  // Everything reachable from an update endpoint may change rank: seed
  // with the sources of all updates plus the targets of deletions.
  std::vector<Vertex> seeds;
  seeds.reserve(deletions.size() * 2 + insertions.size());
  for (const auto& [u, v] : deletions) {
    seeds.push_back(u);
    seeds.push_back(v);
  }
  for (const auto& [u, v] : insertions) seeds.push_back(u);
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

  AffectedFlags flags = markReachable(gForward, seeds);
  RankState state = initRanksFrom(previousRanks);
  Partitions parts = makePartitions(gTranspose, nullptr, cfg);
  return convergeLoop(gTranspose, gForward, state, &flags, false,
                      RankMode::Plain, parts, cfg, observer);
}

namespace {

void checkFrontierInputs(const CsrGraph& gForward, const CsrGraph& gTranspose,
                         std::span<const double> previousRanks,
                         const EngineConfig& cfg) {
  cfg.validate();
  checkTransposedPair(gTranspose, gForward);
  if (previousRanks.size() != gTranspose.vertexCount())
    throw std::invalid_argument("dynamicFrontier: previousRanks length mismatch");
}

RankResult frontierLoop(const CsrGraph& gForward, const CsrGraph& gTranspose,
                        AffectedFlags& flags,
                        std::span<const double> previousRanks,
                        const EngineConfig& cfg, bool pruning,
                        const Partitions& parts,
                        const IterationObserver& observer) {
  RankState state = initRanksFrom(previousRanks);
  return convergeLoop(gTranspose, gForward, state, &flags, true,
                      pruning ? RankMode::ClosedLoopPrune : RankMode::Plain,
                      parts, cfg, observer);
}

}  // namespace

RankResult dynamicFrontierFromFlags(const CsrGraph& gForward,
                                    const CsrGraph& gTranspose,
                                    AffectedFlags flags,
                                    std::span<const double> previousRanks,
                                    const EngineConfig& cfg, bool pruning,
                                    const IterationObserver& observer) {
  checkFrontierInputs(gForward, gTranspose, previousRanks, cfg);
  if (flags.size() != gTranspose.vertexCount())
    throw std::invalid_argument("dynamicFrontier: flags length mismatch");
  Partitions parts = makePartitions(gTranspose, &gForward, cfg);
  return frontierLoop(gForward, gTranspose, flags, previousRanks, cfg, pruning,
                      parts, observer);
}

RankResult dynamicFrontier(const CsrGraph& gForward, const CsrGraph& gTranspose,
                           const EdgeList& deletions, const EdgeList& insertions,
                           std::span<const double> previousRanks,
                           const EngineConfig& cfg, bool pruning,
                           const IterationObserver& observer) {
  checkFrontierInputs(gForward, gTranspose, previousRanks, cfg);
  Partitions parts = makePartitions(gTranspose, &gForward, cfg);
  AffectedFlags flags = initialAffected(gForward, deletions, insertions);
  expandAffected(flags, gForward, parts.expand ? &*parts.expand : nullptr);
  return frontierLoop(gForward, gTranspose, flags, previousRanks, cfg, pruning,
                      parts, observer);
}

}  // namespace dynpr
