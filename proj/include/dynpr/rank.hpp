#pragma once
#include <cstdint>
#include <span>
#include <vector>

#include "dynpr/frontier.hpp"
#include "dynpr/graph.hpp"
#include "dynpr/partition.hpp"

namespace dynpr {

/// Which vertices precompute rank work through a degree partition versus
/// an inline per-vertex degree test.
enum class PartitionStrategy {
  DontPartition,       // per-vertex dispatch everywhere
  PartitionTranspose,  // in-degree partition for rank updates only
  PartitionBoth,       // plus an out-degree partition for frontier expansion
};

/// Rank update formula: Plain is the standard pull-based recurrence,
/// ClosedLoopPrune solves the vertex's self-loop contribution in closed
/// form and is the formula behind the pruning engine.
enum class RankMode { Plain, ClosedLoopPrune };

struct EngineConfig {
  double dampingFactor = 0.85;
  double iterationTolerance = 1e-10;  // L-infinity convergence threshold
  double frontierTolerance = 1e-6;    // relative change that re-expands
  double pruneTolerance = 1e-6;       // relative change that un-marks
  int maxIterations = 500;
  std::uint32_t lowDegreeThreshold = 32;  // max degree of a "low" vertex
  PartitionStrategy partitionStrategy = PartitionStrategy::PartitionBoth;
  // Reference runs disable the tolerance check and always perform exactly
  // maxIterations sweeps.
  bool convergenceCheckDisabled = false;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

/// Double-buffered rank vectors: `previous` is read, `current` is written
/// exactly once per vertex per sweep; the engine swaps them afterwards.
struct RankState {
  std::vector<double> previous;
  std::vector<double> current;
};

/// Both buffers filled with 1/vertexCount. Throws on vertexCount == 0.
RankState initRanksUniform(Vertex vertexCount);

/// Both buffers initialized from an existing rank vector.
RankState initRanksFrom(std::span<const double> ranks);

/// One synchronous rank sweep. Reads state.previous, writes every entry of
/// state.current: affected vertices get the recomputed rank, the rest copy
/// through. With `flags` null every vertex counts as affected and no flag
/// is touched. Otherwise vertices whose relative rank change exceeds
/// cfg.frontierTolerance get neighborsPending set, and in ClosedLoopPrune
/// mode those at or below cfg.pruneTolerance have vertexAffected cleared.
///
/// gTranspose supplies in-neighbor slices, gForward supplies out-degrees;
/// `part` is an in-degree partition of gTranspose or null for per-vertex
/// dispatch. Low in-degree vertices accumulate contributions in one flat
/// loop; high in-degree vertices use chunked partial sums combined in
/// chunk order, so results do not depend on the dispatch path chosen.
void updateRanks(AffectedFlags* flags, RankState& state,
                 const CsrGraph& gTranspose, const CsrGraph& gForward,
                 const DegreePartition* part, const EngineConfig& cfg,
                 RankMode mode);

/// max_i |a[i] - b[i]|. Throws on length mismatch.
double linfNormDelta(std::span<const double> a, std::span<const double> b);

/// sum_i |a[i] - b[i]| in a fixed block order (thread-count independent).
/// Throws on length mismatch.
double l1NormDelta(std::span<const double> a, std::span<const double> b);

}  // namespace dynpr
