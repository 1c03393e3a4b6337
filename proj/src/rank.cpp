#include "dynpr/rank.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "dynpr/parallel.hpp"

namespace dynpr {

void EngineConfig::validate() const {
  if (!(dampingFactor > 0.0 && dampingFactor < 1.0))
    throw std::invalid_argument("EngineConfig: dampingFactor must be in (0,1)");
  if (!(iterationTolerance > 0.0))
    throw std::invalid_argument("EngineConfig: iterationTolerance must be > 0");
  if (frontierTolerance < 0.0 || pruneTolerance < 0.0)
    throw std::invalid_argument("EngineConfig: tolerances must be >= 0");
  if (maxIterations <= 0)
    throw std::invalid_argument("EngineConfig: maxIterations must be positive");
}

RankState initRanksUniform(Vertex vertexCount) {
  if (vertexCount == 0)
    throw std::invalid_argument("initRanksUniform: vertexCount must be > 0");
  const double r = 1.0 / vertexCount;
  RankState state;
  state.previous.assign(vertexCount, r);
  state.current.assign(vertexCount, r);
  return state;
}

RankState initRanksFrom(std::span<const double> ranks) {
  RankState state;
  state.previous.assign(ranks.begin(), ranks.end());
  state.current.assign(ranks.begin(), ranks.end());
  return state;
}

namespace {

// Edges per partial sum in the chunked accumulation path.
constexpr std::uint32_t kAccumChunk = 256;

// Flat in-neighbor accumulation for low in-degree vertices.
inline double inContribFlat(std::span<const Vertex> inSlice,
                            const CsrGraph& gForward,
                            const double* previous) {
  double c = 0.0;
  for (Vertex u : inSlice) {
    assert(gForward.degree(u) > 0 && "self-loop augmentation guarantees outdeg > 0");
    c += previous[u] / gForward.degree(u);
  }
  return c;
}

// High in-degree vertices: fixed-size chunks produce partial sums that are
// combined in chunk order. Deterministic, and mirrors the cooperative
// block-reduction split of the low/high kernel pair.
inline double inContribChunked(std::span<const Vertex> inSlice,
                               const CsrGraph& gForward,
                               const double* previous) {
  double c = 0.0;
  const std::size_t len = inSlice.size();
  for (std::size_t base = 0; base < len; base += kAccumChunk) {
    const std::size_t end = base + kAccumChunk < len ? base + kAccumChunk : len;
    double partial = 0.0;
    for (std::size_t i = base; i < end; ++i) {
      const Vertex u = inSlice[i];
      assert(gForward.degree(u) > 0 && "self-loop augmentation guarantees outdeg > 0");
      partial += previous[u] / gForward.degree(u);
    }
    c += partial;
  }
  return c;
}

}  // namespace

void updateRanks(AffectedFlags* flags, RankState& state,
                 const CsrGraph& gTranspose, const CsrGraph& gForward,
                 const DegreePartition* part, const EngineConfig& cfg,
                 RankMode mode) {
  const Vertex n = gTranspose.vertexCount();
  const double alpha = cfg.dampingFactor;
  const double teleport = (1.0 - alpha) / n;
  const double* previous = state.previous.data();
  double* current = state.current.data();

  auto process = [&](Vertex v, bool lowDegree) {
    if (flags && !flags->vertexAffected[v]) {
      current[v] = previous[v];  // copy-through keeps buffers comparable
      return;
    }
    const auto inSlice = gTranspose.out(v);
    const double c = lowDegree ? inContribFlat(inSlice, gForward, previous)
                               : inContribChunked(inSlice, gForward, previous);
    double r;
    if (mode == RankMode::ClosedLoopPrune) {
      // Closed form absorbing the vertex's own self-loop contribution, so
      // the update lands on the loop's fixed point directly.
      const double d = gForward.degree(v);
      r = (teleport + alpha * (c - previous[v] / d)) / (1.0 - alpha / d);
    } else {
      r = teleport + alpha * c;
    }
    current[v] = r;

    if (flags) {
      const double deltaR = std::abs(r - previous[v]);
      const double denom = r > previous[v] ? r : previous[v];
      const double relative = denom > 0.0 ? deltaR / denom : 0.0;
      if (mode == RankMode::ClosedLoopPrune && relative <= cfg.pruneTolerance)
        flags->vertexAffected[v] = 0;
      if (relative > cfg.frontierTolerance) flags->neighborsPending[v] = 1;
    }
  };

  if (part) {
    const auto low = static_cast<std::int64_t>(part->lowCount);
    const auto* order = part->order.data();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, kScheduleChunk)
#endif
    for (std::int64_t i = 0; i < low; ++i) process(order[i], true);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (std::int64_t i = low; i < static_cast<std::int64_t>(n); ++i)
      process(order[i], false);
  } else {
    const std::uint32_t threshold = cfg.lowDegreeThreshold;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, kScheduleChunk)
#endif
    for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v) {
      const auto u = static_cast<Vertex>(v);
      process(u, gTranspose.degree(u) <= threshold);
    }
  }
}

double linfNormDelta(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("linfNormDelta: length mismatch");
  return blockMax(a.size(), [&](std::uint64_t i) { return std::abs(a[i] - b[i]); });
}

double l1NormDelta(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("l1NormDelta: length mismatch");
  return blockSum(a.size(), [&](std::uint64_t i) { return std::abs(a[i] - b[i]); });
}

}  // namespace dynpr
