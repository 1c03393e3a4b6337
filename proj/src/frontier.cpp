#include "dynpr/frontier.hpp"

#include <atomic>
#include <stdexcept>
#include <string>

#include "dynpr/parallel.hpp"

namespace dynpr {

namespace {

// Flag stores are idempotent writes of 1; relaxed atomics make the benign
// race well-defined without costing anything on the hot path.
inline void markByte(std::uint8_t& flag) {
  std::atomic_ref<std::uint8_t>(flag).store(1, std::memory_order_relaxed);
}

inline bool claimByte(std::uint8_t& flag) {
  return std::atomic_ref<std::uint8_t>(flag).exchange(
             1, std::memory_order_relaxed) == 0;
}

void checkEndpoints(const EdgeList& edges, Vertex n, const char* what) {
  for (const auto& [u, v] : edges)
    if (u >= n || v >= n)
      throw std::invalid_argument(std::string(what) +
                                  ": vertex id out of range");
}

}  // namespace

AffectedFlags initialAffected(const CsrGraph& g, const EdgeList& deletions,
                              const EdgeList& insertions) {
  const Vertex n = g.vertexCount();
  checkEndpoints(deletions, n, "initialAffected deletions");
  checkEndpoints(insertions, n, "initialAffected insertions");

  AffectedFlags flags(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(deletions.size()); ++i) {
    markByte(flags.neighborsPending[deletions[i].first]);
    markByte(flags.vertexAffected[deletions[i].second]);
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(insertions.size()); ++i)
    markByte(flags.neighborsPending[insertions[i].first]);
  return flags;
}

void expandAffected(AffectedFlags& flags, const CsrGraph& g,
                    const DegreePartition* part) {
  const Vertex n = g.vertexCount();
  auto markNeighbors = [&](Vertex u) {
    if (!flags.neighborsPending[u]) return;
    for (Vertex v : g.out(u)) markByte(flags.vertexAffected[v]);
  };

  if (part) {
    // Kernel pair: per-vertex tasks over the low out-degree group, then
    // the long-slice group with one task per vertex as well (slices are
    // the unit of work either way; writes are idempotent).
    const auto low = static_cast<std::int64_t>(part->lowCount);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, kScheduleChunk)
#endif
    for (std::int64_t i = 0; i < low; ++i) markNeighbors(part->order[i]);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (std::int64_t i = low; i < static_cast<std::int64_t>(n); ++i)
      markNeighbors(part->order[i]);
  } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, kScheduleChunk)
#endif
    for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v)
      markNeighbors(static_cast<Vertex>(v));
  }
}

AffectedFlags markReachable(const CsrGraph& g, std::span<const Vertex> seeds) {
  const Vertex n = g.vertexCount();
  for (Vertex s : seeds)
    if (s >= n) throw std::invalid_argument("markReachable: seed out of range");

  AffectedFlags flags(n);
  std::vector<Vertex> frontier;
  frontier.reserve(seeds.size());
  for (Vertex s : seeds)
    if (claimByte(flags.vertexAffected[s])) frontier.push_back(s);

  // Level-synchronous BFS; each level expands in parallel into per-thread
  // buckets that are concatenated afterwards. Only the visited set matters,
  // so bucket order never shows up in the result.
  std::vector<std::vector<Vertex>> buckets(maxThreads());
  while (!frontier.empty()) {
    for (auto& b : buckets) b.clear();
#ifdef _OPENMP
#pragma omp parallel
#endif
    {
      auto& local = buckets[threadId()];
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 64) nowait
#endif
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(frontier.size()); ++i) {
        for (Vertex v : g.out(frontier[i]))
          if (claimByte(flags.vertexAffected[v])) local.push_back(v);
      }
    }
    frontier.clear();
    for (const auto& b : buckets)
      frontier.insert(frontier.end(), b.begin(), b.end());
  }
  return flags;
}

}  // namespace dynpr
