#include "dynpr/partition.hpp"

#include "dynpr/parallel.hpp"

namespace dynpr {

DegreePartition partitionByDegree(const CsrGraph& g, std::uint32_t threshold) {
  const Vertex n = g.vertexCount();
  DegreePartition part;
  part.order.resize(n);

  // Flag array with one spare slot so the exclusive scan's total lands in
  // flags[n]. The scan is sequential: integer scans are exact, and a fixed
  // order keeps the scatter positions reproducible by construction.
  std::vector<std::uint64_t> flags(static_cast<std::size_t>(n) + 1, 0);

#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v)
    flags[v] = g.degree(static_cast<Vertex>(v)) <= threshold ? 1 : 0;

  flags[n] = 0;
  std::uint64_t run = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    const std::uint64_t f = flags[i];
    flags[i] = run;
    run += f;
  }
  part.lowCount = static_cast<Vertex>(flags[n]);

#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v)
    if (g.degree(static_cast<Vertex>(v)) <= threshold)
      part.order[flags[v]] = static_cast<Vertex>(v);

  // Second pass gathers the high-degree group after lowCount.
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v)
    flags[v] = g.degree(static_cast<Vertex>(v)) > threshold ? 1 : 0;

  run = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    const std::uint64_t f = flags[i];
    flags[i] = run;
    run += f;
  }

#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v)
    if (g.degree(static_cast<Vertex>(v)) > threshold)
      part.order[part.lowCount + flags[v]] = static_cast<Vertex>(v);

  return part;
}

}  // namespace dynpr
