#include "dynpr/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dynpr/parallel.hpp"

namespace dynpr {

namespace {

void checkIds(const EdgeList& edges, Vertex vertexCount, const char* what) {
  for (const auto& [u, v] : edges) {
    if (u >= vertexCount || v >= vertexCount)
      throw std::invalid_argument(std::string(what) + ": vertex id out of range (" +
                                  std::to_string(u) + "," + std::to_string(v) +
                                  ") for |V|=" + std::to_string(vertexCount));
  }
}

EdgeList sortedUnique(EdgeList edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace

CsrGraph::CsrGraph(Vertex vertexCount, std::vector<std::uint64_t> offsets,
                   std::vector<Vertex> targets)
    : vertexCount_(vertexCount),
      offsets_(std::move(offsets)),
      targets_(std::move(targets)) {
  if (offsets_.size() != static_cast<std::size_t>(vertexCount_) + 1 ||
      offsets_.front() != 0 || offsets_.back() != targets_.size())
    throw std::invalid_argument("CsrGraph: malformed offsets array");
  for (Vertex v = 0; v < vertexCount_; ++v) {
    if (offsets_[v] > offsets_[v + 1])
      throw std::invalid_argument("CsrGraph: offsets must be non-decreasing");
    for (std::uint64_t i = offsets_[v]; i < offsets_[v + 1]; ++i) {
      if (targets_[i] >= vertexCount_)
        throw std::invalid_argument("CsrGraph: target id out of range");
      if (i > offsets_[v] && targets_[i - 1] >= targets_[i])
        throw std::invalid_argument(
            "CsrGraph: target slices must be sorted and deduplicated");
    }
  }
}

bool CsrGraph::hasEdge(Vertex source, Vertex target) const {
  const auto slice = out(source);
  return std::binary_search(slice.begin(), slice.end(), target);
}

CsrGraph buildCsr(const EdgeList& edges, Vertex vertexCount) {
  checkIds(edges, vertexCount, "buildCsr");
  EdgeList sorted = sortedUnique(edges);

  std::vector<std::uint64_t> offsets(static_cast<std::size_t>(vertexCount) + 1, 0);
  for (const auto& [u, v] : sorted) offsets[u + 1]++;
  for (Vertex v = 0; v < vertexCount; ++v) offsets[v + 1] += offsets[v];

  std::vector<Vertex> targets(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) targets[i] = sorted[i].second;

  return CsrGraph(vertexCount, std::move(offsets), std::move(targets));
}

CsrGraph transpose(const CsrGraph& g) {
  const Vertex n = g.vertexCount();
  std::vector<std::uint64_t> offsets(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex t : g.targets()) offsets[t + 1]++;
  for (Vertex v = 0; v < n; ++v) offsets[v + 1] += offsets[v];

  // Scanning sources in ascending order fills each slice already sorted.
  std::vector<Vertex> targets(g.edgeCount());
  std::vector<std::uint64_t> cursor(offsets.begin(), offsets.end() - 1);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.out(u)) targets[cursor[v]++] = u;

  return CsrGraph(n, std::move(offsets), std::move(targets));
}

CsrGraph addSelfLoops(const CsrGraph& g) {
  const Vertex n = g.vertexCount();
  std::vector<std::uint64_t> offsets(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 0; v < n; ++v)
    offsets[v + 1] = offsets[v] + g.degree(v) + (g.hasSelfLoop(v) ? 0 : 1);

  std::vector<Vertex> targets(offsets.back());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, kScheduleChunk)
#endif
  for (std::int64_t vi = 0; vi < static_cast<std::int64_t>(n); ++vi) {
    const auto v = static_cast<Vertex>(vi);
    auto slice = g.out(v);
    std::uint64_t w = offsets[v];
    bool placed = false;
    for (Vertex t : slice) {
      if (!placed && t >= v) {
        if (t != v) targets[w++] = v;
        placed = true;
      }
      targets[w++] = t;
    }
    if (!placed) targets[w++] = v;
  }

  return CsrGraph(n, std::move(offsets), std::move(targets));
}

CsrGraph applyBatch(const CsrGraph& g, const BatchUpdate& batch,
                    BatchApplyStats* stats) {
  const Vertex n = g.vertexCount();
  checkIds(batch.deletions, n, "applyBatch deletions");
  checkIds(batch.insertions, n, "applyBatch insertions");
  for (const auto& [u, v] : batch.deletions)
    if (u == v)
      throw std::invalid_argument("applyBatch: self-loops cannot be deleted");

  EdgeList dels = sortedUnique(batch.deletions);
  EdgeList ins = sortedUnique(batch.insertions);
  // Repeated entries collapse to one; the copies are no-ops like any other
  // absent deletion or duplicate insertion.
  std::uint64_t missing = batch.deletions.size() - dels.size();
  std::uint64_t duplicate = batch.insertions.size() - ins.size();

  // The two lists must not intersect; both are sorted, so one sweep checks.
  {
    auto di = dels.begin();
    for (const auto& e : ins) {
      while (di != dels.end() && *di < e) ++di;
      if (di != dels.end() && *di == e)
        throw std::invalid_argument(
            "applyBatch: edge appears in both deletions and insertions");
    }
  }

  std::vector<std::uint64_t> offsets(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Vertex> merged;
  merged.reserve(g.edgeCount() + ins.size() + n);

  // Per-vertex three-way merge of (slice \ deletions) with insertions and
  // the guaranteed self-loop. Sequential over vertices; slices stay sorted.
  std::size_t di = 0, ii = 0;
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t sliceStart = merged.size();
    auto slice = g.out(v);
    std::size_t s = 0;
    std::size_t dEnd = di, iEnd = ii;
    while (dEnd < dels.size() && dels[dEnd].first == v) ++dEnd;
    while (iEnd < ins.size() && ins[iEnd].first == v) ++iEnd;

    bool loopPlaced = false;
    auto push = [&](Vertex t) {
      if (!loopPlaced && t >= v) {
        if (t != v) merged.push_back(v);
        loopPlaced = true;
      }
      merged.push_back(t);
    };

    while (s < slice.size() || ii < iEnd) {
      Vertex t;
      if (ii >= iEnd || (s < slice.size() && slice[s] <= ins[ii].second)) {
        t = slice[s];
        if (ii < iEnd && ins[ii].second == t) {
          ++ii;  // insertion already present
          ++duplicate;
        }
        ++s;
        // Drop the edge when it is in the deletion list.
        while (di < dEnd && dels[di].second < t) {
          ++missing;  // deletion of an absent edge
          ++di;
        }
        if (di < dEnd && dels[di].second == t) {
          ++di;
          continue;
        }
      } else {
        t = ins[ii].second;
        ++ii;
      }
      push(t);
    }
    while (di < dEnd) {
      ++missing;
      ++di;
    }
    ii = iEnd;
    if (!loopPlaced) merged.push_back(v);
    offsets[v + 1] = merged.size() - sliceStart;
  }
  for (Vertex v = 0; v < n; ++v) offsets[v + 1] += offsets[v];

  if (stats) {
    stats->missingDeletions += missing;
    stats->duplicateInsertions += duplicate;
  }
  return CsrGraph(n, std::move(offsets), std::move(merged));
}

}  // namespace dynpr
