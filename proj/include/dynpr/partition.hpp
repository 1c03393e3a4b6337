#pragma once
#include <cstdint>
#include <vector>

#include "dynpr/graph.hpp"

namespace dynpr {

/// Vertex ids split into a low-degree group followed by a high-degree
/// group. Ids increase within each group (the split is stable), so the
/// layout is a permutation usable as a processing order.
struct DegreePartition {
  std::vector<Vertex> order;  // permutation of 0..|V|-1, low degree first
  Vertex lowCount = 0;        // vertices with degree <= threshold
};

/// Splits vertex ids by degree(v) <= threshold via flag arrays, exclusive
/// prefix scans, and scatters (one pass per group). Degrees are taken from
/// `g`, so passing a transpose partitions by in-degree.
DegreePartition partitionByDegree(const CsrGraph& g, std::uint32_t threshold);

}  // namespace dynpr
