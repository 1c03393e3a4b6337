#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dynpr/graph.hpp"

namespace dynpr {

/// Malformed input file; message includes the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& path, std::uint64_t line,
             const std::string& what);
};

/// A requested split or batch cannot be satisfied by the available data.
class SizingError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MatrixMarketGraph {
  EdgeList edges;
  Vertex vertexCount = 0;
};

/// Timestamped edge stream with ids compacted to dense 0-based values
/// (first-appearance order) and entries stably sorted by timestamp.
/// Duplicate (source, target) pairs are retained.
struct TemporalEdgeList {
  struct Entry {
    Vertex source;
    Vertex target;
    std::int64_t timestamp;
  };
  std::vector<Entry> entries;
  Vertex vertexCount = 0;
};

/// A temporal stream split into a static base edge set and consecutive
/// insertion-only batches.
struct TemporalSplit {
  EdgeList baseEdges;  // deduplicated
  std::vector<BatchUpdate> batches;
};

/// Reads a MatrixMarket coordinate file (general or symmetric; any weight
/// column is ignored). Ids are converted to 0-based; symmetric entries are
/// expanded to both directions.
MatrixMarketGraph loadMatrixMarket(const std::string& path);

/// Reads a whitespace-separated `src dst timestamp` file (`#` comments),
/// SNAP style.
TemporalEdgeList loadTemporalEdgeList(const std::string& path);

/// Base = first floor(baseFraction * |entries|) records (deduplicated);
/// each batch = the next batchSize consecutive records as insertions.
/// Throws SizingError (reporting how many batches fit) when the stream is
/// too short.
TemporalSplit splitTemporal(const TemporalEdgeList& t, double baseFraction,
                            int batchCount, std::uint64_t batchSize);

/// Random batch: ceil(insertFraction * totalSize) insertions drawn as
/// uniform vertex pairs (self-pairs, existing edges, and duplicates
/// rejected), the rest deletions drawn uniformly without replacement from
/// existing non-self-loop edges. Deterministic for a fixed seed.
BatchUpdate generateRandomBatch(const CsrGraph& g, std::uint64_t totalSize,
                                double insertFraction, std::uint64_t seed);

/// Fraction-of-total batch sizing: round half up, floor of 1.
std::uint64_t batchSizeFromFraction(double fraction, std::uint64_t total);

}  // namespace dynpr
