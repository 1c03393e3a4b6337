#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "dynpr/engine.hpp"
#include "dynpr/graph.hpp"
#include "dynpr/rank.hpp"

namespace dynpr {

enum class Approach { Static, NaiveDynamic, DynamicTraversal, DynamicFrontier, DynamicFrontierPrune };

const char* approachName(Approach a);          // "static" | "nd" | "dt" | "df" | "dfp"
Approach approachFromName(const std::string&); // throws std::invalid_argument

enum class ExperimentMode { Static, Temporal, RandomBatch };

/// How dynamic engines obtain their warm-start ranks across consecutive
/// temporal batches.
enum class ChainMode {
  PerApproach,      // each approach continues from its own previous result
  SharedReference,  // every approach restarts from the reference ranks
};

/// One measurement. batchIndex == -1 marks a per-(approach, batch size)
/// geometric-mean summary row. runtimeMillis covers the engine call only
/// (no file I/O, no graph rebuild, no reference computation).
struct ExperimentRow {
  std::string graphName;
  std::string approach;
  std::string batchSizeSpec;
  std::int64_t batchIndex = 0;
  double runtimeMillis = 0.0;
  std::int64_t iterations = 0;
  std::uint64_t affectedVertexIterations = 0;
  double l1ErrorVsReference = 0.0;  // NaN when no reference is available
  bool converged = false;
};

struct ExperimentSpec {
  std::string graphPath;
  std::string graphName;  // defaults to the file stem when empty
  ExperimentMode mode = ExperimentMode::Static;
  std::vector<std::string> batchSizeSpecs;  // fraction strings, e.g. "1e-3"
  std::vector<Approach> approaches;
  std::uint64_t seed = 1;
  int repetitions = 1;        // random/static modes
  double baseFraction = 0.9;  // temporal mode
  int batchCount = 100;       // temporal mode
  double insertFraction = 0.8;
  ChainMode chainMode = ChainMode::PerApproach;
  int threads = 0;            // 0 = library default
  bool recordTiming = true;   // false writes deterministic zeros
  EngineConfig config;
};

enum class ReportFormat { Csv, Json };

/// Fixed-point reference: full static PageRank run for exactly
/// cfg.maxIterations sweeps with the convergence check disabled.
std::vector<double> computeReferenceRanks(const CsrGraph& gTranspose,
                                          const CsrGraph& gForward,
                                          const EngineConfig& cfg);

/// Runs the configured experiment and returns per-batch rows plus one
/// summary row per (approach, batch size) group.
std::vector<ExperimentRow> runExperiment(const ExperimentSpec& spec);

/// One summary row per (approach, batchSizeSpec) group: geometric means of
/// runtime and error, arithmetic means of the iteration counters, AND of
/// converged. Summary rows carry batchIndex -1.
std::vector<ExperimentRow> summarizeRows(const std::vector<ExperimentRow>& rows);

/// Writes rows as CSV (fixed header order) or a JSON array. Floats carry
/// 17 significant digits; NaN becomes an empty CSV field / JSON null.
/// path "-" writes to stdout.
void emitReport(const std::vector<ExperimentRow>& rows, ReportFormat format,
                const std::string& path);

}  // namespace dynpr
