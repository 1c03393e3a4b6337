#include "dynpr/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>

#include "dynpr/parallel.hpp"
#include "dynpr/rng.hpp"
#include "dynpr/workload.hpp"

namespace dynpr {

namespace {

using Clock = std::chrono::steady_clock;

double elapsedMillis(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fileStem(const std::string& path) {
  const auto slash = path.find_last_of("/\\");
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  const auto dot = name.find_last_of('.');
  if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
  return name;
}

RankResult runApproach(Approach a, const CsrGraph& g, const CsrGraph& gt,
                       const BatchUpdate& batch,
                       const std::vector<double>& previousRanks,
                       const EngineConfig& cfg) {
  switch (a) {
    case Approach::Static:
      return staticPageRank(gt, g, cfg);
    case Approach::NaiveDynamic:
      return naiveDynamic(gt, g, previousRanks, cfg);
    case Approach::DynamicTraversal:
      return dynamicTraversal(g, gt, batch.deletions, batch.insertions,
                              previousRanks, cfg);
    case Approach::DynamicFrontier:
      return dynamicFrontier(g, gt, batch.deletions, batch.insertions,
                             previousRanks, cfg, false);
    case Approach::DynamicFrontierPrune:
      return dynamicFrontier(g, gt, batch.deletions, batch.insertions,
                             previousRanks, cfg, true);
  }
  throw std::logic_error("unknown approach");
}

double geometricMean(const std::vector<double>& values) {
  if (values.empty()) return 0.0;
  double logSum = 0.0;
  for (double v : values) {
    if (!(v > 0.0)) return 0.0;  // zeros (or NaN) collapse the geomean
    logSum += std::log(v);
  }
  return std::exp(logSum / static_cast<double>(values.size()));
}

}  // namespace

std::vector<ExperimentRow> summarizeRows(const std::vector<ExperimentRow>& rows) {
  std::vector<std::pair<std::string, std::string>> order;
  std::map<std::pair<std::string, std::string>, std::vector<const ExperimentRow*>>
      groups;
  for (const auto& row : rows) {
    auto key = std::make_pair(row.approach, row.batchSizeSpec);
    auto [it, inserted] = groups.emplace(key, std::vector<const ExperimentRow*>{});
    if (inserted) order.push_back(key);
    it->second.push_back(&row);
  }

  std::vector<ExperimentRow> summaries;
  for (const auto& key : order) {
    const auto& group = groups[key];
    ExperimentRow s;
    s.graphName = group.front()->graphName;
    s.approach = key.first;
    s.batchSizeSpec = key.second;
    s.batchIndex = -1;
    std::vector<double> runtimes, errors;
    double iterSum = 0.0, affectedSum = 0.0;
    bool allConverged = true;
    for (const auto* row : group) {
      runtimes.push_back(row->runtimeMillis);
      if (!std::isnan(row->l1ErrorVsReference))
        errors.push_back(row->l1ErrorVsReference);
      iterSum += static_cast<double>(row->iterations);
      affectedSum += static_cast<double>(row->affectedVertexIterations);
      allConverged = allConverged && row->converged;
    }
    s.runtimeMillis = geometricMean(runtimes);
    s.l1ErrorVsReference =
        errors.empty() ? std::nan("") : geometricMean(errors);
    s.iterations = static_cast<std::int64_t>(
        std::llround(iterSum / static_cast<double>(group.size())));
    s.affectedVertexIterations = static_cast<std::uint64_t>(
        std::llround(affectedSum / static_cast<double>(group.size())));
    s.converged = allConverged;
    summaries.push_back(std::move(s));
  }
  return summaries;
}

namespace {

struct LoadedGraph {
  CsrGraph forward;
  CsrGraph transposed;
};

LoadedGraph augmentAndTranspose(const EdgeList& edges, Vertex n) {
  LoadedGraph lg;
  lg.forward = addSelfLoops(buildCsr(edges, n));
  lg.transposed = transpose(lg.forward);
  return lg;
}

void runBatchStep(const ExperimentSpec& spec, const CsrGraph& g,
                  const CsrGraph& gt, const BatchUpdate& batch,
                  const std::string& sizeSpec, std::int64_t batchIndex,
                  std::map<Approach, std::vector<double>>& chainRanks,
                  std::vector<ExperimentRow>& rows) {
  const std::vector<double> reference = computeReferenceRanks(gt, g, spec.config);
  for (Approach a : spec.approaches) {
    const auto& previous = chainRanks.at(a);
    const auto start = Clock::now();
    RankResult result = runApproach(a, g, gt, batch, previous, spec.config);
    const double millis = elapsedMillis(start);

    ExperimentRow row;
    row.graphName = spec.graphName;
    row.approach = approachName(a);
    row.batchSizeSpec = sizeSpec;
    row.batchIndex = batchIndex;
    row.runtimeMillis = spec.recordTiming ? millis : 0.0;
    row.iterations = result.iterations;
    row.affectedVertexIterations = result.affectedVertexIterations;
    row.l1ErrorVsReference = l1NormDelta(result.ranks, reference);
    row.converged = result.converged;
    rows.push_back(std::move(row));

    if (a != Approach::Static) {
      chainRanks[a] = spec.chainMode == ChainMode::SharedReference
                          ? reference
                          : std::move(result.ranks);
    }
  }
}

std::vector<ExperimentRow> runTemporal(const ExperimentSpec& spec) {
  const TemporalEdgeList stream = loadTemporalEdgeList(spec.graphPath);
  std::vector<ExperimentRow> rows;

  for (const auto& sizeSpec : spec.batchSizeSpecs) {
    const double fraction = std::stod(sizeSpec);
    const std::uint64_t batchSize =
        batchSizeFromFraction(fraction, stream.entries.size());
    const TemporalSplit split =
        splitTemporal(stream, spec.baseFraction, spec.batchCount, batchSize);

    LoadedGraph lg = augmentAndTranspose(split.baseEdges, stream.vertexCount);
    const std::vector<double> initial =
        staticPageRank(lg.transposed, lg.forward, spec.config).ranks;
    std::map<Approach, std::vector<double>> chainRanks;
    for (Approach a : spec.approaches) chainRanks[a] = initial;

    for (std::size_t b = 0; b < split.batches.size(); ++b) {
      lg.forward = applyBatch(lg.forward, split.batches[b]);
      lg.transposed = transpose(lg.forward);
      runBatchStep(spec, lg.forward, lg.transposed, split.batches[b], sizeSpec,
                   static_cast<std::int64_t>(b), chainRanks, rows);
    }
  }
  return rows;
}

std::vector<ExperimentRow> runRandomBatch(const ExperimentSpec& spec) {
  const MatrixMarketGraph loaded = loadMatrixMarket(spec.graphPath);
  const LoadedGraph base = augmentAndTranspose(loaded.edges, loaded.vertexCount);
  const std::vector<double> baseRanks =
      staticPageRank(base.transposed, base.forward, spec.config).ranks;

  std::vector<ExperimentRow> rows;
  for (std::size_t si = 0; si < spec.batchSizeSpecs.size(); ++si) {
    const auto& sizeSpec = spec.batchSizeSpecs[si];
    const double fraction = std::stod(sizeSpec);
    const std::uint64_t batchSize =
        batchSizeFromFraction(fraction, base.forward.edgeCount());

    for (int rep = 0; rep < spec.repetitions; ++rep) {
      // Each repetition perturbs the base graph independently.
      const std::uint64_t subSeed =
          deriveSeed(spec.seed, si * 1000003ULL + static_cast<std::uint64_t>(rep));
      const BatchUpdate batch = generateRandomBatch(
          base.forward, batchSize, spec.insertFraction, subSeed);
      const CsrGraph g = applyBatch(base.forward, batch);
      const CsrGraph gt = transpose(g);

      std::map<Approach, std::vector<double>> chainRanks;
      for (Approach a : spec.approaches) chainRanks[a] = baseRanks;
      runBatchStep(spec, g, gt, batch, sizeSpec, rep, chainRanks, rows);
    }
  }
  return rows;
}

std::vector<ExperimentRow> runStatic(const ExperimentSpec& spec) {
  const MatrixMarketGraph loaded = loadMatrixMarket(spec.graphPath);
  const LoadedGraph lg = augmentAndTranspose(loaded.edges, loaded.vertexCount);
  const std::vector<double> reference =
      computeReferenceRanks(lg.transposed, lg.forward, spec.config);

  std::vector<ExperimentRow> rows;
  for (int rep = 0; rep < spec.repetitions; ++rep) {
    const auto start = Clock::now();
    RankResult result = staticPageRank(lg.transposed, lg.forward, spec.config);
    const double millis = elapsedMillis(start);

    ExperimentRow row;
    row.graphName = spec.graphName;
    row.approach = approachName(Approach::Static);
    row.batchSizeSpec = "0";
    row.batchIndex = rep;
    row.runtimeMillis = spec.recordTiming ? millis : 0.0;
    row.iterations = result.iterations;
    row.affectedVertexIterations = result.affectedVertexIterations;
    row.l1ErrorVsReference = l1NormDelta(result.ranks, reference);
    row.converged = result.converged;
    rows.push_back(std::move(row));
  }
  return rows;
}

void formatDouble(std::string& out, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  out += buf;
}

std::string escapeJson(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

void writeCsv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << "graphName,approach,batchSizeSpec,batchIndex,runtimeMillis,"
         "iterations,affectedVertexIterations,l1ErrorVsReference,converged\n";
  std::string line;
  for (const auto& row : rows) {
    line.clear();
    line += row.graphName;
    line += ',';
    line += row.approach;
    line += ',';
    line += row.batchSizeSpec;
    line += ',';
    line += std::to_string(row.batchIndex);
    line += ',';
    formatDouble(line, row.runtimeMillis);
    line += ',';
    line += std::to_string(row.iterations);
    line += ',';
    line += std::to_string(row.affectedVertexIterations);
    line += ',';
    if (!std::isnan(row.l1ErrorVsReference))
      formatDouble(line, row.l1ErrorVsReference);
    line += ',';
    line += row.converged ? "true" : "false";
    line += '\n';
    out << line;
  }
}

void writeJson(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << "[\n";
  std::string line;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    line.clear();
    line += "  {\"graphName\":\"";
    line += escapeJson(row.graphName);
    line += "\",\"approach\":\"";
    line += escapeJson(row.approach);
    line += "\",\"batchSizeSpec\":\"";
    line += escapeJson(row.batchSizeSpec);
    line += "\",\"batchIndex\":";
    line += std::to_string(row.batchIndex);
    line += ",\"runtimeMillis\":";
    formatDouble(line, row.runtimeMillis);
    line += ",\"iterations\":";
    line += std::to_string(row.iterations);
    line += ",\"affectedVertexIterations\":";
    line += std::to_string(row.affectedVertexIterations);
    line += ",\"l1ErrorVsReference\":";
    if (std::isnan(row.l1ErrorVsReference))
      line += "null";
    else
      formatDouble(line, row.l1ErrorVsReference);
    line += ",\"converged\":";
    line += row.converged ? "true" : "false";
    line += i + 1 < rows.size() ? "},\n" : "}\n";
    out << line;
  }
  out << "]\n";
}

}  // namespace

const char* approachName(Approach a) {
  switch (a) {
    case Approach::Static: return "static";
    case Approach::NaiveDynamic: return "nd";
    case Approach::DynamicTraversal: return "dt";
    case Approach::DynamicFrontier: return "df";
    case Approach::DynamicFrontierPrune: return "dfp";
  }
  throw std::logic_error("unknown approach");
}

Approach approachFromName(const std::string& name) {
  if (name == "static") return Approach::Static;
  if (name == "nd") return Approach::NaiveDynamic;
  if (name == "dt") return Approach::DynamicTraversal;
  if (name == "df") return Approach::DynamicFrontier;
  if (name == "dfp") return Approach::DynamicFrontierPrune;
  throw std::invalid_argument("unknown approach '" + name + "'");
}

std::vector<double> computeReferenceRanks(const CsrGraph& gTranspose,
                                          const CsrGraph& gForward,
                                          const EngineConfig& cfg) {
  // The protocol's 1e-100 tolerance can never fire in double precision;
  // disabling the check and running the full iteration budget is the
  // portable equivalent.
  EngineConfig refCfg = cfg;
  refCfg.convergenceCheckDisabled = true;
  return staticPageRank(gTranspose, gForward, refCfg).ranks;
}

std::vector<ExperimentRow> runExperiment(const ExperimentSpec& original) {
  ExperimentSpec spec = original;
  spec.config.validate();
  if (spec.graphName.empty()) spec.graphName = fileStem(spec.graphPath);
  if (spec.approaches.empty())
    throw std::invalid_argument("runExperiment: no approaches requested");
  if (spec.mode != ExperimentMode::Static && spec.batchSizeSpecs.empty())
    throw std::invalid_argument("runExperiment: no batch sizes requested");
  if (spec.repetitions < 1)
    throw std::invalid_argument("runExperiment: repetitions must be >= 1");
  setThreadCount(spec.threads);

  std::vector<ExperimentRow> rows;
  switch (spec.mode) {
    case ExperimentMode::Static:
      rows = runStatic(spec);
      break;
    case ExperimentMode::Temporal:
      rows = runTemporal(spec);
      break;
    case ExperimentMode::RandomBatch:
      rows = runRandomBatch(spec);
      break;
  }
  const auto summaries = summarizeRows(rows);
  rows.insert(rows.end(), summaries.begin(), summaries.end());
  return rows;
}

void emitReport(const std::vector<ExperimentRow>& rows, ReportFormat format,
                const std::string& path) {
  if (rows.empty()) throw std::invalid_argument("emitReport: no rows");
  auto write = [&](std::ostream& out) {
    if (format == ReportFormat::Csv)
      writeCsv(out, rows);
    else
      writeJson(out, rows);
    if (!out) throw std::runtime_error("emitReport: write failed");
  };
  if (path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("emitReport: cannot open " + path);
  write(out);
}

}  // namespace dynpr
