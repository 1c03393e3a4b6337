#include "dynpr/workload.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "dynpr/rng.hpp"

namespace dynpr {

namespace {

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

bool parseUint(const std::string& tok, std::uint64_t& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && p == tok.data() + tok.size();
}

bool parseInt(const std::string& tok, std::int64_t& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && p == tok.data() + tok.size();
}

// Tolerate CRLF files: getline leaves the '\r' behind.
void chompCr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

ParseError::ParseError(const std::string& path, std::uint64_t line,
                       const std::string& what)
    : std::runtime_error(path + ":" + std::to_string(line) + ": " + what) {}

MatrixMarketGraph loadMatrixMarket(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);

  std::string line;
  std::uint64_t lineNo = 0;

  if (!std::getline(in, line))
    throw ParseError(path, 1, "empty file");
  ++lineNo;
  chompCr(line);
  std::istringstream header(line);
  std::string banner, object, format, field, symmetry;
  header >> banner >> object >> format >> field >> symmetry;
  if (lower(banner) != "%%matrixmarket")
    throw ParseError(path, lineNo, "missing %%MatrixMarket banner");
  if (lower(object) != "matrix" || lower(format) != "coordinate")
    throw ParseError(path, lineNo, "only 'matrix coordinate' files are supported");
  const bool symmetric = lower(symmetry) == "symmetric" ||
                         lower(symmetry) == "skew-symmetric" ||
                         lower(symmetry) == "hermitian";

  // Size line follows the comment block.
  std::uint64_t rows = 0, cols = 0, declared = 0;
  for (;;) {
    if (!std::getline(in, line))
      throw ParseError(path, lineNo + 1, "missing size line");
    ++lineNo;
    chompCr(line);
    if (line.empty() || line[0] == '%') continue;
    std::istringstream sizes(line);
    std::string r, c, nnz;
    sizes >> r >> c >> nnz;
    if (!parseUint(r, rows) || !parseUint(c, cols) || !parseUint(nnz, declared))
      throw ParseError(path, lineNo, "malformed size line");
    break;
  }

  MatrixMarketGraph result;
  result.vertexCount = static_cast<Vertex>(std::max(rows, cols));
  result.edges.reserve(symmetric ? declared * 2 : declared);

  std::uint64_t seen = 0;
  while (seen < declared) {
    if (!std::getline(in, line))
      throw ParseError(path, lineNo + 1,
                       "expected " + std::to_string(declared) + " entries, got " +
                           std::to_string(seen));
    ++lineNo;
    chompCr(line);
    if (line.empty() || line[0] == '%') continue;
    std::istringstream entry(line);
    std::string si, sj;
    entry >> si >> sj;  // any weight column is ignored
    std::uint64_t i = 0, j = 0;
    if (!parseUint(si, i) || !parseUint(sj, j))
      throw ParseError(path, lineNo, "malformed entry");
    if (i < 1 || i > rows || j < 1 || j > cols)
      throw ParseError(path, lineNo, "index out of declared bounds");
    ++seen;
    const auto u = static_cast<Vertex>(i - 1);
    const auto v = static_cast<Vertex>(j - 1);
    result.edges.emplace_back(u, v);
    if (symmetric && u != v) result.edges.emplace_back(v, u);
  }
  return result;
}

TemporalEdgeList loadTemporalEdgeList(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);

  TemporalEdgeList result;
  std::unordered_map<std::uint64_t, Vertex> compact;
  auto compactId = [&](std::uint64_t raw) {
    return compact.emplace(raw, static_cast<Vertex>(compact.size())).first->second;
  };

  std::string line;
  std::uint64_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    chompCr(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string ss, st, sts;
    fields >> ss >> st >> sts;
    std::uint64_t src = 0, dst = 0;
    std::int64_t ts = 0;
    if (!parseUint(ss, src) || !parseUint(st, dst) || !parseInt(sts, ts))
      throw ParseError(path, lineNo, "expected 'src dst timestamp'");
    result.entries.push_back({compactId(src), compactId(dst), ts});
  }
  result.vertexCount = static_cast<Vertex>(compact.size());
  std::stable_sort(result.entries.begin(), result.entries.end(),
                   [](const auto& a, const auto& b) { return a.timestamp < b.timestamp; });
  return result;
}

TemporalSplit splitTemporal(const TemporalEdgeList& t, double baseFraction,
                            int batchCount, std::uint64_t batchSize) {
  if (!(baseFraction > 0.0 && baseFraction < 1.0))
    throw std::invalid_argument("splitTemporal: baseFraction must be in (0,1)");
  if (batchCount < 1 || batchSize < 1)
    throw std::invalid_argument("splitTemporal: batchCount and batchSize must be >= 1");

  const std::uint64_t total = t.entries.size();
  const auto baseCount =
      static_cast<std::uint64_t>(std::floor(baseFraction * static_cast<double>(total)));
  const std::uint64_t needed =
      baseCount + static_cast<std::uint64_t>(batchCount) * batchSize;
  if (needed > total) {
    const std::uint64_t fit = (total - std::min(baseCount, total)) / batchSize;
    throw SizingError("splitTemporal: stream has " + std::to_string(total) +
                      " entries; only " + std::to_string(fit) + " of " +
                      std::to_string(batchCount) + " batches of size " +
                      std::to_string(batchSize) + " fit after the base");
  }

  TemporalSplit split;
  split.baseEdges.reserve(baseCount);
  for (std::uint64_t i = 0; i < baseCount; ++i)
    split.baseEdges.emplace_back(t.entries[i].source, t.entries[i].target);
  std::sort(split.baseEdges.begin(), split.baseEdges.end());
  split.baseEdges.erase(
      std::unique(split.baseEdges.begin(), split.baseEdges.end()),
      split.baseEdges.end());

  split.batches.resize(batchCount);
  std::uint64_t cursor = baseCount;
  for (int b = 0; b < batchCount; ++b) {
    auto& batch = split.batches[b];
    batch.insertions.reserve(batchSize);
    for (std::uint64_t i = 0; i < batchSize; ++i, ++cursor)
      batch.insertions.emplace_back(t.entries[cursor].source,
                                    t.entries[cursor].target);
  }
  return split;
}

BatchUpdate generateRandomBatch(const CsrGraph& g, std::uint64_t totalSize,
                                double insertFraction, std::uint64_t seed) {
  if (totalSize < 1)
    throw std::invalid_argument("generateRandomBatch: totalSize must be >= 1");
  if (insertFraction < 0.0 || insertFraction > 1.0)
    throw std::invalid_argument("generateRandomBatch: insertFraction must be in [0,1]");

  const Vertex n = g.vertexCount();
  const auto insertCount = static_cast<std::uint64_t>(
      std::ceil(insertFraction * static_cast<double>(totalSize)));
  const std::uint64_t deleteCount = totalSize - insertCount;

  SplitMix64 rng(seed);
  BatchUpdate batch;
  if (insertCount > 0 && n < 2)
    throw SizingError(
        "generateRandomBatch: need at least 2 vertices for insertions");

  // Insertions: uniform vertex pairs, rejecting self-pairs, existing
  // edges, and duplicates. Attempts are capped so near-complete graphs
  // fail loudly instead of looping.
  batch.insertions.reserve(insertCount);
  EdgeList chosen;
  const std::uint64_t maxAttempts = 100 * std::max<std::uint64_t>(insertCount, 1);
  std::uint64_t attempts = 0;
  while (batch.insertions.size() < insertCount) {
    if (++attempts > maxAttempts)
      throw SizingError(
          "generateRandomBatch: could not find enough non-existing edges");
    const auto u = static_cast<Vertex>(rng.bounded(n));
    const auto v = static_cast<Vertex>(rng.bounded(n));
    if (u == v || g.hasEdge(u, v)) continue;
    const auto e = std::make_pair(u, v);
    auto it = std::lower_bound(chosen.begin(), chosen.end(), e);
    if (it != chosen.end() && *it == e) continue;
    chosen.insert(it, e);
    batch.insertions.push_back(e);
  }

  // Deletions: uniform without replacement from existing non-loop edges,
  // via a partial Fisher-Yates shuffle of the edge index space.
  if (deleteCount > 0) {
    EdgeList candidates;
    candidates.reserve(g.edgeCount());
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v : g.out(u))
        if (v != u) candidates.emplace_back(u, v);
    if (deleteCount > candidates.size())
      throw SizingError("generateRandomBatch: requested " +
                        std::to_string(deleteCount) + " deletions but only " +
                        std::to_string(candidates.size()) +
                        " non-loop edges exist");
    batch.deletions.reserve(deleteCount);
    for (std::uint64_t i = 0; i < deleteCount; ++i) {
      const std::uint64_t j = i + rng.bounded(candidates.size() - i);
      std::swap(candidates[i], candidates[j]);
      batch.deletions.push_back(candidates[i]);
    }
  }
  return batch;
}

std::uint64_t batchSizeFromFraction(double fraction, std::uint64_t total) {
  const double scaled = fraction * static_cast<double>(total);
  const auto rounded = static_cast<std::uint64_t>(std::floor(scaled + 0.5));
  return rounded < 1 ? 1 : rounded;
}

}  // namespace dynpr
