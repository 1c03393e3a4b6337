#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dynpr/engine.hpp"
#include "dynpr/rng.hpp"
#include "dynpr/workload.hpp"
#include "oracles.hpp"

using namespace dynpr;

namespace {

struct GraphPair {
  CsrGraph g;
  CsrGraph gt;
};

GraphPair pairOf(const CsrGraph& g) { return {g, transpose(g)}; }

GraphPair randomPair(SplitMix64& rng, Vertex n, std::uint64_t pairs) {
  return pairOf(oracles::randomGraph(rng, n, pairs));
}

}  // namespace

TEST_CASE("static: single vertex converges to rank 1 quickly") {
  const auto [g, gt] = pairOf(addSelfLoops(buildCsr({}, 1)));
  const RankResult r = staticPageRank(gt, g, {});
  CHECK(r.converged);
  CHECK(r.iterations <= 2);
  CHECK(r.ranks[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("static matches the dense oracle on a random graph") {
  SplitMix64 rng(101);
  const auto [g, gt] = randomPair(rng, 100, 500);
  const RankResult r = staticPageRank(gt, g, {});
  const auto oracle =
      oracles::densePageRank(oracles::edgesOf(g), 100, 0.85, 1e-14, 10000);
  CHECK(r.converged);
  CHECK(linfNormDelta(r.ranks, oracle) <= 1e-8);
}

TEST_CASE("static rejects a mismatched graph pair") {
  const auto [g, gt] = pairOf(addSelfLoops(buildCsr({{0, 1}}, 2)));
  const CsrGraph other = addSelfLoops(buildCsr({{0, 1}, {1, 2}}, 3));
  CHECK_THROWS_AS(staticPageRank(other, g, {}), std::invalid_argument);
  CHECK_THROWS_AS(staticPageRank(buildCsr({}, 0), buildCsr({}, 0), {}),
                  std::invalid_argument);
}

TEST_CASE("naive dynamic from a fixed point stops after one sweep") {
  SplitMix64 rng(103);
  const auto [g, gt] = randomPair(rng, 60, 240);
  const RankResult base = staticPageRank(gt, g, {});
  const RankResult warm = naiveDynamic(gt, g, base.ranks, {});
  CHECK(warm.converged);
  CHECK(warm.iterations == 1);
  CHECK(linfNormDelta(warm.ranks, base.ranks) <= 1e-10);
}

TEST_CASE("naive dynamic from uniform is static, bitwise") {
  SplitMix64 rng(107);
  const auto [g, gt] = randomPair(rng, 80, 400);
  const RankResult a = staticPageRank(gt, g, {});
  const std::vector<double> uniform(80, 1.0 / 80);
  const RankResult b = naiveDynamic(gt, g, uniform, {});
  CHECK(a.iterations == b.iterations);
  CHECK(a.ranks == b.ranks);
}

TEST_CASE("naive dynamic tracks a perturbed graph") {
  SplitMix64 rng(109);
  const auto [g, gt] = randomPair(rng, 50, 250);
  const RankResult base = staticPageRank(gt, g, {});

  // Flip one edge and re-solve from the stale ranks.
  EdgeList edges = oracles::edgesOf(g);
  EdgeList nonLoops;
  for (const auto& e : edges)
    if (e.first != e.second) nonLoops.push_back(e);
  BatchUpdate batch;
  batch.deletions = {nonLoops.front()};
  batch.insertions = {{nonLoops.front().second, nonLoops.front().first}};
  if (g.hasEdge(batch.insertions[0].first, batch.insertions[0].second))
    batch.insertions.clear();
  const CsrGraph g2 = applyBatch(g, batch);
  const CsrGraph gt2 = transpose(g2);

  const RankResult warm = naiveDynamic(gt2, g2, base.ranks, {});
  const auto oracle = oracles::densePageRank(oracles::edgesOf(g2),
                                             g2.vertexCount(), 0.85, 1e-14, 10000);
  CHECK(linfNormDelta(warm.ranks, oracle) <= 1e-8);
}

TEST_CASE("naive dynamic validates the rank vector length") {
  const auto [g, gt] = pairOf(addSelfLoops(buildCsr({{0, 1}}, 2)));
  CHECK_THROWS_AS(naiveDynamic(gt, g, std::vector<double>{1.0}, {}),
                  std::invalid_argument);
}

TEST_CASE("dynamic traversal leaves unreachable vertices untouched bitwise") {
  // Two components: {0,1} and {2,3}; the batch only touches {0,1}.
  const CsrGraph before =
      addSelfLoops(buildCsr({{0, 1}, {1, 0}, {2, 3}, {3, 2}}, 4));
  const RankResult base = staticPageRank(transpose(before), before, {});

  BatchUpdate batch;
  batch.insertions = {{1, 1}};  // no-op structurally, but endpoints seed DT
  const CsrGraph after = applyBatch(before, batch);
  const CsrGraph afterT = transpose(after);
  const RankResult dt = dynamicTraversal(after, afterT, batch.deletions,
                                         batch.insertions, base.ranks, {});
  CHECK(dt.ranks[2] == base.ranks[2]);
  CHECK(dt.ranks[3] == base.ranks[3]);
}

TEST_CASE("dynamic engines return previous ranks for an empty batch") {
  SplitMix64 rng(113);
  const auto [g, gt] = randomPair(rng, 40, 160);
  std::vector<double> previous(40, 1.0 / 40);
  for (auto& r : previous) r *= 1.0 + 0.01 * rng.nextDouble();

  const RankResult dt = dynamicTraversal(g, gt, {}, {}, previous, {});
  CHECK(dt.converged);
  CHECK(dt.iterations == 1);
  CHECK(dt.affectedVertexIterations == 0);
  CHECK(dt.ranks == previous);

  const RankResult df = dynamicFrontier(g, gt, {}, {}, previous, {}, false);
  CHECK(df.converged);
  CHECK(df.iterations == 1);
  CHECK(df.affectedVertexIterations == 0);
  CHECK(df.ranks == previous);
}

TEST_CASE("full-frontier DF matches ND iteration by iteration") {
  SplitMix64 rng(127);
  const auto [g, gt] = randomPair(rng, 70, 350);
  std::vector<double> start(70, 1.0 / 70);

  std::vector<std::vector<double>> ndIterates;
  const RankResult nd = naiveDynamic(
      gt, g, start, {}, [&](int, std::span<const double> ranks) {
        ndIterates.emplace_back(ranks.begin(), ranks.end());
      });

  EngineConfig dfCfg;
  dfCfg.frontierTolerance = 0.0;
  AffectedFlags all(70);
  std::fill(all.vertexAffected.begin(), all.vertexAffected.end(), 1);
  std::vector<std::vector<double>> dfIterates;
  const RankResult df = dynamicFrontierFromFlags(
      g, gt, all, start, dfCfg, false,
      [&](int, std::span<const double> ranks) {
        dfIterates.emplace_back(ranks.begin(), ranks.end());
      });

  REQUIRE(nd.iterations == df.iterations);
  for (std::size_t i = 0; i < ndIterates.size(); ++i)
    CHECK(linfNormDelta(ndIterates[i], dfIterates[i]) <= 1e-12);
  CHECK(df.affectedVertexIterations ==
        static_cast<std::uint64_t>(df.iterations) * 70);
}

TEST_CASE("frontier engines stay close to the oracle after a random batch") {
  SplitMix64 rng(131);
  const auto [g, gt] = randomPair(rng, 400, 4000);
  const RankResult base = staticPageRank(gt, g, {});

  const BatchUpdate batch = generateRandomBatch(g, 8, 0.8, 2024);
  const CsrGraph g2 = applyBatch(g, batch);
  const CsrGraph gt2 = transpose(g2);
  const auto oracle = oracles::densePageRank(oracles::edgesOf(g2),
                                             g2.vertexCount(), 0.85, 1e-14, 10000);

  const RankResult nd =
      naiveDynamic(gt2, g2, base.ranks, {});
  const RankResult dt = dynamicTraversal(g2, gt2, batch.deletions,
                                         batch.insertions, base.ranks, {});
  const RankResult df = dynamicFrontier(g2, gt2, batch.deletions,
                                        batch.insertions, base.ranks, {}, false);
  const RankResult dfp = dynamicFrontier(g2, gt2, batch.deletions,
                                         batch.insertions, base.ranks, {}, true);

  CHECK(l1NormDelta(nd.ranks, oracle) <= 1e-5);
  CHECK(l1NormDelta(dt.ranks, oracle) <= 1e-5);
  CHECK(l1NormDelta(df.ranks, oracle) <= 1e-5);
  CHECK(l1NormDelta(dfp.ranks, oracle) <= 1e-5);

  // Work proxy ordering: the frontier engines process fewer vertices.
  CHECK(df.affectedVertexIterations < nd.affectedVertexIterations);
  CHECK(dfp.affectedVertexIterations <= df.affectedVertexIterations);
}

TEST_CASE("vertices never marked affected keep their ranks bitwise") {
  SplitMix64 rng(137);
  const auto [g, gt] = randomPair(rng, 300, 1200);
  const RankResult base = staticPageRank(gt, g, {});
  const BatchUpdate batch = generateRandomBatch(g, 3, 1.0, 77);
  const CsrGraph g2 = applyBatch(g, batch);
  const CsrGraph gt2 = transpose(g2);

  // Track every vertex that was ever affected.
  std::vector<std::uint8_t> touched(300, 0);
  AffectedFlags initial = initialAffected(g2, batch.deletions, batch.insertions);
  expandAffected(initial, g2, nullptr);

  EngineConfig cfg;
  const RankResult df = dynamicFrontier(
      g2, gt2, batch.deletions, batch.insertions, base.ranks, cfg, false,
      [&](int, std::span<const double>) {});
  // Re-run the marking to find an upper bound of the affected set: any
  // vertex outside the reachable closure can never be touched.
  const AffectedFlags reachable = markReachable(
      g2, [&] {
        std::vector<Vertex> seeds;
        for (const auto& [u, v] : batch.deletions) {
          seeds.push_back(u);
          seeds.push_back(v);
        }
        for (const auto& [u, v] : batch.insertions) seeds.push_back(u);
        return seeds;
      }());
  for (Vertex v = 0; v < 300; ++v)
    if (!reachable.vertexAffected[v]) CHECK(df.ranks[v] == base.ranks[v]);
}

TEST_CASE("partition strategies agree bitwise") {
  SplitMix64 rng(139);
  const auto [g, gt] = randomPair(rng, 150, 2500);
  const RankResult base = staticPageRank(gt, g, {});
  const BatchUpdate batch = generateRandomBatch(g, 6, 0.8, 5);
  const CsrGraph g2 = applyBatch(g, batch);
  const CsrGraph gt2 = transpose(g2);

  std::vector<RankResult> results;
  for (PartitionStrategy s :
       {PartitionStrategy::DontPartition, PartitionStrategy::PartitionTranspose,
        PartitionStrategy::PartitionBoth}) {
    EngineConfig cfg;
    cfg.partitionStrategy = s;
    cfg.lowDegreeThreshold = 8;  // force both dispatch paths to run
    results.push_back(dynamicFrontier(g2, gt2, batch.deletions,
                                      batch.insertions, base.ranks, cfg, true));
  }
  CHECK(results[0].ranks == results[1].ranks);
  CHECK(results[1].ranks == results[2].ranks);
  CHECK(results[0].iterations == results[2].iterations);
}

TEST_CASE("engines are deterministic across reruns") {
  SplitMix64 rng(149);
  const auto [g, gt] = randomPair(rng, 200, 2000);
  const RankResult base1 = staticPageRank(gt, g, {});
  const RankResult base2 = staticPageRank(gt, g, {});
  CHECK(base1.ranks == base2.ranks);

  const BatchUpdate batch = generateRandomBatch(g, 10, 0.8, 11);
  const CsrGraph g2 = applyBatch(g, batch);
  const CsrGraph gt2 = transpose(g2);
  const RankResult a = dynamicFrontier(g2, gt2, batch.deletions,
                                       batch.insertions, base1.ranks, {}, true);
  const RankResult b = dynamicFrontier(g2, gt2, batch.deletions,
                                       batch.insertions, base2.ranks, {}, true);
  CHECK(a.ranks == b.ranks);
  CHECK(a.affectedVertexIterations == b.affectedVertexIterations);
}

TEST_CASE("iteration cap returns best-effort ranks without convergence") {
  SplitMix64 rng(151);
  const auto [g, gt] = randomPair(rng, 100, 600);
  EngineConfig cfg;
  cfg.maxIterations = 3;
  const RankResult r = staticPageRank(gt, g, cfg);
  CHECK_FALSE(r.converged);
  CHECK(r.iterations == 3);
  CHECK(r.finalDelta > cfg.iterationTolerance);
}
