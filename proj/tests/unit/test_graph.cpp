#include <doctest.h>

#include <set>
#include <stdexcept>

#include "dynpr/graph.hpp"
#include "dynpr/rng.hpp"
#include "oracles.hpp"

using namespace dynpr;

TEST_CASE("buildCsr handles the empty graph") {
  const CsrGraph g = buildCsr({}, 0);
  CHECK(g.vertexCount() == 0);
  CHECK(g.edgeCount() == 0);
  CHECK(g.offsets() == std::vector<std::uint64_t>{0});
}

TEST_CASE("buildCsr collapses duplicate pairs") {
  const CsrGraph g = buildCsr({{0, 1}, {0, 1}, {1, 0}}, 2);
  CHECK(g.offsets() == std::vector<std::uint64_t>{0, 1, 2});
  CHECK(g.targets() == std::vector<Vertex>{1, 0});
}

TEST_CASE("buildCsr rejects out-of-range ids") {
  CHECK_THROWS_AS(buildCsr({{0, 5}}, 3), std::invalid_argument);
  CHECK_THROWS_AS(buildCsr({{0, 0}}, 0), std::invalid_argument);
}

TEST_CASE("buildCsr matches the set oracle on random input") {
  SplitMix64 rng(11);
  EdgeList edges;
  for (int i = 0; i < 100; ++i)
    edges.emplace_back(static_cast<Vertex>(rng.bounded(20)),
                       static_cast<Vertex>(rng.bounded(20)));
  const CsrGraph g = buildCsr(edges, 20);

  const std::set<std::pair<Vertex, Vertex>> expected(edges.begin(), edges.end());
  CHECK(oracles::edgeSetOf(g) == expected);
  CHECK(g.edgeCount() == expected.size());

  // Degree sum always equals the target array length.
  std::uint64_t degreeSum = 0;
  for (Vertex v = 0; v < g.vertexCount(); ++v) degreeSum += g.degree(v);
  CHECK(degreeSum == g.targets().size());
}

TEST_CASE("transpose reverses a path") {
  const CsrGraph g = buildCsr({{0, 1}, {1, 2}}, 3);
  const CsrGraph t = transpose(g);
  CHECK(oracles::edgeSetOf(t) ==
        std::set<std::pair<Vertex, Vertex>>{{1, 0}, {2, 1}});
}

TEST_CASE("transpose fixes self-loop-only graphs") {
  const CsrGraph g = buildCsr({{0, 0}, {1, 1}, {2, 2}}, 3);
  CHECK(transpose(g) == g);
}

TEST_CASE("double transpose is the identity") {
  SplitMix64 rng(5);
  const CsrGraph g = oracles::randomGraph(rng, 50, 300);
  const CsrGraph t = transpose(g);
  CHECK(t.vertexCount() == g.vertexCount());
  CHECK(t.edgeCount() == g.edgeCount());
  CHECK(transpose(t) == g);
}

TEST_CASE("addSelfLoops covers isolated vertices") {
  const CsrGraph g = addSelfLoops(buildCsr({}, 3));
  CHECK(g.edgeCount() == 3);
  for (Vertex v = 0; v < 3; ++v) CHECK(g.hasSelfLoop(v));
}

TEST_CASE("addSelfLoops is idempotent and adds one edge per missing loop") {
  const CsrGraph g = buildCsr({{0, 1}, {1, 1}, {2, 0}}, 3);  // 1 has a loop
  const CsrGraph a = addSelfLoops(g);
  CHECK(a.edgeCount() == g.edgeCount() + 2);
  CHECK(addSelfLoops(a) == a);
}

TEST_CASE("applyBatch replaces an edge") {
  const CsrGraph g = addSelfLoops(buildCsr({{0, 1}}, 2));
  BatchUpdate b;
  b.deletions = {{0, 1}};
  b.insertions = {{1, 0}};
  const CsrGraph next = applyBatch(g, b);
  CHECK(oracles::edgeSetOf(next) ==
        std::set<std::pair<Vertex, Vertex>>{{0, 0}, {1, 0}, {1, 1}});
}

TEST_CASE("applyBatch with an empty batch equals addSelfLoops") {
  const CsrGraph bare = buildCsr({{0, 1}, {2, 1}}, 3);
  CHECK(applyBatch(bare, {}) == addSelfLoops(bare));
  const CsrGraph augmented = addSelfLoops(bare);
  CHECK(applyBatch(augmented, {}) == augmented);
}

TEST_CASE("applyBatch matches the set-algebra oracle") {
  SplitMix64 rng(99);
  for (int round = 0; round < 50; ++round) {
    const CsrGraph g = oracles::randomGraph(rng, 30, 150);
    BatchUpdate b;
    std::set<std::pair<Vertex, Vertex>> used;
    for (int i = 0; i < 14; ++i) {
      const auto u = static_cast<Vertex>(rng.bounded(30));
      const auto v = static_cast<Vertex>(rng.bounded(30));
      if (u == v || !used.emplace(u, v).second) continue;
      if (g.hasEdge(u, v))
        b.deletions.emplace_back(u, v);
      else if (rng.bounded(3) == 0)
        b.deletions.emplace_back(u, v);  // absent edge: tallied no-op
      else
        b.insertions.emplace_back(u, v);
    }
    const CsrGraph next = applyBatch(g, b);
    CHECK(oracles::edgeSetOf(next) == oracles::applyBatchOracle(g, b));
    // Same inputs, same bytes.
    CHECK(applyBatch(g, b) == next);
  }
}

TEST_CASE("applyBatch tallies no-op entries") {
  const CsrGraph g = addSelfLoops(buildCsr({{0, 1}}, 3));
  BatchUpdate b;
  b.deletions = {{1, 2}, {1, 2}};      // absent edge, listed twice
  b.insertions = {{0, 1}, {0, 2}};     // one duplicate, one new
  BatchApplyStats stats;
  const CsrGraph next = applyBatch(g, b, &stats);
  CHECK(stats.missingDeletions == 2);
  CHECK(stats.duplicateInsertions == 1);
  CHECK(next.hasEdge(0, 2));
  CHECK(next.hasEdge(0, 1));
}

TEST_CASE("applyBatch validates its batch") {
  const CsrGraph g = addSelfLoops(buildCsr({{0, 1}}, 2));
  BatchUpdate loopDeletion;
  loopDeletion.deletions = {{1, 1}};
  CHECK_THROWS_AS(applyBatch(g, loopDeletion), std::invalid_argument);

  BatchUpdate overlapping;
  overlapping.deletions = {{0, 1}};
  overlapping.insertions = {{0, 1}};
  CHECK_THROWS_AS(applyBatch(g, overlapping), std::invalid_argument);

  BatchUpdate outOfRange;
  outOfRange.insertions = {{0, 7}};
  CHECK_THROWS_AS(applyBatch(g, outOfRange), std::invalid_argument);
}
