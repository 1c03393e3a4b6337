#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dynpr/engine.hpp"
#include "dynpr/frontier.hpp"
#include "dynpr/graph.hpp"
#include "dynpr/harness.hpp"
#include "dynpr/partition.hpp"
#include "dynpr/rank.hpp"
#include "dynpr/workload.hpp"

namespace py = pybind11;
using namespace dynpr;

namespace {

std::vector<double> ranksOf(const RankResult& r) { return r.ranks; }

}  // namespace

PYBIND11_MODULE(_dynpr, m) {
  m.doc() = "Parallel dynamic PageRank over CSR graphs";

  py::class_<CsrGraph>(m, "CsrGraph")
      .def(py::init<>())
      .def_property_readonly("vertex_count", &CsrGraph::vertexCount)
      .def_property_readonly("edge_count", &CsrGraph::edgeCount)
      .def("degree", &CsrGraph::degree, py::arg("v"))
      .def("out",
           [](const CsrGraph& g, Vertex v) {
             auto s = g.out(v);
             return std::vector<Vertex>(s.begin(), s.end());
           },
           py::arg("v"))
      .def("has_edge", &CsrGraph::hasEdge, py::arg("source"), py::arg("target"))
      .def_property_readonly("offsets",
                             [](const CsrGraph& g) { return g.offsets(); })
      .def_property_readonly("targets",
                             [](const CsrGraph& g) { return g.targets(); })
      .def("__eq__", [](const CsrGraph& a, const CsrGraph& b) { return a == b; })
      .def("__repr__", [](const CsrGraph& g) {
        return "<CsrGraph |V|=" + std::to_string(g.vertexCount()) +
               " |E|=" + std::to_string(g.edgeCount()) + ">";
      });

  py::class_<BatchUpdate>(m, "BatchUpdate")
      .def(py::init<>())
      .def(py::init([](EdgeList deletions, EdgeList insertions) {
             BatchUpdate b;
             b.deletions = std::move(deletions);
             b.insertions = std::move(insertions);
             return b;
           }),
           py::arg("deletions") = EdgeList{}, py::arg("insertions") = EdgeList{})
      .def_readwrite("deletions", &BatchUpdate::deletions)
      .def_readwrite("insertions", &BatchUpdate::insertions);

  py::enum_<PartitionStrategy>(m, "PartitionStrategy")
      .value("DONT_PARTITION", PartitionStrategy::DontPartition)
      .value("PARTITION_TRANSPOSE", PartitionStrategy::PartitionTranspose)
      .value("PARTITION_BOTH", PartitionStrategy::PartitionBoth);

  py::class_<EngineConfig>(m, "EngineConfig")
      .def(py::init<>())
      .def_readwrite("damping_factor", &EngineConfig::dampingFactor)
      .def_readwrite("iteration_tolerance", &EngineConfig::iterationTolerance)
      .def_readwrite("frontier_tolerance", &EngineConfig::frontierTolerance)
      .def_readwrite("prune_tolerance", &EngineConfig::pruneTolerance)
      .def_readwrite("max_iterations", &EngineConfig::maxIterations)
      .def_readwrite("low_degree_threshold", &EngineConfig::lowDegreeThreshold)
      .def_readwrite("partition_strategy", &EngineConfig::partitionStrategy)
      .def_readwrite("convergence_check_disabled",
                     &EngineConfig::convergenceCheckDisabled);

  py::class_<DegreePartition>(m, "DegreePartition")
      .def_readonly("order", &DegreePartition::order)
      .def_readonly("low_count", &DegreePartition::lowCount);

  py::class_<RankResult>(m, "RankResult")
      .def_property_readonly("ranks", &ranksOf)
      .def_readonly("iterations", &RankResult::iterations)
      .def_readonly("affected_vertex_iterations",
                    &RankResult::affectedVertexIterations)
      .def_readonly("converged", &RankResult::converged)
      .def_readonly("final_delta", &RankResult::finalDelta);

  m.def("build_csr", &buildCsr, py::arg("edges"), py::arg("vertex_count"));
  m.def("transpose", &transpose, py::arg("g"));
  m.def("add_self_loops", &addSelfLoops, py::arg("g"));
  m.def("apply_batch",
        [](const CsrGraph& g, const BatchUpdate& b) { return applyBatch(g, b); },
        py::arg("g"), py::arg("batch"));
  m.def("partition_by_degree", &partitionByDegree, py::arg("g"),
        py::arg("threshold"));

  m.def("linf_norm_delta",
        [](const std::vector<double>& a, const std::vector<double>& b) {
          return linfNormDelta(a, b);
        });
  m.def("l1_norm_delta",
        [](const std::vector<double>& a, const std::vector<double>& b) {
          return l1NormDelta(a, b);
        });

  m.def("static_pagerank",
        [](const CsrGraph& gt, const CsrGraph& g, const EngineConfig& cfg) {
          return staticPageRank(gt, g, cfg);
        },
        py::arg("g_transpose"), py::arg("g_forward"),
        py::arg("config") = EngineConfig{});
  m.def("naive_dynamic",
        [](const CsrGraph& gt, const CsrGraph& g,
           const std::vector<double>& prev, const EngineConfig& cfg) {
          return naiveDynamic(gt, g, prev, cfg);
        },
        py::arg("g_transpose"), py::arg("g_forward"), py::arg("previous_ranks"),
        py::arg("config") = EngineConfig{});
  m.def("dynamic_traversal",
        [](const CsrGraph& g, const CsrGraph& gt, const EdgeList& dels,
           const EdgeList& ins, const std::vector<double>& prev,
           const EngineConfig& cfg) {
          return dynamicTraversal(g, gt, dels, ins, prev, cfg);
        },
        py::arg("g_forward"), py::arg("g_transpose"), py::arg("deletions"),
        py::arg("insertions"), py::arg("previous_ranks"),
        py::arg("config") = EngineConfig{});
  m.def("dynamic_frontier",
        [](const CsrGraph& g, const CsrGraph& gt, const EdgeList& dels,
           const EdgeList& ins, const std::vector<double>& prev,
           const EngineConfig& cfg, bool pruning) {
          return dynamicFrontier(g, gt, dels, ins, prev, cfg, pruning);
        },
        py::arg("g_forward"), py::arg("g_transpose"), py::arg("deletions"),
        py::arg("insertions"), py::arg("previous_ranks"),
        py::arg("config") = EngineConfig{}, py::arg("pruning") = false);

  m.def("load_matrix_market",
        [](const std::string& path) {
          auto mm = loadMatrixMarket(path);
          return py::make_tuple(mm.edges, mm.vertexCount);
        },
        py::arg("path"));
  m.def("load_temporal_edge_list",
        [](const std::string& path) {
          auto t = loadTemporalEdgeList(path);
          std::vector<std::tuple<Vertex, Vertex, std::int64_t>> entries;
          entries.reserve(t.entries.size());
          for (const auto& e : t.entries)
            entries.emplace_back(e.source, e.target, e.timestamp);
          return py::make_tuple(entries, t.vertexCount);
        },
        py::arg("path"));
  m.def("generate_random_batch", &generateRandomBatch, py::arg("g"),
        py::arg("total_size"), py::arg("insert_fraction") = 0.8,
        py::arg("seed") = 1);
  m.def("compute_reference_ranks",
        [](const CsrGraph& gt, const CsrGraph& g, const EngineConfig& cfg) {
          return computeReferenceRanks(gt, g, cfg);
        },
        py::arg("g_transpose"), py::arg("g_forward"),
        py::arg("config") = EngineConfig{});

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<SizingError>(m, "SizingError", PyExc_ValueError);
}
