"""End-to-end smoke tests for the Python bindings."""

import math

import pytest

import dynpr


def two_cycle():
    g = dynpr.add_self_loops(dynpr.build_csr([(0, 1), (1, 0)], 2))
    return g, dynpr.transpose(g)


def test_static_pagerank_on_a_symmetric_cycle():
    g, gt = two_cycle()
    result = dynpr.static_pagerank(gt, g)
    assert result.converged
    assert result.ranks == pytest.approx([0.5, 0.5], abs=1e-12)
    assert abs(sum(result.ranks) - 1.0) < 1e-9


def test_graph_construction_and_queries():
    g = dynpr.build_csr([(0, 1), (0, 1), (2, 0)], 3)
    assert g.vertex_count == 3
    assert g.edge_count == 2  # duplicate collapsed
    assert g.has_edge(0, 1)
    assert not g.has_edge(1, 0)
    looped = dynpr.add_self_loops(g)
    assert looped.edge_count == 5
    assert looped.out(0) == [0, 1]


def test_batch_application_and_frontier_engine():
    edges = [(u, (u * 3 + 1) % 50) for u in range(50)]
    edges += [(u, (u * 7 + 2) % 50) for u in range(50)]
    g = dynpr.add_self_loops(dynpr.build_csr(edges, 50))
    gt = dynpr.transpose(g)
    base = dynpr.static_pagerank(gt, g)

    batch = dynpr.generate_random_batch(g, 4, insert_fraction=0.5, seed=9)
    assert len(batch.insertions) == 2
    assert len(batch.deletions) == 2
    g2 = dynpr.apply_batch(g, batch)
    gt2 = dynpr.transpose(g2)

    reference = dynpr.compute_reference_ranks(gt2, g2)
    for pruning in (False, True):
        result = dynpr.dynamic_frontier(
            g2, gt2, batch.deletions, batch.insertions, base.ranks, pruning=pruning
        )
        assert result.converged
        assert dynpr.l1_norm_delta(result.ranks, reference) < 1e-5

    nd = dynpr.naive_dynamic(gt2, g2, base.ranks)
    dt = dynpr.dynamic_traversal(g2, gt2, batch.deletions, batch.insertions, base.ranks)
    assert dynpr.l1_norm_delta(nd.ranks, reference) < 1e-5
    assert dynpr.l1_norm_delta(dt.ranks, reference) < 1e-5


def test_partition_by_degree():
    edges = [(0, t) for t in range(1, 40)]  # vertex 0 is high degree
    g = dynpr.build_csr(edges, 40)
    part = dynpr.partition_by_degree(g, 32)
    assert part.low_count == 39
    assert part.order[-1] == 0
    assert sorted(part.order) == list(range(40))


def test_random_batch_is_deterministic():
    g = dynpr.add_self_loops(dynpr.build_csr([(u, (u + 1) % 30) for u in range(30)], 30))
    a = dynpr.generate_random_batch(g, 6, insert_fraction=0.8, seed=123)
    b = dynpr.generate_random_batch(g, 6, insert_fraction=0.8, seed=123)
    assert a.insertions == b.insertions
    assert a.deletions == b.deletions


def test_loaders(tmp_path):
    mtx = tmp_path / "toy.mtx"
    mtx.write_text(
        "%%MatrixMarket matrix coordinate real general\n"
        "3 3 2\n"
        "1 2 1.0\n"
        "2 3 1.0\n"
    )
    edges, n = dynpr.load_matrix_market(str(mtx))
    assert n == 3
    assert edges == [(0, 1), (1, 2)]

    snap = tmp_path / "toy.txt"
    snap.write_text("# c\n10 20 5\n20 30 1\n")
    entries, n = dynpr.load_temporal_edge_list(str(snap))
    assert n == 3
    assert entries[0][2] == 1  # sorted by timestamp

    with pytest.raises(ValueError):
        dynpr.load_matrix_market(str(snap))


def test_config_and_errors():
    cfg = dynpr.EngineConfig()
    assert cfg.damping_factor == 0.85
    assert cfg.iteration_tolerance == 1e-10
    assert cfg.max_iterations == 500
    cfg.damping_factor = 1.5
    g, gt = two_cycle()
    with pytest.raises(ValueError):
        dynpr.static_pagerank(gt, g, cfg)
