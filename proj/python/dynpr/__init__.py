"""Parallel dynamic PageRank over CSR graphs.

Thin re-export of the native extension. The engines come in five flavors:
full recomputation (``static_pagerank``), warm-started full sweeps
(``naive_dynamic``), reachability-restricted sweeps (``dynamic_traversal``),
and incremental frontier expansion without or with pruning
(``dynamic_frontier``).
"""

from dynpr._dynpr import (  # noqa: F401
    BatchUpdate,
    CsrGraph,
    DegreePartition,
    EngineConfig,
    ParseError,
    PartitionStrategy,
    RankResult,
    SizingError,
    add_self_loops,
    apply_batch,
    build_csr,
    compute_reference_ranks,
    dynamic_frontier,
    dynamic_traversal,
    generate_random_batch,
    l1_norm_delta,
    linf_norm_delta,
    load_matrix_market,
    load_temporal_edge_list,
    naive_dynamic,
    partition_by_degree,
    static_pagerank,
    transpose,
)

__all__ = [
    "BatchUpdate",
    "CsrGraph",
    "DegreePartition",
    "EngineConfig",
    "ParseError",
    "PartitionStrategy",
    "RankResult",
    "SizingError",
    "add_self_loops",
    "apply_batch",
    "build_csr",
    "compute_reference_ranks",
    "dynamic_frontier",
    "dynamic_traversal",
    "generate_random_batch",
    "l1_norm_delta",
    "linf_norm_delta",
    "load_matrix_market",
    "load_temporal_edge_list",
    "naive_dynamic",
    "partition_by_degree",
    "static_pagerank",
    "transpose",
]
