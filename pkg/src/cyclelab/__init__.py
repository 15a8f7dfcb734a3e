"""Exact longest-cycle invariants and checks of degree-sum cycle theorems on small graphs."""

from .cycles import (
    CycleAnalysis,
    CycleSeq,
    ResidualProfile,
    analyze,
    circumference,
    enumerate_longest_cycles,
    is_CD_lambda_cycle,
    is_D_lambda_cycle,
    is_PD_lambda_cycle,
    longest_path_order,
    residual_profile,
)
from .graph import (
    Graph,
    connected_components,
    from_graph6,
    induced_subgraph,
    named_graph,
    to_graph6,
)
from .invariants import (
    INFINITY,
    InvariantBundle,
    independence_number,
    min_degree,
    sigma_k,
    vertex_connectivity,
)
from .search import ScanJob, ScanReport, find_tight, generate_graphs, scan
from .statements import (
    CheckResult,
    Quantifier,
    Statement,
    Verdict,
    catalog,
    check_reduction_identity,
    check_reduction_identity_thm8,
    evaluate,
    lookup,
)

__version__ = "0.1.0"

__all__ = [
    "CheckResult",
    "CycleAnalysis",
    "CycleSeq",
    "Graph",
    "INFINITY",
    "InvariantBundle",
    "Quantifier",
    "ResidualProfile",
    "ScanJob",
    "ScanReport",
    "Statement",
    "Verdict",
    "analyze",
    "catalog",
    "check_reduction_identity",
    "check_reduction_identity_thm8",
    "circumference",
    "connected_components",
    "enumerate_longest_cycles",
    "evaluate",
    "find_tight",
    "from_graph6",
    "generate_graphs",
    "independence_number",
    "induced_subgraph",
    "is_CD_lambda_cycle",
    "is_D_lambda_cycle",
    "is_PD_lambda_cycle",
    "longest_path_order",
    "lookup",
    "min_degree",
    "named_graph",
    "residual_profile",
    "scan",
    "sigma_k",
    "to_graph6",
    "vertex_connectivity",
]
