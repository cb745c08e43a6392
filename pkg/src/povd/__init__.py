"""Exact toolkit for the pathwidth-one vertex deletion problem.

Given an undirected graph and a budget k, decide whether some set of at
most k vertices can be deleted so that every remaining component is a
caterpillar (equivalently, the remainder has pathwidth at most one), via
polynomial-time kernelization plus bounded branching search, with
brute-force oracles for desk-scale verification.
"""

from .errors import (
    GraphError,
    InvalidSpecError,
    IndexOutOfRangeError,
    NoSuchEdgeError,
    ParseError,
    PovdError,
    PreconditionViolated,
    SelfLoopError,
    TooLargeError,
    UnknownVertexError,
)
from .graph import ContractReport, Graph
from .kernel import (
    Instance,
    KernelResult,
    TraceEntry,
    Verdict,
    edge_bound_check,
    kernelize,
    lift_solution,
    replay_trace,
    size_bound,
)
from .matching import Matching, maximum_matching, rule4_auxiliary_graph
from .recognition import (
    ComponentKind,
    ComponentTag,
    Obstruction,
    ObstructionKind,
    classify_component,
    find_obstruction,
    find_t2,
    is_pathwidth_at_most_one,
    shortest_cycle,
)
from .solver import SearchStats, Solution, base_case_solve, solve, verify_solution
from .workbench import (
    GenSpec,
    bench_run,
    brute_subgraph_check,
    contains_cycle,
    generate,
    oracle_min_pods,
    planted_witness,
)

__version__ = "0.1.0"

__all__ = [
    "ComponentKind",
    "ComponentTag",
    "ContractReport",
    "GenSpec",
    "Graph",
    "GraphError",
    "IndexOutOfRangeError",
    "Instance",
    "InvalidSpecError",
    "KernelResult",
    "Matching",
    "NoSuchEdgeError",
    "Obstruction",
    "ObstructionKind",
    "ParseError",
    "PovdError",
    "PreconditionViolated",
    "SearchStats",
    "SelfLoopError",
    "Solution",
    "TooLargeError",
    "TraceEntry",
    "UnknownVertexError",
    "Verdict",
    "base_case_solve",
    "bench_run",
    "brute_subgraph_check",
    "classify_component",
    "contains_cycle",
    "edge_bound_check",
    "find_obstruction",
    "find_t2",
    "generate",
    "is_pathwidth_at_most_one",
    "kernelize",
    "lift_solution",
    "maximum_matching",
    "oracle_min_pods",
    "planted_witness",
    "replay_trace",
    "rule4_auxiliary_graph",
    "shortest_cycle",
    "size_bound",
    "solve",
    "verify_solution",
]
