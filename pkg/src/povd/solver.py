"""Branching search for a pathwidth-one deletion set of size at most k.

Some vertex of any located obstruction (triangle, 4-cycle, or T2, at most
seven vertices) must join the solution, so the search branches at most
seven ways and recurses with the budget reduced by one.  Obstruction-free
graphs are decided directly: tree components cost nothing, and each
cycle-with-hairs component forces exactly one deletion.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionViolated, UnknownVertexError
from .graph import Graph
from .kernel import Instance, edge_bound_check
from .recognition import (
    ComponentTag,
    classify_component,
    find_obstruction,
    is_pathwidth_at_most_one,
)


@dataclass
class Solution:
    """A deletion set together with its verification status."""

    deleted: set[int]
    verified: bool = False


@dataclass
class SearchStats:
    nodes_visited: int = 0
    max_depth: int = 0
    base_cases: int = 0
    max_branching: int = 0


def verify_solution(g: Graph, deleted: set[int]) -> bool:
    """True iff removing ``deleted`` leaves pathwidth at most one."""
    for v in deleted:
        if not g.has_vertex(v):
            raise UnknownVertexError(f"unknown vertex {v} in solution")
    rest = set(g.vertices()) - deleted
    return is_pathwidth_at_most_one(g.induced_subgraph(rest))


def base_case_solve(g: Graph, k: int) -> Solution | None:
    """Decide an obstruction-free graph.

    Every component is a caterpillar (free) or one cycle with hairs (one
    forced deletion; any cycle vertex works, the smallest is taken).  Fails
    when the cyclic components outnumber the budget.
    """
    deleted: set[int] = set()
    for comp in g.connected_components():
        kind = classify_component(g, comp)
        if kind.tag is ComponentTag.OTHER:
            raise PreconditionViolated(
                f"component {sorted(comp)[:8]}... is not obstruction-free"
            )
        if kind.tag is ComponentTag.CYCLE_WITH_HAIRS:
            deleted.add(min(kind.cycle))  # type: ignore[arg-type]
    if len(deleted) > k:
        return None
    if not verify_solution(g, deleted):
        raise AssertionError("base case produced an invalid deletion set")
    return Solution(deleted, verified=True)


def solve(inst: Instance) -> tuple[Solution | None, SearchStats]:
    """Decide the instance; on YES, return a verified witness.

    Instances over the edge bound are rejected without any search.  The
    returned witness is some deletion set of size at most k, not
    necessarily a minimum one; branches are explored in ascending vertex
    order and the first success wins, so results are deterministic.
    """
    stats = SearchStats()
    if not edge_bound_check(inst):
        return None, stats
    deleted = _search(inst.graph.copy(), inst.k, 0, stats)
    if deleted is None:
        return None, stats
    assert len(deleted) <= inst.k
    if not verify_solution(inst.graph, deleted):
        raise AssertionError("search produced an invalid deletion set")
    return Solution(deleted, verified=True), stats


def _search(
    g: Graph, k: int, depth: int, stats: SearchStats
) -> set[int] | None:
    stats.nodes_visited += 1
    stats.max_depth = max(stats.max_depth, depth)
    obstruction = find_obstruction(g)
    if obstruction is None:
        stats.base_cases += 1
        sol = base_case_solve(g, k)
        return None if sol is None else set(sol.deleted)
    if k == 0:
        return None
    branch = sorted(set(obstruction.vertices))
    assert len(branch) <= 7
    stats.max_branching = max(stats.max_branching, len(branch))
    for v in branch:
        child = g.copy()
        child.remove_vertex(v)
        sub = _search(child, k - 1, depth + 1, stats)
        if sub is not None:
            sub.add(v)
            return sub
    return None
