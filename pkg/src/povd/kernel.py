"""Kernelization: six reduction rules driven to a global fixpoint.

Starting from an instance (graph, budget k), the rules shrink the graph
while preserving the answer to "is there a vertex set of size at most k
whose deletion leaves pathwidth at most one?".  A reduced instance either
becomes trivially decided (empty graph = YES, triangle with k = 0 = NO) or
ends up with at most 34k^4 + 120k^3 + 103k^2 + k vertices.

Every firing is logged in a trace that can be replayed on the original
instance, and a solution found on the kernel can be lifted back through the
trace to a solution of the original instance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from .graph import Graph
from .matching import maximum_matching, rule4_auxiliary_graph
from .recognition import is_pathwidth_at_most_one


@dataclass
class Instance:
    """A graph together with its deletion budget."""

    graph: Graph
    k: int

    def copy(self) -> Instance:
        return Instance(self.graph.copy(), self.k)


@dataclass(frozen=True)
class TraceEntry:
    """One rule firing: which rule, which vertices, and the budget change.

    ``vertices`` is rule-specific:
      rule 1: the removed component, ascending;
      rule 2: (hub, kept pendant, deleted pendants...);
      rule 3 and 4: (deleted vertex,);
      rule 5: the stretch (x, v1..v5, y); the edge (v2, v3) was contracted
              and the merged vertex kept id v3;
      rule 6: empty (the whole instance was replaced).
    """

    rule: int
    vertices: tuple[int, ...]
    k_before: int
    k_after: int
    detail: str = ""


class Verdict(Enum):
    REDUCED = "reduced"
    TRIVIAL_YES = "trivial_yes"
    TRIVIAL_NO = "trivial_no"


@dataclass
class KernelResult:
    instance: Instance
    trace: list[TraceEntry] = field(default_factory=list)
    verdict: Verdict = Verdict.REDUCED


def size_bound(k: int) -> int:
    """Vertex bound a reduced instance must satisfy."""
    return 34 * k**4 + 120 * k**3 + 103 * k**2 + k


def edge_bound_check(inst: Instance) -> bool:
    """False when the instance has too many edges to be a YES.

    A deletion set of size k covers at most k(n-1) edges and leaves a forest
    of fewer than n edges, so more than (k+1)(n-1) edges means NO.
    """
    n = inst.graph.n
    return inst.graph.m <= (inst.k + 1) * max(n - 1, 0)


def trivial_no_instance() -> Instance:
    """Canonical NO encoding: a triangle with no budget."""
    return Instance(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]), 0)


# -- rules, one firing per call; None when the rule does not apply ---------


def apply_rule1(inst: Instance) -> TraceEntry | None:
    """Remove one connected component that already has pathwidth <= 1."""
    g = inst.graph
    for comp in g.connected_components():
        if is_pathwidth_at_most_one(g.induced_subgraph(comp)):
            removed = tuple(sorted(comp))
            for v in removed:
                g.remove_vertex(v)
            return TraceEntry(1, removed, inst.k, inst.k, "component removed")
    return None


def apply_rule2(inst: Instance) -> TraceEntry | None:
    """Keep one pendant neighbor per vertex, delete the rest."""
    g = inst.graph
    for u in g.vertices():
        pendants = sorted(p for p in g.neighbors(u) if g.degree(p) == 1)
        if len(pendants) >= 2:
            kept, dropped = pendants[0], pendants[1:]
            for p in dropped:
                g.remove_vertex(p)
            return TraceEntry(
                2,
                (u, kept, *dropped),
                inst.k,
                inst.k,
                "pendant neighbors trimmed to one",
            )
    return None


def apply_rule3(inst: Instance) -> TraceEntry | None:
    """Delete one vertex all of whose neighbor pairs are richly connected.

    Builds the companion graph whose edges join vertex pairs with at least
    k + 3 common neighbors, then deletes the first vertex of degree >= 2
    whose neighborhood is a clique there.  Any pair of its neighbors keeps
    k + 2 disjoint connections besides the deleted vertex, so the deletion
    never changes the answer.
    """
    g, k = inst.graph, inst.k
    companion = _common_neighbor_pairs(g, k + 3)
    for u in g.vertices():
        nb = sorted(g.neighbors(u))
        if len(nb) < 2:
            continue
        if all(pair in companion for pair in combinations(nb, 2)):
            g.remove_vertex(u)
            return TraceEntry(3, (u,), k, k, "redundant vertex deleted")
    return None


def _common_neighbor_pairs(g: Graph, threshold: int) -> set[tuple[int, int]]:
    counts: dict[tuple[int, int], int] = {}
    for w in g.vertices():
        for pair in combinations(sorted(g.neighbors(w)), 2):
            counts[pair] = counts.get(pair, 0) + 1
    return {pair for pair, c in counts.items() if c >= threshold}


def rule3_applicable_direct(g: Graph, k: int, u: int) -> bool:
    """Reference form of the rule-3 test, used to cross-check the companion
    graph construction: every neighbor pair of u needs k + 2 common
    neighbors besides u itself."""
    nb = sorted(g.neighbors(u))
    if len(nb) < 2:
        return False
    for v, w in combinations(nb, 2):
        common = g.neighbors(v) & g.neighbors(w) - {u, v, w}
        if len(common) < k + 2:
            return False
    return True


def apply_rule4(inst: Instance) -> TraceEntry | None:
    """Delete one vertex forced into every solution, paying budget for it.

    A vertex u whose surroundings contain a matching of k + 3 edges, each
    touching N(u) but none touching u, survives deletion of any k other
    vertices with three matched edges plus their links to u intact; that is
    a T2 centered at u, so u itself must be deleted.
    """
    g, k = inst.graph, inst.k
    for u in g.vertices():
        if g.degree(u) < k + 3:
            continue  # every matched edge uses a distinct neighbor of u
        aux = rule4_auxiliary_graph(g, u)
        if len(maximum_matching(aux)) >= k + 3:
            g.remove_vertex(u)
            inst.k = k - 1
            return TraceEntry(4, (u,), k, k - 1, "forced vertex deleted")
    return None


def apply_rule5(inst: Instance) -> TraceEntry | None:
    """Shorten one long bare stretch by contracting an edge inside it.

    After stripping the graph's pendant vertices (one pass), look for five
    consecutive vertices v1..v5 of degree 2 whose outer neighbors x (beyond
    v1) and y (beyond v5) make all seven vertices distinct with x, y
    non-adjacent.  Contract (v2, v3) in the original graph; such a stretch
    cannot all be cut, so its exact length beyond this shape is irrelevant.
    The stretch is chosen lexicographically smallest, so firings are
    reproducible.
    """
    g = inst.graph
    core = {v for v in g.vertices() if g.degree(v) != 1}
    cdeg = {v: len(g.neighbors(v) & core) for v in core}
    found = _least_bare_stretch(g, core, cdeg)
    if found is None:
        return None
    x, v1, v2, v3, v4, v5, y = found
    report = g.contract_edge(v2, v3)
    if report.collapsed_parallel:
        raise AssertionError(
            f"stretch detection bug: ({v2}, {v3}) shared a neighbor"
        )
    return TraceEntry(
        5, found, inst.k, inst.k, "stretch edge contracted"
    )


def _least_bare_stretch(
    g: Graph, core: set[int], cdeg: dict[int, int]
) -> tuple[int, ...] | None:
    # Depth-first over ascending candidates yields the lexicographically
    # least run (v1..v5), matching the documented determinism.
    deg2 = [v for v in sorted(core) if cdeg[v] == 2]
    for v1 in deg2:
        stack: list[list[int]] = [[v1]]
        while stack:
            path = stack.pop()
            if len(path) == 5:
                hit = _stretch_ends(g, core, path)
                if hit is not None:
                    return hit
                continue
            last = path[-1]
            prev = path[-2] if len(path) > 1 else None
            nxt = [
                w
                for w in sorted(g.neighbors(last) & core, reverse=True)
                if cdeg[w] == 2 and w != prev and w not in path
            ]
            for w in nxt:  # reversed sort: stack pops smallest first
                stack.append(path + [w])
    return None


def _stretch_ends(
    g: Graph, core: set[int], path: list[int]
) -> tuple[int, ...] | None:
    v1, v5 = path[0], path[-1]
    (x,) = (g.neighbors(v1) & core) - {path[1]}
    (y,) = (g.neighbors(v5) & core) - {path[3]}
    if x == y or x in path or y in path or g.has_edge(x, y):
        return None
    return (x, *path, y)


def apply_rule6(inst: Instance) -> TraceEntry | None:
    """Once nothing else applies, an oversized instance must be a NO.

    Requires rules 1-5 to be at a fixpoint.  If more than
    34k^4 + 120k^3 + 103k^2 + k vertices remain, replace the instance with
    the canonical NO encoding.
    """
    n, k = inst.graph.n, inst.k
    bound = size_bound(k)
    if n <= bound:
        return None
    no = trivial_no_instance()
    inst.graph = no.graph
    inst.k = no.k
    return TraceEntry(6, (), k, 0, f"{n} vertices > bound {bound}")


_RULES = (apply_rule1, apply_rule2, apply_rule3, apply_rule4, apply_rule5)


def kernelize(inst: Instance) -> KernelResult:
    """Drive all rules to a global fixpoint on a copy of the instance.

    Each rule is exhausted in turn; any change restarts the sequence from
    rule 1 (so the final rule only ever sees a fixpoint of the others).
    The edge bound is re-checked whenever the loop restarts, since deleting
    vertices and spending budget can tighten it below the current edge
    count, which decides the instance immediately.
    """
    work = inst.copy()
    trace: list[TraceEntry] = []
    while True:
        if not edge_bound_check(work):
            return KernelResult(trivial_no_instance(), trace, Verdict.TRIVIAL_NO)
        fired = False
        for rule in _RULES:
            entry = rule(work)
            while entry is not None:
                trace.append(entry)
                fired = True
                if work.k < 0:
                    return KernelResult(
                        trivial_no_instance(), trace, Verdict.TRIVIAL_NO
                    )
                entry = rule(work)
            if fired:
                break
        if fired:
            continue
        entry = apply_rule6(work)
        if entry is not None:
            trace.append(entry)
            return KernelResult(work, trace, Verdict.TRIVIAL_NO)
        break
    if work.graph.n == 0:
        return KernelResult(work, trace, Verdict.TRIVIAL_YES)
    assert work.graph.n <= size_bound(work.k)
    return KernelResult(work, trace, Verdict.REDUCED)


# -- trace replay and witness lifting ---------------------------------------


def replay_entry(inst: Instance, entry: TraceEntry) -> None:
    """Re-apply one recorded firing to ``inst`` in place."""
    g = inst.graph
    if entry.rule == 1:
        for v in entry.vertices:
            g.remove_vertex(v)
    elif entry.rule == 2:
        for p in entry.vertices[2:]:
            g.remove_vertex(p)
    elif entry.rule == 3:
        g.remove_vertex(entry.vertices[0])
    elif entry.rule == 4:
        g.remove_vertex(entry.vertices[0])
        inst.k -= 1
    elif entry.rule == 5:
        g.contract_edge(entry.vertices[2], entry.vertices[3])
    elif entry.rule == 6:
        no = trivial_no_instance()
        inst.graph = no.graph
        inst.k = no.k
    else:
        raise ValueError(f"unknown rule {entry.rule}")


def replay_trace(inst: Instance, trace: list[TraceEntry]) -> Instance:
    """Reproduce the kernel by replaying a trace on (a copy of) ``inst``."""
    work = inst.copy()
    for entry in trace:
        replay_entry(work, entry)
    return work


def lift_solution(
    original: Instance, trace: list[TraceEntry], kernel_solution: set[int]
) -> set[int]:
    """Map a solution of the kernel back to a solution of the original.

    Walks the trace backwards.  Most rules delete vertices no solution
    needs, so the set passes through unchanged; the budget-paying rule adds
    its deleted vertex, the contraction swaps the merged vertex for one of
    its originals, and the pendant rule occasionally swaps the kept pendant
    for its hub.  The result is checked stage by stage.
    """
    states: list[Instance] = []
    work = original.copy()
    for entry in trace:
        states.append(work.copy())
        replay_entry(work, entry)
    solution = set(kernel_solution)
    for entry, before in zip(reversed(trace), reversed(states)):
        solution = _lift_entry(before, entry, solution)
        if len(solution) > entry.k_before or not _solves(before.graph, solution):
            raise AssertionError(f"lift through rule {entry.rule} failed")
    return solution


def _lift_entry(before: Instance, entry: TraceEntry, sol: set[int]) -> set[int]:
    if entry.rule in (1, 3):
        return sol
    if entry.rule == 2:
        hub, kept = entry.vertices[0], entry.vertices[1]
        if _solves(before.graph, sol):
            return sol
        return (sol - {kept}) | {hub}
    if entry.rule == 4:
        return sol | {entry.vertices[0]}
    if entry.rule == 5:
        v2, merged = entry.vertices[2], entry.vertices[3]
        if merged in sol:
            return (sol - {merged}) | {v2}
        return sol
    raise AssertionError(f"rule {entry.rule} cannot appear on a YES path")


def _solves(g: Graph, sol: set[int]) -> bool:
    return is_pathwidth_at_most_one(g.induced_subgraph(set(g.vertices()) - sol))
