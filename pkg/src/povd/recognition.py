"""Recognition of pathwidth-at-most-one graphs and location of obstructions.

A graph has pathwidth at most one exactly when every connected component is a
caterpillar: a tree whose non-leaf vertices form a simple path.  Equivalently,
the graph contains no cycle and no T2, where a T2 is the seven-vertex spider
with one degree-3 center and three legs of length two.

The minimal patterns whose absence forces every component to be a tree or a
cycle-with-pendant-hairs are the triangle, the 4-cycle, and the T2.  This
module locates one of those patterns when present (`find_obstruction`) and
classifies components when none is present (`classify_component`).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

from .errors import PreconditionViolated
from .graph import Graph


class ObstructionKind(Enum):
    TRIANGLE = "triangle"
    FOUR_CYCLE = "four_cycle"
    T2 = "t2"


@dataclass(frozen=True)
class Obstruction:
    """A located forbidden subgraph.

    ``vertices`` lists the concrete vertices: the cycle in order for
    TRIANGLE / FOUR_CYCLE, and (center, mid1, mid2, mid3, leaf1, leaf2,
    leaf3) for T2, where leaf_i hangs off mid_i.
    """

    kind: ObstructionKind
    vertices: tuple[int, ...]


class ComponentTag(Enum):
    CATERPILLAR_TREE = "caterpillar_tree"
    CYCLE_WITH_HAIRS = "cycle_with_hairs"
    OTHER = "other"


@dataclass(frozen=True)
class ComponentKind:
    """Classification of one obstruction-free component.

    ``cycle`` carries the unique cycle, in order, for CYCLE_WITH_HAIRS.
    OTHER only appears when the caller broke the obstruction-free
    precondition.
    """

    tag: ComponentTag
    cycle: tuple[int, ...] | None = None


def is_pathwidth_at_most_one(g: Graph) -> bool:
    """True iff every component is a caterpillar (or empty graph).

    Per component: the component must be acyclic, and after removing all its
    degree-1 vertices in a single pass, what remains must be a simple path or
    nothing.  The single pass matters: iterating the removal would also
    accept trees that are not caterpillars.
    """
    for comp in g.connected_components():
        if not _is_caterpillar_component(g, comp):
            return False
    return True


def _is_caterpillar_component(g: Graph, comp: set[int]) -> bool:
    edge_count = sum(g.degree(v) for v in comp) // 2
    if edge_count != len(comp) - 1:
        return False  # component has a cycle
    remainder = {v for v in comp if g.degree(v) != 1}
    # Remainder of a tree after one leaf pass is a connected subtree, so it
    # is a path exactly when no remaining vertex keeps three live neighbors.
    return all(len(g.neighbors(v) & remainder) <= 2 for v in remainder)


def shortest_cycle(g: Graph) -> tuple[int, ...] | None:
    """A minimum-length cycle, in order, or None when the graph is a forest.

    Runs a BFS from every vertex and closes a cycle through the lowest
    common ancestor of each non-tree edge's endpoints; the best cycle over
    all start vertices has length equal to the girth.  The result is
    canonical: rotated to start at its smallest vertex, oriented toward the
    smaller of that vertex's two cycle neighbors, and minimal under the
    (length, vertex sequence) order, so ties break deterministically.
    """
    best: tuple[int, tuple[int, ...]] | None = None
    for root in g.vertices():
        dist: dict[int, int] = {root: 0}
        parent: dict[int, int | None] = {root: None}
        queue = deque([root])
        order = [root]
        while queue:
            x = queue.popleft()
            for y in sorted(g.neighbors(x)):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                    order.append(y)
        for u in order:
            for w in sorted(g.neighbors(u)):
                if w <= u or parent[u] == w or parent[w] == u:
                    continue
                cycle = _close_cycle(u, w, dist, parent)
                key = (len(cycle), _canonical_cycle(cycle))
                if best is None or key < best:
                    best = key
        if best is not None and best[0] == 3:
            break  # girth can never beat a triangle
    return best[1] if best is not None else None


def _close_cycle(
    u: int, w: int, dist: dict[int, int], parent: dict[int, int | None]
) -> list[int]:
    # Walk both endpoints of a non-tree edge up to their lowest common
    # ancestor; the two tree paths plus the edge form a simple cycle.
    path_u, path_w = [u], [w]
    while dist[path_u[-1]] > dist[path_w[-1]]:
        path_u.append(parent[path_u[-1]])  # type: ignore[arg-type]
    while dist[path_w[-1]] > dist[path_u[-1]]:
        path_w.append(parent[path_w[-1]])  # type: ignore[arg-type]
    while path_u[-1] != path_w[-1]:
        path_u.append(parent[path_u[-1]])  # type: ignore[arg-type]
        path_w.append(parent[path_w[-1]])  # type: ignore[arg-type]
    return path_u + path_w[-2::-1]


def _canonical_cycle(cycle: list[int]) -> tuple[int, ...]:
    i = cycle.index(min(cycle))
    rotated = cycle[i:] + cycle[:i]
    reverse = [rotated[0]] + rotated[:0:-1]
    return tuple(min(rotated, reverse))


def find_t2(g: Graph) -> Obstruction | None:
    """Locate a T2 in a triangle-free, 4-cycle-free graph.

    Scans candidate centers in ascending id.  A vertex v is the center of
    some T2 exactly when at least three of its neighbors each have a
    neighbor at BFS distance two from v; triangle-freeness makes the three
    legs pairwise disjoint and 4-cycle-freeness keeps their tips distinct.
    Witnesses take the lowest-id qualifying neighbors and tips.

    Raises PreconditionViolated when the scan trips over a triangle or a
    4-cycle, which the caller promised were absent.
    """
    for center in g.vertices():
        level1 = g.neighbors(center)
        if len(level1) < 3:
            continue
        legs: list[tuple[int, int]] = []
        taken_tips: set[int] = set()
        for mid in sorted(level1):
            tip = None
            for x in sorted(g.neighbors(mid)):
                if x == center:
                    continue
                if x in level1:
                    raise PreconditionViolated(
                        f"triangle on ({center}, {mid}, {x}) during T2 scan"
                    )
                tip = tip if tip is not None else x
            if tip is None:
                continue
            if tip in taken_tips:
                raise PreconditionViolated(
                    f"4-cycle through {center} and {tip} during T2 scan"
                )
            taken_tips.add(tip)
            legs.append((mid, tip))
            if len(legs) == 3:
                mids = tuple(m for m, _ in legs)
                tips = tuple(t for _, t in legs)
                return Obstruction(ObstructionKind.T2, (center, *mids, *tips))
    return None


def find_obstruction(g: Graph) -> Obstruction | None:
    """Locate a triangle, a 4-cycle, or a T2; None certifies none exists.

    Priority is triangle > 4-cycle > T2, which the girth computation gives
    for free and which the T2 scan requires for its correctness.
    """
    cycle = shortest_cycle(g)
    if cycle is not None and len(cycle) == 3:
        obstruction = Obstruction(ObstructionKind.TRIANGLE, cycle)
    elif cycle is not None and len(cycle) == 4:
        obstruction = Obstruction(ObstructionKind.FOUR_CYCLE, cycle)
    else:
        obstruction = find_t2(g)
    if obstruction is not None:
        validate_obstruction(g, obstruction)
    return obstruction


def validate_obstruction(g: Graph, obstruction: Obstruction) -> None:
    """Check the claimed pattern structurally against the graph."""
    vs = obstruction.vertices
    if len(set(vs)) != len(vs):
        raise AssertionError(f"obstruction vertices not distinct: {vs}")
    if obstruction.kind in (ObstructionKind.TRIANGLE, ObstructionKind.FOUR_CYCLE):
        want = 3 if obstruction.kind is ObstructionKind.TRIANGLE else 4
        if len(vs) != want:
            raise AssertionError(f"{obstruction.kind.value} needs {want} vertices")
        for a, b in zip(vs, vs[1:] + vs[:1]):
            if not g.has_edge(a, b):
                raise AssertionError(f"missing cycle edge ({a}, {b})")
    else:
        if len(vs) != 7:
            raise AssertionError("T2 needs 7 vertices")
        center, mids, tips = vs[0], vs[1:4], vs[4:7]
        for mid, tip in zip(mids, tips):
            if not g.has_edge(center, mid) or not g.has_edge(mid, tip):
                raise AssertionError(f"missing T2 leg ({center}, {mid}, {tip})")


def classify_component(g: Graph, comp: set[int]) -> ComponentKind:
    """Classify one obstruction-free component.

    Acyclic components must be caterpillars; components with a cycle must be
    that single cycle plus pendant hairs.  OTHER signals that the component
    was not actually obstruction-free (a caller bug, not an input case).
    """
    edge_count = sum(g.degree(v) for v in comp) // 2
    if edge_count == len(comp) - 1:
        if _is_caterpillar_component(g, comp):
            return ComponentKind(ComponentTag.CATERPILLAR_TREE)
        return ComponentKind(ComponentTag.OTHER)
    core = {v for v in comp if g.degree(v) != 1}
    for v in comp - core:
        (hook,) = g.neighbors(v)
        if hook not in core:
            return ComponentKind(ComponentTag.OTHER)  # hair on a hair
    if any(len(g.neighbors(v) & core) != 2 for v in core):
        return ComponentKind(ComponentTag.OTHER)  # chord or second cycle
    cycle = _walk_cycle(g, core)
    if cycle is None:
        return ComponentKind(ComponentTag.OTHER)
    return ComponentKind(ComponentTag.CYCLE_WITH_HAIRS, cycle)


def _walk_cycle(g: Graph, core: set[int]) -> tuple[int, ...] | None:
    # core is 2-regular; a single closed walk covering all of it is a cycle.
    start = min(core)
    prev, cur = start, min(g.neighbors(start) & core)
    walk = [start]
    while cur != start:
        walk.append(cur)
        a, b = sorted(g.neighbors(cur) & core)
        prev, cur = cur, (b if a == prev else a)
    if len(walk) != len(core):
        return None  # two disjoint cycles in one "core"
    return tuple(walk)
