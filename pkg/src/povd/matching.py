"""Exact maximum matching in general graphs, plus the Rule-4 auxiliary graph.

The kernelizer's vertex-deletion rule compares a true maximum matching
against a threshold, so exactness is the contract here; odd cycles are
handled by blossom contraction.  Everything scans in ascending-id order so
repeated runs (and therefore rule firings) are reproducible.
"""

from __future__ import annotations

from collections import deque

from .graph import Graph

# A matching is a set of edges as ordered pairs (u < v), no shared endpoint.
Matching = set[tuple[int, int]]


def maximum_matching(g: Graph) -> Matching:
    """A maximum-cardinality matching of ``g``.

    Classic O(V^3) augmenting-path search: grow an alternating BFS forest
    from each free vertex (lowest id first), contracting any odd cycle met
    along the way into its base vertex, and augment when a free vertex is
    reached.  Each free vertex is tried once; a vertex left unmatched after
    its own search can never be matched by later augmentations.
    """
    mate: dict[int, int | None] = {v: None for v in g.vertices()}
    for root in g.vertices():
        if mate[root] is None:
            _augment_from(g, root, mate)
    matching = {(u, v) for u, v in mate.items() if v is not None and u < v}
    _check_matching(g, matching)
    return matching


def _augment_from(g: Graph, root: int, mate: dict[int, int | None]) -> bool:
    parent: dict[int, int] = {}
    base = {v: v for v in g.vertices()}
    outer = {root}  # even-depth vertices of the alternating forest
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = set()
        x = base[a]
        while True:
            seen.add(x)
            if mate[x] is None:
                break
            x = base[parent[mate[x]]]  # type: ignore[index]
        y = base[b]
        while y not in seen:
            y = base[parent[mate[y]]]  # type: ignore[index]
        return y

    def mark_path(v: int, stem: int, child: int) -> set[int]:
        # Re-root the odd side of a blossom so both endpoints become outer.
        touched = set()
        while base[v] != stem:
            touched.add(base[v])
            touched.add(base[mate[v]])  # type: ignore[index]
            parent[v] = child
            child = mate[v]  # type: ignore[assignment]
            v = parent[child]
        return touched

    while queue:
        v = queue.popleft()
        for w in sorted(g.neighbors(v)):
            if base[v] == base[w] or mate[v] == w:
                continue
            if w in outer:
                # Edge between two outer vertices closes an odd cycle:
                # contract the blossom down to the cycle's base.
                stem = lca(v, w)
                touched = mark_path(v, stem, w) | mark_path(w, stem, v)
                for x in g.vertices():
                    if base[x] in touched:
                        base[x] = stem
                        if x not in outer:
                            outer.add(x)
                            queue.append(x)
            elif w not in parent:
                parent[w] = v
                if mate[w] is None:
                    _flip_path(w, parent, mate)
                    return True
                nxt = mate[w]
                outer.add(nxt)  # type: ignore[arg-type]
                queue.append(nxt)  # type: ignore[arg-type]
    return False


def _flip_path(w: int, parent: dict[int, int], mate: dict[int, int | None]) -> None:
    # Alternate match/unmatch along the tree path ending at free vertex w.
    while True:
        v = parent[w]
        nxt = mate[v]
        mate[w] = v
        mate[v] = w
        if nxt is None:
            return
        w = nxt


def _check_matching(g: Graph, matching: Matching) -> None:
    used: set[int] = set()
    for u, v in matching:
        if not g.has_edge(u, v):
            raise AssertionError(f"matched edge ({u}, {v}) not in graph")
        if u in used or v in used:
            raise AssertionError(f"vertex reused by matching at ({u}, {v})")
        used |= {u, v}


def rule4_auxiliary_graph(g: Graph, u: int) -> Graph:
    """Graph on N(u) and its second neighborhood, minus far-side edges.

    With A = N(u) and B = N(A) \\ (A ∪ {u}), the result contains every edge
    of ``g`` inside A ∪ B except those with both ends in B; ``u`` itself is
    excluded.  Every edge therefore has at least one end adjacent to ``u``
    and none is incident to ``u``, so a matching here is exactly a matching
    of ``g`` that touches N(u) on every edge while avoiding ``u``.
    """
    a = set(g.neighbors(u))
    b = set()
    for x in a:
        b |= g.neighbors(x)
    b -= a | {u}
    keep = a | b
    edges = []
    for x in sorted(a):
        for y in sorted(g.neighbors(x)):
            if y == u or y not in keep:
                continue
            if y in a and y < x:
                continue  # A-A edge already emitted from the other side
            edges.append((x, y))
    return Graph._from_parts(keep, edges, g._next_id)
