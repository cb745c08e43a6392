"""Simple undirected graph with deletion, contraction, and component queries.

Vertex ids are non-negative integers handed out by :meth:`Graph.add_vertex`.
Deleted ids are tombstoned and never reused, so ids stay meaningful in audit
trails even after arbitrary mutation sequences.  The graph is always simple:
no self-loops, no parallel edges; contraction reports (rather than stores)
any parallel edge it would have created.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import NoSuchEdgeError, SelfLoopError, UnknownVertexError


@dataclass(frozen=True)
class ContractReport:
    """Outcome of contracting an edge.

    ``collapsed_parallel`` is True when the endpoints shared a neighbor, so
    the simple-graph policy silently merged what would have been a parallel
    edge in a multigraph.
    """

    removed: int
    kept: int
    collapsed_parallel: bool


class Graph:
    """Mutable simple undirected graph on integer vertex ids."""

    __slots__ = ("_adj", "_m", "_next_id")

    def __init__(self) -> None:
        self._adj: dict[int, set[int]] = {}
        self._m = 0
        self._next_id = 0

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Graph on vertices ``0..n-1`` with the given edges."""
        g = cls()
        for _ in range(n):
            g.add_vertex()
        for u, v in edges:
            g.add_edge(u, v)
        return g

    @classmethod
    def _from_parts(
        cls, vertices: Iterable[int], edges: Iterable[tuple[int, int]], next_id: int
    ) -> Graph:
        # Internal: rebuild a graph that keeps the ids (and tombstones) of a host.
        g = cls()
        g._adj = {v: set() for v in vertices}
        g._next_id = next_id
        for u, v in edges:
            g.add_edge(u, v)
        return g

    # -- queries ---------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return self._m

    def has_vertex(self, u: int) -> bool:
        return u in self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def vertices(self) -> list[int]:
        """Live vertex ids in ascending order."""
        return sorted(self._adj)

    def neighbors(self, u: int) -> set[int]:
        """Neighbor set of ``u``.  Treat as read-only."""
        self._require(u)
        return self._adj[u]

    def degree(self, u: int) -> int:
        self._require(u)
        return len(self._adj[u])

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as ordered pairs (u < v), ascending."""
        for u in sorted(self._adj):
            for v in sorted(self._adj[u]):
                if u < v:
                    yield (u, v)

    # -- mutation --------------------------------------------------------

    def add_vertex(self) -> int:
        u = self._next_id
        self._next_id += 1
        self._adj[u] = set()
        return u

    def add_edge(self, u: int, v: int) -> bool:
        """Insert edge (u, v).  Returns False when it was already present."""
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        self._require(u)
        self._require(v)
        if v in self._adj[u]:
            return False
        self._adj[u].add(v)
        self._adj[v].add(u)
        self._m += 1
        return True

    def remove_vertex(self, u: int) -> None:
        self._require(u)
        for x in self._adj[u]:
            self._adj[x].remove(u)
        self._m -= len(self._adj[u])
        del self._adj[u]

    def remove_edge(self, u: int, v: int) -> None:
        if not self.has_edge(u, v):
            raise NoSuchEdgeError(f"no edge ({u}, {v})")
        self._adj[u].remove(v)
        self._adj[v].remove(u)
        self._m -= 1

    def contract_edge(self, u: int, v: int) -> ContractReport:
        """Merge ``u`` into ``v`` along the edge (u, v).

        The merged vertex keeps id ``v`` and inherits all of ``u``'s other
        neighbors.  Decreases n by exactly one and never increases m.
        """
        if not self.has_edge(u, v):
            raise NoSuchEdgeError(f"no edge ({u}, {v})")
        shared = self._adj[u] & self._adj[v]
        moved = self._adj[u] - {v}
        self.remove_vertex(u)
        for x in moved:
            self.add_edge(v, x)  # no-op for shared neighbors
        return ContractReport(removed=u, kept=v, collapsed_parallel=bool(shared))

    # -- derived structure -----------------------------------------------

    def connected_components(self) -> list[set[int]]:
        """Partition of the live vertices, ordered by smallest member id."""
        seen: set[int] = set()
        components: list[set[int]] = []
        for root in sorted(self._adj):
            if root in seen:
                continue
            comp = {root}
            queue = deque([root])
            while queue:
                x = queue.popleft()
                for y in self._adj[x]:
                    if y not in comp:
                        comp.add(y)
                        queue.append(y)
            seen |= comp
            components.append(comp)
        return components

    def induced_subgraph(self, keep: Iterable[int]) -> Graph:
        """Subgraph on ``keep`` with ids preserved."""
        keep = set(keep)
        for u in keep:
            self._require(u)
        edges = [
            (u, v) for u in keep for v in self._adj[u] if v in keep and u < v
        ]
        return Graph._from_parts(keep, edges, self._next_id)

    def copy(self) -> Graph:
        g = Graph()
        g._adj = {u: set(nb) for u, nb in self._adj.items()}
        g._m = self._m
        g._next_id = self._next_id
        return g

    # -- integrity ---------------------------------------------------------

    def validate(self) -> None:
        """Check symmetry, simplicity, edge count, and id discipline."""
        deg_sum = 0
        for u, nb in self._adj.items():
            if u >= self._next_id or u < 0:
                raise AssertionError(f"vertex id {u} outside allocated range")
            if u in nb:
                raise AssertionError(f"self-loop stored at {u}")
            deg_sum += len(nb)
            for v in nb:
                if v not in self._adj or u not in self._adj[v]:
                    raise AssertionError(f"asymmetric edge ({u}, {v})")
        if deg_sum != 2 * self._m:
            raise AssertionError(f"edge count {self._m} != degree sum {deg_sum} / 2")

    def _require(self, u: int) -> None:
        if u not in self._adj:
            raise UnknownVertexError(f"unknown vertex {u}")

    # -- dunder ------------------------------------------------------------

    def __contains__(self, u: int) -> bool:
        return u in self._adj

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"
