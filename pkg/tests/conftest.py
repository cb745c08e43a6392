from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import strategies as st

from povd import Graph


# -- named graphs ------------------------------------------------------------


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    edges = [(i, (i + 1) % n) for i in range(n)]
    return Graph.from_edges(n, edges)


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    return Graph.from_edges(a + b, edges)


def t2_graph() -> Graph:
    # center 0, mids 1..3, leaves 4..6
    return Graph.from_edges(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


def complete_binary_tree(height: int) -> Graph:
    n = 2 ** (height + 1) - 1
    return Graph.from_edges(n, [(i, (i - 1) // 2) for i in range(1, n)])


def disjoint_union(*graphs: Graph) -> Graph:
    g = Graph()
    for h in graphs:
        offset = {}
        for v in h.vertices():
            offset[v] = g.add_vertex()
        for u, v in h.edges():
            g.add_edge(offset[u], offset[v])
    return g


def random_gnm(rng: random.Random, n: int, m: int) -> Graph:
    pairs = list(combinations(range(n), 2))
    return Graph.from_edges(n, rng.sample(pairs, m))


def random_graph(rng: random.Random, n: int, p: float = 0.3) -> Graph:
    edges = [e for e in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


# -- hypothesis strategies -----------------------------------------------------


@st.composite
def small_graphs(draw, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    edges = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return Graph.from_edges(n, edges)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
