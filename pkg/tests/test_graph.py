from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from povd import Graph, NoSuchEdgeError, SelfLoopError, UnknownVertexError

from conftest import complete_graph, path_graph, star_graph


def test_add_vertex_starts_at_zero():
    g = Graph()
    assert g.add_vertex() == 0
    assert g.n == 1
    assert g.degree(0) == 0


def test_fresh_ids_never_collide():
    g = Graph.from_edges(2, [])
    assert g.add_vertex() not in {0, 1} or g.add_vertex() == 2


def test_deleted_ids_are_not_reused():
    g = Graph.from_edges(2, [])
    g.remove_vertex(1)
    assert g.add_vertex() != 1


def test_add_edge_counts_and_duplicates():
    g = Graph.from_edges(2, [])
    assert g.add_edge(0, 1) is True
    assert g.m == 1
    assert g.add_edge(0, 1) is False
    assert g.add_edge(1, 0) is False
    assert g.m == 1


def test_add_edge_rejects_self_loop():
    g = Graph.from_edges(1, [])
    with pytest.raises(SelfLoopError):
        g.add_edge(0, 0)


def test_add_edge_rejects_dead_vertex():
    g = Graph.from_edges(2, [])
    g.remove_vertex(1)
    with pytest.raises(UnknownVertexError):
        g.add_edge(0, 1)


def test_remove_center_of_star_isolates_leaves():
    g = star_graph(3)
    g.remove_vertex(0)
    assert g.n == 3 and g.m == 0


def test_remove_leaf_of_path():
    g = path_graph(3)
    g.remove_vertex(0)
    assert g.n == 2 and g.m == 1 and g.has_edge(1, 2)


def test_remove_triangle_vertex_leaves_edge():
    g = complete_graph(3)
    g.remove_vertex(2)
    assert g.n == 2 and g.m == 1


def test_remove_unknown_vertex_raises():
    g = Graph()
    with pytest.raises(UnknownVertexError):
        g.remove_vertex(5)


def test_contract_path_keeps_second_endpoint():
    g = path_graph(3)  # 0-1-2
    report = g.contract_edge(0, 1)
    assert report.kept == 1 and report.removed == 0
    assert not report.collapsed_parallel
    assert g.vertices() == [1, 2] and g.has_edge(1, 2)


def test_contract_triangle_collapses_parallel():
    g = complete_graph(3)
    report = g.contract_edge(0, 1)
    assert report.collapsed_parallel
    assert g.n == 2 and g.m == 1


def test_contract_long_path_interior():
    g = path_graph(7)
    report = g.contract_edge(2, 3)
    assert not report.collapsed_parallel
    assert g.n == 6 and g.m == 5
    # remaining spine stays a path: 0-1-3-4-5-6
    assert g.has_edge(1, 3) and g.has_edge(3, 4)


def test_contract_requires_edge():
    g = path_graph(3)
    with pytest.raises(NoSuchEdgeError):
        g.contract_edge(0, 2)


def test_components_empty_graph():
    assert Graph().connected_components() == []


def test_components_two_triangles():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    comps = g.connected_components()
    assert comps == [{0, 1, 2}, {3, 4, 5}]


def test_components_path_is_single():
    assert path_graph(5).connected_components() == [{0, 1, 2, 3, 4}]


def test_induced_subgraph_of_triangle():
    g = complete_graph(3)
    sub = g.induced_subgraph({0, 2})
    assert sub.vertices() == [0, 2] and sub.m == 1


def test_induced_subgraph_empty_selection():
    sub = complete_graph(3).induced_subgraph(set())
    assert sub.n == 0 and sub.m == 0


def test_induced_subgraph_star_inside_t2():
    g = Graph.from_edges(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)])
    sub = g.induced_subgraph({0, 1, 2, 3})
    assert sub.m == 3 and all(sub.has_edge(0, i) for i in (1, 2, 3))


def test_induced_subgraph_rejects_dead_ids():
    g = complete_graph(3)
    with pytest.raises(UnknownVertexError):
        g.induced_subgraph({0, 7})


# -- property tests ------------------------------------------------------------

_ops = st.tuples(
    st.sampled_from(["add_vertex", "add_edge", "remove_vertex", "contract"]),
    st.integers(min_value=0, max_value=9),
    st.integers(min_value=0, max_value=9),
)


@settings(max_examples=200, deadline=None)
@given(st.lists(_ops, max_size=30))
def test_mutation_sequences_preserve_invariants(ops):
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    for name, a, b in ops:
        verts = g.vertices()
        if name == "add_vertex":
            g.add_vertex()
        elif name == "add_edge" and len(verts) >= 2:
            u, v = verts[a % len(verts)], verts[b % len(verts)]
            if u != v:
                g.add_edge(u, v)
        elif name == "remove_vertex" and verts:
            g.remove_vertex(verts[a % len(verts)])
        elif name == "contract" and verts:
            u = verts[a % len(verts)]
            nbrs = sorted(g.neighbors(u))
            if nbrs:
                pre_n, pre_m = g.n, g.m
                v = nbrs[b % len(nbrs)]
                expected = (g.neighbors(u) | g.neighbors(v)) - {u, v}
                g.contract_edge(u, v)
                assert g.n == pre_n - 1
                assert g.m <= pre_m
                assert g.neighbors(v) == expected
        g.validate()


@settings(max_examples=100, deadline=None)
@given(st.lists(_ops, max_size=20))
def test_components_partition(ops):
    g = Graph.from_edges(5, [(0, 1), (2, 3)])
    for name, a, b in ops:
        verts = g.vertices()
        if name == "add_vertex":
            g.add_vertex()
        elif name == "add_edge" and len(verts) >= 2:
            u, v = verts[a % len(verts)], verts[b % len(verts)]
            if u != v:
                g.add_edge(u, v)
        elif name == "remove_vertex" and verts:
            g.remove_vertex(verts[a % len(verts)])
    comps = g.connected_components()
    seen: set[int] = set()
    for comp in comps:
        assert comp, "empty component"
        assert not (comp & seen), "components overlap"
        seen |= comp
        # internally connected: BFS inside comp reaches everything
        start = min(comp)
        reach = {start}
        frontier = [start]
        while frontier:
            x = frontier.pop()
            for y in g.neighbors(x) & comp:
                if y not in reach:
                    reach.add(y)
                    frontier.append(y)
        assert reach == comp
    assert seen == set(g.vertices())
