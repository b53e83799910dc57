import pytest

from matchext import Graph, GraphConstructionError, build
from conftest import complete, complete_bipartite, cycle, empty


def test_build_normalizes_k4():
    g = build(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)])
    assert g.order == 4
    assert g.edges == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
    assert g == complete(4)


def test_build_rejects_self_loop():
    with pytest.raises(GraphConstructionError, match=r"self-loop \(0, 0\)"):
        Graph(3, [(0, 0)])


def test_build_rejects_duplicate_edge():
    with pytest.raises(GraphConstructionError, match=r"duplicate edge \(0, 1\)"):
        Graph(2, [(0, 1), (1, 0)])


def test_build_rejects_out_of_range():
    with pytest.raises(GraphConstructionError, match=r"\(0, 5\)"):
        Graph(3, [(0, 5)])
    with pytest.raises(GraphConstructionError):
        Graph(0, [(0, 0)])


def test_queries():
    g = cycle(4)
    assert g.neighbors(0) == frozenset({1, 3})
    assert g.degree(2) == 2
    assert g.has_edge(0, 1) and g.has_edge(1, 0)
    assert not g.has_edge(0, 2)
    assert not g.has_edge(-1, 0)
    assert g.edge_count == 4


def test_delete_vertices_complete():
    g, old_ids = complete(4).delete_vertices({0})
    assert g == complete(3)
    assert old_ids == (1, 2, 3)


def test_delete_vertices_identity():
    c5 = cycle(5)
    g, old_ids = c5.delete_vertices(set())
    assert g == c5
    assert old_ids == (0, 1, 2, 3, 4)


def test_delete_vertices_bipartite_side():
    g, old_ids = complete_bipartite(3, 3).delete_vertices({0, 1, 2})
    assert g == empty(3)
    assert old_ids == (3, 4, 5)


def test_delete_vertices_out_of_range():
    with pytest.raises(GraphConstructionError, match="9"):
        complete(4).delete_vertices({9})


def test_induced_subgraph():
    g, old_ids = complete(5).induced_subgraph({1, 3, 4})
    assert g == complete(3)
    assert old_ids == (1, 3, 4)


def test_add_edge():
    g = cycle(4).add_edge(0, 2)
    assert g.edge_count == 5
    assert g.has_edge(0, 2)
    with pytest.raises(GraphConstructionError, match=r"\(0, 2\)"):
        g.add_edge(2, 0)
    with pytest.raises(GraphConstructionError):
        g.add_edge(1, 1)
    with pytest.raises(GraphConstructionError):
        g.add_edge(0, 7)


def test_delete_edge():
    g = complete(2).delete_edge(0, 1)
    assert g == empty(2)
    with pytest.raises(GraphConstructionError, match=r"\(0, 1\)"):
        g.delete_edge(0, 1)


def test_cone():
    assert complete(3).cone() == complete(4)
    g = cycle(5)
    coned = g.cone()
    assert coned.order == g.order + 1
    assert coned.edge_count == g.edge_count + g.order
    assert coned.degree(g.order) == g.order


def test_derived_graphs_are_new_values():
    g = cycle(4)
    g.add_edge(0, 2)
    g.delete_edge(0, 1)
    g.delete_vertices({3})
    assert g == cycle(4)


def test_equality_and_hash():
    a = Graph(3, [(0, 1), (1, 2)])
    b = Graph(3, [(1, 2), (0, 1)])
    assert a == b and hash(a) == hash(b)
    assert a != Graph(3, [(0, 1)])
    assert a != Graph(4, [(0, 1), (1, 2)])
    assert repr(a) == "Graph(order=3, edges=2)"
