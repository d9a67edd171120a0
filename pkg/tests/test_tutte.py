import networkx as nx
import pytest

from rootpoly.errors import DisconnectedGraphError
from rootpoly.geometry import oracle_hstar
from rootpoly.hstar import hstar
from rootpoly.tutte import (
    ascending_coefficients,
    internal_activity_polynomial,
    subdivide_and_orient,
    tutte_correspondence,
    tutte_x1,
)


def test_subdivide_and_orient(k2, c2, k3):
    digraph = subdivide_and_orient(k2)
    assert digraph.vertex_count == 3
    assert [(e.id, e.tail, e.head) for e in digraph.edges] == [(0, 0, 2), (1, 1, 2)]

    square = subdivide_and_orient(c2)
    assert square.vertex_count == 4 and square.edge_count == 4
    assert sorted(e.head for e in square.edges) == [2, 2, 3, 3]

    subdivided = subdivide_and_orient(k3)
    assert subdivided.vertex_count == 6 and subdivided.edge_count == 6
    indegree = {v: sum(1 for e in subdivided.edges if e.head == v) for v in range(6)}
    assert [indegree[v] for v in (3, 4, 5)] == [2, 2, 2]


def test_tutte_x1(k2, c2, k3):
    assert ascending_coefficients(tutte_x1(k2)) == [0, 1]
    assert ascending_coefficients(tutte_x1(c2)) == [1, 1]
    assert ascending_coefficients(tutte_x1(k3)) == [1, 1, 1]


def test_tutte_x1_ignores_loops(k2):
    looped = nx.MultiGraph(k2)
    looped.add_edge(0, 0)
    assert ascending_coefficients(tutte_x1(looped)) == [0, 1]


def test_tutte_needs_connectivity():
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(3))
    graph.add_edge(0, 1)
    with pytest.raises(DisconnectedGraphError):
        tutte_x1(graph)
    with pytest.raises(DisconnectedGraphError):
        tutte_x1(nx.MultiGraph())


def test_internal_activity_matches_deletion_contraction(k3):
    k4 = nx.MultiGraph(nx.complete_graph(4))
    for graph in (k3, k4):
        assert internal_activity_polynomial(graph) == tutte_x1(graph)


def test_normalization_is_reversal(k2, c2, k3):
    # T_K2 = x while h* = 1, so the direct form is ruled out
    assert oracle_hstar(subdivide_and_orient(k2)).as_list() == [1]
    assert oracle_hstar(subdivide_and_orient(c2)).as_list() == [1, 1]
    assert oracle_hstar(subdivide_and_orient(k3)).as_list() == [1, 1, 1]
    for graph in (k2, c2, k3):
        assert hstar(subdivide_and_orient(graph)) == oracle_hstar(subdivide_and_orient(graph))


def test_tutte_correspondence(k2, c2, k3):
    for graph in (k2, c2, k3):
        result = tutte_correspondence(graph)
        assert result.ok, result

    path = nx.MultiGraph([(0, 1), (1, 2), (1, 2)])
    result = tutte_correspondence(path)
    # T = x (x + 1)
    assert list(result.tutte) == [0, 1, 1]
    assert result.hstar.as_list() == [1, 1]
    assert result.reversed_match and result.multiset_match
