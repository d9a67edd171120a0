import json

import networkx as nx
import pytest

from rootpoly.digraph import Digraph
from rootpoly.geometry import LatticePolytope


@pytest.fixture
def f1() -> Digraph:
    """u->v, u->w, v->w with ids 0, 1, 2."""
    return Digraph.from_pairs(3, [(0, 1), (0, 2), (1, 2)])


@pytest.fixture
def f2() -> Digraph:
    return Digraph.from_pairs(2, [(0, 1)])


@pytest.fixture
def f3() -> Digraph:
    """Two parallel edges u->v."""
    return Digraph.from_pairs(2, [(0, 1), (0, 1)])


@pytest.fixture
def f4() -> Digraph:
    """Bidirected triangle."""
    return Digraph.from_pairs(3, [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)])


@pytest.fixture
def f5() -> Digraph:
    """Path u->v->w."""
    return Digraph.from_pairs(3, [(0, 1), (1, 2)])


@pytest.fixture
def digon() -> Digraph:
    return Digraph.from_pairs(2, [(0, 1), (1, 0)])


@pytest.fixture
def triangle() -> LatticePolytope:
    return LatticePolytope.from_points([(0, 0), (0, -1), (3, 1)])


@pytest.fixture
def segment() -> LatticePolytope:
    return LatticePolytope.from_points([(0,), (3,)])


def _multigraph(n, edges):
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(edges)
    return graph


@pytest.fixture
def k2() -> nx.MultiGraph:
    return _multigraph(2, [(0, 1)])


@pytest.fixture
def c2() -> nx.MultiGraph:
    return _multigraph(2, [(0, 1), (0, 1)])


@pytest.fixture
def k3() -> nx.MultiGraph:
    return _multigraph(3, [(0, 1), (0, 2), (1, 2)])


@pytest.fixture
def write_digraph(tmp_path):
    def write(name, vertices, edges, **extra):
        path = tmp_path / name
        path.write_text(json.dumps({"vertices": vertices, "edges": edges, **extra}), encoding="utf-8")
        return str(path)

    return write
