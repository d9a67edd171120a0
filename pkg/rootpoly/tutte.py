"""Tutte cross-oracle: subdivided orientations of undirected graphs and T_G(x, 1).

Subdividing every edge of G and orienting both halves toward the new midpoint
gives a digraph whose h*-polynomial is the reversal of T_G(x, 1):
h*(x) = x^(|V(G)| - 1) * T_G(1/x, 1).
"""
import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Tuple

import networkx as nx
import sympy as sp

from .digraph import Digraph
from .errors import DisconnectedGraphError
from .hstar import hstar
from .models import Edge, HStarPolynomial
from .trees import fundamental_cut, spanning_trees

logger = logging.getLogger(__name__)

x = sp.Symbol("x")


def _require_connected(graph: nx.MultiGraph) -> None:
    if graph.number_of_nodes() == 0 or not nx.is_connected(graph):
        raise DisconnectedGraphError("The Tutte oracle needs a connected undirected graph")


def _node_index(graph: nx.MultiGraph) -> Dict[object, int]:
    return {v: i for i, v in enumerate(sorted(graph.nodes))}


def subdivide_and_orient(graph: nx.MultiGraph) -> Digraph:
    """Replace edge i = uv by u -> n+i <- v (edge ids 2i and 2i+1)."""
    index = _node_index(graph)
    n = len(index)
    edges: List[Edge] = []
    for i, (u, v, _) in enumerate(graph.edges(keys=True)):
        midpoint = n + i
        edges.append(Edge(2 * i, index[u], midpoint))
        edges.append(Edge(2 * i + 1, index[v], midpoint))
    return Digraph(n + graph.number_of_edges(), tuple(edges))


def _key(graph: nx.MultiGraph) -> Tuple:
    return (
        tuple(sorted(graph.nodes)),
        tuple(sorted(tuple(sorted((u, v))) for u, v in graph.edges() if u != v)),
    )


def _is_bridge(graph: nx.MultiGraph, u, v, k) -> bool:
    rest = graph.copy()
    rest.remove_edge(u, v, k)
    return not nx.has_path(rest, u, v)


def _tutte(graph: nx.MultiGraph, memo: Dict[Tuple, sp.Poly]) -> sp.Poly:
    key = _key(graph)
    if key in memo:
        return memo[key]
    # Loops contribute y = 1 and are skipped.
    proper = next(((u, v, k) for u, v, k in graph.edges(keys=True) if u != v), None)
    if proper is None:
        result = sp.Poly(1, x)
    else:
        u, v, k = proper
        contracted = graph.copy()
        contracted.remove_edge(u, v, k)
        deleted = contracted.copy()
        contracted = nx.contracted_nodes(contracted, u, v, self_loops=True)
        if _is_bridge(graph, u, v, k):
            result = sp.Poly(x, x) * _tutte(contracted, memo)
        else:
            result = _tutte(deleted, memo) + _tutte(contracted, memo)
    memo[key] = result
    return result


def tutte_x1(graph: nx.MultiGraph) -> sp.Poly:
    """T_G(x, 1) by deletion/contraction (bridge factor x, loop factor 1)."""
    _require_connected(graph)
    return _tutte(nx.MultiGraph(graph), {})


def internal_activity_polynomial(graph: nx.MultiGraph) -> sp.Poly:
    """Sum over spanning trees of x^(internal activity), edges ordered as listed by the graph.

    A tree edge is internally active when it is the smallest edge of its
    fundamental cut.
    """
    _require_connected(graph)
    index = _node_index(graph)
    oriented = Digraph(
        len(index), tuple(Edge(i, index[u], index[v]) for i, (u, v, _) in enumerate(graph.edges(keys=True)))
    )
    activities: Counter = Counter()
    for tree in spanning_trees(oriented):
        active = sum(1 for e in tree if min(fundamental_cut(oriented, tree, e).edge_ids) == e)
        activities[active] += 1
    return sp.Poly(sum(count * x ** power for power, count in activities.items()), x)


def ascending_coefficients(poly: sp.Poly) -> List[int]:
    return [int(c) for c in reversed(poly.all_coeffs())]


@dataclass(frozen=True)
class TutteCorrespondence:
    vertices: int
    edges: int
    hstar: HStarPolynomial
    tutte: Tuple[int, ...]
    reversed_match: bool
    multiset_match: bool
    activity_match: bool

    @property
    def ok(self) -> bool:
        return self.reversed_match and self.multiset_match and self.activity_match


def tutte_correspondence(graph: nx.MultiGraph) -> TutteCorrespondence:
    """Compare h* of the subdivided orientation with T_G(x, 1), reversed and as coefficient multisets."""
    tutte = tutte_x1(graph)
    coeffs = ascending_coefficients(tutte)
    n = graph.number_of_nodes()
    padded = coeffs + [0] * (n - len(coeffs))
    polynomial = hstar(subdivide_and_orient(graph))

    reversed_match = polynomial == HStarPolynomial(tuple(reversed(padded)))
    multiset_match = Counter(c for c in coeffs if c) == Counter(c for c in polynomial.coefficients if c)
    activity_match = ascending_coefficients(internal_activity_polynomial(graph)) == coeffs
    if not (reversed_match and multiset_match and activity_match):
        logger.error(
            "Tutte mismatch on %s vertices, edges %s: h*=%s, T(x,1)=%s",
            n,
            sorted(graph.edges()),
            polynomial,
            tutte.as_expr(),
        )
    return TutteCorrespondence(
        n, graph.number_of_edges(), polynomial, tuple(coeffs), reversed_match, multiset_match, activity_match
    )
