"""Spanning trees, fundamental cuts/cycles and internal semi-activity."""
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Tuple

import networkx as nx

from .digraph import Digraph, contract, cycle_arcs, delete, is_bridge, require_connected
from .errors import InvalidOrderingError, LoopEdgeError, TreeMembershipError
from .models import FundamentalCut, FundamentalCycle, SpanningTree

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EdgeOrdering:
    """pi: E -> {1, ..., |E|}, stored as the edge ids from smallest to largest."""

    sequence: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(set(self.sequence)) != len(self.sequence):
            raise InvalidOrderingError(f"Ordering repeats an edge: {list(self.sequence)}")

    @classmethod
    def identity(cls, edge_ids: Iterable[int]) -> "EdgeOrdering":
        return cls(tuple(sorted(edge_ids)))

    @classmethod
    def from_ranks(cls, edge_ids: Iterable[int], ranks: Iterable[int]) -> "EdgeOrdering":
        """Build from pi-values given per edge (``ranks[i]`` is pi of the i-th edge id)."""
        ids, values = list(edge_ids), list(ranks)
        if sorted(values) != list(range(1, len(ids) + 1)):
            raise InvalidOrderingError(f"Ranks {values} are not a permutation of 1..{len(ids)}")
        return cls(tuple(e for _, e in sorted(zip(values, ids))))

    @cached_property
    def position(self) -> Dict[int, int]:
        return {e: i + 1 for i, e in enumerate(self.sequence)}

    def __call__(self, edge_id: int) -> int:
        try:
            return self.position[edge_id]
        except KeyError:
            raise InvalidOrderingError(f"Edge {edge_id} is not covered by the ordering") from None

    def __len__(self) -> int:
        return len(self.sequence)

    def restrict(self, edge_ids: Iterable[int]) -> "EdgeOrdering":
        keep = set(edge_ids)
        return EdgeOrdering(tuple(e for e in self.sequence if e in keep))

    def with_first(self, edge_id: int) -> "EdgeOrdering":
        self(edge_id)
        return EdgeOrdering((edge_id,) + tuple(e for e in self.sequence if e != edge_id))

    def require_bijection(self, digraph: Digraph) -> None:
        if set(self.sequence) != set(digraph.edge_ids):
            raise InvalidOrderingError(
                f"Ordering covers {sorted(self.sequence)} but the digraph has edges {sorted(digraph.edge_ids)}"
            )


def _trees(digraph: Digraph) -> List[SpanningTree]:
    if digraph.vertex_count <= 1:
        return [frozenset()]
    candidates = [e for e in digraph.edges if not e.is_loop]
    if not candidates:
        return []
    edge = min(candidates, key=lambda e: e.id)
    with_edge = [tree | {edge.id} for tree in _trees(contract(digraph, edge.id))]
    if is_bridge(digraph, edge.id):
        return with_edge
    return with_edge + _trees(delete(digraph, edge.id))


def spanning_trees(digraph: Digraph) -> List[SpanningTree]:
    """SpT(D) by deletion/contraction on the smallest non-loop edge.

    Parallel edges give distinct trees. Output is sorted by the sorted id tuples.
    """
    require_connected(digraph)
    trees = sorted(_trees(digraph), key=lambda t: tuple(sorted(t)))
    logger.debug("Enumerated %s spanning trees on %s edges", len(trees), digraph.edge_count)
    return trees


def _tree_graph(digraph: Digraph, tree: Iterable[int]) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(digraph.vertex_count))
    for edge_id in tree:
        edge = digraph.edge(edge_id)
        graph.add_edge(edge.tail, edge.head, id=edge_id)
    return graph


def fundamental_cut(digraph: Digraph, tree: SpanningTree, edge_id: int) -> FundamentalCut:
    if edge_id not in tree:
        raise TreeMembershipError(f"Edge {edge_id} is not in the tree {sorted(tree)}")
    edge = digraph.edge(edge_id)
    rest = _tree_graph(digraph, tree - {edge_id})
    tail_shore = frozenset(nx.node_connected_component(rest, edge.tail))
    head_shore = frozenset(range(digraph.vertex_count)) - tail_shore

    crossing, parallel = set(), set()
    for other in digraph.edges:
        if (other.tail in tail_shore) == (other.head in tail_shore):
            continue
        crossing.add(other.id)
        if other.head in head_shore:
            parallel.add(other.id)
    return FundamentalCut(
        edge=edge_id,
        edge_ids=frozenset(crossing),
        shores=(tail_shore, head_shore),
        parallel=frozenset(parallel),
        opposite=frozenset(crossing - parallel),
    )


def fundamental_cycle(digraph: Digraph, tree: SpanningTree, edge_id: int) -> FundamentalCycle:
    if edge_id in tree:
        raise TreeMembershipError(f"Edge {edge_id} is in the tree {sorted(tree)}")
    edge = digraph.edge(edge_id)
    if edge.is_loop:
        raise LoopEdgeError(edge_id, "fundamental_cycle")
    graph = _tree_graph(digraph, tree)
    path = nx.shortest_path(graph, edge.head, edge.tail)
    cycle = frozenset(graph.edges[u, v]["id"] for u, v in zip(path, path[1:])) | {edge_id}
    parallel, opposite = cycle_arcs(digraph, cycle, start=edge_id)
    return FundamentalCycle(edge=edge_id, edge_ids=cycle, parallel=parallel, opposite=opposite)


def semi_passive_edges(digraph: Digraph, tree: SpanningTree, ordering: EdgeOrdering) -> FrozenSet[int]:
    """Tree edges whose fundamental cut has its pi-minimal edge standing opposite."""
    ordering.require_bijection(digraph)
    passive = set()
    for edge_id in tree:
        cut = fundamental_cut(digraph, tree, edge_id)
        if min(cut.edge_ids, key=ordering) in cut.opposite:
            passive.add(edge_id)
    return frozenset(passive)


def semi_passive_count(digraph: Digraph, tree: SpanningTree, ordering: EdgeOrdering) -> int:
    return len(semi_passive_edges(digraph, tree, ordering))


def semi_active_count(digraph: Digraph, tree: SpanningTree, ordering: EdgeOrdering) -> int:
    return len(tree) - semi_passive_count(digraph, tree, ordering)
