"""Directed multigraphs with stable edge ids, minors, reduction and cut structure."""
import json
import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .errors import (
    DigraphFormatError,
    DisconnectedGraphError,
    LoopEdgeError,
    NotACycleError,
    UnknownEdgeError,
)
from .models import DirectedCut, Edge, IntVector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Digraph:
    """Immutable directed multigraph on vertices 0..vertex_count-1.

    Loops and parallel edges are allowed. Edge ids are unique and are kept by
    every minor built from this digraph.
    """

    vertex_count: int
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise DigraphFormatError(f"vertex_count must be >= 0, got {self.vertex_count}")
        seen = set()
        for edge in self.edges:
            if not (0 <= edge.tail < self.vertex_count and 0 <= edge.head < self.vertex_count):
                raise DigraphFormatError(
                    f"Edge {edge.id} ({edge.tail}->{edge.head}) leaves the vertex range 0..{self.vertex_count - 1}"
                )
            if edge.id in seen:
                raise DigraphFormatError(f"Duplicate edge id {edge.id}")
            seen.add(edge.id)

    @classmethod
    def from_pairs(cls, vertex_count: int, pairs: Iterable[Sequence[int]]) -> "Digraph":
        """Build from (tail, head) pairs; the edge id is the position in the list."""
        return cls(vertex_count, tuple(Edge(i, int(t), int(h)) for i, (t, h) in enumerate(pairs)))

    @cached_property
    def _by_id(self) -> Dict[int, Edge]:
        return {edge.id: edge for edge in self.edges}

    @property
    def edge_ids(self) -> Tuple[int, ...]:
        return tuple(edge.id for edge in self.edges)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, edge_id: int) -> bool:
        return edge_id in self._by_id

    def edge(self, edge_id: int) -> Edge:
        try:
            return self._by_id[edge_id]
        except KeyError:
            raise UnknownEdgeError(edge_id) from None

    def underlying_multigraph(self, edge_ids: Optional[Iterable[int]] = None) -> nx.MultiGraph:
        """Forget orientations. Keys of the multigraph edges are the edge ids."""
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.vertex_count))
        chosen = self.edges if edge_ids is None else [self.edge(e) for e in edge_ids]
        for edge in chosen:
            graph.add_edge(edge.tail, edge.head, key=edge.id)
        return graph


def digraph_from_json(raw: object) -> Digraph:
    """Parse ``{"vertices": n, "edges": [[tail, head], ...]}`` (optional ``"ids"`` list)."""
    if not isinstance(raw, dict):
        raise DigraphFormatError("Digraph JSON root must be an object")
    n = raw.get("vertices")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise DigraphFormatError("'vertices' must be a nonnegative integer")
    pairs = raw.get("edges", [])
    if not isinstance(pairs, list):
        raise DigraphFormatError("'edges' must be a list of [tail, head] pairs")
    for pair in pairs:
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in pair)
        ):
            raise DigraphFormatError(f"Malformed edge {pair!r}; expected [tail, head]")
    ids = raw.get("ids")
    if ids is None:
        return Digraph.from_pairs(n, pairs)
    if (
        not isinstance(ids, list)
        or len(ids) != len(pairs)
        or not all(isinstance(i, int) and not isinstance(i, bool) for i in ids)
    ):
        raise DigraphFormatError("'ids' must be a list of integers, one per edge")
    return Digraph(n, tuple(Edge(i, t, h) for i, (t, h) in zip(ids, pairs)))


def digraph_to_json(digraph: Digraph) -> dict:
    out: dict = {"vertices": digraph.vertex_count, "edges": [[e.tail, e.head] for e in digraph.edges]}
    if list(digraph.edge_ids) != list(range(digraph.edge_count)):
        out["ids"] = list(digraph.edge_ids)
    return out


def load_digraph(path: str) -> Digraph:
    p = Path(path)
    try:
        raw_text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise DigraphFormatError(f"Failed to read digraph file: {path}: {exc}") from exc
    try:
        raw = json.loads(raw_text)
    except json.JSONDecodeError as exc:
        raise DigraphFormatError(f"Failed to parse digraph JSON: {path}: {exc}") from exc
    digraph = digraph_from_json(raw)
    logger.debug("Loaded %s: %s vertices, %s edges", path, digraph.vertex_count, digraph.edge_count)
    return digraph


def delete(digraph: Digraph, edge_id: int) -> Digraph:
    digraph.edge(edge_id)
    return Digraph(digraph.vertex_count, tuple(e for e in digraph.edges if e.id != edge_id))


def merge_map(digraph: Digraph, edge_id: int) -> Tuple[int, ...]:
    """Vertex relabeling produced by contracting ``edge_id``.

    The merged vertex takes the smaller of the two indices; indices above the
    larger one shift down by one.
    """
    edge = digraph.edge(edge_id)
    if edge.is_loop:
        raise LoopEdgeError(edge_id, "contraction")
    keep, drop = min(edge.tail, edge.head), max(edge.tail, edge.head)
    mapping = []
    for v in range(digraph.vertex_count):
        target = keep if v == drop else v
        mapping.append(target - 1 if target > drop else target)
    return tuple(mapping)


def contract_with_map(digraph: Digraph, edge_id: int) -> Tuple[Digraph, Tuple[int, ...]]:
    """D/e together with the old-vertex -> new-vertex table from merge_map."""
    mapping = merge_map(digraph, edge_id)
    edges = tuple(
        Edge(e.id, mapping[e.tail], mapping[e.head]) for e in digraph.edges if e.id != edge_id
    )
    return Digraph(digraph.vertex_count - 1, edges), mapping


def contract(digraph: Digraph, edge_id: int) -> Digraph:
    """D/e. Loops and parallels created by the merge are kept."""
    return contract_with_map(digraph, edge_id)[0]


def reduce(digraph: Digraph) -> Digraph:
    """Drop loops and keep the smallest id of every (tail, head) parallel class."""
    kept: Dict[Tuple[int, int], Edge] = {}
    for edge in sorted(digraph.edges, key=lambda e: e.id):
        if edge.is_loop:
            continue
        kept.setdefault((edge.tail, edge.head), edge)
    return Digraph(digraph.vertex_count, tuple(sorted(kept.values(), key=lambda e: e.id)))


def weak_components(digraph: Digraph) -> List[FrozenSet[int]]:
    """Components of the underlying undirected graph, ordered by smallest vertex."""
    components = nx.connected_components(digraph.underlying_multigraph())
    return sorted((frozenset(c) for c in components), key=min)


def component_count(digraph: Digraph) -> int:
    return nx.number_connected_components(digraph.underlying_multigraph())


def is_weakly_connected(digraph: Digraph) -> bool:
    return digraph.vertex_count > 0 and component_count(digraph) == 1


def require_connected(digraph: Digraph) -> None:
    if not is_weakly_connected(digraph):
        raise DisconnectedGraphError(
            f"Digraph with {digraph.vertex_count} vertices has {component_count(digraph)} weak components; "
            "a weakly connected digraph is required"
        )


def component_digraphs(digraph: Digraph) -> List[Digraph]:
    """One digraph per weak component, vertices compacted, edge ids kept."""
    out = []
    for component in weak_components(digraph):
        index = {v: i for i, v in enumerate(sorted(component))}
        edges = tuple(
            Edge(e.id, index[e.tail], index[e.head]) for e in digraph.edges if e.tail in component
        )
        out.append(Digraph(len(component), edges))
    return out


def incidence_vector(digraph: Digraph, edge_id: int) -> IntVector:
    """x_e: +1 at the head, -1 at the tail; all zeros for a loop."""
    edge = digraph.edge(edge_id)
    coords = [0] * digraph.vertex_count
    coords[edge.head] += 1
    coords[edge.tail] -= 1
    return tuple(coords)


def is_bridge(digraph: Digraph, edge_id: int) -> bool:
    edge = digraph.edge(edge_id)
    if edge.is_loop:
        return False
    return component_count(delete(digraph, edge_id)) > component_count(digraph)


def parallel_edges(digraph: Digraph, edge_id: int) -> Tuple[int, ...]:
    """Other edges with the same tail and the same head."""
    edge = digraph.edge(edge_id)
    return tuple(
        e.id for e in digraph.edges if e.id != edge_id and e.tail == edge.tail and e.head == edge.head
    )


def directed_elementary_cuts(digraph: Digraph) -> List[DirectedCut]:
    """Every bipartition (V0, V1) with all crossing edges V0 -> V1 and both shores connected."""
    require_connected(digraph)
    n = digraph.vertex_count
    graph = digraph.underlying_multigraph()
    cuts = []
    for mask in range(1, (1 << n) - 1):
        shore1 = frozenset(v for v in range(n) if mask >> v & 1)
        shore0 = frozenset(range(n)) - shore1
        crossing = []
        directed = True
        for edge in digraph.edges:
            tail_side, head_side = edge.tail in shore1, edge.head in shore1
            if tail_side == head_side:
                continue
            if tail_side:
                directed = False
                break
            crossing.append(edge.id)
        if not directed or not crossing:
            continue
        if nx.is_connected(graph.subgraph(shore0)) and nx.is_connected(graph.subgraph(shore1)):
            cuts.append(DirectedCut(shore0, shore1, frozenset(crossing)))
    cuts.sort(key=lambda c: (len(c.shore0), sorted(c.shore0)))
    return cuts


def simple_cycles(digraph: Digraph) -> List[FrozenSet[int]]:
    """All simple cycles (length >= 2) of the underlying multigraph as edge-id sets.

    Each cycle is found once, from its smallest edge id. Loops are left out.
    """
    incident: Dict[int, List[Edge]] = {v: [] for v in range(digraph.vertex_count)}
    proper = sorted((e for e in digraph.edges if not e.is_loop), key=lambda e: e.id)
    for edge in proper:
        incident[edge.tail].append(edge)
        incident[edge.head].append(edge)

    cycles: List[FrozenSet[int]] = []

    def extend(start: Edge, vertex: int, visited: FrozenSet[int], path: Tuple[int, ...]) -> None:
        for edge in incident[vertex]:
            if edge.id <= start.id:
                continue
            other = edge.head if edge.tail == vertex else edge.tail
            if other == start.tail:
                cycles.append(frozenset(path + (edge.id,)))
            elif other not in visited:
                extend(start, other, visited | {other}, path + (edge.id,))

    for start in proper:
        extend(start, start.head, frozenset((start.tail, start.head)), (start.id,))
    return cycles


def cycle_arcs(
    digraph: Digraph, cycle: Iterable[int], start: Optional[int] = None
) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """Split a cycle into (arc of ``start``, opposite arc).

    The walk leaves ``start`` (default: smallest id) from its tail; edges
    traversed tail-to-head form the first arc.
    """
    ids = frozenset(cycle)
    if len(ids) < 2:
        raise NotACycleError(ids, "fewer than two edges")
    first = digraph.edge(min(ids) if start is None else start)
    if first.id not in ids:
        raise NotACycleError(ids, f"start edge {first.id} is not on it")

    degree: Counter = Counter()
    for edge_id in ids:
        edge = digraph.edge(edge_id)
        if edge.is_loop:
            raise NotACycleError(ids, f"edge {edge_id} is a loop")
        degree[edge.tail] += 1
        degree[edge.head] += 1
    if any(d != 2 for d in degree.values()):
        raise NotACycleError(ids, "some vertex does not have degree 2")

    forward, backward = {first.id}, set()
    used = {first.id}
    current = first.head
    while len(used) < len(ids):
        step = next(
            (digraph.edge(i) for i in sorted(ids - used) if current in (digraph.edge(i).tail, digraph.edge(i).head)),
            None,
        )
        if step is None:
            raise NotACycleError(ids, "edges do not form a single closed walk")
        used.add(step.id)
        if step.tail == current:
            forward.add(step.id)
            current = step.head
        else:
            backward.add(step.id)
            current = step.tail
    if current != first.tail:
        raise NotACycleError(ids, "walk does not close")
    return frozenset(forward), frozenset(backward)


def is_cycle(digraph: Digraph, edge_ids: Iterable[int]) -> bool:
    try:
        cycle_arcs(digraph, edge_ids)
    except NotACycleError:
        return False
    return True
