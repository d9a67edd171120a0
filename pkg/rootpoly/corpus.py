"""Exhaustive corpora of small labeled digraphs and undirected base graphs."""
import itertools
from dataclasses import dataclass
from typing import Iterator, List, Tuple

import networkx as nx

from .digraph import Digraph, is_weakly_connected


@dataclass(frozen=True)
class CorpusSpec:
    max_vertices: int = 3
    max_edges: int = 4
    allow_loops: bool = True
    allow_parallel: bool = True
    dedup: bool = False


def _pairs(n: int, loops: bool) -> List[Tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(n) if loops or u != v]


def canonical_form(digraph: Digraph) -> Tuple[int, Tuple[Tuple[int, int], ...]]:
    """Smallest sorted edge list over all vertex relabelings (brute force, small n only)."""
    best = None
    for perm in itertools.permutations(range(digraph.vertex_count)):
        relabeled = tuple(sorted((perm[e.tail], perm[e.head]) for e in digraph.edges))
        if best is None or relabeled < best:
            best = relabeled
    return digraph.vertex_count, best or ()


def enumerate_digraphs(spec: CorpusSpec) -> Iterator[Digraph]:
    """Weakly connected digraphs as multisets of ordered vertex pairs, edge ids in listing order."""
    seen = set()
    for n in range(1, spec.max_vertices + 1):
        pairs = _pairs(n, spec.allow_loops)
        for m in range(spec.max_edges + 1):
            choose = itertools.combinations_with_replacement if spec.allow_parallel else itertools.combinations
            for chosen in choose(pairs, m):
                digraph = Digraph.from_pairs(n, chosen)
                if not is_weakly_connected(digraph):
                    continue
                if spec.dedup:
                    form = canonical_form(digraph)
                    if form in seen:
                        continue
                    seen.add(form)
                yield digraph


def _undirected_form(n: int, chosen: Tuple[Tuple[int, int], ...]) -> Tuple:
    best = None
    for perm in itertools.permutations(range(n)):
        relabeled = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in chosen))
        if best is None or relabeled < best:
            best = relabeled
    return n, best or ()


def enumerate_base_graphs(max_vertices: int, max_edges: int, dedup: bool = False) -> Iterator[nx.MultiGraph]:
    """Connected loopless undirected multigraphs on 1..max_vertices vertices."""
    seen = set()
    for n in range(1, max_vertices + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for m in range(max_edges + 1):
            for chosen in itertools.combinations_with_replacement(pairs, m):
                graph = nx.MultiGraph()
                graph.add_nodes_from(range(n))
                graph.add_edges_from(chosen)
                if not nx.is_connected(graph):
                    continue
                if dedup:
                    form = _undirected_form(n, chosen)
                    if form in seen:
                        continue
                    seen.add(form)
                yield graph
