"""Corpus verification: run every relation check on each small digraph and base graph."""
import itertools
import json
import logging
import math
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .cache_manager import CacheManager, oracle_key
from .corpus import CorpusSpec, enumerate_base_graphs, enumerate_digraphs
from .digraph import Digraph, digraph_to_json, reduce
from .errors import RootPolyError
from .geometry import classify_facets, dissection_certificate, oracle_hstar, polytope_of
from .hstar import contraction_lemma_holds, hstar_via_dissection, monotonicity_report, tree_set_statistics
from .models import HStarPolynomial
from .signatures import fundamental_circuit_shape_holds
from .trees import EdgeOrdering
from .tutte import tutte_correspondence

logger = logging.getLogger(__name__)

CHECKS = (
    "oracle",
    "dimension",
    "ordering",
    "volume",
    "monotonicity",
    "contraction_lemma",
    "facets",
    "circuit_shape",
)


@dataclass(frozen=True)
class CheckOptions:
    orderings_per_graph: int = 24
    seed: int = 0
    cache_dir: Optional[Path] = None
    use_cache: bool = False


@dataclass
class GraphResult:
    graph: dict
    passed: List[str] = field(default_factory=list)
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class VerifySummary:
    graphs: int = 0
    check_counts: Counter = field(default_factory=Counter)
    failures: List[Tuple[dict, str]] = field(default_factory=list)
    tutte_graphs: int = 0
    tutte_failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and not self.tutte_failures

    def add(self, result: GraphResult) -> None:
        self.graphs += 1
        self.check_counts.update(result.passed)
        self.failures.extend((result.graph, message) for message in result.failures)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "graphs": self.graphs,
            "checks_passed": {name: self.check_counts.get(name, 0) for name in CHECKS},
            "failures": [{"graph": graph, "message": message} for graph, message in self.failures],
            "tutte_graphs": self.tutte_graphs,
            "tutte_failures": list(self.tutte_failures),
        }

    def format(self) -> str:
        lines = [f"graphs checked: {self.graphs}"]
        for name in CHECKS:
            lines.append(f"  {name}: {self.check_counts.get(name, 0)} passed")
        if self.tutte_graphs:
            lines.append(f"tutte base graphs checked: {self.tutte_graphs}")
        for graph, message in self.failures:
            lines.append(f"FAIL {json.dumps(graph, sort_keys=True)}: {message}")
        for message in self.tutte_failures:
            lines.append(f"FAIL tutte: {message}")
        lines.append("ALL CHECKS PASSED" if self.ok else "FAILURES FOUND")
        return "\n".join(lines)


def sample_orderings(edge_ids: Sequence[int], limit: int, seed: int, key: str) -> List[EdgeOrdering]:
    """All orderings when |E|! <= limit, otherwise ``limit`` seeded shuffles."""
    ids = sorted(edge_ids)
    if math.factorial(len(ids)) <= limit:
        return [EdgeOrdering(p) for p in itertools.permutations(ids)]
    rng = random.Random(f"{seed}:{key}")
    out = []
    for _ in range(limit):
        shuffled = list(ids)
        rng.shuffle(shuffled)
        out.append(EdgeOrdering(tuple(shuffled)))
    return out


_worker_cache: Dict[Tuple[str, bool], CacheManager] = {}


def _cache_for(options: CheckOptions) -> Optional[CacheManager]:
    if options.cache_dir is None:
        return None
    key = (str(options.cache_dir), options.use_cache)
    if key not in _worker_cache:
        _worker_cache[key] = CacheManager(options.cache_dir, options.use_cache)
    return _worker_cache[key]


# Oracle values of reduced digraphs seen in this process; cleared per corpus run.
_oracle_memo: Dict[str, HStarPolynomial] = {}


def _oracle(digraph: Digraph, options: CheckOptions) -> HStarPolynomial:
    key = oracle_key(digraph)
    if key not in _oracle_memo:
        cache = _cache_for(options)
        _oracle_memo[key] = cache.oracle(digraph, oracle_hstar) if cache else oracle_hstar(digraph)
    return _oracle_memo[key]


def _run(result: GraphResult, name: str, check: Callable[[], Optional[str]]) -> None:
    try:
        problem = check()
    except RootPolyError as exc:
        problem = f"raised {type(exc).__name__}: {exc}"
    if problem is None:
        result.passed.append(name)
    else:
        result.failures.append(f"{name}: {problem}")


def check_digraph(digraph: Digraph, options: CheckOptions = CheckOptions()) -> GraphResult:
    """Every relation check on one weakly connected digraph."""
    result = GraphResult(digraph_to_json(digraph))
    key = json.dumps(result.graph, sort_keys=True)
    reduced = reduce(digraph)
    order = EdgeOrdering.identity(reduced.edge_ids)
    polytope = polytope_of(digraph)
    stats = tree_set_statistics(digraph)
    trees = [tree for tree, _ in stats]
    value = hstar_via_dissection(digraph)

    def oracle() -> Optional[str]:
        expected = _oracle(digraph, options)
        if expected != value:
            return f"dissection gives {value}, Ehrhart oracle gives {expected}"
        return None

    def dimension() -> Optional[str]:
        if polytope.dimension != digraph.vertex_count - 1:
            return f"dimension {polytope.dimension}, expected {digraph.vertex_count - 1}"
        return None

    def ordering() -> Optional[str]:
        # only reduced edges reach the pipeline
        for pi in sample_orderings(reduced.edge_ids, options.orderings_per_graph, options.seed, key):
            other = hstar_via_dissection(reduced, pi)
            if other != value:
                return f"ordering {list(pi.sequence)} gives {other}, identity gives {value}"
        return None

    def volume() -> Optional[str]:
        if value.value_at_one() != len(trees):
            return f"h*(1) = {value.value_at_one()} but the tree set has {len(trees)} trees"
        certificate = dissection_certificate(reduced, trees)
        if not certificate.ok:
            return f"dissection certificate failed: {certificate}"
        return None

    def monotonicity() -> Optional[str]:
        report = monotonicity_report(digraph)
        return None if report.ok else "; ".join(report.failures())

    def contraction_lemma() -> Optional[str]:
        bad = [e for e in reduced.edge_ids if not contraction_lemma_holds(digraph, e)]
        return f"fails for edges {bad}" if bad else None

    def facets() -> Optional[str]:
        if polytope.dimension > 0:
            classify_facets(digraph, polytope)
        return None

    def circuit_shape() -> Optional[str]:
        bad = [sorted(t) for t in trees if not fundamental_circuit_shape_holds(reduced, t, order)]
        return f"fundamental circuits of trees {bad} have the wrong shape" if bad else None

    checks = (oracle, dimension, ordering, volume, monotonicity, contraction_lemma, facets, circuit_shape)
    for name, check in zip(CHECKS, checks):
        _run(result, name, check)
    logger.debug("Checked %s: %s passed, %s failed", key, len(result.passed), len(result.failures))
    return result


def _check_safely(args: Tuple[Digraph, CheckOptions]) -> GraphResult:
    digraph, options = args
    try:
        return check_digraph(digraph, options)
    except RootPolyError as exc:
        return GraphResult(digraph_to_json(digraph), failures=[f"setup: {type(exc).__name__}: {exc}"])


def _map(func: Callable, items: Iterable, workers: int) -> Iterable:
    if workers <= 1:
        return map(func, items)
    executor = ProcessPoolExecutor(max_workers=workers)
    return _drain(executor, executor.map(func, items, chunksize=16))


def _drain(executor: ProcessPoolExecutor, results: Iterable) -> Iterable:
    with executor:
        yield from results


def verify_corpus(
    spec: CorpusSpec,
    options: CheckOptions = CheckOptions(),
    workers: int = 1,
    tutte_bounds: Optional[Tuple[int, int]] = None,
) -> VerifySummary:
    """Check every digraph of the corpus; with ``tutte_bounds`` also every base graph up to those bounds."""
    summary = VerifySummary()
    logger.info(
        "Verifying digraphs with <= %s vertices and <= %s edges (loops=%s, parallel=%s, dedup=%s, workers=%s)",
        spec.max_vertices,
        spec.max_edges,
        spec.allow_loops,
        spec.allow_parallel,
        spec.dedup,
        workers,
    )
    _oracle_memo.clear()
    cache = _cache_for(options)
    before = (cache.hits, cache.misses) if cache else (0, 0)
    jobs = ((digraph, options) for digraph in enumerate_digraphs(spec))
    for result in _map(_check_safely, jobs, workers):
        summary.add(result)
        if not result.ok:
            for message in result.failures:
                logger.error("Graph %s: %s", json.dumps(result.graph, sort_keys=True), message)
        if summary.graphs % 500 == 0:
            logger.info("Checked %s graphs", summary.graphs)
    logger.info("Checked %s digraphs, %s failures", summary.graphs, len(summary.failures))
    if cache is not None:
        if workers <= 1:
            logger.info(
                "📊 Oracle cache: %s hits, %s misses, %s entries",
                cache.hits - before[0],
                cache.misses - before[1],
                cache.entry_count(),
            )
        else:
            # worker processes keep their own counters
            logger.info("📊 Oracle cache: %s entries", cache.entry_count())

    if tutte_bounds is not None:
        max_vertices, max_edges = tutte_bounds
        for graph in enumerate_base_graphs(max_vertices, max_edges, dedup=spec.dedup):
            summary.tutte_graphs += 1
            try:
                correspondence = tutte_correspondence(graph)
            except RootPolyError as exc:
                summary.tutte_failures.append(f"edges {sorted(graph.edges())}: {exc}")
                continue
            if not correspondence.ok:
                summary.tutte_failures.append(
                    f"edges {sorted(graph.edges())}: h*={correspondence.hstar.as_list()}, "
                    f"T(x,1)={list(correspondence.tutte)}"
                )
        logger.info("Checked %s base graphs, %s Tutte failures", summary.tutte_graphs, len(summary.tutte_failures))
    return summary
