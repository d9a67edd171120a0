"""Command-line surface: hstar, report, facets, ehrhart and verify."""
import argparse
import json
import logging
from typing import List, Optional

from .config import Settings
from .corpus import CorpusSpec
from .digraph import Digraph, component_digraphs, digraph_to_json, is_weakly_connected, load_digraph, require_connected
from .errors import InvalidOrderingError
from .geometry import (
    classify_facets,
    dimension,
    ehrhart_counts,
    hstar_from_counts,
    oracle_hstar,
    polytope_of,
    polytope_to_json,
)
from .hstar import hstar_by_components, hstar_via_dissection, monotonicity_report, tree_set_statistics
from .trees import EdgeOrdering
from .verify import CheckOptions, verify_corpus

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_RELATION_FAILED = 1
EXIT_USAGE = 2


def _emit(data: dict) -> None:
    print(json.dumps(data, indent=2))


def parse_order(raw: str, digraph: Digraph) -> EdgeOrdering:
    """``--order 3,1,2``: the pi-value of each edge, in the order the edges appear in the file."""
    try:
        ranks = [int(part) for part in raw.split(",") if part.strip()]
    except ValueError as exc:
        raise InvalidOrderingError(f"--order must be comma-separated integers, got {raw!r}") from exc
    if len(ranks) != digraph.edge_count:
        raise InvalidOrderingError(f"--order lists {len(ranks)} values for {digraph.edge_count} edges")
    return EdgeOrdering.from_ranks(digraph.edge_ids, ranks)


def cmd_hstar(args: argparse.Namespace, settings: Settings) -> int:
    digraph = load_digraph(args.file)
    ordering = parse_order(args.order, digraph) if args.order else EdgeOrdering.identity(digraph.edge_ids)
    connected = is_weakly_connected(digraph)
    if not connected and not args.components:
        require_connected(digraph)

    if connected:
        value = hstar_via_dissection(digraph, ordering)
        components = [digraph]
    else:
        value = hstar_by_components(digraph, ordering)
        components = component_digraphs(digraph)

    out: dict = {"graph": digraph_to_json(digraph), "hstar": value.as_list(), "ordering": list(ordering.sequence)}
    lines = [f"h* = {value}"]

    if args.trees:
        out["trees"] = []
        for component in components:
            for tree, passive in tree_set_statistics(component, ordering.restrict(component.edge_ids)):
                out["trees"].append({"edges": sorted(tree), "semi_passive": passive})
                lines.append(f"tree {sorted(tree)}: {passive} semi-passive")

    exit_code = EXIT_OK
    if args.oracle:
        expected = oracle_hstar(digraph)
        match = expected == value
        out["oracle"] = expected.as_list()
        out["match"] = match
        lines.append(f"oracle h* = {expected}")
        lines.append("MATCH" if match else "MISMATCH")
        if not match:
            logger.error("Dissection h* %s differs from Ehrhart oracle %s", value, expected)
            exit_code = EXIT_RELATION_FAILED

    if args.json:
        _emit(out)
    else:
        print("\n".join(lines))
    return exit_code


def cmd_report(args: argparse.Namespace, settings: Settings) -> int:
    report = monotonicity_report(load_digraph(args.file))
    _emit(report.to_json())
    return EXIT_OK if report.ok else EXIT_RELATION_FAILED


def cmd_facets(args: argparse.Namespace, settings: Settings) -> int:
    digraph = load_digraph(args.file)
    polytope = polytope_of(digraph)
    classified = classify_facets(digraph, polytope)

    if args.json:
        out = polytope_to_json(polytope)
        out["cuts"] = [
            {"normal": list(f.normal), "shore0": sorted(c.shore0), "shore1": sorted(c.shore1), "edges": sorted(c.edge_ids)}
            for f, c in classified.cut_facets
        ]
        out["layerings"] = [
            {"normal": list(f.normal), "bound": f.bound, "layering": list(layer.values)}
            for f, layer in classified.layering_facets
        ]
        _emit(out)
        return EXIT_OK

    lines = [f"dimension {dimension(polytope)}, {len(polytope.facets)} facets"]
    for f, cut in classified.cut_facets:
        lines.append(
            f"{list(f.normal)} . x <= 0  cut {sorted(cut.shore0)} -> {sorted(cut.shore1)} edges {sorted(cut.edge_ids)}"
        )
    for f, layer in classified.layering_facets:
        lines.append(f"{list(f.normal)} . x <= {f.bound}  layering {list(layer.values)}")
    print("\n".join(lines))
    return EXIT_OK


def cmd_ehrhart(args: argparse.Namespace, settings: Settings) -> int:
    digraph = load_digraph(args.file)
    polytope = polytope_of(digraph)
    d = dimension(polytope)
    k_max = d if args.k is None else args.k
    counts = ehrhart_counts(polytope, k_max)
    value = hstar_from_counts(counts, d) if k_max >= d else None

    if args.json:
        _emit({"dimension": d, "counts": list(counts.counts), "hstar": value.as_list() if value is not None else None})
        return EXIT_OK
    print(f"L(0..{k_max}) = {', '.join(str(c) for c in counts.counts)}")
    if value is not None:
        print(f"h* = {value}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    defaults = settings.verify
    spec = CorpusSpec(
        max_vertices=args.max_vertices or defaults.max_vertices,
        max_edges=defaults.max_edges if args.max_edges is None else args.max_edges,
        allow_loops=defaults.allow_loops and not args.no_loops,
        allow_parallel=defaults.allow_parallel and not args.no_parallel,
        dedup=args.dedup,
    )
    options = CheckOptions(
        orderings_per_graph=args.orderings or defaults.orderings_per_graph,
        seed=defaults.seed if args.seed is None else args.seed,
        cache_dir=settings.cache_dir,
        use_cache=settings.use_cached_data,
    )
    tutte_bounds = None
    if args.tutte:
        tutte_bounds = (
            args.max_base_vertices or defaults.max_base_vertices,
            defaults.max_base_edges if args.max_base_edges is None else args.max_base_edges,
        )
    summary = verify_corpus(spec, options, workers=args.workers or settings.workers, tutte_bounds=tutte_bounds)

    if args.json:
        _emit(summary.to_json())
    else:
        print(summary.format())
    return EXIT_OK if summary.ok else EXIT_RELATION_FAILED


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rootpoly", description="h*-polynomials of extended root polytopes")
    ap.add_argument(
        "--log-level",
        type=str.upper,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        default=None,
        help="Override runtime.log_level",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    h = sub.add_parser("hstar", help="h* via a dissecting tree set")
    h.add_argument("file")
    h.add_argument("--order", default="", help="pi-value per edge in file order, e.g. 3,1,2")
    h.add_argument("--oracle", action="store_true", help="Cross-check against the Ehrhart oracle")
    h.add_argument("--trees", action="store_true", help="List the dissecting tree set")
    h.add_argument("--components", action="store_true", help="Allow disconnected input (product over components)")
    h.add_argument("--json", action="store_true")
    h.set_defaults(func=cmd_hstar)

    r = sub.add_parser("report", help="Deletion/contraction monotonicity report (JSON)")
    r.add_argument("file")
    r.set_defaults(func=cmd_report)

    f = sub.add_parser("facets", help="Facets with their cut/layering classification")
    f.add_argument("file")
    f.add_argument("--json", action="store_true")
    f.set_defaults(func=cmd_facets)

    e = sub.add_parser("ehrhart", help="Lattice-point counts of dilates")
    e.add_argument("file")
    e.add_argument("-k", type=int, default=None, help="Largest dilate (default: the dimension)")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_ehrhart)

    v = sub.add_parser("verify", help="Check every relation on an exhaustive small-graph corpus")
    v.add_argument("--max-vertices", type=int, default=None)
    v.add_argument("--max-edges", type=int, default=None)
    v.add_argument("--no-loops", action="store_true")
    v.add_argument("--no-parallel", action="store_true")
    v.add_argument("--dedup", action="store_true", help="Skip digraphs isomorphic to one already checked")
    v.add_argument("--orderings", type=int, default=None, help="Orderings sampled per graph")
    v.add_argument("--seed", type=int, default=None)
    v.add_argument("--tutte", action="store_true", help="Also check the Tutte correspondence")
    v.add_argument("--max-base-vertices", type=int, default=None)
    v.add_argument("--max-base-edges", type=int, default=None)
    v.add_argument("--workers", type=int, default=None)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)
    return ap


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)
