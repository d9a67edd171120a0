"""h*-polynomials of extended root polytopes from dissecting tree sets.

h*_i counts the trees of tree(D, cir^W) with exactly i internally
semi-passive edges, where W comes from the edge ordering. The same module
holds the deletion/contraction monotonicity checks and the predicates
characterizing equality.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .digraph import (
    Digraph,
    component_digraphs,
    contract,
    delete,
    digraph_to_json,
    incidence_vector,
    is_bridge,
    parallel_edges,
    reduce,
    require_connected,
)
from .errors import LoopEdgeError, RootPolyError
from .geometry import polytope_of
from .models import EdgeMonotonicity, HStarPolynomial, SpanningTree
from .signatures import contracted_dissecting_tree_set, contraction_weights, dissecting_tree_set, weights_from_ordering
from .trees import EdgeOrdering, semi_passive_count

logger = logging.getLogger(__name__)


def _reduced(digraph: Digraph, ordering: Optional[EdgeOrdering]) -> Tuple[Digraph, EdgeOrdering]:
    if ordering is None:
        ordering = EdgeOrdering.identity(digraph.edge_ids)
    ordering.require_bijection(digraph)
    reduced = reduce(digraph)
    return reduced, ordering.restrict(reduced.edge_ids)


def tree_set_statistics(
    digraph: Digraph, ordering: Optional[EdgeOrdering] = None
) -> List[Tuple[SpanningTree, int]]:
    """Dissecting tree set of the reduced digraph with each tree's semi-passivity."""
    require_connected(digraph)
    reduced, order = _reduced(digraph, ordering)
    trees = dissecting_tree_set(reduced, weights_from_ordering(order))
    return [(tree, semi_passive_count(reduced, tree, order)) for tree in trees]


def hstar_via_dissection(digraph: Digraph, ordering: Optional[EdgeOrdering] = None) -> HStarPolynomial:
    """h*_D from tree(D, cir^W) with W = weights_from_ordering(pi), on the reduced digraph."""
    stats = tree_set_statistics(digraph, ordering)
    return HStarPolynomial.from_counts(Counter(count for _, count in stats))


def hstar(digraph: Digraph) -> HStarPolynomial:
    """h*_D with the identity ordering on edge ids."""
    return hstar_via_dissection(digraph)


def hstar_by_components(digraph: Digraph, ordering: Optional[EdgeOrdering] = None) -> HStarPolynomial:
    """h* of Q~_D for any D: the product of the per-component polynomials.

    The component tree sets combine into a dissection by spanning forests and the
    semi-passivity of a forest is the sum over its trees.
    """
    if ordering is None:
        ordering = EdgeOrdering.identity(digraph.edge_ids)
    ordering.require_bijection(digraph)
    result = HStarPolynomial.one()
    for component in component_digraphs(digraph):
        result = result * hstar_via_dissection(component, ordering.restrict(component.edge_ids))
    return result


def deletion_equality_predicate(digraph: Digraph, edge_id: int) -> bool:
    """Loop, bridge, or has a parallel copy: exactly the edges whose deletion keeps h*."""
    edge = digraph.edge(edge_id)
    return edge.is_loop or is_bridge(digraph, edge_id) or bool(parallel_edges(digraph, edge_id))


def contraction_equality_predicate(digraph: Digraph, edge_id: int) -> bool:
    """x_e lies on every facet of Q~_D that misses the origin: exactly the edges whose contraction keeps h*."""
    require_connected(digraph)
    if digraph.edge(edge_id).is_loop:
        raise LoopEdgeError(edge_id, "contraction_equality_predicate")
    point = incidence_vector(digraph, edge_id)
    return all(h.value(point) == h.bound for h in polytope_of(digraph).facets if not h.origin)


def contraction_lemma_holds(digraph: Digraph, edge_id: int, ordering: Optional[EdgeOrdering] = None) -> bool:
    """{T - e : T in tree(D, sigma), e in T} == tree(D/e, tau) with e placed first.

    Runs on the reduced digraph; ``edge_id`` must survive reduction.
    """
    require_connected(digraph)
    reduced, order = _reduced(digraph, ordering)
    order = order.with_first(edge_id)
    trees = dissecting_tree_set(reduced, weights_from_ordering(order))
    lifted = {tree - {edge_id} for tree in trees if edge_id in tree}
    contracted = set(contracted_dissecting_tree_set(reduced, contraction_weights(order, edge_id), edge_id))
    if lifted != contracted:
        logger.error(
            "Contraction lemma fails for edge %s: from tree set %s, tree(D/e, tau) %s",
            edge_id,
            sorted(sorted(t) for t in lifted),
            sorted(sorted(t) for t in contracted),
        )
    return lifted == contracted


@dataclass
class MonotonicityReport:
    graph: Digraph
    hstar: HStarPolynomial
    edges: List[EdgeMonotonicity] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.edges)

    def failures(self) -> List[str]:
        out = []
        for e in self.edges:
            if e.error:
                out.append(f"edge {e.edge}: {e.error}")
                continue
            if e.delete_le is False:
                out.append(f"edge {e.edge}: h*(D-e)={e.delete} exceeds h*(D)={self.hstar}")
            if e.contract_le is False:
                out.append(f"edge {e.edge}: h*(D/e)={e.contract} exceeds h*(D)={self.hstar}")
            if e.delete_agrees is False:
                out.append(f"edge {e.edge}: deletion predicate {e.delete_predicate} but equality {e.delete_equal}")
            if e.contract_agrees is False:
                out.append(
                    f"edge {e.edge}: contraction predicate {e.contract_predicate} but equality {e.contract_equal}"
                )
        return out

    def to_json(self) -> dict:
        def poly(p: Optional[HStarPolynomial]) -> Optional[List[int]]:
            return None if p is None else p.as_list()

        return {
            "graph": digraph_to_json(self.graph),
            "hstar": self.hstar.as_list(),
            "ok": self.ok,
            "edges": [
                {
                    "id": e.edge,
                    "delete": poly(e.delete),
                    "contract": poly(e.contract),
                    "delete_le": e.delete_le,
                    "contract_le": e.contract_le,
                    "delete_equal": e.delete_equal,
                    "contract_equal": e.contract_equal,
                    "delete_predicate": e.delete_predicate,
                    "contract_predicate": e.contract_predicate,
                    "delete_agrees": e.delete_agrees,
                    "contract_agrees": e.contract_agrees,
                    "error": e.error,
                }
                for e in self.edges
            ],
        }


def _edge_monotonicity(digraph: Digraph, base: HStarPolynomial, edge_id: int) -> EdgeMonotonicity:
    entry = EdgeMonotonicity(edge=edge_id)
    try:
        deleted = hstar_by_components(delete(digraph, edge_id))
        entry.delete = deleted
        entry.delete_le = deleted.leq(base)
        entry.delete_equal = deleted == base
        entry.delete_predicate = deletion_equality_predicate(digraph, edge_id)

        if not digraph.edge(edge_id).is_loop:
            contracted = hstar(contract(digraph, edge_id))
            entry.contract = contracted
            entry.contract_le = contracted.leq(base)
            entry.contract_equal = contracted == base
            entry.contract_predicate = contraction_equality_predicate(digraph, edge_id)
    except RootPolyError as exc:
        logger.error("Edge %s: %s", edge_id, exc)
        entry.error = str(exc)
    return entry


def monotonicity_report(digraph: Digraph) -> MonotonicityReport:
    """Compare h*_D with h*_{D-e} and h*_{D/e} for every edge, plus the equality predicates."""
    require_connected(digraph)
    base = hstar(digraph)
    report = MonotonicityReport(digraph, base)
    for edge in digraph.edges:
        report.edges.append(_edge_monotonicity(digraph, base, edge.id))
    if not report.ok:
        for failure in report.failures():
            logger.error("Monotonicity: %s", failure)
    return report
