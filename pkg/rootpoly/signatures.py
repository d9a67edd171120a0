"""Weight-induced circuit signatures and the dissecting tree sets they define.

A generic weight W induces the signature cir^W: every cycle is oriented so that
its heavier arc is positive. Signatures are never materialized; cycle signs are
computed on demand from the weights. All weights are scaled integers.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence

import sympy as sp

from .digraph import Digraph, contract, cycle_arcs, is_cycle, require_connected, simple_cycles
from .errors import InvalidOrderingError, LongArcViolationError, NonGenericWeightsError, NotACycleError
from .models import SignedCycle, SpanningTree
from .trees import EdgeOrdering, fundamental_cycle, spanning_trees

logger = logging.getLogger(__name__)

BASE = "base"
CONTRACTION = "contraction"
CUSTOM = "custom"


@dataclass(frozen=True)
class ScaledWeights:
    """
    Integer edge weights W = 2^(m+1) * w.

    kind: "base" (w(f) = 1 - 2^(-pi(f)-1)), "contraction" (base form except the
    distinguished edge, which gets 2^(-pi(e)-1)) or "custom".
    """

    values: Mapping[int, int]
    kind: str = CUSTOM
    contracted_edge: Optional[int] = None

    def __getitem__(self, edge_id: int) -> int:
        return self.values[edge_id]

    def arc_weight(self, edge_ids: Iterable[int]) -> int:
        return sum(self.values[e] for e in edge_ids)

    @classmethod
    def from_mapping(cls, values: Mapping[int, int]) -> "ScaledWeights":
        return cls(dict(values), CUSTOM)


def _base_weight(ordering: EdgeOrdering, edge_id: int) -> int:
    m = len(ordering)
    return 2 ** (m + 1) - 2 ** (m - ordering(edge_id))


def weights_from_ordering(ordering: EdgeOrdering) -> ScaledWeights:
    """W(f) = 2^(m+1) - 2^(m - pi(f)); generic since the subtracted powers are distinct."""
    return ScaledWeights({e: _base_weight(ordering, e) for e in ordering.sequence}, BASE)


def contraction_weights(ordering: EdgeOrdering, edge_id: int) -> ScaledWeights:
    """Base weights except W(e) = 2^(m - 1), the image of w(e) = 1/4, for pi(e) = 1."""
    if ordering(edge_id) != 1:
        raise InvalidOrderingError(f"Edge {edge_id} has position {ordering(edge_id)}, contraction weights need 1")
    values: Dict[int, int] = {e: _base_weight(ordering, e) for e in ordering.sequence}
    values[edge_id] = 2 ** (len(ordering) - 1)
    return ScaledWeights(values, CONTRACTION, contracted_edge=edge_id)


def cycle_sign(digraph: Digraph, weights: ScaledWeights, cycle: Iterable[int]) -> SignedCycle:
    """cir^W on one cycle: the strictly heavier arc becomes C+."""
    ids = frozenset(cycle)
    first, second = cycle_arcs(digraph, ids)
    a, b = weights.arc_weight(first), weights.arc_weight(second)
    if a == b:
        raise NonGenericWeightsError(ids, a)
    if a > b:
        return SignedCycle(ids, first, second)
    return SignedCycle(ids, second, first)


def signed_cycle_weight(weights: ScaledWeights, signed: SignedCycle) -> int:
    """W . chi; positive for every signed cycle of cir^W."""
    return weights.arc_weight(signed.positive) - weights.arc_weight(signed.negative)


def is_generic(digraph: Digraph, weights: ScaledWeights) -> bool:
    for cycle in simple_cycles(digraph):
        first, second = cycle_arcs(digraph, cycle)
        if weights.arc_weight(first) == weights.arc_weight(second):
            logger.debug("Cycle %s has equal arc weights", sorted(cycle))
            return False
    return True


def find_long_arc_violation(digraph: Digraph, weights: ScaledWeights) -> Optional[SignedCycle]:
    """First signed cycle of cir^W whose positive arc is the shorter one, if any."""
    for cycle in simple_cycles(digraph):
        signed = cycle_sign(digraph, weights, cycle)
        if len(signed.positive) < len(signed.negative):
            return signed
    return None


def is_long_arc_positive(digraph: Digraph, weights: ScaledWeights) -> bool:
    return find_long_arc_violation(digraph, weights) is None


def _is_contracted_cycle(contracted: Digraph, cycle: FrozenSet[int]) -> bool:
    if len(cycle) == 1:
        (only,) = cycle
        return contracted.has_edge(only) and contracted.edge(only).is_loop
    return is_cycle(contracted, cycle)


def _contracted_sign(
    digraph: Digraph, contracted: Digraph, weights: ScaledWeights, edge_id: int, cycle: FrozenSet[int]
) -> SignedCycle:
    if not _is_contracted_cycle(contracted, cycle):
        raise NotACycleError(cycle, f"not a cycle of D/{edge_id}")
    if is_cycle(digraph, cycle):
        return cycle_sign(digraph, weights, cycle)
    lifted = cycle_sign(digraph, weights, cycle | {edge_id})
    return SignedCycle(cycle, lifted.positive - {edge_id}, lifted.negative - {edge_id})


def contracted_cycle_sign(
    digraph: Digraph, weights: ScaledWeights, edge_id: int, cycle: Iterable[int]
) -> SignedCycle:
    """(cir^W / e) on a cycle of D/e.

    Cycles of D/e that are cycles of D keep their sign; otherwise the cycle is
    lifted to C + e in D, signed there and restricted to E - e. A loop of D/e
    (an edge parallel or antiparallel to e) counts as a one-edge cycle.
    """
    return _contracted_sign(digraph, contract(digraph, edge_id), weights, edge_id, frozenset(cycle))


def _filter_trees(
    digraph: Digraph, sign: Callable[[FrozenSet[int]], SignedCycle]
) -> List[SpanningTree]:
    selected = []
    for tree in spanning_trees(digraph):
        # A loop sits on the positive arc of its own one-edge cycle for any positive weights.
        outside = [e for e in digraph.edges if e.id not in tree and not e.is_loop]
        if all(e.id in sign(fundamental_cycle(digraph, tree, e.id).edge_ids).positive for e in outside):
            selected.append(tree)
    return selected


def dissecting_tree_set(digraph: Digraph, weights: ScaledWeights) -> List[SpanningTree]:
    """tree(D, cir^W): trees whose every non-tree edge lies on the positive arc of its fundamental cycle."""
    require_connected(digraph)
    violation = find_long_arc_violation(digraph, weights)
    if violation is not None:
        raise LongArcViolationError(violation.edge_ids, violation.positive, violation.negative)
    trees = _filter_trees(digraph, lambda cycle: cycle_sign(digraph, weights, cycle))
    logger.debug("tree(D, sigma) has %s trees", len(trees))
    return trees


def contracted_dissecting_tree_set(
    digraph: Digraph, weights: ScaledWeights, edge_id: int
) -> List[SpanningTree]:
    """tree(D/e, tau) with tau = cir^W / e."""
    require_connected(digraph)
    contracted = contract(digraph, edge_id)
    return _filter_trees(
        contracted, lambda cycle: _contracted_sign(digraph, contracted, weights, edge_id, cycle)
    )


def fundamental_circuit_shape_holds(digraph: Digraph, tree: SpanningTree, ordering: EdgeOrdering) -> bool:
    """For f outside T: the arc of f is longer, or the arcs tie and the pi-minimal edge is opposite f."""
    for edge in digraph.edges:
        if edge.id in tree or edge.is_loop:
            continue
        cycle = fundamental_cycle(digraph, tree, edge.id)
        if len(cycle.parallel) > len(cycle.opposite):
            continue
        if len(cycle.parallel) == len(cycle.opposite) and min(cycle.edge_ids, key=ordering) in cycle.opposite:
            continue
        return False
    return True


def has_vanishing_combination(signed_cycles: Sequence[SignedCycle]) -> bool:
    """Whether some nonnegative combination of the chi vectors, coefficients summing to 1, is zero.

    A feasible combination with minimal support spans a one-dimensional kernel
    on that support with a strictly signed generator, so checking every support
    is exact.
    """
    universe = sorted(set().union(*(s.edge_ids for s in signed_cycles))) if signed_cycles else []
    vectors = [s.vector(universe) for s in signed_cycles]
    for size in range(1, len(vectors) + 1):
        for support in itertools.combinations(vectors, size):
            kernel = sp.Matrix([list(col) for col in support]).T.nullspace()
            if len(kernel) != 1:
                continue
            entries = list(kernel[0])
            if all(x > 0 for x in entries) or all(x < 0 for x in entries):
                return True
    return False
