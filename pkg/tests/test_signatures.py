import itertools

import pytest

from rootpoly.corpus import CorpusSpec, enumerate_digraphs
from rootpoly.digraph import Digraph, simple_cycles
from rootpoly.errors import InvalidOrderingError, LongArcViolationError, NonGenericWeightsError, NotACycleError
from rootpoly.signatures import (
    BASE,
    CONTRACTION,
    ScaledWeights,
    contracted_cycle_sign,
    contracted_dissecting_tree_set,
    contraction_weights,
    cycle_sign,
    dissecting_tree_set,
    find_long_arc_violation,
    fundamental_circuit_shape_holds,
    has_vanishing_combination,
    is_generic,
    is_long_arc_positive,
    signed_cycle_weight,
    weights_from_ordering,
)
from rootpoly.trees import EdgeOrdering


def test_weights_from_ordering(f1, f2):
    weights = weights_from_ordering(EdgeOrdering.identity(f1.edge_ids))
    assert dict(weights.values) == {0: 12, 1: 14, 2: 15}
    assert weights.kind == BASE
    assert dict(weights_from_ordering(EdgeOrdering.identity(f2.edge_ids)).values) == {0: 3}


def test_contraction_weights(f1, f2):
    weights = contraction_weights(EdgeOrdering.identity(f1.edge_ids), 0)
    assert dict(weights.values) == {0: 4, 1: 14, 2: 15}
    assert weights.kind == CONTRACTION and weights.contracted_edge == 0
    assert weights.arc_weight({0, 2}) == 19
    assert dict(contraction_weights(EdgeOrdering.identity([0]), 0).values) == {0: 1}
    with pytest.raises(InvalidOrderingError):
        contraction_weights(EdgeOrdering.identity(f1.edge_ids), 1)


def test_cycle_sign(f1, f3):
    weights = weights_from_ordering(EdgeOrdering.identity(f1.edge_ids))
    signed = cycle_sign(f1, weights, {0, 1, 2})
    assert signed.positive == {0, 2} and signed.negative == {1}
    assert signed_cycle_weight(weights, signed) == 13

    custom = ScaledWeights.from_mapping({0: 1, 1: 3, 2: 1})
    signed = cycle_sign(f1, custom, {0, 1, 2})
    assert signed.positive == {1} and signed.negative == {0, 2}

    signed = cycle_sign(f3, ScaledWeights.from_mapping({0: 3, 1: 1}), {0, 1})
    assert signed.positive == {0}


def test_ties_are_not_generic(f1, f3, digon):
    tie = ScaledWeights.from_mapping({0: 1, 1: 3, 2: 2})
    assert not is_generic(f1, tie)
    with pytest.raises(NonGenericWeightsError):
        cycle_sign(f1, tie, {0, 1, 2})
    assert not is_generic(f3, ScaledWeights.from_mapping({0: 5, 1: 5}))
    # both digon edges sit on the same arc
    assert is_generic(digon, ScaledWeights.from_mapping({0: 5, 1: 5}))


def test_base_weights_are_generic_and_long_arc_positive(f1, f4):
    for digraph in (f1, f4):
        for sequence in ((0, 1, 2, 3, 4, 5), (5, 4, 3, 2, 1, 0), (2, 0, 5, 1, 4, 3)):
            pi = EdgeOrdering(tuple(e for e in sequence if e in digraph.edge_ids))
            weights = weights_from_ordering(pi)
            assert is_generic(digraph, weights)
            assert is_long_arc_positive(digraph, weights)
            for cycle in simple_cycles(digraph):
                assert signed_cycle_weight(weights, cycle_sign(digraph, weights, cycle)) > 0


def test_long_arc_violation(f1, digon):
    custom = ScaledWeights.from_mapping({0: 1, 1: 3, 2: 1})
    violation = find_long_arc_violation(f1, custom)
    assert violation is not None and violation.positive == {1}
    assert not is_long_arc_positive(f1, custom)
    with pytest.raises(LongArcViolationError):
        dissecting_tree_set(f1, custom)
    assert is_long_arc_positive(digon, ScaledWeights.from_mapping({0: 2, 1: 7}))


def test_dissecting_tree_set(f1, f2):
    weights = weights_from_ordering(EdgeOrdering.identity(f1.edge_ids))
    assert dissecting_tree_set(f1, weights) == [frozenset({0, 1}), frozenset({1, 2})]
    assert dissecting_tree_set(f2, weights_from_ordering(EdgeOrdering.identity([0]))) == [frozenset({0})]


def test_contracted_cycle_sign(f1):
    weights = contraction_weights(EdgeOrdering.identity(f1.edge_ids), 0)
    signed = contracted_cycle_sign(f1, weights, 0, {1, 2})
    assert signed.positive == {2} and signed.negative == {1}
    with pytest.raises(NotACycleError):
        contracted_cycle_sign(f1, weights, 0, {1})


def test_contracted_cycle_sign_lifts_through_the_contracted_edge():
    square = Digraph.from_pairs(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    weights = contraction_weights(EdgeOrdering.identity(square.edge_ids), 0)
    # W = {0: 8, 1: 28, 2: 30, 3: 31}; lifted arcs {0, 1, 2} = 66 against {3} = 31
    signed = contracted_cycle_sign(square, weights, 0, {1, 2, 3})
    assert signed.positive == {1, 2} and signed.negative == {3}


def test_contracted_cycle_sign_on_an_uncontracted_cycle():
    # the parallel pair {1, 2} avoids edge 0 and is signed as in D
    digraph = Digraph.from_pairs(3, [(0, 1), (1, 2), (1, 2), (2, 1)])
    pi = EdgeOrdering.identity(digraph.edge_ids)
    weights = contraction_weights(pi, 0)
    assert contracted_cycle_sign(digraph, weights, 0, {1, 2}) == cycle_sign(digraph, weights, {1, 2})


def test_contracted_dissecting_tree_set(f1):
    weights = contraction_weights(EdgeOrdering.identity(f1.edge_ids), 0)
    assert contracted_dissecting_tree_set(f1, weights, 0) == [frozenset({1})]


def test_fundamental_circuit_shape(f1, f4):
    pi = EdgeOrdering.identity(f1.edge_ids)
    for tree in dissecting_tree_set(f1, weights_from_ordering(pi)):
        assert fundamental_circuit_shape_holds(f1, tree, pi)
    # {e1, e3} is not in the tree set: e2 sits alone on its arc against two edges
    assert not fundamental_circuit_shape_holds(f1, frozenset({0, 2}), pi)

    pi = EdgeOrdering.identity(f4.edge_ids)
    for tree in dissecting_tree_set(f4, weights_from_ordering(pi)):
        assert fundamental_circuit_shape_holds(f4, tree, pi)


def test_vanishing_combination(f1):
    signed = cycle_sign(f1, weights_from_ordering(EdgeOrdering.identity(f1.edge_ids)), {0, 1, 2})
    assert not has_vanishing_combination([signed])
    assert has_vanishing_combination([signed, signed.reversed()])
    assert not has_vanishing_combination([])


def test_weight_signatures_are_acyclic_on_small_digraphs():
    spec = CorpusSpec(max_vertices=3, max_edges=5, allow_loops=False, dedup=True)
    for digraph in enumerate_digraphs(spec):
        weights = weights_from_ordering(EdgeOrdering.identity(digraph.edge_ids))
        signed = [cycle_sign(digraph, weights, cycle) for cycle in simple_cycles(digraph)]
        for s in signed:
            assert signed_cycle_weight(weights, s) > 0
        for size in (1, 2, 3):
            for subset in itertools.combinations(signed, size):
                assert not has_vanishing_combination(list(subset)), (digraph, subset)
