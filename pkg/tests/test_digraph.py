import pytest

from rootpoly.corpus import CorpusSpec, enumerate_digraphs
from rootpoly.digraph import (
    Digraph,
    component_digraphs,
    contract,
    contract_with_map,
    cycle_arcs,
    delete,
    digraph_from_json,
    digraph_to_json,
    directed_elementary_cuts,
    incidence_vector,
    is_bridge,
    is_cycle,
    is_weakly_connected,
    load_digraph,
    merge_map,
    parallel_edges,
    reduce,
    simple_cycles,
    weak_components,
)
from rootpoly.errors import DigraphFormatError, LoopEdgeError, NotACycleError, UnknownEdgeError
from rootpoly.geometry import polytope_of
from rootpoly.models import Edge

SMALL_CORPUS = list(enumerate_digraphs(CorpusSpec(max_vertices=3, max_edges=4)))


def _pairs(digraph):
    return [(e.id, e.tail, e.head) for e in digraph.edges]


def test_json_round_trip(f1):
    raw = {"vertices": 3, "edges": [[0, 1], [0, 2], [1, 2]]}
    assert digraph_from_json(raw) == f1
    assert digraph_to_json(f1) == raw


def test_json_keeps_explicit_ids(f1):
    contracted = contract(f1, 0)
    raw = digraph_to_json(contracted)
    assert raw == {"vertices": 2, "edges": [[0, 1], [0, 1]], "ids": [1, 2]}
    assert digraph_from_json(raw) == contracted


@pytest.mark.parametrize(
    "raw",
    [
        [],
        {"edges": [[0, 1]]},
        {"vertices": -1, "edges": []},
        {"vertices": 2, "edges": [[0, 1, 2]]},
        {"vertices": 2, "edges": [[0, 2]]},
        {"vertices": 2, "edges": [[0, 1]], "ids": [0, 1]},
        {"vertices": 2, "edges": [[0, 1]], "ids": [True]},
        {"vertices": 3, "edges": [[0, 1], [1, 2]], "ids": [False, True]},
    ],
)
def test_malformed_json_is_rejected(raw):
    with pytest.raises(DigraphFormatError):
        digraph_from_json(raw)


def test_duplicate_ids_are_rejected():
    with pytest.raises(DigraphFormatError):
        Digraph(2, (Edge(0, 0, 1), Edge(0, 1, 0)))


def test_load_digraph_reports_bad_files(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    with pytest.raises(DigraphFormatError):
        load_digraph(str(bad))
    with pytest.raises(DigraphFormatError):
        load_digraph(str(tmp_path / "missing.json"))


def test_delete(f1, f2, f3):
    assert _pairs(delete(f1, 2)) == [(0, 0, 1), (1, 0, 2)]
    isolated = delete(f2, 0)
    assert isolated.vertex_count == 2 and isolated.edge_count == 0
    assert _pairs(delete(f3, 1)) == _pairs(f2)
    with pytest.raises(UnknownEdgeError):
        delete(f1, 7)


def test_contract(f1, f2):
    assert _pairs(contract(f1, 0)) == [(1, 0, 1), (2, 0, 1)]
    assert _pairs(contract(f1, 1)) == [(0, 0, 1), (2, 1, 0)]
    point = contract(f2, 0)
    assert point.vertex_count == 1 and point.edge_count == 0


def test_merge_map_keeps_the_smaller_index_and_compacts():
    digraph = Digraph.from_pairs(4, [(3, 1), (0, 3), (2, 3), (0, 2)])
    assert merge_map(digraph, 0) == (0, 1, 2, 1)
    contracted, mapping = contract_with_map(digraph, 0)
    assert mapping == (0, 1, 2, 1)
    assert contracted.vertex_count == 3
    assert _pairs(contracted) == [(1, 0, 1), (2, 2, 1), (3, 0, 2)]

    # merging 1 and 2 shifts vertex 3 down to 2
    path = Digraph.from_pairs(4, [(0, 1), (2, 1), (2, 3)])
    assert merge_map(path, 1) == (0, 1, 1, 2)
    assert _pairs(contract(path, 1)) == [(0, 0, 1), (2, 1, 2)]


def test_contract_and_delete_commute():
    for digraph in SMALL_CORPUS:
        for e in digraph.edges:
            if e.is_loop:
                continue
            for f in digraph.edges:
                if f.id == e.id:
                    continue
                assert contract(delete(digraph, f.id), e.id) == delete(contract(digraph, e.id), f.id)


def test_contracting_a_loop_fails():
    with pytest.raises(LoopEdgeError):
        contract(Digraph.from_pairs(1, [(0, 0)]), 0)


def test_reduce(f1, f3):
    assert _pairs(reduce(f3)) == [(0, 0, 1)]
    assert _pairs(reduce(Digraph.from_pairs(2, [(0, 0), (0, 1)]))) == [(1, 0, 1)]
    assert reduce(f1) == f1


def test_reduce_is_idempotent_and_keeps_the_generators():
    for digraph in SMALL_CORPUS:
        reduced = reduce(digraph)
        assert reduce(reduced) == reduced
        assert set(polytope_of(reduced).generators) == set(polytope_of(digraph).generators)
        assert not any(e.is_loop for e in reduced.edges)
        assert len({(e.tail, e.head) for e in reduced.edges}) == reduced.edge_count


def test_weak_components(f1):
    assert weak_components(f1) == [frozenset({0, 1, 2})]
    two = Digraph.from_pairs(4, [(0, 1), (2, 3)])
    assert weak_components(two) == [frozenset({0, 1}), frozenset({2, 3})]
    assert len(weak_components(Digraph(3))) == 3
    assert not is_weakly_connected(two)
    assert not is_weakly_connected(Digraph(0))


def test_component_digraphs_keep_ids():
    parts = component_digraphs(Digraph.from_pairs(4, [(0, 1), (2, 3)]))
    assert [_pairs(p) for p in parts] == [[(0, 0, 1)], [(1, 0, 1)]]


def test_incidence_vector(f1):
    assert incidence_vector(f1, 0) == (-1, 1, 0)
    assert incidence_vector(f1, 2) == (0, -1, 1)
    assert incidence_vector(Digraph.from_pairs(3, [(0, 0)]), 0) == (0, 0, 0)


def test_directed_elementary_cuts(f1, f2, digon):
    cuts = directed_elementary_cuts(f1)
    assert [(c.shore0, c.shore1, c.edge_ids) for c in cuts] == [
        (frozenset({0}), frozenset({1, 2}), frozenset({0, 1})),
        (frozenset({0, 1}), frozenset({2}), frozenset({1, 2})),
    ]
    assert [c.edge_ids for c in directed_elementary_cuts(f2)] == [frozenset({0})]
    assert directed_elementary_cuts(digon) == []


def test_bridges_and_parallels(f1, f3, f5):
    assert is_bridge(f5, 0) and is_bridge(f5, 1)
    assert not is_bridge(f1, 0)
    assert not is_bridge(f3, 0)
    assert parallel_edges(f3, 0) == (1,)
    assert parallel_edges(f1, 0) == ()


def test_simple_cycles(f1, f4, f5):
    assert simple_cycles(f1) == [frozenset({0, 1, 2})]
    # three digons and eight oriented triangles
    assert len(simple_cycles(f4)) == 11
    assert simple_cycles(f5) == []
    assert simple_cycles(Digraph.from_pairs(1, [(0, 0)])) == []


def test_cycle_arcs(f1, f5):
    assert cycle_arcs(f1, {0, 1, 2}) == (frozenset({0, 2}), frozenset({1}))
    assert cycle_arcs(f1, {0, 1, 2}, start=1) == (frozenset({1}), frozenset({0, 2}))
    assert is_cycle(f1, {0, 1, 2})
    assert not is_cycle(f5, {0, 1})
    with pytest.raises(NotACycleError):
        cycle_arcs(f5, {0, 1})
