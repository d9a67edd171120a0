"""Exceptions raised by the rootpoly library.

Everything derives from ``RootPolyError`` (itself a ``RuntimeError``) so the
CLI can catch library failures in one place.
"""
from typing import FrozenSet, Optional


class RootPolyError(RuntimeError):
    """Base class for all library errors."""


class DigraphFormatError(RootPolyError):
    """Digraph JSON could not be read or has the wrong shape."""


class UnknownEdgeError(RootPolyError):
    def __init__(self, edge_id: int):
        super().__init__(f"Unknown edge id: {edge_id!r}")
        self.edge_id = edge_id


class LoopEdgeError(RootPolyError):
    def __init__(self, edge_id: int, operation: str):
        super().__init__(f"Edge {edge_id} is a loop; {operation} requires a non-loop edge")
        self.edge_id = edge_id


class DisconnectedGraphError(RootPolyError):
    """The operation needs a (weakly) connected input."""


class TreeMembershipError(RootPolyError):
    """An edge was expected inside (or outside) a spanning tree."""


class InvalidOrderingError(RootPolyError):
    """An edge ordering is not a bijection onto the edges it is used with."""


class NotACycleError(RootPolyError):
    def __init__(self, edge_ids: FrozenSet[int], reason: str):
        super().__init__(f"Edge set {sorted(edge_ids)} is not a cycle: {reason}")
        self.edge_ids = edge_ids


class NonGenericWeightsError(RootPolyError):
    def __init__(self, cycle: FrozenSet[int], weight: int):
        super().__init__(f"Both arcs of cycle {sorted(cycle)} weigh {weight}; weights are not generic")
        self.cycle = cycle


class LongArcViolationError(RootPolyError):
    def __init__(self, cycle: FrozenSet[int], positive: FrozenSet[int], negative: FrozenSet[int]):
        super().__init__(
            f"Signature is not long arc positive on cycle {sorted(cycle)}: "
            f"positive arc {sorted(positive)} is shorter than negative arc {sorted(negative)}"
        )
        self.cycle = cycle
        self.positive = positive
        self.negative = negative


class DegeneratePolytopeError(RootPolyError):
    """Facet data was requested for a zero-dimensional polytope."""


class StructuralError(RootPolyError):
    """A consistency check backed by a theorem failed.

    Seeing this means a bug upstream (counting, facet enumeration, ...), not bad input.
    """

    def __init__(self, message: str, detail: Optional[object] = None):
        super().__init__(message)
        self.detail = detail
