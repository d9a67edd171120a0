from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

# Spanning trees (and forests) are identified with their edge-id sets.
SpanningTree = FrozenSet[int]

# Vertex index of an incidence vector / lattice point.
IntVector = Tuple[int, ...]


@dataclass(frozen=True)
class Edge:
    """A directed edge with the id it keeps across deletions and contractions."""

    id: int
    tail: int
    head: int

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head


@dataclass(frozen=True)
class DirectedCut:
    """
    Directed cut with every crossing edge pointing from shore0 to shore1.

    elementary: both shores induce weakly connected subgraphs.
    """

    shore0: FrozenSet[int]
    shore1: FrozenSet[int]
    edge_ids: FrozenSet[int]
    elementary: bool = True


@dataclass(frozen=True)
class FundamentalCut:
    """C*(T, e): edges joining the two components of T - e.

    shores = (component holding the tail of e, component holding its head).
    An edge stands parallel to e when its head lies in the head shore.
    """

    edge: int
    edge_ids: FrozenSet[int]
    shores: Tuple[FrozenSet[int], FrozenSet[int]]
    parallel: FrozenSet[int]
    opposite: FrozenSet[int]


@dataclass(frozen=True)
class FundamentalCycle:
    """C(T, f): the unique cycle of T + f, split into the arc of f and the opposite arc."""

    edge: int
    edge_ids: FrozenSet[int]
    parallel: FrozenSet[int]
    opposite: FrozenSet[int]


@dataclass(frozen=True)
class SignedCycle:
    """A cycle with an ordered split into positive and negative arcs."""

    edge_ids: FrozenSet[int]
    positive: FrozenSet[int]
    negative: FrozenSet[int]

    @property
    def chi(self) -> Dict[int, int]:
        """Signed incidence vector over edge ids (off-cycle edges are omitted)."""
        out = {e: 1 for e in self.positive}
        out.update({e: -1 for e in self.negative})
        return out

    def vector(self, edge_ids: Iterable[int]) -> Tuple[int, ...]:
        chi = self.chi
        return tuple(chi.get(e, 0) for e in edge_ids)

    def reversed(self) -> "SignedCycle":
        return SignedCycle(self.edge_ids, self.negative, self.positive)


@dataclass(frozen=True)
class HStarPolynomial:
    """h*-polynomial as its ascending coefficient sequence, trailing zeros stripped."""

    coefficients: Tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = list(self.coefficients)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(int(c) for c in coeffs) or (0,))

    @classmethod
    def from_counts(cls, counts: Dict[int, int]) -> "HStarPolynomial":
        if not counts:
            return cls((0,))
        top = max(counts)
        return cls(tuple(counts.get(i, 0) for i in range(top + 1)))

    @classmethod
    def one(cls) -> "HStarPolynomial":
        return cls((1,))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def value_at_one(self) -> int:
        return sum(self.coefficients)

    def coefficient(self, i: int) -> int:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else 0

    def leq(self, other: "HStarPolynomial") -> bool:
        """Coefficientwise comparison, shorter sequences zero-padded."""
        size = max(len(self.coefficients), len(other.coefficients))
        return all(self.coefficient(i) <= other.coefficient(i) for i in range(size))

    def __mul__(self, other: "HStarPolynomial") -> "HStarPolynomial":
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return HStarPolynomial(tuple(out))

    def as_list(self) -> List[int]:
        return list(self.coefficients)

    def format(self) -> str:
        """Render as ``1 + 4x + x^2`` (ascending powers, zero terms skipped)."""
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
                continue
            power = "x" if i == 1 else f"x^{i}"
            terms.append(power if c == 1 else f"{c}{power}")
        return " + ".join(terms) if terms else "0"

    def __str__(self) -> str:
        return self.format()


@dataclass(frozen=True)
class Halfspace:
    """
    Facet inequality normal . x <= bound of a lattice polytope.

    incidence: indices of the generators lying on the facet.
    origin: whether the facet passes through the origin (bound == 0).
    """

    normal: IntVector
    bound: int
    incidence: FrozenSet[int]

    @property
    def origin(self) -> bool:
        return self.bound == 0

    def value(self, point: IntVector) -> int:
        return sum(a * x for a, x in zip(self.normal, point))


@dataclass(frozen=True)
class Layering:
    """Admissible layering, normalized so that its minimum value is 0."""

    values: IntVector

    def value(self, vector: IntVector) -> int:
        return sum(a * x for a, x in zip(self.values, vector))


@dataclass(frozen=True)
class EhrhartCounts:
    """L(0), L(1), ..., L(k_max): lattice points in the dilates k.P."""

    counts: Tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        return self.counts[k]

    def __len__(self) -> int:
        return len(self.counts)


@dataclass(frozen=True)
class ClassifiedFacets:
    """Facets matched to elementary directed cuts (origin) and admissible layerings (non-origin)."""

    cut_facets: Tuple[Tuple[Halfspace, DirectedCut], ...]
    layering_facets: Tuple[Tuple[Halfspace, Layering], ...]


@dataclass
class EdgeMonotonicity:
    """Per-edge deletion/contraction comparison against h*_D."""

    edge: int
    delete: Optional[HStarPolynomial] = None
    contract: Optional[HStarPolynomial] = None
    delete_le: Optional[bool] = None
    contract_le: Optional[bool] = None
    delete_equal: Optional[bool] = None
    contract_equal: Optional[bool] = None
    delete_predicate: Optional[bool] = None
    contract_predicate: Optional[bool] = None
    error: Optional[str] = None

    @property
    def delete_agrees(self) -> Optional[bool]:
        if self.delete_equal is None or self.delete_predicate is None:
            return None
        return self.delete_equal == self.delete_predicate

    @property
    def contract_agrees(self) -> Optional[bool]:
        if self.contract_equal is None or self.contract_predicate is None:
            return None
        return self.contract_equal == self.contract_predicate

    @property
    def ok(self) -> bool:
        if self.error is not None:
            return False
        verdicts = (self.delete_le, self.contract_le, self.delete_agrees, self.contract_agrees)
        return all(v is not False for v in verdicts)
