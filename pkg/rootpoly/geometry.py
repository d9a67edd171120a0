"""Exact lattice-polytope engine: affine hull, facets, membership, Ehrhart counts and h*.

Everything is integer arithmetic. Facets are found by brute force over
d-subsets of generators, which is fine for the dozen-or-so generators of a
small digraph polytope.
"""
import itertools
import logging
import math
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import sympy as sp

from .digraph import Digraph, directed_elementary_cuts, incidence_vector, require_connected
from .errors import DegeneratePolytopeError, StructuralError
from .models import (
    ClassifiedFacets,
    DirectedCut,
    EhrhartCounts,
    Halfspace,
    HStarPolynomial,
    IntVector,
    Layering,
    SpanningTree,
)

logger = logging.getLogger(__name__)


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _primitive(values: Sequence[int]) -> Tuple[int, ...]:
    content = reduce(math.gcd, (abs(v) for v in values), 0)
    if content == 0:
        return tuple(values)
    return tuple(v // content for v in values)


def _integral(vector: Iterable[sp.Rational]) -> Tuple[int, ...]:
    """Clear denominators of a rational vector and make it primitive."""
    entries = [sp.Rational(v) for v in vector]
    scale = reduce(sp.ilcm, (e.q for e in entries), 1)
    return _primitive([int(e * scale) for e in entries])


@dataclass(frozen=True)
class AffineHull:
    """
    basis: d integer rows spanning the direction space L of the hull.
    equations, offsets: E x = f cuts out the hull (E x = k f for the k-th dilate).
    """

    basis: Tuple[IntVector, ...]
    equations: Tuple[IntVector, ...]
    offsets: Tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class LatticePolytope:
    """conv(generators) in Z^n; generators are distinct, in first-seen order."""

    ambient_dimension: int
    generators: Tuple[IntVector, ...]

    @classmethod
    def from_points(cls, points: Iterable[Sequence[int]]) -> "LatticePolytope":
        distinct: Dict[IntVector, None] = {}
        for p in points:
            distinct.setdefault(tuple(int(x) for x in p), None)
        gens = tuple(distinct)
        if not gens:
            raise StructuralError("A lattice polytope needs at least one generator")
        sizes = {len(g) for g in gens}
        if len(sizes) != 1:
            raise StructuralError(f"Generators have mixed dimensions {sorted(sizes)}")
        return cls(sizes.pop(), gens)

    @cached_property
    def hull(self) -> AffineHull:
        origin = self.generators[0]
        diffs = [[g - o for g, o in zip(gen, origin)] for gen in self.generators[1:]]
        n = self.ambient_dimension
        basis: List[IntVector] = []
        if diffs and n:
            _, pivots = sp.Matrix(diffs).T.rref()
            basis = [tuple(diffs[i]) for i in pivots]
        if basis:
            kernel = sp.Matrix(basis).nullspace()
            equations = [_integral(v) for v in kernel]
        else:
            equations = [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
        offsets = tuple(_dot(eq, origin) for eq in equations)
        return AffineHull(tuple(basis), tuple(equations), offsets)

    @property
    def dimension(self) -> int:
        return self.hull.dimension

    def in_hull(self, point: Sequence[int], k: int = 1) -> bool:
        hull = self.hull
        return all(_dot(eq, point) == k * f for eq, f in zip(hull.equations, hull.offsets))

    @cached_property
    def facets(self) -> Tuple[Halfspace, ...]:
        d = self.dimension
        if d == 0:
            raise DegeneratePolytopeError("A point has no facets")
        basis = self.hull.basis
        coords = [tuple(_dot(row, g) for row in basis) for g in self.generators]

        found: Dict[frozenset, Halfspace] = {}
        for subset in itertools.combinations(range(len(self.generators)), d):
            base = coords[subset[0]]
            rows = [[c - b for c, b in zip(coords[i], base)] for i in subset[1:]]
            normal_in_hull = [
                (-1) ** j * (sp.Matrix([r[:j] + r[j + 1:] for r in rows]).det() if rows else 1)
                for j in range(d)
            ]
            if not any(normal_in_hull):
                continue
            normal = [sum(int(c) * row[i] for c, row in zip(normal_in_hull, basis)) for i in range(self.ambient_dimension)]
            bound = _dot(normal, self.generators[subset[0]])
            values = [_dot(normal, g) for g in self.generators]
            if all(v <= bound for v in values):
                pass
            elif all(v >= bound for v in values):
                normal, bound, values = [-a for a in normal], -bound, [-v for v in values]
            else:
                continue
            incidence = frozenset(i for i, v in enumerate(values) if v == bound)
            if incidence in found:
                continue
            reduced = _primitive(normal + [bound])
            found[incidence] = Halfspace(tuple(reduced[:-1]), reduced[-1], incidence)
        facets = sorted(found.values(), key=lambda h: (h.bound, sorted(h.incidence)))
        logger.debug("Polytope of dimension %s has %s facets", d, len(facets))
        return tuple(facets)

    @cached_property
    def box(self) -> Tuple[Tuple[int, int], ...]:
        """Per-coordinate generator range; k.P lies in k times this box."""
        return tuple(
            (min(g[i] for g in self.generators), max(g[i] for g in self.generators))
            for i in range(self.ambient_dimension)
        )


def polytope_of(digraph: Digraph) -> LatticePolytope:
    """Q~_D = conv({0} + {x_e}); loops and parallel copies add nothing new."""
    origin = (0,) * digraph.vertex_count
    vectors = [incidence_vector(digraph, e.id) for e in digraph.edges if not e.is_loop]
    return LatticePolytope.from_points([origin] + vectors)


def dimension(polytope: LatticePolytope) -> int:
    return polytope.dimension


def affine_hull(polytope: LatticePolytope) -> Tuple[Tuple[IntVector, ...], Tuple[int, ...]]:
    """(E, f) with E x = f on P; the k-th dilate satisfies E x = k f."""
    return polytope.hull.equations, polytope.hull.offsets


def facets(polytope: LatticePolytope) -> List[Halfspace]:
    return list(polytope.facets)


def contains(polytope: LatticePolytope, point: Sequence[int], k: int = 1) -> bool:
    """Whether ``point`` lies in k.P: hull equations at level k and a.x <= k.b for every facet."""
    if not polytope.in_hull(point, k):
        return False
    if polytope.dimension == 0:
        return True
    return all(h.value(point) <= k * h.bound for h in polytope.facets)


def ehrhart_counts(polytope: LatticePolytope, k_max: Optional[int] = None) -> EhrhartCounts:
    """L(k) = |k.P cap Z^n| for k = 0..k_max (default: the dimension)."""
    if k_max is None:
        k_max = polytope.dimension
    counts = []
    for k in range(k_max + 1):
        ranges = [range(k * lo, k * hi + 1) for lo, hi in polytope.box]
        counts.append(sum(1 for point in itertools.product(*ranges) if contains(polytope, point, k)))
    logger.debug("Ehrhart counts up to k=%s: %s", k_max, counts)
    return EhrhartCounts(tuple(counts))


def hstar_from_counts(counts: EhrhartCounts, d: int) -> HStarPolynomial:
    """h*_i = sum_j (-1)^(i-j) binom(d+1, i-j) L(j), i = 0..d."""
    if len(counts) < d + 1:
        raise StructuralError(f"Need L(0..{d}) to extract h*, got {len(counts)} values")
    coeffs = [
        sum((-1) ** (i - j) * math.comb(d + 1, i - j) * counts[j] for j in range(i + 1))
        for i in range(d + 1)
    ]
    if coeffs[0] != 1 or any(c < 0 for c in coeffs):
        raise StructuralError(f"Ehrhart counts {list(counts.counts)} give invalid h* {coeffs}", coeffs)
    return HStarPolynomial(tuple(coeffs))


def oracle_hstar(digraph: Digraph) -> HStarPolynomial:
    polytope = polytope_of(digraph)
    d = polytope.dimension
    return hstar_from_counts(ehrhart_counts(polytope, d), d)


def _match_cut(
    digraph: Digraph, facet: Halfspace, cuts: Sequence[DirectedCut]
) -> DirectedCut:
    crossing = frozenset(
        e.id for e in digraph.edges if not e.is_loop and facet.value(incidence_vector(digraph, e.id)) != 0
    )
    for cut in cuts:
        if cut.edge_ids != crossing:
            continue
        high = {facet.normal[v] for v in cut.shore0}
        low = {facet.normal[v] for v in cut.shore1}
        if len(high) == 1 and len(low) == 1 and high.pop() > low.pop():
            return cut
    raise StructuralError(f"Origin facet {facet.normal} matches no elementary directed cut", facet)


def _layering(digraph: Digraph, facet: Halfspace) -> Layering:
    low = min(facet.normal)
    shifted = [a - low for a in facet.normal]
    if any(s % facet.bound for s in shifted):
        raise StructuralError(f"Facet {facet.normal} <= {facet.bound} is not a layering up to constants", facet)
    layering = Layering(tuple(s // facet.bound for s in shifted))

    tight = []
    for edge in digraph.edges:
        value = layering.value(incidence_vector(digraph, edge.id))
        if value > 1:
            raise StructuralError(f"Layering {layering.values} exceeds 1 on edge {edge.id}", facet)
        if value == 1:
            tight.append(edge.id)
    if not nx.is_connected(digraph.underlying_multigraph(tight)):
        raise StructuralError(f"Tight edges {tight} of layering {layering.values} are not connected", facet)
    return layering


def classify_facets(
    digraph: Digraph, polytope: LatticePolytope, facet_list: Optional[Sequence[Halfspace]] = None
) -> ClassifiedFacets:
    """Match origin facets to elementary directed cuts and the rest to admissible layerings."""
    require_connected(digraph)
    facet_list = list(polytope.facets if facet_list is None else facet_list)
    cuts = directed_elementary_cuts(digraph)

    cut_facets = [(f, _match_cut(digraph, f, cuts)) for f in facet_list if f.origin]
    matched = {cut for _, cut in cut_facets}
    if len(matched) != len(cut_facets) or len(matched) != len(cuts):
        raise StructuralError(
            f"{len(cut_facets)} origin facets but {len(cuts)} elementary directed cuts ({len(matched)} matched)"
        )
    layering_facets = [(f, _layering(digraph, f)) for f in facet_list if not f.origin]
    return ClassifiedFacets(tuple(cut_facets), tuple(layering_facets))


@dataclass(frozen=True)
class DissectionCertificate:
    simplex_count: int
    barycenters_inside: bool
    barycenters_distinct: bool

    @property
    def ok(self) -> bool:
        return self.barycenters_inside and self.barycenters_distinct


def dissection_certificate(digraph: Digraph, trees: Sequence[SpanningTree]) -> DissectionCertificate:
    """Barycenters of the simplices Q~_T, as integer points of the (|T|+1)-th dilate."""
    polytope = polytope_of(digraph)
    points = []
    inside = True
    for tree in trees:
        total = [0] * digraph.vertex_count
        for edge_id in tree:
            total = [a + b for a, b in zip(total, incidence_vector(digraph, edge_id))]
        point = tuple(total)
        points.append(point)
        if not contains(polytope, point, len(tree) + 1):
            logger.error("Barycenter of tree %s lies outside the polytope", sorted(tree))
            inside = False
    return DissectionCertificate(len(trees), inside, len(set(points)) == len(points))


def polytope_to_json(polytope: LatticePolytope) -> dict:
    out: dict = {"generators": [list(g) for g in polytope.generators]}
    if polytope.dimension > 0:
        out["facets"] = [
            {"normal": list(h.normal), "bound": h.bound, "origin": h.origin} for h in polytope.facets
        ]
    return out
