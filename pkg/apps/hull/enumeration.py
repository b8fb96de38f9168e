"""
Brute-force convex hulls with exact arithmetic.

Every d-subset of points spans a candidate hyperplane of the affine hull;
it supports a facet when no point lies strictly on each side. Lower
dimensional faces are the intersections of facets.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, FrozenSet, List, Sequence, Tuple

from django.conf import settings

from apps.core.exceptions import DegenerateHullError, DimensionTooHighError
from apps.exactla.matrices import RatMatrix, Vector, dot, proportional, sub
from apps.exactla.solvers import kernel_basis, rank, rref
from .points import PointSet

logger = logging.getLogger(__name__)

Face = FrozenSet[int]


@dataclass(frozen=True)
class HullReport:
    points: PointSet
    affine_dim: int
    f_vector: Tuple[int, ...]
    facets: Tuple[Face, ...]
    normals: Tuple[Vector, ...]
    faces: Dict[int, Tuple[Face, ...]]
    squared_edge_lengths: Tuple[Fraction, ...]

    @property
    def edges(self) -> Tuple[Face, ...]:
        return self.faces.get(1, ())

    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(sorted(i for face in self.faces.get(0, ()) for i in face))


def affine_dimension(points: Sequence[Vector]) -> int:
    if len(points) < 2:
        return 0
    return rank(RatMatrix.from_rows([sub(p, points[0]) for p in points[1:]]))


def chart(ps: PointSet) -> Tuple[List[Vector], int]:
    """Coordinates of the points on pivot columns, an affine chart of their hull."""
    differences = ps.differences()
    if not differences:
        return [()], 0
    _, pivots, _ = rref(RatMatrix.from_rows(differences))
    return [tuple(p[c] for c in pivots) for p in ps.points], len(pivots)


def _supporting_hyperplanes(coords: List[Vector], d: int) -> Dict[Face, Vector]:
    supports: Dict[Face, Vector] = {}
    for subset in combinations(range(len(coords)), d):
        origin = coords[subset[0]]
        rows = [sub(coords[i], origin) for i in subset[1:]]
        system = RatMatrix.from_rows(rows) if rows else RatMatrix(0, d, ())
        kernel = kernel_basis(system)
        if len(kernel) != 1:
            continue
        normal = kernel[0]
        offset = dot(normal, origin)
        values = [dot(normal, q) - offset for q in coords]
        if any(v > 0 for v in values) and any(v < 0 for v in values):
            continue
        if any(v > 0 for v in values):
            normal = tuple(-a for a in normal)
        face = frozenset(i for i, v in enumerate(values) if v == 0)
        supports.setdefault(face, normal)
    return supports


def _face_lattice(facets: Sequence[Face], points: Sequence[Vector]) -> Dict[int, Tuple[Face, ...]]:
    """Close the facets under intersection and sort the faces by dimension."""
    seen = set(facets)
    queue = list(facets)
    while queue:
        face = queue.pop()
        for facet in facets:
            meet = face & facet
            if meet and meet not in seen:
                seen.add(meet)
                queue.append(meet)
    by_dim: Dict[int, List[Face]] = {}
    for face in seen:
        by_dim.setdefault(affine_dimension([points[i] for i in sorted(face)]), []).append(face)
    return {k: tuple(sorted(faces, key=sorted)) for k, faces in sorted(by_dim.items())}


def _squared_length(points: Sequence[Vector], edge: Face) -> Fraction:
    return max(dot(sub(points[i], points[j]), sub(points[i], points[j])) for i, j in combinations(sorted(edge), 2))


def hull_report(ps: PointSet) -> HullReport:
    if len(ps) == 1:
        raise DegenerateHullError('all points coincide')
    coords, d = chart(ps)
    if d > settings.BILLIARDS_HULL_MAX_DIM:
        raise DimensionTooHighError(
            f'affine dimension {d} exceeds BILLIARDS_HULL_MAX_DIM={settings.BILLIARDS_HULL_MAX_DIM}'
        )
    supports = _supporting_hyperplanes(coords, d)
    ordered = sorted(supports, key=sorted)
    logger.debug('%s: %s points, affine dimension %s, %s facets', ps.label, len(ps), d, len(ordered))
    faces = _face_lattice(ordered, ps.points) if d > 1 else {0: tuple(ordered)}
    f_vector = tuple(len(faces.get(k, ())) for k in range(d))
    edges = faces.get(1, ()) if d > 1 else (frozenset(range(len(ps))),)
    lengths = tuple(sorted(_squared_length(ps.points, e) for e in edges if len(e) > 1))
    return HullReport(
        points=ps,
        affine_dim=d,
        f_vector=f_vector,
        facets=tuple(ordered),
        normals=tuple(supports[f] for f in ordered),
        faces=faces,
        squared_edge_lengths=lengths,
    )


def parallel_facet_pairs(report: HullReport) -> List[Tuple[int, int]]:
    """Index pairs of facets with proportional normals."""
    normals = report.normals
    return [(i, j) for i, j in combinations(range(len(normals)), 2) if proportional(normals[i], normals[j])]


def facet_vertex_counts(report: HullReport) -> Dict[int, int]:
    """Number of facets with each vertex count, e.g. {3: 8} for an octahedron."""
    return dict(sorted(Counter(len(facet) for facet in report.facets).items()))


def euler_characteristic(report: HullReport) -> int:
    return sum((-1) ** k * f for k, f in enumerate(report.f_vector))


def is_regular(report: HullReport) -> bool:
    """
    Equal edges and the same distance profile at every vertex.

    Sufficient to tell regular triangles and octahedra from the other
    hulls met here; not a flag-transitivity test.
    """
    if len(set(report.squared_edge_lengths)) > 1:
        return False
    points = [report.points.points[i] for i in report.vertices]
    profiles = {
        tuple(sorted(dot(sub(p, q), sub(p, q)) for q in points))
        for p in points
    }
    return len(profiles) == 1
