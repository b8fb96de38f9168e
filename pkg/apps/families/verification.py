"""
Exact checks of the identities proving both orbit families periodic.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import List, Optional, Sequence, Tuple

from django.conf import settings

from apps.core.utils import rational_string, rational_strings
from apps.exactla.matrices import dot, proportional, sub
from apps.simplex.geometry import (
    BaryPoint, RegularSimplex, apply_permutation, bary_to_cart, canonicalize, edge_tangents, face_interior_test,
    normalized, reflect_point,
)
from .generators import FamilyKind, OrbitFamily, first_family, p_point, proof_point, r_point, second_family

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    index: int
    passed: bool
    detail: str = ''


@dataclass
class VerificationReport:
    kind: FamilyKind
    n: int
    checks: List[IdentityCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> List[IdentityCheck]:
        return [check for check in self.checks if not check.passed]

    def add(self, name: str, index: int, passed: bool, detail: str = ''):
        self.checks.append(IdentityCheck(name, index, passed, detail))


def midpoint(a: BaryPoint, b: BaryPoint) -> BaryPoint:
    """Midpoint of two points after rescaling both to a common coordinate sum."""
    x, y = normalized(a), normalized(b)
    return BaryPoint(tuple((u + v) / 2 for u, v in zip(x, y)))


def rescale_factor(a: BaryPoint, b: BaryPoint) -> Fraction:
    """Factor bringing the coordinate sum of b to that of a."""
    return sum(a.coords) / sum(b.coords)


def _check_midpoint(report: VerificationReport, name: str, index: int,
                    target: BaryPoint, ahead: BaryPoint, mirrored: BaryPoint):
    factor = rescale_factor(ahead, mirrored)
    report.add(
        name, index, midpoint(ahead, mirrored) == target,
        f'{target.key()} = mid({ahead.key()}, {mirrored.key()}), rescale {rational_string(factor)}',
    )


def relabelings(n: int) -> Tuple[List[Tuple[int, ...]], str]:
    """
    Relabelings of 0..n fixing 0: all n! of them up to
    BILLIARDS_RELABEL_CHECK_MAX_DIM, the identity and two generators above.
    """
    if n <= settings.BILLIARDS_RELABEL_CHECK_MAX_DIM:
        sigmas = [(0,) + tail for tail in permutations(range(1, n + 1))]
        return sigmas, f'all {len(sigmas)} relabelings of 1..n'
    swap = (0, 2, 1) + tuple(range(3, n + 1))
    cycle = (0,) + tuple(range(2, n + 1)) + (1,)
    return [tuple(range(n + 1)), swap, cycle], 'identity, swap (1 2) and cycle (1 ... n)'


def _check_relabeled(report: VerificationReport, s: RegularSimplex, name: str, index: int,
                     target: BaryPoint, ahead: BaryPoint, label: int, behind: BaryPoint):
    """Check target = (ahead + behind mirrored through face label)/2 under relabelings fixing 0."""
    sigmas, scope = relabelings(s.n)
    failed = [
        sigma for sigma in sigmas
        if midpoint(apply_permutation(sigma, ahead), reflect_point(s, sigma[label], apply_permutation(sigma, behind)))
        != apply_permutation(sigma, target)
    ]
    detail = scope if not failed else f'{scope}, fails for {list(failed[0])}'
    report.add(f'{name} relabeled', index, not failed, detail)


def _check_orbit(report: VerificationReport, s: RegularSimplex,
                 word: Sequence[int], points: Sequence[BaryPoint]):
    size = len(points)
    for k in range(size):
        mirrored = reflect_point(s, word[k], points[k - 1])
        _check_midpoint(report, 'midpoint', k, points[k], points[(k + 1) % size], mirrored)
        report.add('interior', k, face_interior_test(points[k], word[k]), f'{points[k].key()} on face {word[k]}')


def verify_points(kind: FamilyKind, n: int, word: Sequence[int], points: Sequence[BaryPoint]) -> VerificationReport:
    """Midpoint and interiority checks for boundary points visited along ``word``."""
    report = VerificationReport(FamilyKind(kind), n)
    _check_orbit(report, RegularSimplex(n), word, points)
    return report


def verify_first_family(n: int) -> VerificationReport:
    """Check m_i = (m_{i+1} + m'_{i-1})/2 and interiority for every i."""
    s = RegularSimplex(n)
    orbit = first_family(n)
    report = VerificationReport(FamilyKind.FIRST, n)
    points = orbit.points
    _check_orbit(report, s, orbit.word, points)
    for name, constructed in (('m_1', points[1]), ('m_n', points[n]),
                              ("m'_n", reflect_point(s, 0, points[n]))):
        report.add(f'closed form {name}', 0, proof_point(name, n) == constructed, f'{constructed.key()}')
    lengths = segment_lengths(orbit)
    squared = ', '.join(rational_strings(sorted(set(lengths))))
    report.add('equal segments', 0, len(set(lengths)) == 1, f'squared lengths {squared}')
    logger.debug('first family n=%s: %s checks, passed=%s', n, len(report.checks), report.passed)
    return report


def verify_second_family(n: int) -> VerificationReport:
    """
    Check the midpoint identities along p_1 r_1 p_2 r_2 ... p_n r_n.

    The two base identities (p_1 from r'_n, r_1 from p'_2) are checked as
    stated and under the relabelings of 1..n returned by ``relabelings``;
    every triple of consecutive points of the orbit is checked too.
    """
    s = RegularSimplex(n)
    orbit = second_family(n)
    report = VerificationReport(FamilyKind.SECOND, n)
    p1, r1, p2, rn = p_point(n, 1), r_point(n, 1), p_point(n, 2), r_point(n, n)
    _check_midpoint(report, 'p_1 = (r_1 + r\'_n)/2', 0, p1, r1, reflect_point(s, 0, rn))
    _check_midpoint(report, 'r_1 = (p_1 + p\'_2)/2', 1, r1, p1, reflect_point(s, 1, p2))
    _check_relabeled(report, s, 'p_1 = (r_1 + r\'_n)/2', 0, p1, r1, 0, rn)
    _check_relabeled(report, s, 'r_1 = (p_1 + p\'_2)/2', 1, r1, p1, 1, p2)
    for name, constructed in (('r_n', rn), ("r'_n", reflect_point(s, 0, rn)),
                              ('p_2', p2), ("p'_2", reflect_point(s, 1, p2))):
        report.add(f'closed form {name}', 0, proof_point(name, n) == constructed, f'{constructed.key()}')
    _check_orbit(report, s, orbit.word, orbit.points)
    if n == 2:
        for k, passed in plane_orthogonality(orbit):
            report.add('orthogonal to edge', k, passed)
    logger.debug('second family n=%s: %s checks, passed=%s', n, len(report.checks), report.passed)
    return report


def segment_lengths(orbit: OrbitFamily) -> List[Fraction]:
    """Squared Cartesian lengths of the closed path through the boundary points."""
    s = RegularSimplex(orbit.n)
    carts = [bary_to_cart(s, p) for p in orbit.points]
    return [(carts[(k + 1) % len(carts)] - carts[k]).norm2() for k in range(len(carts))]


def is_regular_simplex(points: Sequence[BaryPoint]) -> bool:
    """True iff all pairwise distances between the points are equal."""
    s = RegularSimplex(points[0].dimension)
    carts = [bary_to_cart(s, p) for p in points]
    return len({(a - b).norm2() for a, b in combinations(carts, 2)}) == 1


def plane_orthogonality(orbit: OrbitFamily) -> List[Tuple[int, bool]]:
    """
    For each segment ending on a face k != 0, whether it is orthogonal to
    that face (zero inner product with every tangent of face k).
    """
    s = RegularSimplex(orbit.n)
    carts = [bary_to_cart(s, p) for p in orbit.points]
    results = []
    for k, label in enumerate(orbit.word):
        if label == 0:
            continue
        direction = carts[k] - carts[k - 1]
        orthogonal = all(dot(direction.comps, t.comps) == 0 for t in edge_tangents(s, label))
        results.append((label, orthogonal))
    return results


def corollary_predicate(p: BaryPoint, n: int) -> List[Tuple[int, int]]:
    """
    Unordered label pairs {j, k} with l_j = l_k.

    Each pair places p on the hyperplane orthogonal to edge P_jP_k through
    its middle.
    """
    coords = canonicalize(p).coords
    if len(coords) != n + 1:
        raise ValueError(f'expected {n + 1} coordinates, got {len(coords)}')
    return [(j, k) for j, k in combinations(range(n + 1), 2) if coords[j] == coords[k]]


@dataclass(frozen=True)
class CorollaryReport:
    pairs: Tuple[Tuple[int, int], ...]
    is_matching: bool
    expected_count: Optional[int]
    collinear: Optional[bool]


def corollary_report(p: BaryPoint, n: int) -> CorollaryReport:
    """
    Raw data behind the hyperplane corollary.

    For odd n the expected hyperplane count (n+1)/2 is reported next to the
    equal pairs. For even n, collinearity of p, the vertex of its smallest
    coordinate and the centroid of the midpoints of the matched edges is
    reported.
    """
    pairs = tuple(corollary_predicate(p, n))
    used = [label for pair in pairs for label in pair]
    is_matching = len(used) == len(set(used))
    if n % 2:
        return CorollaryReport(pairs, is_matching, (n + 1) // 2, None)
    coords = normalized(canonicalize(p))
    if not pairs:
        return CorollaryReport(pairs, is_matching, None, False)
    apex = min(range(n + 1), key=lambda i: coords[i])
    centroid = [Fraction(0)] * (n + 1)
    for j, k in pairs:
        centroid[j] += Fraction(1, 2 * len(pairs))
        centroid[k] += Fraction(1, 2 * len(pairs))
    vertex = tuple(Fraction(int(i == apex)) for i in range(n + 1))
    to_point, to_centroid = sub(coords, vertex), sub(tuple(centroid), vertex)
    collinear = all(v == 0 for v in to_point) or all(v == 0 for v in to_centroid) \
        or proportional(to_point, to_centroid)
    return CorollaryReport(pairs, is_matching, None, collinear)


def verify_family(kind: FamilyKind, n: int) -> VerificationReport:
    if FamilyKind(kind) == FamilyKind.FIRST:
        return verify_first_family(n)
    return verify_second_family(n)
