"""
Starting points of periodic orbits with a prescribed word.

A point m of face v_0 starts a periodic orbit with word v when the
displacement m - s_v(m) is a fixed direction of S_v; that displacement is
then the direction arriving at m and its mirror image through face v_0 is
the direction leaving m.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from django.conf import settings

from apps.core.exceptions import BilliardError, DimensionTooHighError, InfeasibleWordError
from apps.exactla.matrices import RatMatrix, Vector, add, scale, sub
from apps.exactla.solvers import rref, solve_affine
from apps.families.generators import FamilyKind, family
from apps.simplex.geometry import BaryPoint, CartPoint, CartVector, RegularSimplex, normalized, reflect_vector
from apps.tracer.flow import certify_periodic
from apps.tracer.states import BilliardState, BilliardWord, OrbitCertificate
from .reflections import compose, fixed_directions

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PeriodicSolutionSet:
    """
    Points of face v_0 satisfying the fixed-direction condition.

    The set is particular + span(parameters). ``base`` is its single point, or
    for a positive-dimensional family the centroid of the vertices of its
    intersection with the closed face; None when that intersection is empty.
    ``sample`` is the point handed to the tracer.
    """

    word: BilliardWord
    directions: Tuple[CartVector, ...]
    particular: Vector
    parameters: Tuple[CartVector, ...]
    base: Optional[BaryPoint]
    sample: Optional[BaryPoint]
    admissible_sample: Optional[OrbitCertificate]
    failure: Optional[BilliardError] = None

    @property
    def family_dim(self) -> int:
        return len(self.parameters)

    def contains(self, p: BaryPoint) -> bool:
        offset = sub(normalized(p), self.particular)
        if not self.parameters:
            return all(c == 0 for c in offset)
        columns = RatMatrix.from_columns([u.comps for u in self.parameters])
        return solve_affine(columns, offset) is not None


def _independent(vectors: Sequence[Vector]) -> List[Vector]:
    """Nonzero rows of the reduced echelon form of the given vectors."""
    if not vectors:
        return []
    rows, pivots, _ = rref(RatMatrix.from_rows(vectors))
    return [tuple(rows[r]) for r in range(len(pivots))]


def _clipped_vertices(particular: Vector, parameters: Sequence[Vector], face: int) -> List[Vector]:
    """Vertices of (particular + span(parameters)) intersected with the closed face."""
    d = len(parameters)
    size = len(particular)
    others = [i for i in range(size) if i != face]
    vertices = []
    for subset in combinations(others, d):
        system = RatMatrix.from_rows([[q[i] for q in parameters] for i in subset])
        solution = solve_affine(system, [-particular[i] for i in subset])
        if solution is None or solution.dimension:
            continue
        point = particular
        for a, q in zip(solution.particular, parameters):
            point = add(point, scale(a, q))
        if all(c >= 0 for c in point) and point not in vertices:
            vertices.append(point)
    return vertices


def admissible_direction(s: RegularSimplex, v: BilliardWord, m: BaryPoint) -> Optional[CartVector]:
    """Outgoing direction at m, or None when m - s_v(m) does not arrive through face v_0."""
    x = CartPoint(normalized(m))
    arriving = x - compose(s, v).affine(x)
    if arriving[v[0]] >= 0:
        return None
    return reflect_vector(s, v[0], arriving)


def solve_periodic(s: RegularSimplex, v: BilliardWord) -> PeriodicSolutionSet:
    """
    Solve (I - S_v) x - F c = t, sum(x) = 1, x_{v_0} = 0 for x and c, where
    F spans the fixed directions of S_v, then certify one sample point.
    """
    directions = fixed_directions(s, v)
    if not directions:
        raise InfeasibleWordError(f'S_v has no fixed direction for {v}')
    composed = compose(s, v)
    size, k = s.size, len(directions)
    rows = []
    for i in s.labels:
        left = [Fraction(int(i == j)) - composed.linear[i, j] for j in s.labels]
        rows.append(left + [-u[i] for u in directions])
    rows.append([Fraction(1)] * size + [Fraction(0)] * k)
    rows.append([Fraction(int(j == v[0])) for j in s.labels] + [Fraction(0)] * k)
    rhs = list(composed.translation) + [Fraction(1), Fraction(0)]
    solution = solve_affine(RatMatrix.from_rows(rows), rhs)
    if solution is None:
        raise InfeasibleWordError(f'no point of face {v[0]} satisfies the fixed-direction condition for {v}')

    particular = solution.particular[:size]
    parameters = _independent([u[:size] for u in solution.kernel if any(u[:size])])
    logger.debug('word %s: %s fixed directions, family dimension %s', v, k, len(parameters))

    base = BaryPoint(particular) if not parameters else None
    if parameters:
        vertices = _clipped_vertices(particular, parameters, v[0])
        if vertices:
            base = BaryPoint(tuple(sum(c) / len(vertices) for c in zip(*vertices)))
    sample = base
    certificate, failure = None, None
    if sample is not None:
        try:
            direction = admissible_direction(s, v, sample)
            if direction is None:
                raise InfeasibleWordError(f'displacement at {sample.key()} does not arrive through face {v[0]}')
            certificate = certify_periodic(s, v, BilliardState(sample, v[0], direction))
        except BilliardError as exc:
            logger.info('sample of %s not certified: %s', v, exc)
            failure = exc
    return PeriodicSolutionSet(
        word=v,
        directions=tuple(directions),
        particular=particular,
        parameters=tuple(CartVector(u) for u in parameters),
        base=base,
        sample=sample,
        admissible_sample=certificate,
        failure=failure,
    )


def _class_key(word: Tuple[int, ...]) -> Tuple[int, ...]:
    """Smallest rotation of the word or of its reversal."""
    w = BilliardWord(word)
    return min(min(r.labels for r in w.rotations()), min(r.labels for r in w.reversed().rotations()))


def symmetry_orbit_count(v: BilliardWord, n: int) -> int:
    """Number of words in the orbit of v under relabeling, up to rotation and reversal."""
    if n > settings.BILLIARDS_SYMMETRY_MAX_DIM:
        raise DimensionTooHighError(
            f'enumerating {n + 1}! relabelings exceeds BILLIARDS_SYMMETRY_MAX_DIM={settings.BILLIARDS_SYMMETRY_MAX_DIM}'
        )
    v.check(n)
    classes = {_class_key(v.relabeled(sigma).labels) for sigma in permutations(range(n + 1))}
    return len(classes)


def remark_counts(n: int) -> Dict[str, object]:
    """Brute-force class counts of both family words next to the printed formulas."""
    return {
        'first_family_classes': symmetry_orbit_count(BilliardWord(family(FamilyKind.FIRST, n).word), n),
        'second_family_classes': symmetry_orbit_count(BilliardWord(family(FamilyKind.SECOND, n).word), n),
        'printed_first': Fraction(factorial(n - 1), 2),
        'printed_second_readings': {
            '(2n)!/(2*n!)': Fraction(factorial(2 * n), 2 * factorial(n)),
            '(2n)!/(2n*n!)': Fraction(factorial(2 * n), 2 * n * factorial(n)),
        },
    }
