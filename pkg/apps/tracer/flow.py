"""
Exact billiard flow inside the regular simplex.

Everything is rational: the hit parameter of each face is the solution of
one linear equation, so the next boundary point and the mirrored direction
stay in the rational field for as many steps as requested.
"""

import logging
from typing import List, Optional

from apps.core.exceptions import BilliardError, InvalidDirectionError, NotPeriodicError, SingularOrbitError
from apps.families.generators import FamilyKind, m_point, p_point, r_point
from apps.simplex.geometry import BaryPoint, RegularSimplex, bary_to_cart, normalized, reflect_vector
from .states import BilliardState, BilliardWord, OrbitCertificate, TraceResult

logger = logging.getLogger(__name__)


def step(s: RegularSimplex, st: BilliardState, index: Optional[int] = None) -> BilliardState:
    """
    Follow the chord from st.point along st.direction to the next face.

    The exit face minimises t_j = -x_j/u_j over the faces with u_j < 0.
    """
    x = normalized(st.point)
    u = st.direction.comps
    hits = sorted((-x[j] / u[j], j) for j in s.labels if u[j] < 0)
    if not hits:
        raise InvalidDirectionError(f'direction {[str(c) for c in u]} never leaves the simplex', step=index)
    t, face = hits[0]
    if len(hits) > 1 and hits[1][0] == t:
        raise SingularOrbitError(
            f'faces {face} and {hits[1][1]} are reached together at t={t}', step=index,
        )
    point = BaryPoint(tuple(a + t * b for a, b in zip(x, u)))
    logger.debug('step %s: face %s at t=%s', index, face, t)
    return BilliardState(point, face, reflect_vector(s, face, st.direction))


def trace(s: RegularSimplex, st: BilliardState, steps: int) -> TraceResult:
    if steps < 1:
        raise ValueError(f'steps must be at least 1, got {steps}')
    states: List[BilliardState] = [st]
    returns = []
    current = st
    for k in range(1, steps + 1):
        try:
            current = step(s, current, index=k)
        except BilliardError as exc:
            exc.states = tuple(states)
            raise
        if current.same_as(st):
            returns.append(k)
        if k < steps:
            states.append(current)
    word = BilliardWord(tuple(state.face for state in states))
    return TraceResult(tuple(states), word, current.same_as(st), current, tuple(returns))


def certify_periodic(s: RegularSimplex, word: BilliardWord, start: BilliardState) -> OrbitCertificate:
    """
    Prove exactly that ``start`` traces ``word`` as its fundamental period.

    Raises NotPeriodicError naming the first condition that fails.
    """
    if not len(word):
        raise NotPeriodicError('empty word')
    word.check(s.n)
    repeated = word.repeated_positions()
    if repeated:
        raise NotPeriodicError(f'consecutive equal labels at position {repeated[0]} of {word}')
    if start.face != word[0]:
        raise NotPeriodicError(f'start lies on face {start.face}, word begins with {word[0]}')
    try:
        result = trace(s, start, len(word))
    except BilliardError as exc:
        raise NotPeriodicError(f'trajectory is not regular: {exc}', step=exc.step) from exc
    if result.word != word:
        mismatch = next(k for k, (a, b) in enumerate(zip(result.word, word)) if a != b)
        raise NotPeriodicError(f'coding {result.word} differs from {word}', step=mismatch)
    if not result.closed:
        raise NotPeriodicError(f'trajectory does not close after {len(word)} steps')
    for d in range(1, len(word)):
        if len(word) % d == 0 and result.states[d].same_as(start):
            raise NotPeriodicError(f'trajectory already closes after {d} steps')
    logger.debug('certified %s with %s boundary points', word, len(result.states))
    return OrbitCertificate(word, result.states)


def family_state(kind: FamilyKind, n: int) -> BilliardState:
    """Starting state of a family: its first boundary point heading to the second."""
    s = RegularSimplex(n)
    if FamilyKind(kind) == FamilyKind.FIRST:
        here, there = m_point(n, 0), m_point(n, 1)
    else:
        here, there = p_point(n, 1), r_point(n, 1)
    return BilliardState(here, 0, bary_to_cart(s, there) - bary_to_cart(s, here))


def reverse_state(s: RegularSimplex, st: BilliardState) -> BilliardState:
    """State at the same point travelling the orbit backwards."""
    incoming = reflect_vector(s, st.face, st.direction)
    return BilliardState(st.point, st.face, -incoming)

