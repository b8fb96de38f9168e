"""
Closed-form boundary points of the two periodic orbit families.

The first family has word 01...n and boundary points m_0, ..., m_n. The
second has word 0102...0n and boundary points p_1, r_1, p_2, r_2, ..., p_n, r_n.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, Tuple

from apps.core.exceptions import InvalidLabelError
from apps.simplex.geometry import BaryPoint, apply_permutation, canonicalize, cyclic_shift


class FamilyKind(str, Enum):
    FIRST = 'first'
    SECOND = 'second'


@dataclass(frozen=True)
class OrbitFamily:
    """Boundary points of one family, in the order the orbit visits them."""

    kind: FamilyKind
    n: int
    points: Tuple[BaryPoint, ...]

    @property
    def word(self) -> Tuple[int, ...]:
        if self.kind == FamilyKind.FIRST:
            return tuple(range(self.n + 1))
        return tuple(label for i in range(1, self.n + 1) for label in (0, i))

    @property
    def period(self) -> int:
        return len(self.points)


def _check(n: int, i: int, low: int):
    if n < 2:
        raise ValueError(f'simplex dimension must be at least 2, got {n}')
    if not low <= i <= n:
        raise InvalidLabelError(f'index {i} outside {low}..{n}')


def _shift_tail(n: int, k: int) -> Tuple[int, ...]:
    """Permutation fixing 0 and rotating the labels 1..n right by k."""
    return (0,) + tuple((i - 1 + k) % n + 1 for i in range(1, n + 1))


def first_base(n: int) -> BaryPoint:
    return BaryPoint(tuple(-i * i + (n + 1) * i for i in range(n + 1)))


def second_face_base(n: int) -> BaryPoint:
    """Unscaled p_1."""
    return BaryPoint((0,) + tuple(
        -2 * (n + 1) * i * i + 2 * (n + 1) ** 2 * i - n * (n + 2) for i in range(1, n + 1)
    ))


def second_side_base(n: int) -> BaryPoint:
    """Unscaled r_1."""
    return BaryPoint((n,) + tuple(2 * (n + 1) * (n - i + 1) * (i - 1) for i in range(1, n + 1)))


def m_point(n: int, i: int) -> BaryPoint:
    """m_i: the cyclic right shift by i of m_0."""
    _check(n, i, 0)
    return canonicalize(apply_permutation(cyclic_shift(n + 1, i), first_base(n)))


def p_point(n: int, i: int) -> BaryPoint:
    """p_i: p_1 with its last n coordinates shifted right i-1 times."""
    _check(n, i, 1)
    return canonicalize(apply_permutation(_shift_tail(n, i - 1), second_face_base(n)))


def r_point(n: int, i: int) -> BaryPoint:
    """r_i: r_1 with its last n coordinates shifted right i-1 times."""
    _check(n, i, 1)
    return canonicalize(apply_permutation(_shift_tail(n, i - 1), second_side_base(n)))


def first_family(n: int) -> OrbitFamily:
    return OrbitFamily(FamilyKind.FIRST, n, tuple(m_point(n, i) for i in range(n + 1)))


def second_family(n: int) -> OrbitFamily:
    points = []
    for i in range(1, n + 1):
        points.extend([p_point(n, i), r_point(n, i)])
    return OrbitFamily(FamilyKind.SECOND, n, tuple(points))


def family(kind: FamilyKind, n: int) -> OrbitFamily:
    return first_family(n) if FamilyKind(kind) == FamilyKind.FIRST else second_family(n)


def permuted_family(sigma, orbit: OrbitFamily) -> Tuple[Tuple[int, ...], Tuple[BaryPoint, ...]]:
    """Image of a family under a relabeling of the vertices: permuted word and points."""
    word = tuple(sigma[label] for label in orbit.word)
    return word, tuple(canonicalize(apply_permutation(sigma, p)) for p in orbit.points)


def _piecewise(n: int, first: int, middle: Callable[[int], int], last: int) -> BaryPoint:
    return BaryPoint((first,) + tuple(middle(i) for i in range(1, n)) + (last,))


# Closed forms of the points used to prove both families periodic.
PROOF_FORMS: Dict[str, Callable[[int], BaryPoint]] = {
    'm_1': lambda n: _piecewise(n, n, lambda i: -i * i + (n + 3) * i - n - 2, 2 * n - 2),
    'm_n': lambda n: _piecewise(n, n, lambda i: -i * i + (n - 1) * i + n, 0),
    "m'_n": lambda n: _piecewise(n, -n, lambda i: -i * i + (n - 1) * i + n + 2, 2),
    'r_n': lambda n: BaryPoint((n,) + tuple(2 * (n + 1) * (n - i) * i for i in range(1, n + 1))),
    "r'_n": lambda n: BaryPoint((-n,) + tuple(2 * (n + 1) * (n - i) * i + 2 for i in range(1, n + 1))),
    'p_2': lambda n: BaryPoint((0, n * n) + tuple(
        -2 * (n + 1) * (i - 1) ** 2 + 2 * (n + 1) ** 2 * (i - 1) - n * (n + 2) for i in range(2, n + 1)
    )),
    "p'_2": lambda n: BaryPoint((2 * n, -n * n) + tuple(
        -2 * (n + 1) * (i - 1) ** 2 + 2 * (n + 1) ** 2 * (i - 1) - n * (n + 2) + 2 * n for i in range(2, n + 1)
    )),
}


def proof_point(name: str, n: int) -> BaryPoint:
    try:
        return canonicalize(PROOF_FORMS[name](n))
    except KeyError:
        raise ValueError(f'unknown proof point {name!r}; expected one of {sorted(PROOF_FORMS)}')
