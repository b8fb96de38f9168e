"""
Point sets lying in one face of the simplex.

A boundary point on face j is stored by its barycentric coordinates with
coordinate j dropped, so all points of a set live in R^n.
"""

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence, Tuple

from django.conf import settings

from apps.core.exceptions import DimensionMismatchError, DimensionTooHighError
from apps.exactla.matrices import Vector, sub, vector
from apps.families.generators import m_point, p_point


@dataclass(frozen=True)
class PointSet:
    points: Tuple[Vector, ...]
    label: str = ''

    def __post_init__(self):
        points = tuple(vector(p) for p in self.points)
        if not points:
            raise ValueError('a point set needs at least one point')
        if any(len(p) != len(points[0]) for p in points):
            raise DimensionMismatchError('points of a set must have the same number of coordinates')
        if len(set(points)) != len(points):
            raise ValueError('points of a set must be distinct')
        object.__setattr__(self, 'points', points)

    def __len__(self) -> int:
        return len(self.points)

    def differences(self) -> Tuple[Vector, ...]:
        return tuple(sub(p, self.points[0]) for p in self.points[1:])

    def permuted(self, sigma: Sequence[int]) -> 'PointSet':
        """Same points with coordinate i moved to position sigma[i]."""
        moved = []
        for p in self.points:
            image = list(p)
            for i, target in enumerate(sigma):
                image[target] = p[i]
            moved.append(tuple(image))
        return PointSet(tuple(moved), self.label)


def multiset_points(values: Sequence, label: str = '') -> PointSet:
    """
    All distinct permutations of a multiset of coordinates, sorted.

    Their hull spans len(values) - 1 dimensions unless every value is equal,
    so the hull dimension limit is checked before any permutation is built.
    """
    values = vector(values)
    dimension = len(values) - 1 if len(set(values)) > 1 else 0
    if dimension > settings.BILLIARDS_HULL_MAX_DIM:
        raise DimensionTooHighError(
            f'affine dimension {dimension} exceeds BILLIARDS_HULL_MAX_DIM={settings.BILLIARDS_HULL_MAX_DIM}'
        )
    return PointSet(tuple(sorted(set(permutations(values)))), label)


def qn_points(n: int) -> PointSet:
    """Symmetry copies of m_0 inside face 0: permutations of its last n coordinates."""
    return multiset_points(m_point(n, 0).key()[1:], label=f'Q_{n}')


def second_family_points(n: int, closure: bool = False) -> PointSet:
    """
    Face-0 points p_1 ... p_n of the second family.

    With ``closure`` the set is closed under every relabeling of 1..n,
    the stabilizer of face 0.
    """
    if closure:
        return multiset_points(p_point(n, 1).key()[1:], label=f'second family closure, n={n}')
    points = dict.fromkeys(vector(p_point(n, i).key()[1:]) for i in range(1, n + 1))
    return PointSet(tuple(points), label=f'p-points, n={n}')
