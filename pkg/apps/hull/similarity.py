from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from apps.exactla.matrices import Vector, dot, sub
from .points import PointSet


def _squared_distances(points: Sequence[Vector]) -> List[List[Fraction]]:
    return [[dot(sub(p, q), sub(p, q)) for q in points] for p in points]


def _centered_gram(points: Sequence[Vector]) -> List[List[Fraction]]:
    size = len(points)
    center = tuple(sum(c) / size for c in zip(*points))
    centered = [sub(p, center) for p in points]
    return [[dot(p, q) for q in centered] for p in centered]


def _match(da, db, sigma: Fraction) -> Optional[Dict[int, int]]:
    """Bijection i -> f(i) with db[f(i)][f(k)] == sigma * da[i][k], by backtracking."""
    size = len(da)
    profiles_a = [sorted(sigma * v for v in row) for row in da]
    profiles_b = [sorted(row) for row in db]
    candidates = [[j for j in range(size) if profiles_b[j] == profiles_a[i]] for i in range(size)]
    mapping: Dict[int, int] = {}
    used = set()

    def extend(i: int) -> bool:
        if i == size:
            return True
        for j in candidates[i]:
            if j in used:
                continue
            if all(db[j][mapping[k]] == sigma * da[i][k] for k in range(i)):
                mapping[i] = j
                used.add(j)
                if extend(i + 1):
                    return True
                del mapping[i]
                used.discard(j)
        return False

    return mapping if extend(0) else None


def similarity_ratio(a: PointSet, b: PointSet) -> Optional[Fraction]:
    """Ratio sigma of squared distances of a similarity taking a onto b, if one exists."""
    if len(a) != len(b):
        return None
    da, db = _squared_distances(a.points), _squared_distances(b.points)
    diameter_a = max(max(row) for row in da)
    diameter_b = max(max(row) for row in db)
    if diameter_a == 0 or diameter_b == 0:
        return Fraction(1) if diameter_a == diameter_b else None
    sigma = diameter_b / diameter_a
    mapping = _match(da, db, sigma)
    if mapping is None:
        return None
    ga, gb = _centered_gram(a.points), _centered_gram(b.points)
    size = len(a)
    if any(gb[mapping[i]][mapping[k]] != sigma * ga[i][k] for i in range(size) for k in range(size)):
        return None
    return sigma


def similarity_check(a: PointSet, b: PointSet) -> bool:
    return similarity_ratio(a, b) is not None
