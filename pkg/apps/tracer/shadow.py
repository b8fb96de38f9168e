"""
Floating-point shadow of the exact tracer.

Runs the same stepping rule in float64 and is only ever used as an
independent cross-check of exact results.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
from django.conf import settings

from apps.core.exceptions import InvalidDirectionError, SingularOrbitError
from apps.simplex.geometry import RegularSimplex, normalized
from .states import BilliardState, BilliardWord, TraceResult

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class FloatTrace:
    """positions[k] is the k-th boundary point; positions[-1] is where the last step lands."""

    positions: np.ndarray
    directions: np.ndarray
    word: BilliardWord

    @property
    def closure_error(self) -> float:
        return float(np.linalg.norm(self.positions[-1] - self.positions[0]))


def face_normals(n: int) -> np.ndarray:
    """Row j is the normal of face j inside the hyperplane sum(x) = 1."""
    return np.eye(n + 1) - (1.0 - np.eye(n + 1)) / n


def float_trace(s: RegularSimplex, st: BilliardState, steps: int,
                tolerance: Optional[float] = None) -> FloatTrace:
    if steps < 1:
        raise ValueError(f'steps must be at least 1, got {steps}')
    tolerance = settings.BILLIARDS_FLOAT_TIE_TOLERANCE if tolerance is None else tolerance
    normals = face_normals(s.n)
    x = np.array([float(c) for c in normalized(st.point)])
    u = np.array([float(c) for c in st.direction.comps])
    positions, directions, faces = [x], [u], [st.face]
    for k in range(1, steps + 1):
        leaving = np.flatnonzero(u < -tolerance)
        if leaving.size == 0:
            raise InvalidDirectionError('direction never leaves the simplex', step=k)
        times = -x[leaving] / u[leaving]
        order = np.argsort(times)
        t = times[order[0]]
        if order.size > 1 and abs(times[order[1]] - t) <= tolerance * max(1.0, abs(t)):
            raise SingularOrbitError(
                f'faces {leaving[order[0]]} and {leaving[order[1]]} are reached together at t={t:.6g}', step=k,
            )
        face = int(leaving[order[0]])
        x = x + t * u
        x[face] = 0.0
        nu = normals[face]
        u = u - 2.0 * np.dot(u, nu) / np.dot(nu, nu) * nu
        positions.append(x)
        directions.append(u)
        if k < steps:
            faces.append(face)
    logger.debug('float trace of %s steps, closure error %.3g', steps, np.linalg.norm(positions[-1] - positions[0]))
    return FloatTrace(np.array(positions), np.array(directions), BilliardWord(tuple(faces)))


def exact_positions(result: TraceResult) -> np.ndarray:
    """Exact boundary points of a trace, final landing point included, as float64 rows."""
    points = list(result.points) + [result.final.point]
    return np.array([[float(c) for c in normalized(p)] for p in points])


def max_deviation(result: TraceResult, shadow: FloatTrace) -> float:
    """Largest Euclidean distance between matching points of the two tracers."""
    exact = exact_positions(result)
    if exact.shape != shadow.positions.shape:
        raise ValueError(f'cannot compare traces of shapes {exact.shape} and {shadow.positions.shape}')
    return float(np.max(np.linalg.norm(exact - shadow.positions, axis=1)))
