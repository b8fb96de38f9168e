"""
Gaussian elimination over the rationals.

Pivots are taken on the first nonzero entry of each column; no pivoting
heuristics are needed since arithmetic is exact.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from apps.core.exceptions import DimensionMismatchError
from .matrices import RatMatrix, Vector, canonical_direction

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AffineSolutionSet:
    """All solutions x0 + span(kernel) of a linear system."""

    particular: Vector
    kernel: Tuple[Vector, ...]

    @property
    def dimension(self) -> int:
        return len(self.kernel)


def rref(m: RatMatrix, rhs: Optional[Sequence[Fraction]] = None
         ) -> Tuple[List[List[Fraction]], List[int], Optional[List[Fraction]]]:
    """
    Reduce m (and an optional right-hand side) to reduced row echelon form.

    Returns the reduced rows, the pivot columns and the transformed
    right-hand side.
    """
    rows = m.as_rows()
    t = [Fraction(v) for v in rhs] if rhs is not None else None
    pivots = []
    piv_r = 0
    for piv_c in range(m.cols):
        if piv_r == m.rows:
            break
        i_row = next((r for r in range(piv_r, m.rows) if rows[r][piv_c] != 0), None)
        if i_row is None:
            continue
        if i_row != piv_r:
            rows[piv_r], rows[i_row] = rows[i_row], rows[piv_r]
            if t is not None:
                t[piv_r], t[i_row] = t[i_row], t[piv_r]
        fp = rows[piv_r][piv_c]
        if fp != 1:
            rows[piv_r] = [v / fp for v in rows[piv_r]]
            if t is not None:
                t[piv_r] /= fp
        for r in range(m.rows):
            if r == piv_r:
                continue
            fr = rows[r][piv_c]
            if fr == 0:
                continue
            rows[r] = [a - fr * b for a, b in zip(rows[r], rows[piv_r])]
            if t is not None:
                t[r] -= fr * t[piv_r]
        pivots.append(piv_c)
        piv_r += 1
    return rows, pivots, t


def rank(m: RatMatrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: RatMatrix) -> List[Vector]:
    """
    Return a basis of the right nullspace of m.

    Each basis vector is scaled so that its first nonzero entry is 1.
    """
    rows, pivots, _ = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * m.cols
        x[f] = Fraction(1)
        for r, p in enumerate(pivots):
            x[p] = -rows[r][f]
        basis.append(canonical_direction(x))
    logger.debug('kernel of %sx%s matrix has dimension %s', m.rows, m.cols, len(basis))
    return basis


def solve_affine(m: RatMatrix, b: Sequence[Fraction]) -> Optional[AffineSolutionSet]:
    """
    Solve m*x = b exactly.

    Returns the particular solution with all free variables set to zero
    together with a kernel basis, or None when the system is infeasible.
    """
    if len(b) != m.rows:
        raise DimensionMismatchError(f'{m.rows} equations but right-hand side of length {len(b)}')
    rows, pivots, t = rref(m, b)
    for r in range(len(pivots), m.rows):
        if t[r] != 0:
            return None
    x = [Fraction(0)] * m.cols
    for r, p in enumerate(pivots):
        x[p] = t[r]
    return AffineSolutionSet(particular=tuple(x), kernel=tuple(kernel_basis(m)))


def determinant(m: RatMatrix) -> Fraction:
    """Return the determinant of a square matrix."""
    if m.rows != m.cols:
        raise DimensionMismatchError(f'determinant of a {m.rows}x{m.cols} matrix')
    rows = m.as_rows()
    size = m.rows
    det = Fraction(1)
    for c in range(size):
        pivot = next((r for r in range(c, size) if rows[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            det = -det
        det *= rows[c][c]
        for r in range(c + 1, size):
            factor = rows[r][c] / rows[c][c]
            if factor:
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[c])]
    return det
