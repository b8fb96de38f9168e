"""
Products of face reflections along a billiard word.

For a word v = v_0 v_1 ... v_{k-1} the vectorial part is
S_v = S_{v_{k-1}} ... S_{v_1} S_{v_0} (v_0 acts first) and the affine part
is s_v(x) = S_v x + t with every face reflection written as
s_j(x) = S_j (x - c_j) + c_j around the center c_j of face j.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List

from apps.core.exceptions import RepeatedLabelError
from apps.exactla.matrices import RatMatrix, Vector, add, sub
from apps.exactla.solvers import determinant, kernel_basis
from apps.simplex.geometry import CartPoint, CartVector, RegularSimplex, face_center, reflection_matrix
from apps.tracer.states import BilliardWord

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ComposedReflection:
    word: BilliardWord
    linear: RatMatrix
    translation: Vector

    def affine(self, x: CartPoint) -> CartPoint:
        return CartPoint(add(self.linear.apply(x.comps), self.translation))

    def vectorial(self, u: CartVector) -> CartVector:
        return CartVector(self.linear.apply(u.comps))


def compose(s: RegularSimplex, v: BilliardWord) -> ComposedReflection:
    if not len(v):
        raise ValueError('cannot compose the reflections of an empty word')
    v.check(s.n)
    for k in range(len(v) - 1):
        if v[k] == v[k + 1]:
            raise RepeatedLabelError(f'label {v[k]} repeated at positions {k} and {k + 1} of {v}')
    linear = RatMatrix.identity(s.size)
    translation: Vector = tuple(Fraction(0) for _ in s.labels)
    for j in v:
        mirror = reflection_matrix(s, j)
        center = face_center(s, j).comps
        linear = mirror @ linear
        translation = add(mirror.apply(translation), sub(center, mirror.apply(center)))
    return ComposedReflection(v, linear, translation)


def zero_sum_basis(n: int) -> List[Vector]:
    """Basis e_i - e_n (i < n) of the directions of the simplex hyperplane."""
    return [tuple(Fraction(int(k == i) - int(k == n)) for k in range(n + 1)) for i in range(n)]


def restricted(s: RegularSimplex, linear: RatMatrix) -> RatMatrix:
    """Matrix of a map of R^(n+1) preserving sum(u) = 0, in the zero_sum_basis."""
    columns = [linear.apply(b)[:s.n] for b in zero_sum_basis(s.n)]
    return RatMatrix.from_columns(columns)


def zero_sum_gram(n: int) -> RatMatrix:
    """Gram matrix of zero_sum_basis: 2 on the diagonal, 1 elsewhere."""
    return RatMatrix.from_rows([[2 if i == j else 1 for j in range(n)] for i in range(n)])


def rotation_determinant(s: RegularSimplex, v: BilliardWord) -> Fraction:
    """Determinant of S_v on the zero-sum subspace: +1 for even words, -1 for odd ones."""
    return determinant(restricted(s, compose(s, v).linear))


def fixed_directions(s: RegularSimplex, v: BilliardWord) -> List[CartVector]:
    """Basis of {u : sum(u) = 0, S_v u = u}, each scaled to a leading 1."""
    linear = compose(s, v).linear
    ones = RatMatrix.from_rows([[1] * s.size])
    basis = kernel_basis((linear - RatMatrix.identity(s.size)).stacked(ones))
    logger.debug('word %s has %s fixed directions', v, len(basis))
    return [CartVector(u) for u in basis]


def stability_check(s: RegularSimplex, v: BilliardWord) -> bool:
    """True when S_v is not the identity on the zero-sum subspace."""
    return not restricted(s, compose(s, v).linear).is_identity()
