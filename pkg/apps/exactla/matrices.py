"""
Dense matrices and vectors over the rationals.

Scalars are ``fractions.Fraction`` values, which are always kept in lowest
terms with a positive denominator.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from apps.core.exceptions import DimensionMismatchError

Vector = Tuple[Fraction, ...]


def vector(values: Iterable) -> Vector:
    """Build an exact vector from ints, Fractions or 'p/q' strings."""
    return tuple(Fraction(v) for v in values)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise DimensionMismatchError(f'cannot dot vectors of length {len(u)} and {len(v)}')
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatchError(f'cannot add vectors of length {len(u)} and {len(v)}')
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatchError(f'cannot subtract vectors of length {len(u)} and {len(v)}')
    return tuple(a - b for a, b in zip(u, v))


def scale(c, u: Sequence[Fraction]) -> Vector:
    c = Fraction(c)
    return tuple(c * a for a in u)


def is_zero(u: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in u)


def canonical_direction(u: Sequence[Fraction]) -> Vector:
    """Scale a nonzero vector so that its first nonzero entry is 1."""
    for a in u:
        if a != 0:
            return tuple(Fraction(b) / a for b in u)
    return tuple(Fraction(b) for b in u)


def proportional(u: Sequence[Fraction], v: Sequence[Fraction], positive: bool = False) -> bool:
    """
    Return True if u = c*v for some nonzero rational c.

    With ``positive`` the factor must also be positive.
    """
    if len(u) != len(v) or is_zero(u) or is_zero(v):
        return False
    ratio = None
    for a, b in zip(u, v):
        if (a == 0) != (b == 0):
            return False
        if b != 0:
            r = Fraction(a) / b
            if ratio is None:
                ratio = r
            elif r != ratio:
                return False
    return ratio > 0 if positive else True


@dataclass(frozen=True)
class RatMatrix:
    """Row-major rational matrix."""

    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatchError(
                f'{len(self.entries)} entries for a {self.rows}x{self.cols} matrix'
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> 'RatMatrix':
        rows = [list(row) for row in rows]
        width = len(rows[0]) if rows else 0
        if any(len(row) != width for row in rows):
            raise DimensionMismatchError('ragged rows')
        return cls(len(rows), width, tuple(Fraction(v) for row in rows for v in row))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> 'RatMatrix':
        return cls.from_rows(columns).transpose()

    @classmethod
    def identity(cls, size: int) -> 'RatMatrix':
        return cls.from_rows([[1 if i == j else 0 for j in range(size)] for i in range(size)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> 'RatMatrix':
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def as_rows(self) -> List[List[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> 'RatMatrix':
        entries = tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows))
        return RatMatrix(self.cols, self.rows, entries)

    def apply(self, v: Sequence[Fraction]) -> Vector:
        """Return the matrix-vector product."""
        if len(v) != self.cols:
            raise DimensionMismatchError(f'{self.rows}x{self.cols} matrix applied to length {len(v)}')
        return tuple(dot(self.row(i), v) for i in range(self.rows))

    def __matmul__(self, other: 'RatMatrix') -> 'RatMatrix':
        return mat_mul(self, other)

    def __add__(self, other: 'RatMatrix') -> 'RatMatrix':
        self._check_same_shape(other)
        return RatMatrix(self.rows, self.cols, add(self.entries, other.entries))

    def __sub__(self, other: 'RatMatrix') -> 'RatMatrix':
        self._check_same_shape(other)
        return RatMatrix(self.rows, self.cols, sub(self.entries, other.entries))

    def scaled(self, c) -> 'RatMatrix':
        return RatMatrix(self.rows, self.cols, scale(c, self.entries))

    def stacked(self, other: 'RatMatrix') -> 'RatMatrix':
        """Append the rows of ``other`` below this matrix."""
        if other.cols != self.cols:
            raise DimensionMismatchError('cannot stack matrices with different column counts')
        return RatMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == RatMatrix.identity(self.rows)

    def _check_same_shape(self, other: 'RatMatrix'):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatchError(
                f'{self.rows}x{self.cols} and {other.rows}x{other.cols} shapes differ'
            )


def mat_mul(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    """Return the exact product a*b."""
    if a.cols != b.rows:
        raise DimensionMismatchError(f'cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}')
    columns = [b.column(j) for j in range(b.cols)]
    entries = []
    for i in range(a.rows):
        row = a.row(i)
        entries.extend(dot(row, column) for column in columns)
    return RatMatrix(a.rows, b.cols, tuple(entries))
