"""
The regular simplex embedded in R^(n+1).

Vertex i is the standard unit vector e_i, so every vertex, every
barycentric point and every mirror image has rational coordinates in any
dimension. Points live on the hyperplane sum(x) = 1 and directions on the
subspace sum(u) = 0.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import List, Sequence, Tuple

from apps.core.exceptions import DimensionMismatchError, InvalidLabelError, PointAtInfinityError
from apps.exactla.matrices import RatMatrix, Vector, dot, scale, sub, vector


@dataclass(frozen=True)
class RegularSimplex:
    """Regular simplex of dimension n with vertices e_0 ... e_n."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f'simplex dimension must be at least 2, got {self.n}')

    @property
    def size(self) -> int:
        """Number of vertices, which is also the ambient dimension."""
        return self.n + 1

    @property
    def labels(self) -> range:
        return range(self.n + 1)

    @property
    def vertices(self) -> List['CartPoint']:
        return [CartPoint(tuple(Fraction(int(i == j)) for j in self.labels)) for i in self.labels]

    def check_label(self, j: int):
        if not 0 <= j <= self.n:
            raise InvalidLabelError(f'face label {j} outside 0..{self.n}')


@dataclass(frozen=True, eq=False)
class BaryPoint:
    """
    Unnormalized barycentric coordinates (l_0, ..., l_n).

    Two BaryPoints compare equal when their coordinates are proportional,
    i.e. when they name the same affine point.
    """

    coords: Vector

    def __post_init__(self):
        object.__setattr__(self, 'coords', vector(self.coords))
        if sum(self.coords) == 0:
            raise PointAtInfinityError(f'coordinates {self.raw()} sum to zero')

    @classmethod
    def of(cls, *values) -> 'BaryPoint':
        return cls(vector(values))

    @property
    def dimension(self) -> int:
        return len(self.coords) - 1

    def canonical(self) -> 'BaryPoint':
        return canonicalize(self)

    def key(self) -> Tuple[int, ...]:
        """Integer coordinates of the canonical representative."""
        return tuple(int(c) for c in canonicalize(self).coords)

    def raw(self) -> Tuple[str, ...]:
        return tuple(str(c) for c in self.coords)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BaryPoint):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"BaryPoint({', '.join(self.raw())})"


@dataclass(frozen=True)
class CartPoint:
    """Point of R^(n+1); points of the simplex satisfy sum(comps) = 1."""

    comps: Vector

    def __post_init__(self):
        object.__setattr__(self, 'comps', vector(self.comps))

    def __sub__(self, other: 'CartPoint') -> 'CartVector':
        return CartVector(sub(self.comps, other.comps))

    def __add__(self, u: 'CartVector') -> 'CartPoint':
        return CartPoint(tuple(a + b for a, b in zip(self.comps, u.comps)))


@dataclass(frozen=True)
class CartVector:
    """Direction tangent to the simplex hyperplane (components sum to 0)."""

    comps: Vector

    def __post_init__(self):
        object.__setattr__(self, 'comps', vector(self.comps))
        if sum(self.comps) != 0:
            raise ValueError(f'direction components sum to {sum(self.comps)}, not 0')

    def __getitem__(self, i: int) -> Fraction:
        return self.comps[i]

    def __neg__(self) -> 'CartVector':
        return CartVector(tuple(-a for a in self.comps))

    def scaled(self, c) -> 'CartVector':
        return CartVector(scale(c, self.comps))

    def norm2(self) -> Fraction:
        return dot(self.comps, self.comps)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.comps)


def canonicalize(p: BaryPoint) -> BaryPoint:
    """Return the integer representative with content 1 and positive sum."""
    total = sum(p.coords)
    if total == 0:
        raise PointAtInfinityError(f'coordinates {p.raw()} sum to zero')
    denominator = reduce(lcm, (c.denominator for c in p.coords), 1)
    ints = [int(c * denominator) for c in p.coords]
    content = reduce(gcd, (abs(v) for v in ints), 0)
    sign = 1 if total > 0 else -1
    return BaryPoint(tuple(Fraction(sign * v // content) for v in ints))


def normalized(p: BaryPoint) -> Vector:
    """Barycentric coordinates rescaled to sum 1."""
    total = sum(p.coords)
    if total == 0:
        raise PointAtInfinityError(f'coordinates {p.raw()} sum to zero')
    return tuple(c / total for c in p.coords)


def bary_to_cart(s: RegularSimplex, p: BaryPoint) -> CartPoint:
    _check_size(s, p.coords)
    return CartPoint(normalized(p))


def cart_to_bary(s: RegularSimplex, c: CartPoint) -> BaryPoint:
    _check_size(s, c.comps)
    if sum(c.comps) != 1:
        raise ValueError(f'point components sum to {sum(c.comps)}, not 1')
    return canonicalize(BaryPoint(c.comps))


def reflected_vertex(s: RegularSimplex, j: int) -> BaryPoint:
    """Mirror image P'_j of vertex P_j through the opposite face j."""
    s.check_label(j)
    return canonicalize(BaryPoint(tuple(-s.n if i == j else 2 for i in s.labels)))


def reflect_point(s: RegularSimplex, j: int, p: BaryPoint) -> BaryPoint:
    """
    Mirror image of p through face j.

    The image is the barycenter with the same weights of the vertices with
    P_j replaced by P'_j = (2/n, ..., -1, ..., 2/n); scaled by n this gives
    n*l_i + 2*l_j off the label and -n*l_j on it.
    """
    s.check_label(j)
    _check_size(s, p.coords)
    lj = p.coords[j]
    image = tuple(-s.n * lj if i == j else s.n * li + 2 * lj for i, li in enumerate(p.coords))
    return canonicalize(BaryPoint(image))


def inward_normal(s: RegularSimplex, j: int) -> CartVector:
    """Normal of face j inside the hyperplane: e_j - (1/n) sum of the other e_i."""
    s.check_label(j)
    return CartVector(tuple(Fraction(1) if i == j else Fraction(-1, s.n) for i in s.labels))


def reflect_vector(s: RegularSimplex, j: int, u: CartVector) -> CartVector:
    """Linear part S_j of the mirror law: u - 2 <u,v>/<v,v> v with v the normal of face j."""
    s.check_label(j)
    _check_size(s, u.comps)
    nu = inward_normal(s, j)
    coefficient = 2 * dot(u.comps, nu.comps) / nu.norm2()
    return CartVector(tuple(a - coefficient * b for a, b in zip(u.comps, nu.comps)))


def reflection_matrix(s: RegularSimplex, j: int) -> RatMatrix:
    """Matrix I - 2 v v^T / <v,v> of the reflection through face j on R^(n+1)."""
    nu = inward_normal(s, j).comps
    factor = 2 / dot(nu, nu)
    return RatMatrix.from_rows([
        [int(a == b) - factor * nu[a] * nu[b] for b in s.labels] for a in s.labels
    ])


def face_center(s: RegularSimplex, j: int) -> CartPoint:
    s.check_label(j)
    return CartPoint(tuple(Fraction(0) if i == j else Fraction(1, s.n) for i in s.labels))


def cart_reflect_point(s: RegularSimplex, j: int, x: CartPoint) -> CartPoint:
    """Mirror image of a Cartesian point through the hyperplane of face j."""
    offset = x - face_center(s, j)
    return face_center(s, j) + reflect_vector(s, j, offset)


def edge_tangents(s: RegularSimplex, j: int) -> List[CartVector]:
    """Vectors spanning face j: P_k - P_first for the vertices k of the face."""
    s.check_label(j)
    vertices = [v for i, v in enumerate(s.vertices) if i != j]
    return [v - vertices[0] for v in vertices[1:]]


def apply_permutation(sigma: Sequence[int], p: BaryPoint) -> BaryPoint:
    """Relabel vertices: coordinate i moves to position sigma[i]."""
    if len(sigma) != len(p.coords) or sorted(sigma) != list(range(len(sigma))):
        raise InvalidLabelError(f'{list(sigma)} is not a permutation of 0..{len(p.coords) - 1}')
    image = [Fraction(0)] * len(p.coords)
    for i, target in enumerate(sigma):
        image[target] = p.coords[i]
    return BaryPoint(tuple(image))


def cyclic_shift(size: int, k: int = 1) -> Tuple[int, ...]:
    """Permutation sending i to i+k modulo size (a right shift of coordinates)."""
    return tuple((i + k) % size for i in range(size))


def face_interior_test(p: BaryPoint, j: int) -> bool:
    """True iff p lies in the relative interior of face j."""
    coords = canonicalize(p).coords
    if not 0 <= j < len(coords):
        raise InvalidLabelError(f'face label {j} outside 0..{len(coords) - 1}')
    return coords[j] == 0 and all(c > 0 for i, c in enumerate(coords) if i != j)


def _check_size(s: RegularSimplex, values: Sequence):
    if len(values) != s.size:
        raise DimensionMismatchError(f'expected {s.size} coordinates for a simplex of dimension {s.n}, got {len(values)}')
