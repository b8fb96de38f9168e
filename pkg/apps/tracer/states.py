"""
Value types shared by the exact and floating-point tracers.
"""

from dataclasses import dataclass, field
from typing import Iterator, List, Sequence, Tuple

from apps.core.exceptions import InvalidDirectionError, InvalidLabelError, SingularOrbitError
from apps.exactla.matrices import proportional
from apps.simplex.geometry import BaryPoint, CartVector, canonicalize, face_interior_test


@dataclass(frozen=True)
class BilliardWord:
    """Sequence of face labels hit by an orbit."""

    labels: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'labels', tuple(int(label) for label in self.labels))

    @classmethod
    def parse(cls, text: str) -> 'BilliardWord':
        """Parse '0123' or, for labels above 9, '0,1,10,1'."""
        text = text.strip()
        parts = text.split(',') if ',' in text else list(text)
        try:
            return cls(tuple(int(part) for part in parts if part.strip()))
        except ValueError:
            raise InvalidLabelError(f'cannot read a billiard word from {text!r}')

    def check(self, n: int):
        bad = [label for label in self.labels if not 0 <= label <= n]
        if bad:
            raise InvalidLabelError(f'labels {bad} outside 0..{n}')

    def repeated_positions(self) -> List[int]:
        """Indices k with labels[k] == labels[k+1], cyclically."""
        size = len(self.labels)
        if size < 2:
            return [0] if size else []
        return [k for k in range(size) if self.labels[k] == self.labels[(k + 1) % size]]

    def rotated(self, k: int = 1) -> 'BilliardWord':
        k %= max(len(self.labels), 1)
        return BilliardWord(self.labels[k:] + self.labels[:k])

    def rotations(self) -> List['BilliardWord']:
        return [self.rotated(k) for k in range(len(self.labels))]

    def reversed(self) -> 'BilliardWord':
        """The word read backwards from the same first letter."""
        return BilliardWord(self.labels[:1] + self.labels[:0:-1])

    def relabeled(self, sigma: Sequence[int]) -> 'BilliardWord':
        return BilliardWord(tuple(sigma[label] for label in self.labels))

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[int]:
        return iter(self.labels)

    def __getitem__(self, k: int) -> int:
        return self.labels[k]

    def __str__(self) -> str:
        if all(label < 10 for label in self.labels):
            return ''.join(str(label) for label in self.labels)
        return ','.join(str(label) for label in self.labels)


@dataclass(frozen=True)
class BilliardState:
    """A boundary point, the face it lies on and the outgoing direction."""

    point: BaryPoint
    face: int
    direction: CartVector

    def __post_init__(self):
        object.__setattr__(self, 'point', canonicalize(self.point))
        if not face_interior_test(self.point, self.face):
            raise SingularOrbitError(f'{self.point.key()} is not in the relative interior of face {self.face}')
        if len(self.direction.comps) != len(self.point.coords):
            raise InvalidDirectionError(
                f'direction has {len(self.direction.comps)} components, point has {len(self.point.coords)}'
            )
        if self.direction[self.face] <= 0:
            raise InvalidDirectionError(f'direction does not enter the simplex through face {self.face}')

    def same_as(self, other: 'BilliardState') -> bool:
        """Equal points and faces, directions equal up to a positive factor."""
        return (
            self.face == other.face
            and self.point == other.point
            and proportional(self.direction.comps, other.direction.comps, positive=True)
        )


@dataclass(frozen=True)
class TraceResult:
    states: Tuple[BilliardState, ...]
    word: BilliardWord
    closed: bool
    final: BilliardState
    returns: Tuple[int, ...] = field(default=())

    @property
    def points(self) -> Tuple[BaryPoint, ...]:
        return tuple(state.point for state in self.states)


@dataclass(frozen=True)
class OrbitCertificate:
    """Exact proof that a state traces a periodic orbit with the given word."""

    word: BilliardWord
    states: Tuple[BilliardState, ...]

    @property
    def points(self) -> Tuple[BaryPoint, ...]:
        return tuple(state.point for state in self.states)

    @property
    def period(self) -> int:
        return len(self.word)
