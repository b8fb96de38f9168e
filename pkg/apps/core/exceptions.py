"""
Exceptions raised by the billiard toolkit.
"""

from typing import Optional, Tuple


class BilliardError(Exception):
    """Base class for every error raised by the library."""

    def __init__(self, message: str = '', step: Optional[int] = None, states: Tuple = ()):
        super().__init__(message)
        self.message = message
        self.step = step
        # states reached before the failing step, when a trace was running
        self.states = states

    def __str__(self) -> str:
        if self.step is None:
            return self.message
        return f'{self.message} (step {self.step})'


class DimensionMismatchError(BilliardError):
    """Operands have incompatible shapes."""


class PointAtInfinityError(BilliardError):
    """Barycentric coordinates summing to zero."""


class InvalidLabelError(BilliardError):
    """Face label outside 0..n."""


class SingularOrbitError(BilliardError):
    """Trajectory reaches a face of codimension 2."""


class InvalidDirectionError(BilliardError):
    """Direction does not lead to another face."""


class NotPeriodicError(BilliardError):
    """A word failed periodicity certification."""


class RepeatedLabelError(BilliardError):
    """Two consecutive letters of a word are equal."""


class InfeasibleWordError(BilliardError):
    """No point and direction satisfy the fixed-point conditions of a word."""


class DimensionTooHighError(BilliardError):
    """Point set too large for brute-force facet enumeration."""


class DegenerateHullError(BilliardError):
    """All points coincide."""
