"""Exception hierarchy for ArdhaJya.

Every class also derives from the builtin a caller would naturally catch,
so ``except ValueError`` keeps working around table and scene construction.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .geometry import SimilarityReport


class ArdhaJyaError(Exception):
    """Root of all library errors."""


class InvalidInputError(ArdhaJyaError, ValueError):
    """A numeric input is NaN or infinite."""


class InvalidConfigError(ArdhaJyaError, ValueError):
    """A grid or recursion configuration breaks its invariants."""


class EmptyGridError(InvalidConfigError):
    """A grid with no nodes was asked to produce a table."""


class ModeMismatchError(ArdhaJyaError, ValueError):
    """An exact-mode check was run on a historical table."""


class UnsupportedGridError(ArdhaJyaError, ValueError):
    """The half-angle scheme cannot reach every node of the grid."""


class DegenerateStepError(ArdhaJyaError, ArithmeticError):
    """A difference-quotient denominator underflowed to zero."""


class InstabilityError(ArdhaJyaError, ValueError):
    """The explicit oscillator scheme would blow up (omega * h >= 2)."""


class SceneDomainError(ArdhaJyaError, ValueError):
    """Angles do not place A, B and C strictly inside the quadrant."""


class VerificationFailure(ArdhaJyaError, AssertionError):
    """A similarity check exceeded its tolerance; the report is attached."""

    def __init__(self, message: str, report: SimilarityReport) -> None:
        super().__init__(message)
        self.report = report
