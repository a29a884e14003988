"""
Domain errors for the advance-sharing toolkit.

Every error is a ``ValueError`` so callers that only care about "bad input"
can catch the builtin; the CLI reports ``error.code`` (the class name) and
exits with status 1.
"""
from __future__ import annotations


class AdvanceSharingError(ValueError):
    """Base class of every domain error."""

    @property
    def code(self) -> str:
        return type(self).__name__


# finite_field
class NonPrimeCharacteristic(AdvanceSharingError):
    pass


class ReducibleModulus(AdvanceSharingError):
    pass


class FieldTooLarge(AdvanceSharingError):
    pass


class OddLengthVector(AdvanceSharingError):
    pass


# linalg
class NoSolution(AdvanceSharingError):
    pass


class AmbientMismatch(AdvanceSharingError):
    pass


class NotASubspace(AdvanceSharingError):
    pass


class IndexOutOfRange(AdvanceSharingError):
    pass


class EnumerationTooLarge(AdvanceSharingError):
    pass


# symplectic
class NotSelfOrthogonal(AdvanceSharingError):
    pass


class EmptyDifference(AdvanceSharingError):
    """Coset distance asked for V1 = V2, where V1 \\ V2 is empty."""


class TripleViolation(AdvanceSharingError):
    """Raised by triple validation; ``violations`` lists every failed condition."""

    def __init__(self, message: str, violations: list[str] | None = None) -> None:
        super().__init__(message)
        self.violations = violations or [message]


class DimensionMismatch(TripleViolation):
    pass


class InclusionViolated(TripleViolation):
    pass


class NotSelfDual(TripleViolation):
    pass


# advance_sharing
class LengthMismatch(AdvanceSharingError):
    pass


class NoAdvanceRepresentative(AdvanceSharingError):
    pass


# reed_solomon
class DuplicatePoints(AdvanceSharingError):
    pass


class ParityViolation(AdvanceSharingError):
    pass


# classical
class NotAdvanceShareable(AdvanceSharingError):
    pass


class VariableUnknown(AdvanceSharingError):
    pass


# gilbert_varshamov
class DomainError(AdvanceSharingError):
    pass


# simulation
class NotCss(AdvanceSharingError):
    pass


class StateTooLarge(AdvanceSharingError):
    pass


class NotADensity(AdvanceSharingError):
    pass


# services
class CodeFileError(AdvanceSharingError):
    """Malformed matrix, triple or classical scheme file."""
