"""Shared exception types."""

from __future__ import annotations


class CrpencilError(Exception):
    """Base class for all package-specific errors."""


class InputError(CrpencilError, ValueError):
    """Malformed user input: text grammar, JSON documents, CLI parameters."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class OrderMismatchError(CrpencilError, ValueError):
    """Operands belong to cyclotomic fields of different order."""


class DegreeCapError(CrpencilError, RuntimeError):
    """A computation would exceed the configured polynomial degree cap."""


class DivisionFailedError(CrpencilError, ArithmeticError):
    """An exact polynomial division that should succeed for consistent
    input data did not; the fiber data is inconsistent."""


class MembershipError(CrpencilError, ValueError):
    """A fiber claimed to lie in a pencil does not."""


class NotEssentialError(CrpencilError, ValueError):
    """Operation requires an essential arrangement."""


class NotANetError(CrpencilError, ValueError):
    """Arrangement does not carry the required net structure."""


class SearchCapError(CrpencilError, ValueError):
    """Search space exceeds the configured cap."""


class PreconditionError(CrpencilError, ValueError):
    """A documented operation precondition was violated."""


class InconsistentDegreesError(CrpencilError, ValueError):
    """Degree data passed to a bound check is internally inconsistent."""
