"""Exception hierarchy for the toolkit.

The CLI maps these to distinct exit codes: input errors to 2, violated
mathematical preconditions to 3, and insufficient horizons to 4.
"""

from __future__ import annotations


class NormfiltError(Exception):
    """Base class for all toolkit errors."""


class InputError(NormfiltError):
    """Malformed or semantically invalid input text."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", col {column}" if column is not None else "")
            message = f"{where}: {message}"
        super().__init__(message)


class PreconditionError(NormfiltError):
    """A mathematical precondition of an operation was violated."""


class DimensionMismatch(PreconditionError):
    """Operands live in rings of different ambient dimension."""


class InfiniteLength(PreconditionError):
    """A quotient that should have finite length does not."""


class NotMPrimary(PreconditionError):
    """An operation requiring an m-primary ideal received something else."""


class UnsupportedDimension(PreconditionError):
    """Ambient dimension outside the supported range (1 through 4)."""


class HorizonError(NormfiltError):
    """The computed horizon is too small to certify the requested result."""
