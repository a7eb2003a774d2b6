"""Exception hierarchy for the asymptotic series engine.

Library code raises these; only `cli.main` turns them into exit codes:
  2: malformed or insufficient input
  3: a coefficient stream violates its kind's normalization
  4: the request needs a capability the sequence does not have
"""
from typing import Optional


class AsymptoticError(Exception):
    """Base class for every error the engine raises on purpose."""

    exit_code: int = 1


class InputError(AsymptoticError):
    exit_code = 2


class RationalParseError(InputError):
    """Text that is not a rational in "p/q" form."""


class SeriesFormatError(InputError):
    """Malformed series or custom-sequence file."""

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnknownSequenceError(InputError):
    pass


class InsufficientCoefficientsError(InputError):
    """A coefficient was requested beyond the end of an explicit list."""

    def __init__(self, index: int, available: int) -> None:
        self.index = index
        self.available = available
        super().__init__(
            f"insufficient coefficients: a_{index} required, "
            f"only a_0..a_{available - 1} provided"
        )


class OrderMismatchError(InputError):
    """Two series of different order compared, or a truncation past the order."""


class NormalizationError(AsymptoticError):
    exit_code = 3


class CapabilityError(AsymptoticError):
    exit_code = 4


class ExpansionOnlyError(CapabilityError):
    """The sequence has no exact evaluator; only `expand` is possible."""


class PrecisionFloorError(CapabilityError):
    """A truncation error fell below what the working precision can resolve."""


class RationalDivisionError(AsymptoticError, ZeroDivisionError):
    exit_code = 2
