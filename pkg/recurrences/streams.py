"""Coefficient streams: the a_k of a relation, served on demand.

A stream is deterministic: asking for the same index twice returns the same
rational, so solvers and streams may cache freely.
"""
from abc import ABC, abstractmethod
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from errors import InsufficientCoefficientsError, NormalizationError
from schemas import SEQUENCE_KINDS, SequenceKind
from series.rational import RationalLike, format_rational
from series.truncated import TruncatedSeries


class CoeffStream(ABC):
    def __init__(self, kind: SequenceKind) -> None:
        if kind not in SEQUENCE_KINDS:
            raise ValueError(f"unknown relation kind {kind!r}")
        self.kind: SequenceKind = kind

    @abstractmethod
    def coefficient(self, k: int) -> Fraction:
        ...

    def __call__(self, k: int) -> Fraction:
        if k < 0:
            raise ValueError(f"coefficient index must be >= 0, got {k}")
        return self.coefficient(k)

    def series(self, m: int) -> TruncatedSeries:
        """a_0..a_m as a truncated series."""
        return TruncatedSeries(tuple(self(k) for k in range(m + 1)))


class FormulaStream(CoeffStream):
    """a_k from a closed-form callable, memoized."""

    def __init__(self, kind: SequenceKind, formula: Callable[[int], RationalLike]) -> None:
        super().__init__(kind)
        self._formula = lru_cache(maxsize=None)(lambda k: Fraction(formula(k)))

    def coefficient(self, k: int) -> Fraction:
        return self._formula(k)


class ListStream(CoeffStream):
    """a_0..a_{N-1} given explicitly; anything past the end is an input error."""

    def __init__(self, kind: SequenceKind, coeffs: Sequence[RationalLike]) -> None:
        super().__init__(kind)
        self._coeffs = tuple(Fraction(c) for c in coeffs)

    @classmethod
    def from_series(cls, kind: SequenceKind, f: TruncatedSeries) -> "ListStream":
        return cls(kind, f.coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def coefficient(self, k: int) -> Fraction:
        if k >= len(self._coeffs):
            raise InsufficientCoefficientsError(k, len(self._coeffs))
        return self._coeffs[k]


def required_terms(kind: SequenceKind, m: int) -> int:
    """How many a's a solve to order m reads: a_0..a_{m+1} or a_0..a_m."""
    return m + 1 if kind == "product" else m + 2


def check_normalization(stream: CoeffStream) -> None:
    """Reject streams whose a_0 / a_1 break their kind's derivation."""
    a0 = stream(0)
    if stream.kind == "difference":
        expected = {0: Fraction(0), 1: Fraction(0)}
    elif stream.kind == "product":
        expected = {0: Fraction(1)}
    else:
        expected = {0: Fraction(1), 1: Fraction(0)}
    for index, want in expected.items():
        got = a0 if index == 0 else stream(index)
        if got != want:
            raise NormalizationError(
                f"{stream.kind} relation requires a_{index} = {format_rational(want)}, "
                f"got {format_rational(got)}"
            )
