"""BigFloat plumbing on top of mpmath.

A BigFloat is an `mpmath.mpf`. Precision is always stated in decimal digits
and every evaluator runs inside `working_precision`, which adds GUARD_DIGITS
so that values handed back carry at least the requested precision.
"""
from contextlib import contextmanager
from fractions import Fraction
from typing import Iterator

import mpmath

from settings import GUARD_DIGITS, MIN_PRECISION

BigFloat = mpmath.mpf

_INF = float("inf")


def check_precision(precision: int) -> None:
    if precision < MIN_PRECISION:
        raise ValueError(f"precision must be at least {MIN_PRECISION} digits, got {precision}")


@contextmanager
def working_precision(precision: int) -> Iterator[None]:
    """Run the block at `precision` + GUARD_DIGITS decimal digits."""
    check_precision(precision)
    with mpmath.workdps(precision + GUARD_DIGITS):
        yield


def from_rational(x: Fraction) -> BigFloat:
    """Round an exact rational to the current working precision."""
    x = Fraction(x)
    return mpmath.fdiv(x.numerator, x.denominator)


def serialize(x: BigFloat, precision: int) -> str:
    """Fixed-point decimal string with `precision` significant digits."""
    return mpmath.nstr(x, precision, min_fixed=-_INF, max_fixed=_INF)
