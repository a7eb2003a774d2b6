"""J_n = integral of (1 + t^2)^{-n} over [0, inf).

Integration by parts gives J_n = (2n-3)/(2n-2) J_{n-1}; with
y_n = sqrt(pi/n)/2 the ratio relation has a-series
(1 - 3/(2n)) / (1 - 1/n) * (1 - 1/n)^{-1/2}.
"""
import logging
import math
from fractions import Fraction
from functools import lru_cache

import mpmath

from catalog.spec import SequenceSpec
from errors import InputError
from numerics.bigfloat import BigFloat, working_precision
from recurrences import FormulaStream
from schemas import ReferenceCoefficient
from series.rational import falling_factorial
from series.truncated import (
    TruncatedSeries,
    binomial_series,
    geometric_series,
    identity,
    series_mul,
    series_scale,
    series_sub,
)

logger = logging.getLogger(__name__)

MINUS_HALF = Fraction(-1, 2)

# The printed fourth coefficient is 302/5965; the recurrence gives this value.
DERIVED_B4 = "1659/32768"


def _d(j: int) -> Fraction:
    return (-1) ** j * falling_factorial(MINUS_HALF, j) / math.factorial(j)


def beta_coefficient(k: int) -> Fraction:
    """Return a_k of the ratio J_n y_{n-1} / (J_{n-1} y_n)."""
    if k == 0:
        return Fraction(1)
    if k == 1:
        return Fraction(0)
    partial = sum((_d(j) for j in range(1, k)), Fraction(0))
    return Fraction(-1, 2) - partial / 2 + _d(k)


def beta_a_series(m: int) -> TruncatedSeries:
    """Return the a-series rebuilt as a product of three simple series."""
    one = identity(m)
    prefactor = series_sub(one, series_scale(series_sub(geometric_series(1, m), one), Fraction(1, 2)))
    return series_mul(prefactor, binomial_series(MINUS_HALF, 1, m))


@lru_cache(maxsize=256)
def eval_x(n: int, precision: int) -> BigFloat:
    """J_n from J_1 = pi/2 and J_k = (2k-3)/(2k-2) J_{k-1}."""
    if n < 1:
        raise InputError(f"J_n is seeded at n = 1, got {n}")
    if n > 10_000:
        logger.debug("running the J_n recurrence to n=%d", n)
    with working_precision(precision):
        value = mpmath.pi / 2
        for k in range(2, n + 1):
            value = value * (2 * k - 3) / (2 * k - 2)
        return value


def eval_y(n: int, precision: int) -> BigFloat:
    """Return sqrt(pi / n) / 2."""
    with working_precision(precision):
        return mpmath.sqrt(mpmath.pi / n) / 2


def beta_integral_spec() -> SequenceSpec:
    """Return the (1 + t^2)^{-n} integral ratio sequence."""
    return SequenceSpec(
        name="beta_integral",
        kind="ratio",
        a_stream=FormulaStream("ratio", beta_coefficient),
        eval_x=eval_x,
        eval_y=eval_y,
        reference_coeffs=(
            ReferenceCoefficient(index=0, value="1"),
            ReferenceCoefficient(index=1, value="3/8"),
            ReferenceCoefficient(index=2, value="25/128"),
            ReferenceCoefficient(index=3, value="105/1024"),
            ReferenceCoefficient(
                index=4,
                value=DERIVED_B4,
                provenance="derived",
                note="printed as 302/5965, see ERRATA.md",
            ),
        ),
        a_series_builder=beta_a_series,
        description="J_n ~ sqrt(pi/n)/2 (ratio form)",
    )
