"""I_n = (1/pi) * integral of cos(t)^n over [-pi/2, pi/2].

n I_n I_{n-1} = 2/pi, so with y_n = sqrt(2/(pi n)) the product relation has
a-series (1 - 1/n)^{1/2}.
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
from series.truncated import TruncatedSeries, binomial_series

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


def wallis_coefficient(j: int) -> Fraction:
    """Return a_j = (-1)^j (1/2)_j / j!."""
    return (-1) ** j * falling_factorial(HALF, j) / math.factorial(j)


def wallis_a_series(m: int) -> TruncatedSeries:
    """Return (1 - 1/n)^{1/2} to order m."""
    return binomial_series(HALF, 1, m)


@lru_cache(maxsize=256)
def eval_x(n: int, precision: int) -> BigFloat:
    """I_n from I_0 = 1 and I_k = 2 / (pi k I_{k-1})."""
    if n < 0:
        raise InputError(f"I_n is defined for n >= 0, got {n}")
    if n > 10_000:
        logger.debug("running the I_n recurrence to n=%d", n)
    with working_precision(precision):
        two_over_pi = 2 / mpmath.pi
        value = mpmath.mpf(1)
        for k in range(1, n + 1):
            value = two_over_pi / (k * value)
        return value


def eval_y(n: int, precision: int) -> BigFloat:
    """Return sqrt(2 / (pi n))."""
    with working_precision(precision):
        return mpmath.sqrt(2 / (mpmath.pi * n))


def wallis_spec() -> SequenceSpec:
    """Return the cosine power integral product sequence."""
    return SequenceSpec(
        name="wallis",
        kind="product",
        a_stream=FormulaStream("product", wallis_coefficient),
        eval_x=eval_x,
        eval_y=eval_y,
        reference_coeffs=(
            ReferenceCoefficient(index=0, value="1"),
            ReferenceCoefficient(index=1, value="-1/4"),
            ReferenceCoefficient(index=2, value="1/32"),
            ReferenceCoefficient(index=3, value="5/128"),
            ReferenceCoefficient(index=4, value="-21/2048"),
            ReferenceCoefficient(index=5, value="-399/8192"),
        ),
        a_series_builder=wallis_a_series,
        description="cosine power integral I_n ~ sqrt(2/(pi n)) (product form)",
    )
