"""(1 + 1/n)^n, converging to e.

The ratio relation's a-series is (1 - 1/n^2)^n times 1/(1 - 1/n), so a_k is
the k-th partial sum of the s-coefficients.
"""
from fractions import Fraction
from functools import lru_cache

import mpmath

from catalog.spec import SequenceSpec
from numerics.bigfloat import BigFloat, working_precision
from recurrences import FormulaStream, exp_log_square_series
from schemas import ReferenceCoefficient
from series.truncated import TruncatedSeries, geometric_series, series_mul


def napier_coefficient(k: int) -> Fraction:
    """Return a_k = s_0 + ... + s_k."""
    return sum(exp_log_square_series(k).coeffs, Fraction(0))


def napier_a_series(m: int) -> TruncatedSeries:
    """Return (1 - 1/n^2)^n / (1 - 1/n) to order m."""
    return series_mul(exp_log_square_series(m), geometric_series(1, m))


@lru_cache(maxsize=256)
def eval_x(n: int, precision: int) -> BigFloat:
    """Return (1 + 1/n)^n."""
    if n < 1:
        raise ValueError(f"(1 + 1/n)^n needs n >= 1, got {n}")
    with working_precision(precision):
        return mpmath.power(mpmath.mpf(n + 1) / n, n)


def eval_y(n: int, precision: int) -> BigFloat:
    """Return e at the working precision."""
    with working_precision(precision):
        return +mpmath.e


def napier_spec() -> SequenceSpec:
    """Return the (1 + 1/n)^n ratio sequence."""
    return SequenceSpec(
        name="napier",
        kind="ratio",
        a_stream=FormulaStream("ratio", napier_coefficient),
        eval_x=eval_x,
        eval_y=eval_y,
        limit_constant="e",
        reference_coeffs=(
            ReferenceCoefficient(index=0, value="1"),
            ReferenceCoefficient(index=1, value="-1/2"),
            ReferenceCoefficient(index=2, value="11/24"),
            ReferenceCoefficient(index=3, value="-7/16"),
            ReferenceCoefficient(index=4, value="2447/5760"),
            ReferenceCoefficient(index=5, value="-959/2304"),
            ReferenceCoefficient(index=6, value="238043/580608"),
        ),
        a_series_builder=napier_a_series,
        description="(1 + 1/n)^n -> e (ratio form)",
    )
