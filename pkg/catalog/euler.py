"""H_n - ln n, converging to Euler's constant.

x_n - x_{n+1} = ln(1 + 1/n) - 1/(n + 1) = sum_{k>=2} (-1)^k (k-1)/k n^{-k}.
"""
from fractions import Fraction
from functools import lru_cache

import mpmath

from catalog.spec import SequenceSpec
from numerics.bigfloat import BigFloat, working_precision
from recurrences import FormulaStream
from schemas import ReferenceCoefficient
from series.rational import bernoulli
from series.truncated import (
    TruncatedSeries,
    log1p_series,
    monomial,
    series_sub,
    shift_forward,
)


def euler_coefficient(k: int) -> Fraction:
    """Return a_k = (-1)^k (k-1)/k, zero below k = 2."""
    if k < 2:
        return Fraction(0)
    return Fraction((-1) ** k * (k - 1), k)


def euler_a_series(m: int) -> TruncatedSeries:
    """ln(1 + 1/n) minus 1/(n+1), built by series arithmetic."""
    return series_sub(log1p_series(m), shift_forward(monomial(1, m)))


def euler_maclaurin_tail(m: int) -> TruncatedSeries:
    """t_1 = 1/2, t_{2k} = -B_{2k}/(2k), other t zero."""
    coeffs = [Fraction(0)] * (m + 1)
    if m >= 1:
        coeffs[1] = Fraction(1, 2)
    for j in range(2, m + 1, 2):
        coeffs[j] = -bernoulli(j) / j
    return TruncatedSeries(tuple(coeffs))


@lru_cache(maxsize=256)
def eval_x(n: int, precision: int) -> BigFloat:
    """Return H_n - ln n."""
    if n < 1:
        raise ValueError(f"H_n - ln n needs n >= 1, got {n}")
    with working_precision(precision):
        return mpmath.harmonic(n) - mpmath.log(n)


def eval_y(n: int, precision: int) -> BigFloat:
    """Return Euler's constant gamma at the working precision."""
    with working_precision(precision):
        return +mpmath.euler


def euler_spec() -> SequenceSpec:
    """Return the H_n - ln n difference sequence."""
    return SequenceSpec(
        name="euler",
        kind="difference",
        a_stream=FormulaStream("difference", euler_coefficient),
        eval_x=eval_x,
        eval_y=eval_y,
        limit_constant="gamma",
        additive=True,
        reference_coeffs=(
            ReferenceCoefficient(index=1, value="1/2"),
            ReferenceCoefficient(index=2, value="-1/12"),
            ReferenceCoefficient(index=3, value="0", provenance="derived", note="odd terms vanish"),
            ReferenceCoefficient(index=4, value="1/120"),
            ReferenceCoefficient(index=6, value="-1/252"),
            ReferenceCoefficient(index=8, value="1/240"),
            ReferenceCoefficient(index=10, value="-1/132"),
        ),
        a_series_builder=euler_a_series,
        description="H_n - ln n -> gamma (difference form, additive)",
    )
