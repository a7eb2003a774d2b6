"""Triangular solvers turning a-coefficients into b-coefficients.

All three relations are solved by the same forward sweep: b_0 = 1, then each
b_k from b_1..b_{k-1}, the a's, and c_0..c_{k-1}, where c is the backward
shift of b (the coefficients of P(n-1)).
"""
import logging
from fractions import Fraction
from typing import Callable, List

from errors import NormalizationError
from recurrences.streams import CoeffStream, check_normalization
from series.rational import binomial
from series.truncated import TruncatedSeries

logger = logging.getLogger(__name__)

Step = Callable[[int, List[Fraction], List[Fraction]], Fraction]


def _backward_coefficient(i: int, b: List[Fraction]) -> Fraction:
    # c_i = sum_{j=1}^{i} C(i-1, j-1) b_j
    return sum((binomial(i - 1, j - 1) * b[j] for j in range(1, i + 1)), Fraction(0))


def _coupling(k: int, b: List[Fraction], sign: Callable[[int], int]) -> Fraction:
    # sum_{j=1}^{k-1} sign(j) C(k, j-1) b_j
    return sum((sign(j) * binomial(k, j - 1) * b[j] for j in range(1, k)), Fraction(0))


def _triangular_solve(m: int, step: Step) -> TruncatedSeries:
    if m < 0:
        raise ValueError(f"order must be >= 0, got {m}")
    b = [Fraction(1)]
    c = [Fraction(1)]
    for k in range(1, m + 1):
        b.append(step(k, b, c))
        c.append(_backward_coefficient(k, b))
    return TruncatedSeries(tuple(b))


def _require_kind(a: CoeffStream, kind: str) -> None:
    if a.kind != kind:
        raise NormalizationError(f"expected a {kind} stream, got {a.kind}")
    check_normalization(a)


def solve_difference(a: CoeffStream, m: int, *, printed_sign: bool = False) -> TruncatedSeries:
    """b for x_n/y_n - x_{n+1}/y_{n+1} = sum a_j / n^j.

    b_k = (a_{k+1} + sum_{j=1}^{k-1} (-1)^{j+k+1} C(k, j-1) b_j) / k.
    `printed_sign=True` uses (-1)^{j+k} instead; that variant does not satisfy
    the relation and is kept only to demonstrate the erratum (see ERRATA.md).
    """
    _require_kind(a, "difference")
    offset = 0 if printed_sign else 1

    def step(k: int, b: List[Fraction], c: List[Fraction]) -> Fraction:
        coupling = _coupling(k, b, lambda j: -1 if (j + k + offset) % 2 else 1)
        return (a(k + 1) + coupling) / k

    logger.debug("solving difference relation to order %d (printed_sign=%s)", m, printed_sign)
    return _triangular_solve(m, step)


def solve_product(a: CoeffStream, m: int) -> TruncatedSeries:
    """b for (x_n/y_n)(x_{n-1}/y_{n-1}) = sum a_j / n^j."""
    _require_kind(a, "product")

    def step(k: int, b: List[Fraction], c: List[Fraction]) -> Fraction:
        cross = sum((b[k - i] * c[i] for i in range(1, k)), Fraction(0))
        tail = sum((binomial(k - 1, j - 1) * b[j] for j in range(1, k)), Fraction(0))
        return (a(k) - cross - tail) / 2

    logger.debug("solving product relation to order %d", m)
    return _triangular_solve(m, step)


def solve_ratio(a: CoeffStream, m: int) -> TruncatedSeries:
    """b for (x_n/y_n)/(x_{n-1}/y_{n-1}) = sum a_j / n^j; reads a up to a_{m+1}."""
    _require_kind(a, "ratio")

    def step(k: int, b: List[Fraction], c: List[Fraction]) -> Fraction:
        driven = sum((c[j] * a(k + 1 - j) for j in range(k)), Fraction(0))
        return -(driven + _coupling(k, b, lambda j: 1)) / k

    logger.debug("solving ratio relation to order %d", m)
    return _triangular_solve(m, step)


def additive_expansion(a: CoeffStream, m: int) -> TruncatedSeries:
    """t_k of x_n - L = sum_{k>=1} t_k / n^k for x_n - x_{n+1} = sum a_k / n^k.

    Dividing both sides by the limit L rescales the a's and the b's alike, and
    the recurrence for k >= 1 never reads b_0, so t_k is just b_k.
    """
    b = solve_difference(a, m)
    return TruncatedSeries((Fraction(0),) + b.coeffs[1:])


_SOLVERS = {
    "difference": solve_difference,
    "product": solve_product,
    "ratio": solve_ratio,
}


def solve(a: CoeffStream, m: int) -> TruncatedSeries:
    """Dispatch on the stream's kind."""
    return _SOLVERS[a.kind](a, m)
