"""Exact scalar arithmetic on arbitrary-precision rationals.

`Rational` is `fractions.Fraction`: canonical after every operation
(denominator > 0, lowest terms, zero as 0/1), so the wrappers here only add
the engine's error type and the integer helpers the recurrences need.
"""
import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Tuple, Union

from errors import RationalDivisionError, RationalParseError

Rational = Fraction
RationalLike = Union[Fraction, int]

_RATIONAL_RE = re.compile(r"^\s*([+\-−]?)\s*(\d+)\s*(?:/\s*(\d+)\s*)?$")


def rat_add(x: RationalLike, y: RationalLike) -> Rational:
    """Return x + y."""
    return Fraction(x) + Fraction(y)


def rat_sub(x: RationalLike, y: RationalLike) -> Rational:
    """Return x - y."""
    return Fraction(x) - Fraction(y)


def rat_mul(x: RationalLike, y: RationalLike) -> Rational:
    """Return x * y."""
    return Fraction(x) * Fraction(y)


def rat_neg(x: RationalLike) -> Rational:
    """Return -x."""
    return -Fraction(x)


def rat_div(x: RationalLike, y: RationalLike) -> Rational:
    """Exact quotient; raises RationalDivisionError when y is zero."""
    if y == 0:
        raise RationalDivisionError(f"division of {format_rational(Fraction(x))} by zero")
    return Fraction(x) / Fraction(y)


def rat_cmp(x: RationalLike, y: RationalLike) -> int:
    """Three-way comparison: -1, 0 or 1."""
    diff = Fraction(x) - Fraction(y)
    return (diff > 0) - (diff < 0)


def binomial(n: int, k: int) -> Rational:
    """C(n, k) as an integer-valued rational, 0 outside 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got {n}")
    if k < 0 or k > n:
        return Fraction(0)
    return Fraction(math.comb(n, k))


def falling_factorial(s: RationalLike, n: int) -> Rational:
    """(s)_n = s(s-1)...(s-n+1), with (s)_0 = 1."""
    if n < 0:
        raise ValueError(f"falling_factorial requires n >= 0, got {n}")
    s = Fraction(s)
    result = Fraction(1)
    for i in range(n):
        result *= s - i
    return result


@lru_cache(maxsize=None)
def bernoulli_numbers(m: int) -> Tuple[Rational, ...]:
    """B_0..B_m from sum_{j=0}^{m} C(m+1, j) B_j = 0, convention B_1 = -1/2."""
    if m < 0:
        raise ValueError(f"bernoulli requires m >= 0, got {m}")
    values = [Fraction(1)]
    for k in range(1, m + 1):
        acc = sum((math.comb(k + 1, j) * values[j] for j in range(k)), Fraction(0))
        values.append(-acc / (k + 1))
    return tuple(values)


def bernoulli(m: int) -> Rational:
    """Return B_m, with B_1 = -1/2."""
    return bernoulli_numbers(m)[m]


def parse_rational(text: str) -> Rational:
    """Parse "p/q", "-p/q" or "p"; a Unicode minus sign is accepted."""
    match = _RATIONAL_RE.match(text)
    if not match:
        raise RationalParseError(f"not a rational: {text!r}")
    sign, num, den = match.groups()
    if den is not None and int(den) == 0:
        raise RationalParseError(f"zero denominator: {text!r}")
    value = Fraction(int(num), int(den) if den is not None else 1)
    return -value if sign in ("-", "−") else value


def format_rational(x: RationalLike) -> str:
    """Text form p/q, with the denominator omitted when it is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
