"""Truncated formal power series in 1/n with exact rational coefficients.

coeffs[k] is the coefficient of n^{-k}; a series of order m holds exactly
m + 1 coefficients and says nothing about n^{-(m+1)} and beyond. Binary
operations therefore truncate to the smaller operand order.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Tuple

from errors import OrderMismatchError
from numerics.bigfloat import BigFloat, from_rational, working_precision
from series.rational import RationalLike, binomial, falling_factorial


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("a truncated series needs at least the constant term")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def of(cls, coeffs: Iterable[RationalLike]) -> "TruncatedSeries":
        return cls(tuple(coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if other.order != self.order:
            raise OrderMismatchError(
                f"cannot compare series of order {self.order} and {other.order}"
            )
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_add(self, other)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_sub(self, other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)

    def __neg__(self) -> "TruncatedSeries":
        return series_neg(self)

    def __repr__(self) -> str:
        return f"TruncatedSeries({[str(c) for c in self.coeffs]})"


def zero(m: int) -> TruncatedSeries:
    return TruncatedSeries((Fraction(0),) * (m + 1))


def identity(m: int) -> TruncatedSeries:
    """The series 1 + 0/n + ... at order m."""
    return monomial(0, m)


def monomial(k: int, m: int, c: RationalLike = 1) -> TruncatedSeries:
    """c * n^{-k} at order m (zero when k > m)."""
    coeffs = [Fraction(0)] * (m + 1)
    if k <= m:
        coeffs[k] = Fraction(c)
    return TruncatedSeries(tuple(coeffs))


def truncate(x: TruncatedSeries, order: int) -> TruncatedSeries:
    if order > x.order:
        raise OrderMismatchError(f"cannot extend a series of order {x.order} to order {order}")
    return TruncatedSeries(x.coeffs[: order + 1])


def series_add(x: TruncatedSeries, y: TruncatedSeries) -> TruncatedSeries:
    m = min(x.order, y.order)
    return TruncatedSeries(tuple(x[k] + y[k] for k in range(m + 1)))


def series_sub(x: TruncatedSeries, y: TruncatedSeries) -> TruncatedSeries:
    m = min(x.order, y.order)
    return TruncatedSeries(tuple(x[k] - y[k] for k in range(m + 1)))


def series_neg(x: TruncatedSeries) -> TruncatedSeries:
    return TruncatedSeries(tuple(-c for c in x))


def series_scale(x: TruncatedSeries, c: RationalLike) -> TruncatedSeries:
    c = Fraction(c)
    return TruncatedSeries(tuple(c * v for v in x))


def series_mul(x: TruncatedSeries, y: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at min(x.order, y.order)."""
    m = min(x.order, y.order)
    return TruncatedSeries(
        tuple(sum((x[j] * y[k - j] for j in range(k + 1)), Fraction(0)) for k in range(m + 1))
    )


def _shift(f: TruncatedSeries, sign: int) -> TruncatedSeries:
    # g_k = sum_{j=1}^{k} f_j * sign^{k-j} * C(k-1, j-1); the constant passes through.
    coeffs = [f[0]]
    for k in range(1, f.order + 1):
        acc = Fraction(0)
        for j in range(1, k + 1):
            term = f[j] * binomial(k - 1, j - 1)
            acc += -term if sign < 0 and (k - j) % 2 else term
        coeffs.append(acc)
    return TruncatedSeries(tuple(coeffs))


def shift_forward(f: TruncatedSeries) -> TruncatedSeries:
    """Re-expand f(n + 1) in powers of 1/n."""
    return _shift(f, -1)


def shift_backward(f: TruncatedSeries) -> TruncatedSeries:
    """Re-expand f(n - 1) in powers of 1/n."""
    return _shift(f, 1)


# The constant term already passes through both shifts unchanged; these names
# are what the defining relations of the three recurrences are written with.
shift_forward_with_constant = shift_forward
shift_backward_with_constant = shift_backward


def binomial_series(alpha: RationalLike, c: RationalLike, m: int) -> TruncatedSeries:
    """(1 - c/n)^alpha: coefficient j is (alpha)_j / j! * (-c)^j."""
    if m < 0:
        raise ValueError(f"order must be >= 0, got {m}")
    c = Fraction(c)
    return TruncatedSeries(
        tuple(falling_factorial(alpha, j) / math.factorial(j) * (-c) ** j for j in range(m + 1))
    )


def geometric_series(c: RationalLike, m: int) -> TruncatedSeries:
    """1 / (1 - c/n) = sum c^k n^{-k}."""
    c = Fraction(c)
    return TruncatedSeries(tuple(c**k for k in range(m + 1)))


def log1p_series(m: int) -> TruncatedSeries:
    """ln(1 + 1/n) = sum_{k>=1} (-1)^{k-1} / (k n^k)."""
    return TruncatedSeries(
        (Fraction(0),) + tuple(Fraction((-1) ** (k - 1), k) for k in range(1, m + 1))
    )


def series_exp(x: TruncatedSeries) -> TruncatedSeries:
    """exp(x) for a series without constant term, as sum_j x^j / j!."""
    if x[0] != 0:
        raise ValueError("series_exp needs a zero constant term")
    result = identity(x.order)
    power = identity(x.order)
    for j in range(1, x.order + 1):
        power = series_mul(power, x)
        result = series_add(result, series_scale(power, Fraction(1, math.factorial(j))))
    return result


def horner(f: Sequence[Fraction], n: int) -> Fraction:
    """Exact value of sum f[k] n^{-k}."""
    inv = Fraction(1, n)
    acc = Fraction(0)
    for c in reversed(tuple(f)):
        acc = acc * inv + c
    return acc


def evaluate(f: TruncatedSeries, n: int, precision: int) -> BigFloat:
    """sum f[k] n^{-k}, evaluated exactly and rounded once to a BigFloat."""
    if n < 1:
        raise ValueError(f"evaluate needs n >= 1, got {n}")
    with working_precision(precision):
        return from_rational(horner(f, n))
