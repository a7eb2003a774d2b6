"""Coefficients of (1 - 1/n^2)^n."""
from fractions import Fraction

from series.truncated import TruncatedSeries


def exp_log_square_series(m: int) -> TruncatedSeries:
    """s_0 = 1, s_k = -(1/k) sum_{j=1}^{floor((k+1)/2)} (2j-1)/j * s_{k+1-2j}."""
    if m < 0:
        raise ValueError(f"order must be >= 0, got {m}")
    s = [Fraction(1)]
    for k in range(1, m + 1):
        acc = sum((Fraction(2 * j - 1, j) * s[k + 1 - 2 * j] for j in range(1, (k + 1) // 2 + 1)), Fraction(0))
        s.append(-acc / k)
    return TruncatedSeries(tuple(s))
