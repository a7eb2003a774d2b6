"""Plain-text exchange form of a truncated series.

    order 2
    1
    -1/4
    1/32

Custom-sequence files reuse the same block after their "kind:" line, with
the header written "order: m".
"""
from fractions import Fraction
from typing import List, Sequence, Tuple

from errors import RationalParseError, SeriesFormatError
from series.rational import parse_rational
from series.truncated import TruncatedSeries

NumberedLine = Tuple[int, str]


def numbered_lines(text: str) -> List[NumberedLine]:
    """Return the non-blank lines of `text`, stripped, with 1-based line numbers."""
    return [(i, line.strip()) for i, line in enumerate(text.splitlines(), start=1) if line.strip()]


def _order_header(lineno: int, line: str) -> int:
    key, _, value = line.replace(":", " ", 1).partition(" ")
    value = value.strip()
    if key != "order" or not value.isdigit():
        raise SeriesFormatError(f"expected 'order m', got {line!r}", line=lineno)
    return int(value)


def read_coefficient_block(lines: Sequence[NumberedLine], end_line: int) -> Tuple[int, List[Fraction]]:
    """Return the declared order and the rationals that follow the header.

    `end_line` is reported when the header itself is missing.
    """
    if not lines:
        raise SeriesFormatError("expected 'order m' header", line=end_line)
    order = _order_header(*lines[0])
    coeffs = []
    for lineno, line in lines[1:]:
        try:
            coeffs.append(parse_rational(line))
        except RationalParseError as exc:
            raise SeriesFormatError(str(exc), line=lineno) from exc
    return order, coeffs


def parse_series(text: str) -> TruncatedSeries:
    """Return the series written in text form; exactly order + 1 coefficients."""
    lines = numbered_lines(text)
    order, coeffs = read_coefficient_block(lines, end_line=1)
    if len(coeffs) != order + 1:
        raise SeriesFormatError(
            f"order {order} needs {order + 1} coefficients, found {len(coeffs)}",
            line=len(text.splitlines()) + 1,
        )
    return TruncatedSeries(tuple(coeffs))
