from .rational import (
    Rational,
    bernoulli,
    bernoulli_numbers,
    binomial,
    falling_factorial,
    format_rational,
    parse_rational,
    rat_add,
    rat_cmp,
    rat_div,
    rat_mul,
    rat_neg,
    rat_sub,
)
from .truncated import (
    TruncatedSeries,
    binomial_series,
    evaluate,
    geometric_series,
    horner,
    identity,
    log1p_series,
    monomial,
    series_add,
    series_exp,
    series_mul,
    series_neg,
    series_scale,
    series_sub,
    shift_backward,
    shift_backward_with_constant,
    shift_forward,
    shift_forward_with_constant,
    truncate,
    zero,
)
from .text import numbered_lines, parse_series, read_coefficient_block

__all__ = [
    "Rational", "bernoulli", "bernoulli_numbers", "binomial", "falling_factorial",
    "format_rational", "parse_rational",
    "rat_add", "rat_cmp", "rat_div", "rat_mul", "rat_neg", "rat_sub",
    "TruncatedSeries", "binomial_series", "evaluate", "geometric_series", "horner",
    "identity", "log1p_series", "monomial", "series_add", "series_exp", "series_mul",
    "series_neg", "series_scale", "series_sub", "shift_backward",
    "shift_backward_with_constant", "shift_forward", "shift_forward_with_constant",
    "truncate", "zero",
    "numbered_lines", "parse_series", "read_coefficient_block",
]
