"""Truncated asymptotic estimates and their errors against exact values."""
import mpmath

from catalog.spec import SequenceSpec
from errors import ExpansionOnlyError, OrderMismatchError
from numerics.bigfloat import BigFloat, working_precision
from series.truncated import TruncatedSeries, evaluate, truncate


def estimate(spec: SequenceSpec, b: TruncatedSeries, n: int, k: int, precision: int) -> BigFloat:
    """Return y_n * sum_{j<=k} b_j n^{-j}, or L + sum_{1<=j<=k} t_j n^{-j} for additive specs.

    For additive specs `b` is the tail from `SequenceSpec.expand`, whose
    constant term is 0.
    """
    if k > b.order:
        raise OrderMismatchError(f"truncation order {k} exceeds expansion order {b.order}")
    if k < 0:
        raise OrderMismatchError(f"truncation order must be >= 0, got {k}")
    if spec.eval_y is None:
        raise ExpansionOnlyError(f"{spec.name} has no normalizer y_n to scale the expansion")
    with working_precision(precision):
        partial = evaluate(truncate(b, k), n, precision)
        if spec.additive:
            return spec.eval_y(n, precision) + partial
        return spec.eval_y(n, precision) * partial


def truncation_error(spec: SequenceSpec, b: TruncatedSeries, n: int, k: int, precision: int) -> BigFloat:
    """Return |x_n - estimate|, scaled by y_n for multiplicative specs."""
    spec.require_evaluators()
    with working_precision(precision):
        err = mpmath.fabs(spec.eval_x(n, precision) - estimate(spec, b, n, k, precision))
        if spec.additive:
            return err
        return err / spec.eval_y(n, precision)
