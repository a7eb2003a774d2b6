"""Empirical convergence order of a truncated expansion."""
import logging

import mpmath

from catalog.spec import SequenceSpec
from errors import PrecisionFloorError
from numerics.bigfloat import working_precision
from numerics.estimate import truncation_error
from schemas import ConvergenceMeasurement
from series.truncated import TruncatedSeries

logger = logging.getLogger(__name__)


def convergence_order(
    spec: SequenceSpec,
    b: TruncatedSeries,
    k: int,
    n0: int,
    precision: int,
) -> ConvergenceMeasurement:
    """log2(err(n0) / err(2 n0)) for the order-k truncation.

    Should approach the index of the first nonzero coefficient after b_k.
    Both errors exactly zero is reported as degenerate; an error below
    10^-precision cannot be told apart from rounding and raises
    PrecisionFloorError.
    """
    with working_precision(precision):
        near = truncation_error(spec, b, n0, k, precision)
        far = truncation_error(spec, b, 2 * n0, k, precision)
        if near == 0 and far == 0:
            logger.info("%s: truncation k=%d is exact at n=%d and n=%d", spec.name, k, n0, 2 * n0)
            return ConvergenceMeasurement(
                sequence=spec.name, k=k, n0=n0, precision=precision, degenerate=True
            )
        floor = mpmath.mpf(10) ** (-precision)
        if near < floor or far < floor:
            logger.warning(
                "%s: truncation error at k=%d, n0=%d is below 1e-%d", spec.name, k, n0, precision
            )
            raise PrecisionFloorError(
                f"precision floor reached for {spec.name} at k={k}, n0={n0}; "
                f"raise the precision above {precision} digits"
            )
        exponent = float(mpmath.log(near / far, 2))
    return ConvergenceMeasurement(sequence=spec.name, k=k, n0=n0, precision=precision, exponent=exponent)
