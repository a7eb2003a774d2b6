"""Error tables over a grid of (n, k)."""
import logging
from typing import Iterable

import mpmath

from catalog.spec import SequenceSpec
from numerics.bigfloat import serialize, working_precision
from numerics.estimate import estimate
from schemas import ErrorRow, ErrorTable
from series.truncated import TruncatedSeries

logger = logging.getLogger(__name__)


def error_table(
    spec: SequenceSpec,
    b: TruncatedSeries,
    n_list: Iterable[int],
    k_list: Iterable[int],
    precision: int,
) -> ErrorTable:
    """Rows sorted by (n, k); values kept as decimal strings at full precision."""
    spec.require_evaluators()
    rows = []
    for n in sorted(set(n_list)):
        exact = spec.eval_x(n, precision)
        for k in sorted(set(k_list)):
            with working_precision(precision):
                approx = estimate(spec, b, n, k, precision)
                rows.append(
                    ErrorRow(
                        n=n,
                        k=k,
                        estimate=serialize(approx, precision),
                        exact=serialize(exact, precision),
                        abs_error=serialize(mpmath.fabs(exact - approx), precision),
                    )
                )
    logger.debug("built %d-row error table for %s", len(rows), spec.name)
    return ErrorTable(sequence=spec.name, precision=precision, rows=rows)
