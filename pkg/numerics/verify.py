"""Pass/fail checks behind the `verify` command."""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

import mpmath

from catalog import SequenceSpec, euler_maclaurin_tail
from errors import PrecisionFloorError
from numerics.bigfloat import working_precision
from numerics.convergence import convergence_order
from numerics.estimate import estimate, truncation_error
from schemas import CheckResult, VerifyReport
from series.rational import bernoulli, format_rational, parse_rational
from series.truncated import (
    TruncatedSeries,
    series_mul,
    series_sub,
    shift_backward_with_constant,
    shift_forward_with_constant,
    truncate,
)
from settings import (
    CONVERGENCE_N0,
    CONVERGENCE_PRECISION,
    CONVERGENCE_SLACK,
    TABLE_TOLERANCE,
)

logger = logging.getLogger(__name__)

DECREASE_MIN_N = 50
CONVERGENCE_MAX_K = 3


@dataclass(frozen=True)
class PrintedTable:
    """Published decimal values of x_n and of its order-k estimates."""

    n: int
    exact: str
    estimates: Dict[int, str]
    tolerance: float = TABLE_TOLERANCE
    # estimates checked only loosely, keyed by k
    loose: Optional[Dict[int, float]] = None


PRINTED_TABLES: Dict[str, PrintedTable] = {
    "wallis": PrintedTable(
        n=11,
        exact="0.235172672",
        estimates={
            1: "0.235103718",
            2: "0.235165849",
            3: "0.23517291",
            4: "0.235172741",
            5: "0.235172669",
        },
    ),
    "beta_integral": PrintedTable(
        n=10,
        exact="0.291336507",
        estimates={
            0: "0.280249561",
            1: "0.290758919",
            2: "0.291306282",
            3: "0.291335018",
            4: "0.291336437",
        },
        # the printed k = 4 estimate uses the misprinted b_4
        loose={4: 1e-6},
    ),
}


def closure_residual(spec: SequenceSpec, b: TruncatedSeries) -> TruncatedSeries:
    """Defining relation re-substituted; all zero when b solves it."""
    a = spec.a_stream.series(b.order)
    if spec.kind == "difference":
        return series_sub(series_sub(b, shift_forward_with_constant(b)), a)
    if spec.kind == "product":
        return series_sub(series_mul(b, shift_backward_with_constant(b)), a)
    return series_sub(series_mul(shift_backward_with_constant(b), a), b)


def _check_references(spec: SequenceSpec, b: TruncatedSeries) -> List[CheckResult]:
    checks = []
    for ref in spec.reference_coeffs:
        if ref.index > b.order:
            continue
        want = parse_rational(ref.value)
        got = b[ref.index]
        checks.append(
            CheckResult(
                name=f"coefficient b_{ref.index} ({ref.provenance})",
                passed=got == want,
                detail=f"got {format_rational(got)}, expected {ref.value}",
            )
        )
    return checks


def _check_closure(spec: SequenceSpec, b: TruncatedSeries) -> List[CheckResult]:
    residual = closure_residual(spec, b)
    checks = [
        CheckResult(
            name=f"{spec.kind} relation closure",
            passed=all(c == 0 for c in residual),
            detail=f"to order {b.order}",
        )
    ]
    if spec.a_series_builder is not None:
        rebuilt = spec.a_series_builder(b.order)
        checks.append(
            CheckResult(
                name="a-series closed form vs series algebra",
                passed=rebuilt == spec.a_stream.series(b.order),
                detail=f"to order {b.order}",
            )
        )
    return checks


def _check_bernoulli(b: TruncatedSeries) -> List[CheckResult]:
    mismatched = [j for j in range(2, b.order + 1) if -j * b[j] != bernoulli(j)]
    tail = euler_maclaurin_tail(b.order)
    return [
        CheckResult(
            name="Bernoulli identity -j b_j = B_j",
            passed=not mismatched,
            detail=f"j = 2..{b.order}" + (f", mismatch at {mismatched}" if mismatched else ""),
        ),
        CheckResult(
            name="Euler-Maclaurin tail",
            passed=all(b[j] == tail[j] for j in range(1, b.order + 1)),
            detail=f"to order {b.order}",
        ),
    ]


def _check_printed_table(spec: SequenceSpec, b: TruncatedSeries, precision: int) -> List[CheckResult]:
    table = PRINTED_TABLES.get(spec.name)
    if table is None:
        return []
    loose = table.loose or {}
    with working_precision(precision):
        exact = spec.eval_x(table.n, precision)
        checks = [
            CheckResult(
                name=f"printed x_{table.n}",
                passed=abs(exact - mpmath.mpf(table.exact)) <= table.tolerance,
                detail=f"{mpmath.nstr(exact, 12)} vs {table.exact}",
            )
        ]
        for k, printed in sorted(table.estimates.items()):
            if k > b.order:
                continue
            tolerance = loose.get(k, table.tolerance)
            value = estimate(spec, b, table.n, k, precision)
            residual = abs(value - mpmath.mpf(printed))
            checks.append(
                CheckResult(
                    name=f"printed estimate n={table.n} k={k}",
                    passed=residual <= tolerance,
                    detail=f"{mpmath.nstr(value, 12)} vs {printed} (residual {mpmath.nstr(residual, 3)}, tol {tolerance:g})",
                )
            )
    return checks


def _check_error_decrease(
    spec: SequenceSpec, b: TruncatedSeries, n_values: Sequence[int], precision: int
) -> List[CheckResult]:
    # Truncations ending on a zero coefficient repeat the previous error.
    ks = [k for k in range(1, b.order + 1) if b[k] != 0]
    floor = mpmath.mpf(10) ** (-precision)
    checks = []
    for n in n_values:
        if n < DECREASE_MIN_N:
            continue
        with working_precision(precision):
            errors = [truncation_error(spec, b, n, k, precision) for k in ks]
        errors = [e for e in errors if e >= floor]
        ok = all(later < earlier for earlier, later in zip(errors, errors[1:]))
        checks.append(
            CheckResult(
                name=f"error decreases with k at n={n}",
                passed=ok,
                detail=f"k in {ks[: len(errors)]}",
            )
        )
    return checks


def _check_convergence(spec: SequenceSpec, order: int, precision: int) -> List[CheckResult]:
    precision = max(precision, CONVERGENCE_PRECISION)
    b = spec.expand(max(order, CONVERGENCE_MAX_K) + 4)
    checks = []
    for k in range(1, min(order, CONVERGENCE_MAX_K) + 1):
        following = [j for j in range(k + 1, b.order + 1) if b[j] != 0]
        if not following:
            continue
        expected = following[0]
        name = f"convergence order k={k}"
        try:
            measured = convergence_order(spec, truncate(b, k), k, CONVERGENCE_N0, precision)
        except PrecisionFloorError as exc:
            checks.append(CheckResult(name=name, passed=False, detail=str(exc)))
            continue
        if measured.degenerate:
            checks.append(CheckResult(name=name, passed=False, detail="error vanished, degenerate"))
            continue
        checks.append(
            CheckResult(
                name=name,
                passed=abs(measured.exponent - expected) < CONVERGENCE_SLACK,
                detail=f"measured {measured.exponent:.3f}, expected {expected}",
            )
        )
    return checks


def verify_sequence(
    spec: SequenceSpec,
    order: int,
    n_values: Sequence[int],
    precision: int,
) -> VerifyReport:
    spec.require_evaluators()
    b = spec.expand(order)
    report = VerifyReport(sequence=spec.name)
    report.checks.extend(_check_references(spec, b))
    report.checks.extend(_check_closure(spec, b))
    if spec.name == "euler":
        report.checks.extend(_check_bernoulli(b))
    report.checks.extend(_check_printed_table(spec, b, precision))
    report.checks.extend(_check_error_decrease(spec, b, n_values, precision))
    report.checks.extend(_check_convergence(spec, order, precision))
    failed = [check.name for check in report.checks if not check.passed]
    if failed:
        logger.info("%s: %d checks failed: %s", spec.name, len(failed), ", ".join(failed))
    return report
