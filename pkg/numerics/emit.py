"""Text renderings of tables, expansions, listings and verify reports."""
import csv
import io
import json
from decimal import ROUND_HALF_EVEN, Decimal
from typing import Dict, Iterable, List

import mpmath

from catalog.spec import SequenceSpec
from schemas import ErrorRow, ErrorTable, Expansion, OutputFormat, SequenceSummary, VerifyReport
from series.rational import format_rational
from series.truncated import TruncatedSeries
from settings import DISPLAY_DECIMALS

CSV_HEADER = ["n", "k", "estimate", "exact", "abs_error"]
EXPANSION_CSV_HEADER = ["k", "coefficient"]

LIMIT_SYMBOLS = {"gamma": "γ", "e": "e"}

COLUMN_WIDTH = 14


def display_round(value: str, decimals: int = DISPLAY_DECIMALS) -> str:
    """Round a full-precision decimal string half-to-even at `decimals` places."""
    quantum = Decimal(1).scaleb(-decimals)
    return f"{Decimal(value).quantize(quantum, rounding=ROUND_HALF_EVEN):f}"


def _expansion_cells(spec: SequenceSpec, b: TruncatedSeries) -> List[str]:
    cells = [format_rational(c) for c in b]
    if spec.additive:
        symbol = LIMIT_SYMBOLS.get(spec.limit_constant, "L")
        cells[0] = f"(limit {symbol})"
    return cells


def render_expansion(spec: SequenceSpec, b: TruncatedSeries, fmt: OutputFormat = "plain") -> str:
    """Return the coefficients as "k: p/q" lines, csv rows or a json document.

    The constant of an additive expansion is shown as the symbolic limit in
    plain and csv output; json carries it as `limit_constant`.
    """
    if fmt == "json":
        expansion = Expansion(
            sequence=spec.name,
            order=b.order,
            limit_constant=spec.limit_constant if spec.additive else "none",
            coefficients=[format_rational(c) for c in b],
        )
        return expansion.model_dump_json(indent=2) + "\n"
    cells = _expansion_cells(spec, b)
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(EXPANSION_CSV_HEADER)
        writer.writerows(enumerate(cells))
        return buffer.getvalue()
    return "".join(f"{k}: {cell}\n" for k, cell in enumerate(cells))


def _render_plain_table(table: ErrorTable) -> str:
    # one row per n, one column per truncation order k
    ks = sorted({row.k for row in table.rows})
    grid: Dict[int, Dict[int, ErrorRow]] = {}
    for row in table.rows:
        grid.setdefault(row.n, {})[row.k] = row
    k_header = "".join(f" {'k=' + str(k):>{COLUMN_WIDTH}}" for k in ks)

    lines = [
        f"# {table.sequence} (precision {table.precision})",
        f"{'n':>8} {'exact':>{COLUMN_WIDTH}}{k_header}",
    ]
    for n, cells in grid.items():
        exact = display_round(next(iter(cells.values())).exact)
        estimates = "".join(f" {display_round(cells[k].estimate):>{COLUMN_WIDTH}}" for k in ks)
        lines.append(f"{n:>8} {exact:>{COLUMN_WIDTH}}{estimates}")

    lines += ["", "# abs_error", f"{'n':>8}{k_header}"]
    for n, cells in grid.items():
        errors = "".join(
            f" {mpmath.nstr(mpmath.mpf(cells[k].abs_error), 3):>{COLUMN_WIDTH}}" for k in ks
        )
        lines.append(f"{n:>8}{errors}")
    return "\n".join(lines) + "\n"


def render_table(table: ErrorTable, fmt: OutputFormat) -> str:
    """Return the table as json, long-form csv, or plain text with k across the columns."""
    if fmt == "json":
        return table.model_dump_json(indent=2) + "\n"
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for row in table.rows:
            writer.writerow([row.n, row.k, row.estimate, row.exact, row.abs_error])
        return buffer.getvalue()
    return _render_plain_table(table)


def render_list(specs: Iterable[SequenceSpec], fmt: OutputFormat) -> str:
    summaries: List[SequenceSummary] = [SequenceSummary(name=s.name, kind=s.kind) for s in specs]
    if fmt == "json":
        return json.dumps([s.model_dump() for s in summaries], indent=2) + "\n"
    if fmt == "csv":
        return "name,kind\n" + "".join(f"{s.name},{s.kind}\n" for s in summaries)
    return "".join(f"{s.name}({s.kind})\n" for s in summaries)


def render_report(report: VerifyReport) -> str:
    lines = [
        f"{'PASS' if check.passed else 'FAIL'} {check.name}: {check.detail}"
        for check in report.checks
    ]
    passed = sum(check.passed for check in report.checks)
    verdict = "OK" if report.passed else "FAILED"
    lines.append(f"{report.sequence}: {passed}/{len(report.checks)} checks passed, {verdict}")
    return "\n".join(lines) + "\n"
