"""Tests for estimates, error tables, convergence measurement and verify."""
import json
from decimal import Decimal
from unittest.mock import patch

import mpmath
import pytest

from catalog import (
    SequenceSpec,
    beta_integral_spec,
    custom_spec,
    euler_spec,
    list_specs,
    napier_spec,
    wallis_spec,
)
from errors import ExpansionOnlyError, OrderMismatchError, PrecisionFloorError
from numerics.bigfloat import from_rational, serialize, working_precision
from numerics.convergence import convergence_order
from numerics.emit import display_round, render_expansion, render_list, render_report, render_table
from numerics.estimate import estimate, truncation_error
from numerics.tables import error_table
from numerics.verify import verify_sequence
from recurrences import ListStream
from series import TruncatedSeries, evaluate, truncate

PRECISION = 50
TOLERANCE = Decimal("5e-10")

WALLIS_N11 = {
    1: "0.235103718",
    2: "0.235165849",
    3: "0.23517291",
    4: "0.235172741",
    5: "0.235172669",
}
BETA_N10 = {
    0: "0.280249561",
    1: "0.290758919",
    2: "0.291306282",
    3: "0.291335018",
}


def _unit_x(n, precision):
    return mpmath.mpf(n + 1) / n


def _unit_y(n, precision):
    return mpmath.mpf(1)


def unit_spec():
    """x_n = (n+1)/n, y_n = 1: the order-1 expansion is exact."""
    return SequenceSpec(
        name="unit",
        kind="product",
        a_stream=ListStream("product", [1, 2, 1]),
        eval_x=_unit_x,
        eval_y=_unit_y,
    )


class TestBigFloat:
    def test_precision_floor(self):
        with pytest.raises(ValueError):
            with working_precision(9):
                pass

    def test_serialize_is_fixed_point(self):
        with working_precision(20):
            text = serialize(from_rational(1) / 10**15, 20)
        assert "e" not in text
        assert text.startswith("0.000000000000001")


class TestEstimate:
    def test_order_checks(self):
        spec = wallis_spec()
        b = spec.expand(2)
        with pytest.raises(OrderMismatchError):
            estimate(spec, b, 11, 3, PRECISION)
        with pytest.raises(OrderMismatchError):
            estimate(spec, b, 11, -1, PRECISION)

    def test_euler_additive(self):
        spec = euler_spec()
        b = spec.expand(4)
        err = truncation_error(spec, b, 10, 4, PRECISION)
        # next term is -1/(252 n^6)
        assert 3e-9 < err < 5e-9

    def test_matches_series_evaluation(self):
        spec = wallis_spec()
        b = spec.expand(5)
        for k in range(6):
            with working_precision(PRECISION):
                expected = spec.eval_y(11, PRECISION) * evaluate(truncate(b, k), 11, PRECISION)
                assert abs(estimate(spec, b, 11, k, PRECISION) - expected) < mpmath.mpf(10) ** -PRECISION

    def test_additive_uses_tail(self):
        spec = euler_spec()
        t = spec.expand(4)
        assert t[0] == 0
        with working_precision(PRECISION):
            expected = mpmath.euler + evaluate(t, 10, PRECISION)
            assert abs(estimate(spec, t, 10, 4, PRECISION) - expected) < mpmath.mpf(10) ** -PRECISION

    def test_expansion_only(self):
        spec = custom_spec("product", [1, 0])
        with pytest.raises(ExpansionOnlyError):
            truncation_error(spec, spec.expand(1), 10, 1, PRECISION)
        with pytest.raises(ExpansionOnlyError):
            error_table(spec, spec.expand(1), [10], [0], PRECISION)


class TestPrintedTables:
    def test_wallis_n11(self):
        spec = wallis_spec()
        table = error_table(spec, spec.expand(5), [11], list(WALLIS_N11), PRECISION)
        for row in table.rows:
            assert abs(Decimal(row.estimate) - Decimal(WALLIS_N11[row.k])) <= TOLERANCE
            assert abs(Decimal(row.exact) - Decimal("0.235172672")) <= TOLERANCE

    def test_beta_n10(self):
        spec = beta_integral_spec()
        b = spec.expand(4)
        table = error_table(spec, b, [10], [0, 1, 2, 3, 4], PRECISION)
        rows = {row.k: row for row in table.rows}
        for k, printed in BETA_N10.items():
            assert abs(Decimal(rows[k].estimate) - Decimal(printed)) <= TOLERANCE
        assert abs(Decimal(rows[0].exact) - Decimal("0.291336507")) <= TOLERANCE
        # printed 0.291336437 was computed with the misprinted b_4
        assert abs(Decimal(rows[4].estimate) - Decimal("0.291336437")) <= Decimal("1e-6")

    def test_rows_sorted(self):
        spec = wallis_spec()
        table = error_table(spec, spec.expand(3), [20, 11], [2, 0, 1], PRECISION)
        assert [(r.n, r.k) for r in table.rows] == [(11, 0), (11, 1), (11, 2), (20, 0), (20, 1), (20, 2)]


class TestConvergence:
    @pytest.mark.parametrize("factory", [wallis_spec, beta_integral_spec])
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_multiplicative_orders(self, factory, k):
        spec = factory()
        measured = convergence_order(spec, spec.expand(k), k, 100, 60)
        assert abs(measured.exponent - (k + 1)) < 0.35

    def test_euler_skips_zero_coefficient(self):
        spec = euler_spec()
        measured = convergence_order(spec, spec.expand(2), 2, 100, 60)
        assert abs(measured.exponent - 4) < 0.35

    def test_beta_fourth_order(self):
        spec = beta_integral_spec()
        measured = convergence_order(spec, spec.expand(4), 4, 100, 60)
        assert 4.6 <= measured.exponent <= 5.4

    def test_degenerate(self):
        spec = unit_spec()
        measured = convergence_order(spec, TruncatedSeries.of([1, 1]), 1, 100, 30)
        assert measured.degenerate
        assert measured.exponent is None

    def test_precision_floor(self, caplog):
        spec = wallis_spec()
        with pytest.raises(PrecisionFloorError):
            convergence_order(spec, spec.expand(5), 5, 100, 10)
        assert "below 1e-10" in caplog.text


class TestVerify:
    @pytest.mark.parametrize(
        "factory, order, n_values",
        [
            (wallis_spec, 5, [11, 100]),
            (beta_integral_spec, 4, [10, 100]),
            (euler_spec, 10, [100]),
            (napier_spec, 6, [100]),
        ],
    )
    def test_builtins_pass(self, factory, order, n_values):
        report = verify_sequence(factory(), order, n_values, PRECISION)
        failed = [(c.name, c.detail) for c in report.checks if not c.passed]
        assert not failed
        assert report.passed

    def test_beta_error_decreases_at_large_n(self):
        report = verify_sequence(beta_integral_spec(), 8, [50, 100], PRECISION)
        decrease = [c for c in report.checks if c.name.startswith("error decreases")]
        assert [c.name for c in decrease] == ["error decreases with k at n=50", "error decreases with k at n=100"]
        assert all(c.passed for c in decrease)

    def test_beta_errors_strictly_decrease(self):
        spec = beta_integral_spec()
        b = spec.expand(8)
        errors = [truncation_error(spec, b, 100, k, PRECISION) for k in range(1, 9)]
        assert all(later < earlier for earlier, later in zip(errors, errors[1:]))
        assert 1e-5 < errors[0] < 1e-4

    def test_error_decrease_is_checked(self):
        report = verify_sequence(wallis_spec(), 5, [100], PRECISION)
        assert any(c.name == "error decreases with k at n=100" for c in report.checks)

    def test_floor_reported_as_failure(self):
        with patch("numerics.verify.convergence_order", side_effect=PrecisionFloorError("floor")):
            report = verify_sequence(wallis_spec(), 3, [11], PRECISION)
        assert not report.passed
        assert any(c.detail == "floor" for c in report.checks)

    def test_expansion_only_rejected(self):
        with pytest.raises(ExpansionOnlyError):
            verify_sequence(custom_spec("product", [1, 0, 0]), 1, [10], PRECISION)


class TestEmit:
    def test_display_round_half_even(self):
        assert display_round("0.2351729095") == "0.235172910"
        assert display_round("0.1234567885") == "0.123456788"
        assert display_round("1") == "1.000000000"

    def test_expansion(self):
        spec = euler_spec()
        assert render_expansion(spec, spec.expand(2)) == "0: (limit γ)\n1: 1/2\n2: -1/12\n"
        spec = wallis_spec()
        assert render_expansion(spec, spec.expand(1)) == "0: 1\n1: -1/4\n"

    def test_table_formats(self):
        spec = wallis_spec()
        table = error_table(spec, spec.expand(2), [11], [1, 2], PRECISION)
        csv_text = render_table(table, "csv")
        assert csv_text.splitlines()[0] == "n,k,estimate,exact,abs_error"
        assert len(csv_text.splitlines()) == 3
        payload = json.loads(render_table(table, "json"))
        assert payload["sequence"] == "wallis"
        assert [row["k"] for row in payload["rows"]] == [1, 2]
        plain = render_table(table, "plain").splitlines()
        assert "0.235103718" in plain[2]

    def test_plain_table_puts_k_across_columns(self):
        spec = wallis_spec()
        table = error_table(spec, spec.expand(5), [11, 20], [1, 2, 3, 4, 5], PRECISION)
        lines = render_table(table, "plain").splitlines()
        assert lines[1].split() == ["n", "exact", "k=1", "k=2", "k=3", "k=4", "k=5"]
        n11 = lines[2].split()
        assert n11[0] == "11"
        assert abs(Decimal(n11[1]) - Decimal("0.235172672")) <= Decimal("1e-9")
        for k, cell in enumerate(n11[2:], start=1):
            assert abs(Decimal(cell) - Decimal(WALLIS_N11[k])) <= Decimal("1e-9")
        assert lines[3].split()[0] == "20"
        assert lines[5] == "# abs_error"
        assert lines[6].split() == ["n", "k=1", "k=2", "k=3", "k=4", "k=5"]
        assert len(lines) == 9

    def test_expansion_formats(self):
        spec = wallis_spec()
        assert render_expansion(spec, spec.expand(1), "csv") == "k,coefficient\n0,1\n1,-1/4\n"
        spec = euler_spec()
        assert render_expansion(spec, spec.expand(1), "csv").splitlines()[1] == "0,(limit γ)"
        payload = json.loads(render_expansion(spec, spec.expand(2), "json"))
        assert payload == {
            "sequence": "euler",
            "order": 2,
            "limit_constant": "gamma",
            "coefficients": ["0", "1/2", "-1/12"],
        }

    def test_list(self):
        assert render_list(list_specs(), "plain").splitlines() == [
            "beta_integral(ratio)",
            "euler(difference)",
            "napier(ratio)",
            "wallis(product)",
        ]
        assert json.loads(render_list(list_specs(), "json"))[1] == {"name": "euler", "kind": "difference"}

    def test_report(self):
        report = verify_sequence(wallis_spec(), 2, [11], PRECISION)
        text = render_report(report)
        assert text.splitlines()[-1].startswith("wallis: ")
        assert text.splitlines()[-1].endswith("OK")
        assert all(line.startswith(("PASS ", "FAIL ")) for line in text.splitlines()[:-1])
