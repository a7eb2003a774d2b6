"""Tests for the coefficient streams and the three triangular solvers."""
from fractions import Fraction

import pytest
from hypothesis import given, seed, settings
from hypothesis import strategies as st

from catalog import beta_integral_spec, custom_spec, euler_spec, napier_spec, wallis_spec
from catalog.beta_integral import DERIVED_B4
from errors import InsufficientCoefficientsError, NormalizationError
from numerics.verify import closure_residual
from recurrences import (
    FormulaStream,
    ListStream,
    additive_expansion,
    check_normalization,
    exp_log_square_series,
    required_terms,
    solve,
    solve_difference,
    solve_product,
    solve_ratio,
)
from series import (
    TruncatedSeries,
    bernoulli,
    series_exp,
    series_mul,
    series_sub,
    shift_backward,
    shift_forward,
)
from tests.strategies import valid_streams


def fractions(*values):
    return [Fraction(v) for v in values]


class TestStreams:
    def test_list_stream_past_end(self):
        stream = ListStream("product", [1, Fraction(-1, 2)])
        assert stream(1) == Fraction(-1, 2)
        with pytest.raises(InsufficientCoefficientsError) as excinfo:
            stream(2)
        assert "a_2 required, only a_0..a_1 provided" in str(excinfo.value)

    def test_negative_index_rejected(self):
        with pytest.raises(ValueError):
            FormulaStream("ratio", lambda k: 1)(-1)

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError):
            ListStream("quotient", [1])

    def test_formula_stream_is_memoized(self):
        calls = []

        def formula(k):
            calls.append(k)
            return k

        stream = FormulaStream("difference", formula)
        assert stream(5) == stream(5) == 5
        assert calls == [5]

    def test_from_series(self):
        stream = ListStream.from_series("product", TruncatedSeries.of([1, Fraction(-1, 2)]))
        assert len(stream) == 2
        assert stream.series(1).coeffs == (1, Fraction(-1, 2))

    def test_required_terms(self):
        assert required_terms("product", 4) == 5
        assert required_terms("ratio", 4) == 6
        assert required_terms("difference", 4) == 6


class TestNormalization:
    @pytest.mark.parametrize(
        "kind, coeffs, message",
        [
            ("difference", [0, 1, 0], "a_1 = 0, got 1"),
            ("difference", [1, 0, 0], "a_0 = 0, got 1"),
            ("product", [2, 0], "a_0 = 1, got 2"),
            ("ratio", [1, Fraction(1, 2), 0], "a_1 = 0, got 1/2"),
        ],
    )
    def test_violations(self, kind, coeffs, message):
        with pytest.raises(NormalizationError) as excinfo:
            check_normalization(ListStream(kind, coeffs))
        assert message in str(excinfo.value)

    def test_solver_checks_before_solving(self):
        with pytest.raises(NormalizationError):
            solve_ratio(ListStream("ratio", [1, 1, 0]), 1)

    def test_solver_rejects_other_kind(self):
        with pytest.raises(NormalizationError):
            solve_product(ListStream("ratio", [1, 0, 0]), 1)


class TestEuler:
    def test_coefficients(self):
        b = euler_spec().expand(10)
        assert b.coeffs[1:] == tuple(
            fractions("1/2", "-1/12", 0, "1/120", 0, "-1/252", 0, "1/240", 0, "-1/132")
        )

    def test_bernoulli_identity(self):
        b = euler_spec().expand(20)
        for j in range(2, 21):
            assert -j * b[j] == bernoulli(j)

    def test_printed_sign_does_not_close(self):
        stream = euler_spec().a_stream
        wrong = solve_difference(stream, 2, printed_sign=True)
        assert wrong[2] == Fraction(-7, 12)
        assert solve_difference(stream, 2)[2] == Fraction(-1, 12)

    def test_additive_expansion_drops_constant(self):
        t = additive_expansion(euler_spec().a_stream, 4)
        assert t.coeffs == tuple(fractions(0, "1/2", "-1/12", 0, "1/120"))
        assert euler_spec().expand(4) == t


class TestWallis:
    def test_coefficients(self):
        b = wallis_spec().expand(5)
        assert b.coeffs == tuple(fractions(1, "-1/4", "1/32", "5/128", "-21/2048", "-399/8192"))


class TestNapier:
    def test_s_coefficients(self):
        assert exp_log_square_series(3).coeffs == tuple(fractions(1, -1, "1/2", "-2/3"))

    def test_s_matches_exponential_of_log(self):
        # n ln(1 - 1/n^2) = -sum_{k>=1} n^{1-2k} / k
        m = 12
        exponent = [Fraction(0)] * (m + 1)
        for k in range(1, m // 2 + 2):
            if 2 * k - 1 <= m:
                exponent[2 * k - 1] = Fraction(-1, k)
        assert exp_log_square_series(m) == series_exp(TruncatedSeries(tuple(exponent)))

    def test_a_coefficients(self):
        assert napier_spec().a_stream.series(3).coeffs == tuple(fractions(1, 0, "1/2", "-1/6"))

    def test_coefficients(self):
        b = napier_spec().expand(6)
        assert b.coeffs == tuple(
            fractions(1, "-1/2", "11/24", "-7/16", "2447/5760", "-959/2304", "238043/580608")
        )


class TestBetaIntegral:
    def test_a_coefficients(self):
        a = beta_integral_spec().a_stream.series(2)
        assert a.coeffs == tuple(fractions(1, 0, "-3/8"))

    def test_coefficients(self):
        b = beta_integral_spec().expand(4)
        assert b.coeffs[:4] == tuple(fractions(1, "3/8", "25/128", "105/1024"))
        assert b[4] == Fraction(DERIVED_B4) == Fraction(1659, 32768)
        assert b[4] != Fraction(302, 5965)


class TestClosure:
    @pytest.mark.parametrize("factory", [euler_spec, wallis_spec, napier_spec, beta_integral_spec])
    def test_builtins_close(self, factory):
        spec = factory()
        b = spec.expand(12)
        assert all(c == 0 for c in closure_residual(spec, b))

    @seed(1)
    @given(valid_streams("difference"))
    @settings(max_examples=200, deadline=None)
    def test_random_difference(self, drawn):
        m, coeffs = drawn
        b = solve_difference(ListStream("difference", coeffs), m)
        a = TruncatedSeries(tuple(coeffs[: m + 1]))
        assert series_sub(b, shift_forward(b)) == a

    @seed(1)
    @given(valid_streams("product"))
    @settings(max_examples=200, deadline=None)
    def test_random_product(self, drawn):
        m, coeffs = drawn
        b = solve_product(ListStream("product", coeffs), m)
        a = TruncatedSeries(tuple(coeffs[: m + 1]))
        assert series_mul(b, shift_backward(b)) == a

    @seed(1)
    @given(valid_streams("ratio"))
    @settings(max_examples=200, deadline=None)
    def test_random_ratio(self, drawn):
        m, coeffs = drawn
        b = solve_ratio(ListStream("ratio", coeffs), m)
        a = TruncatedSeries(tuple(coeffs[: m + 1]))
        assert series_mul(shift_backward(b), a) == b

    @seed(1)
    @given(valid_streams("ratio"))
    @settings(max_examples=50, deadline=None)
    def test_solve_is_deterministic(self, drawn):
        m, coeffs = drawn
        first = solve(ListStream("ratio", coeffs), m)
        second = solve(ListStream("ratio", list(coeffs)), m)
        assert first.coeffs == second.coeffs


class TestPrefixStability:
    @pytest.mark.parametrize("factory", [euler_spec, wallis_spec, napier_spec, beta_integral_spec])
    def test_builtins(self, factory):
        spec = factory()
        longer = spec.expand(12)
        for m in range(12):
            assert longer.coeffs[: m + 1] == spec.expand(m).coeffs

    @pytest.mark.parametrize("kind", ["difference", "product", "ratio"])
    @seed(1)
    @given(data=st.data())
    @settings(max_examples=100, deadline=None)
    def test_random_streams(self, kind, data):
        longer_order, coeffs = data.draw(valid_streams(kind))
        m = data.draw(st.integers(min_value=0, max_value=longer_order))
        stream = ListStream(kind, coeffs)
        assert solve(stream, longer_order).coeffs[: m + 1] == solve(stream, m).coeffs


class TestSolveEdges:
    def test_order_zero(self):
        assert solve(ListStream("product", [1]), 0).coeffs == (Fraction(1),)

    def test_negative_order_rejected(self):
        with pytest.raises(ValueError):
            solve(ListStream("product", [1]), -1)

    def test_short_list_is_an_input_error(self):
        with pytest.raises(InsufficientCoefficientsError):
            solve(ListStream("ratio", [1, 0, Fraction(-3, 8)]), 2)

    def test_custom_difference(self):
        spec = custom_spec("difference", fractions(0, 0, "1/2", "-2/3"))
        assert spec.expand(2).coeffs == tuple(fractions(1, "1/2", "-1/12"))
