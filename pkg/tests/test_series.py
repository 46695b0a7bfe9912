import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from apostol_daehee import apostol as ap
from apostol_daehee import numbers as nb
from apostol_daehee.errors import IndexBeyondOrder, NonUnitConstantTerm, OrderMismatch
from apostol_daehee.exact import ELL, LAM, LogElem, RatFunc
from apostol_daehee.series import (
    Series,
    egf_coeff,
    gf_apostol_daehee,
    gf_bernstein,
    series_binom_pow,
    series_exp,
    series_inverse,
    series_log1p_lambda_t,
    series_mul,
)


def S(*c):
    return Series([Fraction(v) for v in c])


class TestArithmetic:
    def test_mul(self):
        assert series_mul(S(1, 1, 0), S(1, -1, 0)) == S(1, 0, -1)

    def test_exp_times_exp_minus(self):
        assert series_mul(series_exp(Fraction(1), 4), series_exp(Fraction(-1), 4)) == S(1, 0, 0, 0, 0)

    def test_log_times_inverse(self):
        log = series_log1p_lambda_t(4)
        quotient = log.shift_down()
        assert series_mul(quotient, series_inverse(quotient)) == Series.constant(RatFunc.const(1), 3)

    def test_order_mismatch(self):
        with pytest.raises(OrderMismatch):
            S(1, 2) + S(1, 2, 3)

    def test_index_beyond_order(self):
        with pytest.raises(IndexBeyondOrder):
            S(1, 2)[2]

    def test_truncate(self):
        assert S(1, 2, 3).truncate(1) == S(1, 2)


class TestInverse:
    def test_geometric(self):
        assert series_inverse(S(1, -1, 0, 0)) == S(1, 1, 1, 1)

    def test_linear_in_lambda(self):
        a = Series([LAM - 1, LAM**2])
        expected = Series([1 / (LAM - 1), -(LAM**2) / (LAM - 1) ** 2])
        assert series_inverse(a) == expected

    def test_non_unit(self):
        with pytest.raises(NonUnitConstantTerm):
            series_inverse(S(0, 1, 2))

    @given(
        st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=9), min_size=1, max_size=7),
        st.fractions(min_value=1, max_value=9, max_denominator=9),
    )
    @settings(max_examples=50)
    def test_mul_inverse_is_one(self, tail, c0):
        a = Series([c0] + tail)
        one = series_mul(a, series_inverse(a))
        assert one == Series.constant(Fraction(1), a.order)


class TestElementarySeries:
    def test_log1p_lambda_t(self):
        s = series_log1p_lambda_t(3)
        assert s[0] == 0 and s[1] == LAM and s[2] == -(LAM**2) / 2 and s[3] == LAM**3 / 3
        assert series_log1p_lambda_t(0) == Series([RatFunc.const(0)])

    def test_binom_pow(self):
        assert series_binom_pow(1, 2) == Series([RatFunc.const(1), LAM, RatFunc.const(0)])
        assert series_binom_pow(Fraction(1, 2), 2)[2] == -(LAM**2) / 8
        assert series_binom_pow(0, 3) == Series.constant(RatFunc.const(1), 3)

    def test_exp(self):
        assert series_exp(Fraction(0), 3) == S(1, 0, 0, 0)
        assert series_exp(Fraction(1), 3) == S(1, 1, Fraction(1, 2), Fraction(1, 6))
        assert series_exp(Fraction(1, 2), 2)[2] == Fraction(1, 8)


class TestGeneratingFunctions:
    def test_apostol_daehee_constant_term(self):
        assert egf_coeff(gf_apostol_daehee(0), 0) == ELL / (LAM - 1)

    def test_bernstein_egf(self):
        assert egf_coeff(gf_bernstein(1, Fraction(1, 2), 2), 2) == Fraction(1, 2)

    def test_constant_series(self):
        assert egf_coeff(S(1), 0) == 1

    @pytest.mark.parametrize("n", range(13))
    def test_oracle_matches_closed_form(self, n):
        assert egf_coeff(gf_apostol_daehee(n), n) == ap.ad_num(n)

    @pytest.mark.parametrize("x0", [Fraction(0), Fraction(1, 2), Fraction(1)])
    def test_bernstein_egf_matches_basis(self, x0):
        for n in range(9):
            for k in range(n + 1):
                assert egf_coeff(gf_bernstein(k, x0, n), n) == nb.bernstein(k, n, x0)
