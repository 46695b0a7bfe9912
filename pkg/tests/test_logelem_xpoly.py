import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from apostol_daehee import apostol as ap
from apostol_daehee.errors import DomainError, PoleAtLambda, ZeroDivisor
from apostol_daehee.exact import (
    ELL,
    LAM,
    Z,
    EvalExact,
    LogElem,
    RatFunc,
    XPoly,
    eval_exact_lambda,
    eval_float,
    eval_float_xpoly,
    log_arith,
    log_div_monomial,
    xpoly_eval_x,
    xpoly_integrate,
)
from strategies import logelems, ratfuncs, xpolys

ONE = RatFunc.const(1)


class TestLogElem:
    def test_exponent_cancellation(self):
        assert log_arith(ELL, LogElem.ell(-1), "mul") == 1

    def test_term_cancellation(self):
        a = LogElem({0: 1 / (LAM - 1), 1: 1})
        assert log_arith(a, -ELL, "add") == LogElem.scalar(1 / (LAM - 1))

    @given(ratfuncs(2), ratfuncs(2), ratfuncs(2), ratfuncs(2))
    @settings(max_examples=25)
    def test_distributivity_example(self, a, b, c, d):
        left = LogElem({0: a, 1: b}) * LogElem({0: c, 1: d})
        assert left == LogElem({0: a * c, 1: a * d + b * c, 2: b * d})

    def test_zero_coefficients_are_dropped(self):
        a = LogElem({0: 0, 3: RatFunc.const(0), 1: LAM})
        assert a.exponents() == [1]

    def test_div_monomial_examples(self):
        assert log_div_monomial(ELL**2, 2, 1) == 1
        assert log_div_monomial(ELL * LAM, 0, LAM) == ELL
        a = ELL * (LAM - 1) + ELL**2
        assert log_div_monomial(a, 1, LAM - 1) == LogElem({0: 1, 1: 1 / (LAM - 1)})

    def test_div_monomial_by_zero(self):
        with pytest.raises(ZeroDivisor):
            log_div_monomial(ELL, 1, 0)

    def test_unknown_operation(self):
        with pytest.raises(ValueError):
            log_arith(ELL, ELL, "div")

    @given(logelems(), logelems(), logelems())
    @settings(max_examples=200, deadline=None)
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == 0

    @given(logelems())
    def test_canonicalization_is_idempotent(self, a):
        assert LogElem(a.terms) == a
        assert all(not c.is_zero() for c in a.terms.values())


class TestEvaluation:
    def test_exact_examples(self):
        assert eval_exact_lambda(LogElem.scalar(2 / (LAM - 1)), 3) == EvalExact({0: Fraction(1)})
        assert eval_exact_lambda(ELL / (LAM - 1), 2) == EvalExact({1: Fraction(1)})

    def test_exact_pole(self):
        with pytest.raises(PoleAtLambda):
            eval_exact_lambda(ELL / (LAM - 1), 1)

    def test_exact_negative_ell_power_at_one(self):
        with pytest.raises(PoleAtLambda):
            eval_exact_lambda(LogElem.ell(-1), 1)

    def test_float_examples(self):
        assert eval_float(ELL / (LAM - 1), math.e) == pytest.approx(1 / (math.e - 1), rel=1e-15)
        assert eval_float(LogElem.scalar(1), 3.7) == 1.0

    @pytest.mark.parametrize("lam0", [1.0, 0.0, -2.0])
    def test_float_domain(self, lam0):
        with pytest.raises(DomainError):
            eval_float(ELL, lam0)

    @given(logelems(), st.fractions(min_value=Fraction(1, 10), max_value=9, max_denominator=16))
    @settings(max_examples=100, deadline=None)
    def test_float_agrees_with_exact(self, a, lam0):
        assume(lam0 != 1)
        try:
            exact = eval_exact_lambda(a, lam0)
        except PoleAtLambda:
            assume(False)
        mapped = exact.to_float(lam0)
        direct = eval_float(a, float(lam0))
        # compare against the size of the individual terms, which bounds the rounding
        scale = sum(abs(float(c)) * abs(math.log(lam0)) ** e for e, c in exact.terms.items())
        assert abs(mapped - direct) <= 1e-12 * max(abs(mapped), scale)


class TestXPoly:
    def test_eval_ad_poly_at_zero(self):
        expected = LogElem({0: LAM / (LAM - 1), 1: -(LAM**2) / (LAM - 1) ** 2})
        assert xpoly_eval_x(ap.ad_poly(1), 0) == expected

    def test_eval_zero_polynomial(self):
        assert xpoly_eval_x(XPoly(), Fraction(7, 3)) == 0

    def test_eval_simsek_poly_at_one(self):
        expected = LogElem.scalar(2 * LAM / (LAM - 1) - 2 * LAM**2 / (LAM - 1) ** 2)
        assert xpoly_eval_x(ap.y_poly(1), 1) == expected

    def test_integrate_examples(self):
        d0 = XPoly.constant(ELL / (LAM - 1))
        assert xpoly_integrate(d0, 0, 1) == ELL / (LAM - 1)
        assert xpoly_integrate(XPoly.x(), 0, 1) == Fraction(1, 2)
        expected = LogElem({0: LAM / (LAM - 1), 1: LAM / (2 * (LAM - 1)) - LAM**2 / (LAM - 1) ** 2})
        assert xpoly_integrate(ap.ad_poly(1), 0, 1) == expected

    def test_integrate_to_z(self):
        result = xpoly_integrate(XPoly.x(), 1, Z)
        assert result == XPoly.x() ** 2 * Fraction(1, 2) - Fraction(1, 2)

    def test_degree_and_leading(self):
        assert XPoly([ELL, 0, 0]).degree == 0
        assert XPoly().degree == -1

    @given(xpolys(), xpolys(), xpolys())
    @settings(max_examples=50, deadline=None)
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(xpolys(), st.fractions(min_value=-5, max_value=5, max_denominator=6))
    @settings(max_examples=50, deadline=None)
    def test_integral_to_z_matches_fixed_upper_limit(self, p, lower):
        fixed = xpoly_integrate(p, lower, 1)
        symbolic = xpoly_integrate(p, lower, Z)
        assert xpoly_eval_x(symbolic, 1) == fixed

    @given(xpolys())
    def test_canonicalization_is_idempotent(self, p):
        assert XPoly(p.coeffs) == p
        assert p.is_zero() or not p.coeff(p.degree).is_zero()

    def test_eval_float_xpoly(self):
        p = ap.ad_poly(2)
        x0, lam0 = Fraction(1, 3), 2.5
        assert eval_float_xpoly(p, x0, lam0) == pytest.approx(eval_float(xpoly_eval_x(p, x0), lam0), rel=1e-14)
