"""Hypothesis strategies for the exact ring types."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from apostol_daehee.exact import LambdaPoly, LogElem, RatFunc, XPoly

small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
small_ints = st.integers(min_value=-9, max_value=9)


@st.composite
def lambda_polys(draw, max_degree: int = 4) -> LambdaPoly:
    return LambdaPoly(draw(st.lists(small_ints.map(Fraction), max_size=max_degree + 1)))


@st.composite
def ratfuncs(draw, max_degree: int = 3) -> RatFunc:
    num = draw(lambda_polys(max_degree))
    den = draw(lambda_polys(max_degree).filter(lambda p: not p.is_zero()))
    return RatFunc(num, den)


@st.composite
def logelems(draw) -> LogElem:
    exps = draw(st.lists(st.integers(min_value=-2, max_value=2), max_size=3, unique=True))
    return LogElem({e: draw(ratfuncs(2)) for e in exps})


@st.composite
def xpolys(draw) -> XPoly:
    return XPoly(draw(st.lists(logelems(), max_size=3)))
