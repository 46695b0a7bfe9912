"""Polynomials in x whose coefficients live in the ell-ring."""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

from .logelem import LogElem, _checked_log, eval_exact_lambda
from .ratfunc import RatFunc

Coeff = Union[LogElem, RatFunc, Rational, int]

# Marker for a symbolic upper integration limit.
Z = "z"


def _as_logelem(c: Coeff) -> LogElem:
    if isinstance(c, LogElem):
        return c
    return LogElem.scalar(c)


def _trim(coeffs: list[LogElem]) -> tuple[LogElem, ...]:
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return tuple(coeffs)


class XPoly:
    """Dense polynomial ``sum_i coeffs[i] * x**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coeff] = ()):
        object.__setattr__(self, "coeffs", _trim([_as_logelem(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("XPoly is immutable")

    @classmethod
    def x(cls) -> XPoly:
        return cls((0, 1))

    @classmethod
    def constant(cls, c: Coeff) -> XPoly:
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> LogElem:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return LogElem()

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, XPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (LogElem, RatFunc, int, Rational)):
            return self == XPoly((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"XPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        from ..render import xpoly_text

        return xpoly_text(self)

    @staticmethod
    def _coerce(other) -> XPoly | None:
        if isinstance(other, XPoly):
            return other
        if isinstance(other, (LogElem, RatFunc, int, Rational)):
            return XPoly((other,))
        return None

    def __neg__(self) -> XPoly:
        return XPoly(-c for c in self.coeffs)

    def __add__(self, other) -> XPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return XPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> XPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> XPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> XPoly:
        if isinstance(other, (LogElem, RatFunc, int, Rational)):
            return XPoly(c * other for c in self.coeffs)
        if not isinstance(other, XPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return XPoly()
        out = [LogElem()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return XPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> XPoly:
        result = XPoly((1,))
        for _ in range(e):
            result = result * self
        return result

    # -- calculus and evaluation ------------------------------------------

    def __call__(self, x0: Rational | int | XPoly):
        """Horner evaluation at a rational point (or composition with an XPoly)."""
        acc = XPoly() if isinstance(x0, XPoly) else LogElem()
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def antiderivative(self) -> XPoly:
        """Antiderivative with zero constant term."""
        return XPoly([0] + [c * Fraction(1, i + 1) for i, c in enumerate(self.coeffs)])

    def eval_float(self, x0: Rational | float, lam0: float) -> float:
        return eval_float_xpoly(self, x0, lam0)


def xpoly_eval_x(p: XPoly, x0: Rational | int) -> LogElem:
    return p(Fraction(x0))


def xpoly_integrate(p: XPoly, lower: Rational | int, upper) -> LogElem | XPoly:
    """Exact integral in x from ``lower`` to ``upper``.

    ``upper`` is either a rational number or :data:`Z`; in the latter case the
    result is a polynomial in the new variable z.
    """
    anti = p.antiderivative()
    at_lower = anti(Fraction(lower))
    if isinstance(upper, str):
        if upper != Z:
            raise ValueError(f"symbolic upper limit must be {Z!r}")
        return anti - at_lower
    return anti(Fraction(upper)) - at_lower


def eval_float_xpoly(p: XPoly, x0: Rational | float, lam0: float) -> float:
    """Numeric value at ``x = x0``, ``lambda = lam0``, ``ell = ln(lam0)``.

    Both ``x0`` and ``lam0`` are taken at their exact binary values; every
    ell-coefficient is summed exactly and rounded once.
    """
    lam0 = float(lam0)
    ell = _checked_log(lam0)
    lam_q = Fraction(lam0)
    x_q = Fraction(x0)
    acc: dict[int, Fraction] = {}
    for c in reversed(p.coeffs):
        acc = {e: v * x_q for e, v in acc.items()}
        for e, v in eval_exact_lambda(c, lam_q).terms.items():
            acc[e] = acc.get(e, Fraction(0)) + v
    return math.fsum(float(v) * ell**e for e, v in acc.items() if v)
