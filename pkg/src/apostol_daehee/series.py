"""Truncated formal power series in t and generating-function oracles.

Series coefficients may be any exact commutative-ring scalar used in this
package (``Fraction``, :class:`RatFunc`, :class:`LogElem`).  Every generating
function below is assembled only from series arithmetic, never from the
closed forms in :mod:`apostol_daehee.numbers` or :mod:`apostol_daehee.apostol`,
so the two routes can be compared against each other.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Any, Callable, Sequence

from .errors import IndexBeyondOrder, NonUnitConstantTerm, OrderMismatch
from .exact import LAM, LAM_MINUS_ONE, LogElem, RatFunc

Scalar = Any


def _is_zero(c: Scalar) -> bool:
    return c == 0


def _inverse(c: Scalar) -> Scalar:
    if isinstance(c, LogElem):
        if not c.is_unit():
            raise NonUnitConstantTerm("constant term is not a unit of the ell-ring")
        return c.inverse()
    if _is_zero(c):
        raise NonUnitConstantTerm("constant term is zero")
    if isinstance(c, RatFunc):
        return c.inverse()
    return 1 / Fraction(c)


class Series:
    """``sum_{k=0}^{order} coeffs[k] * t**k``; terms beyond ``order`` are unknown."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Scalar]):
        if len(coeffs) == 0:
            raise ValueError("a series needs at least its constant term")
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def constant(cls, c: Scalar, order: int) -> Series:
        return cls([c] + [c * 0] * order)

    @classmethod
    def t(cls, order: int, one: Scalar = Fraction(1)) -> Series:
        coeffs = [one * 0] * (order + 1)
        if order >= 1:
            coeffs[1] = one
        return cls(coeffs)

    def __getitem__(self, k: int) -> Scalar:
        if not 0 <= k <= self.order:
            raise IndexBeyondOrder(f"coefficient t^{k} is beyond order {self.order}")
        return self.coeffs[k]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __repr__(self) -> str:
        return f"Series({list(self.coeffs)!r})"

    def map(self, f: Callable[[Scalar], Scalar]) -> Series:
        return Series([f(c) for c in self.coeffs])

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise OrderMismatch(f"cannot extend a series of order {self.order} to {order}")
        return Series(self.coeffs[: order + 1])

    def _check(self, other: Series) -> None:
        if not isinstance(other, Series):
            raise TypeError("expected a Series")
        if other.order != self.order:
            raise OrderMismatch(f"orders differ: {self.order} vs {other.order}")

    def __add__(self, other) -> Series:
        if not isinstance(other, Series):
            return Series([self.coeffs[0] + other] + list(self.coeffs[1:]))
        self._check(other)
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> Series:
        return Series([-c for c in self.coeffs])

    def __sub__(self, other) -> Series:
        return self + (-other)

    def __rsub__(self, other) -> Series:
        return (-self) + other

    def __mul__(self, other) -> Series:
        if not isinstance(other, Series):
            return Series([c * other for c in self.coeffs])
        return series_mul(self, other)

    def __rmul__(self, other) -> Series:
        return Series([other * c for c in self.coeffs])

    def __pow__(self, k: int) -> Series:
        result = Series.constant(self.coeffs[0] * 0 + 1, self.order)
        for _ in range(k):
            result = result * self
        return result

    def shift_down(self) -> Series:
        """Divide by t; the constant term must vanish.  Order drops by one."""
        if not _is_zero(self.coeffs[0]):
            raise NonUnitConstantTerm("series is not divisible by t")
        if self.order == 0:
            raise OrderMismatch("cannot divide an order-0 series by t")
        return Series(self.coeffs[1:])

    def egf(self, n: int) -> Scalar:
        return egf_coeff(self, n)


def series_mul(a: Series, b: Series) -> Series:
    """Cauchy product truncated at the common order."""
    a._check(b)
    out = []
    for n in range(a.order + 1):
        acc = a.coeffs[0] * b.coeffs[n]
        for i in range(1, n + 1):
            acc = acc + a.coeffs[i] * b.coeffs[n - i]
        out.append(acc)
    return Series(out)


def series_inverse(a: Series) -> Series:
    """Multiplicative inverse; the constant term must be a unit."""
    c0_inv = _inverse(a.coeffs[0])
    out = [c0_inv]
    for n in range(1, a.order + 1):
        acc = a.coeffs[1] * out[n - 1]
        for i in range(2, n + 1):
            acc = acc + a.coeffs[i] * out[n - i]
        out.append(-(acc * c0_inv))
    return Series(out)


def egf_coeff(a: Series, n: int) -> Scalar:
    """``n! [t^n] a``."""
    if n < 0 or n > a.order:
        raise IndexBeyondOrder(f"n = {n} outside 0..{a.order}")
    return a.coeffs[n] * math.factorial(n)


# -- elementary series ------------------------------------------------------


def series_log1p(c: Scalar, order: int) -> Series:
    """Mercator series of ``log(1 + c t)``."""
    out = [c * 0]
    power = c
    for k in range(1, order + 1):
        out.append(power * Fraction((-1) ** (k + 1), k))
        power = power * c
    return Series(out)


def series_log1p_lambda_t(order: int) -> Series:
    """``log(1 + lam t)`` over rational functions in lambda."""
    return series_log1p(LAM, order)


def series_binom_pow(x0: Rational | int, order: int, c: Scalar = LAM) -> Series:
    """``(1 + c t)**x0`` via the binomial series (default ``c = lambda``)."""
    x0 = Fraction(x0)
    binom = Fraction(1)
    power = c * 0 + 1
    out = []
    for k in range(order + 1):
        out.append(power * binom)
        binom = binom * (x0 - k) / (k + 1)
        power = power * c
    return Series(out)


def series_exp(c: Scalar, order: int) -> Series:
    """``exp(c t)``."""
    out = []
    term = c * 0 + 1
    for k in range(order + 1):
        out.append(term)
        term = term * c * Fraction(1, k + 1)
    return Series(out)


def _lam_linear(order: int) -> Series:
    """``lambda (1 + lambda t) - 1 = (lambda - 1) + lambda^2 t``."""
    coeffs = [LAM_MINUS_ONE, LAM * LAM] + [RatFunc.const(0)] * order
    return Series(coeffs[: order + 1])


# -- generating-function oracles --------------------------------------------


def gf_apostol_daehee(order: int) -> Series:
    """``(log lam + log(1 + lam t)) / (lam (1 + lam t) - 1)`` over the ell-ring."""
    numerator = series_log1p_lambda_t(order).map(LogElem.scalar) + LogElem.ell()
    return numerator * series_inverse(_lam_linear(order)).map(LogElem.scalar)


def gf_apostol_daehee_poly(x0: Rational | int, order: int) -> Series:
    """The numbers' generating function times ``(1 + lam t)**x0``."""
    return gf_apostol_daehee(order) * series_binom_pow(x0, order).map(LogElem.scalar)


def gf_simsek(order: int) -> Series:
    """``2 / (lam (1 + lam t) - 1)``."""
    return series_inverse(_lam_linear(order)) * 2


def gf_simsek_poly(x0: Rational | int, order: int) -> Series:
    return gf_simsek(order) * series_binom_pow(x0, order)


def gf_neg_simsek(k: int, order: int) -> Series:
    """``2**(-k) (lam (1 + lam t) - 1)**k``."""
    return (_lam_linear(order) ** k) * Fraction(1, 2**k)


def gf_neg_simsek_poly(x0: Rational | int, k: int, order: int) -> Series:
    return gf_neg_simsek(k, order) * series_binom_pow(x0, order)


def gf_bernstein(k: int, x0: Rational | int, order: int) -> Series:
    """``(x0 t)**k exp((1 - x0) t) / k!`` over the rationals."""
    x0 = Fraction(x0)
    mono = [Fraction(0)] * (order + 1)
    if k <= order:
        mono[k] = x0**k / math.factorial(k)
    return Series(mono) * series_exp(1 - x0, order)


def gf_stirling1(k: int, order: int) -> Series:
    """``log(1 + t)**k / k!``."""
    return series_log1p(Fraction(1), order) ** k * Fraction(1, math.factorial(k))


def gf_daehee(order: int) -> Series:
    """``log(1 + t) / t``."""
    return series_log1p(Fraction(1), order + 1).shift_down()


def gf_cauchy(order: int) -> Series:
    """``t / log(1 + t)``."""
    return series_inverse(gf_daehee(order))
