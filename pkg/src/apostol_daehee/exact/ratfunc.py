"""Rational functions in lambda kept in a canonical reduced form."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from ..errors import PoleAtLambda, ZeroDenominator
from .lambdapoly import LambdaPoly, reduce_fraction

_ONE_POLY = LambdaPoly((1,))


class RatFunc:
    """``num / den`` with ``gcd(num, den) = 1`` and ``den`` monic.

    A monic denominator is stricter than merely requiring a positive leading
    coefficient; it pins down the rational scale so that two equal functions
    always have identical fields.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LambdaPoly | Rational | int, den: LambdaPoly | Rational | int = 1):
        if not isinstance(num, LambdaPoly):
            num = LambdaPoly((num,))
        if not isinstance(den, LambdaPoly):
            den = LambdaPoly((den,))
        if den.is_zero():
            raise ZeroDenominator("rational function with zero denominator")
        num, den = reduce_fraction(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def _raw(cls, num: LambdaPoly, den: LambdaPoly) -> RatFunc:
        obj = object.__new__(cls)
        object.__setattr__(obj, "num", num)
        object.__setattr__(obj, "den", den)
        return obj

    @classmethod
    def lam(cls) -> RatFunc:
        return cls._raw(LambdaPoly.lam(), _ONE_POLY)

    @classmethod
    def lam_pow(cls, e: int) -> RatFunc:
        """``lam**e`` for any integer e."""
        if e >= 0:
            return cls._raw(LambdaPoly.monomial(1, e), _ONE_POLY)
        return cls._raw(_ONE_POLY, LambdaPoly.monomial(1, -e))

    @classmethod
    def const(cls, c: Rational | int) -> RatFunc:
        return cls._raw(LambdaPoly((c,)), _ONE_POLY)

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("rational function depends on lambda")
        return self.num.coeffs[0] if self.num.coeffs else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Rational)):
            return self.den == 1 and self.num == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        from ..render import ratfunc_text

        return ratfunc_text(self)

    # -- field operations --------------------------------------------------

    @staticmethod
    def _coerce(other) -> RatFunc | None:
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Rational)):
            return RatFunc.const(other)
        if isinstance(other, LambdaPoly):
            return RatFunc._raw(other, _ONE_POLY)
        return None

    def __neg__(self) -> RatFunc:
        return RatFunc._raw(-self.num, self.den)

    def __add__(self, other) -> RatFunc:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> RatFunc:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> RatFunc:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> RatFunc:
        if isinstance(other, (int, Rational)):
            if other == 0:
                return RatFunc.const(0)
            return RatFunc._raw(self.num * other, self.den)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RatFunc.const(0)
        if self.den.is_constant() and other.den.is_constant():
            return RatFunc._raw(self.num * other.num, self.den)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other) -> RatFunc:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> RatFunc:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e: int) -> RatFunc:
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc._raw(self.num**e, self.den**e)

    # -- evaluation --------------------------------------------------------

    def evaluate(self, lam0: Rational | int) -> Fraction:
        """Exact value at a rational point."""
        lam0 = Fraction(lam0)
        d = self.den(lam0)
        if d == 0:
            raise PoleAtLambda(f"denominator vanishes at lambda = {lam0}")
        return Fraction(self.num(lam0)) / d


def ratfunc_make(num: LambdaPoly, den: LambdaPoly) -> RatFunc:
    """Canonical ``num / den``; raises :class:`ZeroDenominator` when den is 0."""
    return RatFunc(num, den)


LAM = RatFunc.lam()
LAM_MINUS_ONE = RatFunc._raw(LambdaPoly((-1, 1)), _ONE_POLY)
