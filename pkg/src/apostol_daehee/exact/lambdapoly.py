"""Dense univariate polynomials in lambda with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class LambdaPoly:
    """Polynomial ``c0 + c1*lam + ... + cd*lam**d``.

    Coefficients are stored low degree first; the zero polynomial has no
    coefficients at all, so ``coeffs[-1]`` is always nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rational | int] = ()):
        object.__setattr__(self, "coeffs", _trim([Fraction(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("LambdaPoly is immutable")

    @classmethod
    def _raw(cls, coeffs: tuple[Fraction, ...]) -> LambdaPoly:
        # coeffs must already be trimmed Fractions
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", coeffs)
        return obj

    @classmethod
    def constant(cls, c: Rational | int) -> LambdaPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, c: Rational | int, e: int) -> LambdaPoly:
        if e < 0:
            raise ValueError("negative exponent in a polynomial")
        return cls([0] * e + [c])

    @classmethod
    def lam(cls) -> LambdaPoly:
        return cls._raw((_ZERO, _ONE))

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else _ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, LambdaPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return self.coeffs == _trim([Fraction(other)])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"LambdaPoly({[str(c) for c in self.coeffs]})"

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(other) -> LambdaPoly | None:
        if isinstance(other, LambdaPoly):
            return other
        if isinstance(other, (int, Rational)):
            return LambdaPoly((other,))
        return None

    def __neg__(self) -> LambdaPoly:
        return LambdaPoly._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> LambdaPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return LambdaPoly._raw(_trim(out))

    __radd__ = __add__

    def __sub__(self, other) -> LambdaPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LambdaPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> LambdaPoly:
        if isinstance(other, (int, Rational)):
            if other == 0:
                return LambdaPoly._raw(())
            f = Fraction(other)
            return LambdaPoly._raw(tuple(c * f for c in self.coeffs))
        if not isinstance(other, LambdaPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return LambdaPoly._raw(())
        if len(b) > len(a):
            a, b = b, a
        if all(c == 0 for c in b[:-1]):
            # monomial times polynomial
            lead = b[-1]
            return LambdaPoly._raw((_ZERO,) * (len(b) - 1) + tuple(c * lead for c in a))
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return LambdaPoly._raw(_trim(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> LambdaPoly:
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = LambdaPoly._raw((_ONE,))
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c: Rational | int) -> LambdaPoly:
        return self * c

    def shift(self, e: int) -> LambdaPoly:
        """Multiply by ``lam**e`` (e >= 0) or divide by it exactly (e < 0)."""
        if not self.coeffs or e == 0:
            return self
        if e > 0:
            return LambdaPoly._raw((_ZERO,) * e + self.coeffs)
        if any(c != 0 for c in self.coeffs[:-e]):
            raise ArithmeticError("polynomial is not divisible by that power of lambda")
        return LambdaPoly._raw(self.coeffs[-e:])

    def divmod(self, other: LambdaPoly) -> tuple[LambdaPoly, LambdaPoly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = other.degree
        lead = other.leading
        if len(rem) - 1 < dd:
            return LambdaPoly._raw(()), self
        quot = [_ZERO] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q = c / lead
            quot[i - dd] = q
            for j, oc in enumerate(other.coeffs):
                rem[i - dd + j] -= q * oc
        return LambdaPoly._raw(_trim(quot)), LambdaPoly._raw(_trim(rem[:dd]))

    def exact_div(self, other: LambdaPoly) -> LambdaPoly:
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self) -> LambdaPoly:
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        inv = 1 / self.coeffs[-1]
        return LambdaPoly._raw(tuple(c * inv for c in self.coeffs))

    # -- roots at 0 and 1 --------------------------------------------------

    def valuation(self) -> int:
        """Multiplicity of the root lam = 0 (0 for the zero polynomial)."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return 0

    def div_lam_minus_one(self) -> tuple[LambdaPoly, Fraction]:
        """Synthetic division by ``lam - 1``; returns (quotient, remainder)."""
        c = self.coeffs
        if len(c) <= 1:
            return LambdaPoly._raw(()), (c[0] if c else _ZERO)
        q = [_ZERO] * (len(c) - 1)
        acc = c[-1]
        q[-1] = acc
        for i in range(len(c) - 2, 0, -1):
            acc = c[i] + acc
            q[i - 1] = acc
        return LambdaPoly._raw(tuple(q)), c[0] + acc

    def __call__(self, x):
        """Horner evaluation at any scalar supporting + and *."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def euclid_gcd(a: LambdaPoly, b: LambdaPoly) -> LambdaPoly:
    """Monic gcd over the rationals (zero only if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1].monic()
    return a.monic()


def reduce_fraction(num: LambdaPoly, den: LambdaPoly) -> tuple[LambdaPoly, LambdaPoly]:
    """Cancel ``gcd(num, den)`` and make ``den`` monic.

    Powers of lam and of (lam - 1) are stripped by synthetic division first;
    those are the only denominators the Apostol-type families produce, so the
    Euclidean fallback only runs on the remaining cofactor.
    """
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return num, LambdaPoly._raw((_ONE,))

    v = min(num.valuation(), den.valuation())
    if v:
        num, den = num.shift(-v), den.shift(-v)

    while num.degree >= 1 and den.degree >= 1:
        qd, rd = den.div_lam_minus_one()
        if rd != 0:
            break
        qn, rn = num.div_lam_minus_one()
        if rn != 0:
            break
        num, den = qn, qd

    if den.degree >= 1 and num.degree >= 1:
        # strip remaining lam and (lam - 1) factors from den before the gcd
        core = den.shift(-den.valuation())
        while core.degree >= 1:
            q, r = core.div_lam_minus_one()
            if r != 0:
                break
            core = q
        if core.degree >= 1:
            g = euclid_gcd(num, core)
            if g.degree >= 1:
                num, den = num.exact_div(g), den.exact_div(g)

    lead = den.leading
    if lead != 1:
        inv = 1 / lead
        num, den = num * inv, den * inv
    return num, den


def poly_from_roots_one(a: int, b: int, c: Rational | int = 1) -> LambdaPoly:
    """``c * lam**a * (lam - 1)**b`` expanded (a, b >= 0)."""
    from math import comb

    coeffs = [Fraction(0)] * (a + b + 1)
    for i in range(b + 1):
        coeffs[a + i] = Fraction(c) * comb(b, i) * (-1) ** (b - i)
    return LambdaPoly(coeffs)
