"""Laurent polynomials in the formal symbol ``ell = log(lambda)``.

The coefficients are :class:`RatFunc` values.  ``ell`` is treated as an
independent transcendental, so no rule ever ties it back to ``lambda``;
identities among the Apostol-type families then reduce to exact
cancellation of each ``ell``-power separately.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterator, Mapping

from ..errors import DomainError, PoleAtLambda, ZeroDivisor
from .ratfunc import RatFunc


def _coerce_coeff(c) -> RatFunc | None:
    if isinstance(c, RatFunc):
        return c
    if isinstance(c, (int, Rational)):
        return RatFunc.const(c)
    return None


class LogElem:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, RatFunc | Rational | int] | None = None):
        clean: dict[int, RatFunc] = {}
        for e, c in (terms or {}).items():
            c = _coerce_coeff(c)
            if c is None:
                raise TypeError(f"unsupported coefficient type {type(c).__name__}")
            if not c.is_zero():
                clean[int(e)] = c
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LogElem is immutable")

    @classmethod
    def _raw(cls, terms: dict[int, RatFunc]) -> LogElem:
        obj = object.__new__(cls)
        object.__setattr__(obj, "_terms", terms)
        return obj

    @classmethod
    def ell(cls, e: int = 1) -> LogElem:
        return cls._raw({e: RatFunc.const(1)})

    @classmethod
    def scalar(cls, c: RatFunc | Rational | int) -> LogElem:
        return cls({0: c})

    @classmethod
    def monomial(cls, c: RatFunc | Rational | int, e: int) -> LogElem:
        return cls({e: c})

    # -- structure ---------------------------------------------------------

    @property
    def terms(self) -> dict[int, RatFunc]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[int, RatFunc]]:
        """Terms ordered by descending power of ell."""
        for e in sorted(self._terms, reverse=True):
            yield e, self._terms[e]

    def coeff(self, e: int) -> RatFunc:
        return self._terms.get(e, RatFunc.const(0))

    def exponents(self) -> list[int]:
        return sorted(self._terms)

    def ell_degree(self) -> int:
        """Largest ell-exponent present (0 for the zero element)."""
        return max(self._terms, default=0)

    def ell_valuation(self) -> int:
        return min(self._terms, default=0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_ell_free(self) -> bool:
        return all(e == 0 for e in self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LogElem):
            return self._terms == other._terms
        c = _coerce_coeff(other)
        if c is None:
            return NotImplemented
        return self._terms == ({} if c.is_zero() else {0: c})

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"{e}: {c!r}" for e, c in self.items())
        return f"LogElem({{{inner}}})"

    def __str__(self) -> str:
        from ..render import logelem_text

        return logelem_text(self)

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(other) -> LogElem | None:
        if isinstance(other, LogElem):
            return other
        c = _coerce_coeff(other)
        if c is None:
            return None
        return LogElem._raw({} if c.is_zero() else {0: c})

    def __neg__(self) -> LogElem:
        return LogElem._raw({e: -c for e, c in self._terms.items()})

    def __add__(self, other) -> LogElem:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out[e] + c if e in out else c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        return LogElem._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> LogElem:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LogElem:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> LogElem:
        if isinstance(other, (int, Rational, RatFunc)):
            if other == 0:
                return LogElem._raw({})
            return LogElem._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LogElem):
            return NotImplemented
        out: dict[int, RatFunc] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                p = c1 * c2
                out[e] = out[e] + p if e in out else p
        return LogElem._raw({e: c for e, c in out.items() if not c.is_zero()})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LogElem:
        if k < 0:
            return self.inverse() ** (-k)
        result = LogElem.scalar(1)
        for _ in range(k):
            result = result * self
        return result

    def shift(self, e: int) -> LogElem:
        """Multiply by ``ell**e``."""
        return LogElem._raw({k + e: c for k, c in self._terms.items()})

    def div_monomial(self, e: int, c: RatFunc | Rational | int) -> LogElem:
        """Divide by ``c * ell**e``."""
        c = _coerce_coeff(c)
        if c is None or c.is_zero():
            raise ZeroDivisor("division by a zero monomial")
        inv = c.inverse()
        return LogElem._raw({k - e: v * inv for k, v in self._terms.items()})

    def is_unit(self) -> bool:
        return len(self._terms) == 1

    def inverse(self) -> LogElem:
        """Inverse of a single-term element; other elements are not units."""
        if len(self._terms) != 1:
            raise ZeroDivisor("only nonzero monomials in ell are invertible")
        ((e, c),) = self._terms.items()
        return LogElem._raw({-e: c.inverse()})

    def __truediv__(self, other) -> LogElem:
        if isinstance(other, LogElem):
            return self * other.inverse()
        c = _coerce_coeff(other)
        if c is None:
            return NotImplemented
        return self.div_monomial(0, c)

    # -- evaluation --------------------------------------------------------

    def eval_exact(self, lam0: Rational | int) -> EvalExact:
        return eval_exact_lambda(self, lam0)

    def eval_float(self, lam0: float) -> float:
        return eval_float(self, lam0)


def log_arith(a: LogElem, b: LogElem, op: str) -> LogElem:
    """Apply ``op`` in {"add", "sub", "mul"} to two ring elements."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown ring operation {op!r}")


def log_div_monomial(a: LogElem, e: int, c: RatFunc | Rational | int) -> LogElem:
    return a.div_monomial(e, c)


@dataclass(frozen=True)
class EvalExact:
    """A Laurent polynomial in ``ell`` with plain rational coefficients."""

    terms: dict[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", {e: Fraction(c) for e, c in self.terms.items() if c != 0})

    def __eq__(self, other) -> bool:
        if isinstance(other, EvalExact):
            return self.terms == other.terms
        if isinstance(other, (int, Rational)):
            return self.terms == ({} if other == 0 else {0: Fraction(other)})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def to_float(self, lam0: Rational | float) -> float:
        if any(e != 0 for e in self.terms):
            ell = _checked_log(float(lam0))
        else:
            ell = 0.0
        return math.fsum(float(c) * ell**e for e, c in self.terms.items())


def eval_exact_lambda(a: LogElem, lam0: Rational | int) -> EvalExact:
    """Substitute a rational ``lambda`` into every coefficient; ``ell`` stays symbolic."""
    lam0 = Fraction(lam0)
    if lam0 == 1 and any(e < 0 for e in a.exponents()):
        raise PoleAtLambda("negative ell powers are singular at lambda = 1")
    return EvalExact({e: c.evaluate(lam0) for e, c in a.items()})


def _checked_log(lam0: float) -> float:
    if not lam0 > 0 or lam0 == 1:
        raise DomainError(f"log(lambda) requires lambda > 0 and lambda != 1, got {lam0}")
    return math.log(lam0)


def eval_float(a: LogElem, lam0: float) -> float:
    """Numeric value with ``lambda = lam0`` and ``ell = ln(lam0)``.

    Coefficients are evaluated exactly at the binary value of ``lam0`` and
    rounded once, so only the final combination over ``ell`` is inexact.
    """
    lam0 = float(lam0)
    if not math.isfinite(lam0):
        raise DomainError(f"lambda must be finite, got {lam0}")
    _checked_log(lam0)
    if a.is_zero():
        return 0.0
    return eval_exact_lambda(a, Fraction(lam0)).to_float(lam0)
