"""Simsek numbers and polynomials, their negative higher-order variants, and
the lambda-Apostol-Daehee numbers and polynomials.

The closed forms here are the primary route.  ``ad_num_oracle`` and
``ad_poly_oracle`` expand the generating functions with :mod:`.series`
instead and exist only to be compared against the closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from .errors import DomainError, OrderTooSmall
from .exact.lambdapoly import poly_from_roots_one
from .exact import ELL, LAM, LambdaPoly, LogElem, RatFunc, XPoly, eval_float, xpoly_eval_x
from .numbers import daehee, falling_factorial
from .series import egf_coeff, gf_apostol_daehee, gf_apostol_daehee_poly

FAMILIES = ("ynum", "ypoly", "yneg", "qpoly", "adnum", "adpoly")


@dataclass(frozen=True)
class FamilyValue:
    tag: str
    n: int
    k: int | None
    value: RatFunc | LogElem | XPoly


def _check_index(n: int, name: str = "n") -> None:
    if n < 0:
        raise ValueError(f"{name} must be non-negative, got {n}")


def _lam_minus_one_pow(e: int) -> LambdaPoly:
    return poly_from_roots_one(0, e)


@lru_cache(maxsize=None)
def falling_factorial_x(n: int) -> XPoly:
    """``(x)_n`` as a polynomial in x."""
    return falling_factorial(XPoly.x(), n)


@lru_cache(maxsize=None)
def y_num(n: int) -> RatFunc:
    """Simsek number ``Y_n(lam) = 2 (-1)^n n! lam^(2n) / (lam - 1)^(n+1)``."""
    _check_index(n)
    num = LambdaPoly.monomial(2 * (-1) ** n * math.factorial(n), 2 * n)
    return RatFunc(num, _lam_minus_one_pow(n + 1))


@lru_cache(maxsize=None)
def y_poly(n: int) -> XPoly:
    """Simsek polynomial ``Y_n(x; lam) = sum_j C(n, j) Y_j(lam) lam^(n-j) (x)_(n-j)``."""
    _check_index(n)
    total = XPoly()
    for j in range(n + 1):
        coeff = y_num(j) * RatFunc.lam_pow(n - j) * math.comb(n, j)
        total = total + falling_factorial_x(n - j) * coeff
    return total


@lru_cache(maxsize=None)
def y_neg_order(n: int, k: int) -> RatFunc:
    """``Y_n^(-k)(lam) = 2^-k n! C(k, n) lam^(2n) (lam - 1)^(k-n)``, zero for n > k."""
    _check_index(n)
    _check_index(k, "k")
    if n > k:
        return RatFunc.const(0)
    c = Fraction(math.factorial(n) * math.comb(k, n), 2**k)
    return RatFunc(LambdaPoly.monomial(c, 2 * n) * _lam_minus_one_pow(k - n))


@lru_cache(maxsize=None)
def q_poly(n: int, k: int) -> XPoly:
    """``Q_n(x; lam, k) = sum_j C(n, j) Y_j^(-k)(lam) lam^(n-j) (x)_(n-j)``."""
    _check_index(n)
    _check_index(k, "k")
    total = XPoly()
    for j in range(min(n, k) + 1):
        coeff = y_neg_order(j, k) * RatFunc.lam_pow(n - j) * math.comb(n, j)
        total = total + falling_factorial_x(n - j) * coeff
    return total


@lru_cache(maxsize=None)
def ad_num(n: int) -> LogElem:
    """lambda-Apostol-Daehee number from its closed form::

        (-1)^n n! / (lam - 1) * ((lam^2 / (lam - 1))^n ell
                                 - lam^n sum_{j<n} (lam / (lam - 1))^j / (n - j))
    """
    _check_index(n)
    r = LAM / (LAM - 1)
    partial = sum((r**j * Fraction(1, n - j) for j in range(n)), RatFunc.const(0))
    prefactor = RatFunc.const((-1) ** n * math.factorial(n)) / (LAM - 1)
    ell_part = (LAM * LAM / (LAM - 1)) ** n * prefactor
    free_part = -(LAM**n) * partial * prefactor
    return LogElem({1: ell_part, 0: free_part})


@lru_cache(maxsize=None)
def ad_poly(n: int) -> XPoly:
    """lambda-Apostol-Daehee polynomial via Simsek polynomials and Daehee numbers::

        (ell / 2) Y_n(x) + (1/2) sum_{j<n} n C(n-1, j) lam^(n-j) D_(n-j-1) Y_j(x)
    """
    _check_index(n)
    total = y_poly(n) * (ELL * Fraction(1, 2))
    for j in range(n):
        c = RatFunc.lam_pow(n - j) * (Fraction(n * math.comb(n - 1, j), 2) * daehee(n - j - 1))
        total = total + y_poly(j) * c
    return total


def ad_poly_factorial_form(n: int) -> XPoly:
    """The same polynomial with the Daehee numbers written out::

        (ell / 2) Y_n(x) - (n! / 2) sum_{j<n} (-1)^(n-j) lam^(n-j) Y_j(x) / (j! (n - j))
    """
    _check_index(n)
    total = y_poly(n) * (ELL * Fraction(1, 2))
    for j in range(n):
        c = Fraction(-math.factorial(n) * (-1) ** (n - j), 2 * math.factorial(j) * (n - j))
        total = total + y_poly(j) * (RatFunc.lam_pow(n - j) * c)
    return total


def ad_num_from_simsek(n: int) -> LogElem:
    """Numbers as ``(ell/2) Y_n + (n!/2) sum_{j<n} (-1)^(n-j-1) lam^(n-j) Y_j / (j! (n-j))``."""
    _check_index(n)
    total = ELL * y_num(n) * Fraction(1, 2)
    for j in range(n):
        c = Fraction(math.factorial(n) * (-1) ** (n - j - 1), 2 * math.factorial(j) * (n - j))
        total = total + y_num(j) * RatFunc.lam_pow(n - j) * c
    return total


def ad_num_oracle(n: int, order: int) -> LogElem:
    """n-th EGF coefficient of the numbers' generating function, by series arithmetic."""
    _check_index(n)
    if order < n:
        raise OrderTooSmall(f"order {order} < n = {n}")
    return egf_coeff(gf_apostol_daehee(order), n)


def ad_poly_oracle(n: int, x0: Rational | int, order: int) -> LogElem:
    """n-th EGF coefficient of the polynomials' generating function at ``x = x0``."""
    _check_index(n)
    if order < n:
        raise OrderTooSmall(f"order {order} < n = {n}")
    return egf_coeff(gf_apostol_daehee_poly(x0, order), n)


def series_rep_partial(m: int, x0: Rational | float, lam0: float, N: int) -> float:
    """Partial sum ``sum_{n=0}^{N} (-1)^n 2^n Q_m(x0; lam0, n) / (n + 1)``.

    The full series converges to the m-th Apostol-Daehee polynomial at
    ``x0`` when ``|lam0 - 1| < 1``.
    """
    lam0 = float(lam0)
    if not (lam0 > 0 and abs(lam0 - 1) < 1) or lam0 == 1:
        raise DomainError(f"series representation needs 0 < |lambda - 1| < 1, got lambda = {lam0}")
    if N < 0:
        raise ValueError("N must be non-negative")
    x_q = Fraction(x0)
    terms = []
    for n in range(N + 1):
        q = eval_float(xpoly_eval_x(q_poly(m, n), x_q), lam0)
        terms.append((-1) ** n * 2.0**n * q / (n + 1))
    return math.fsum(terms)


def family_value(tag: str, n: int, k: int | None = None) -> FamilyValue:
    """Symbolic value of one of the Apostol-type families."""
    if tag == "ynum":
        v = y_num(n)
    elif tag == "ypoly":
        v = y_poly(n)
    elif tag == "adnum":
        v = ad_num(n)
    elif tag == "adpoly":
        v = ad_poly(n)
    elif tag in ("yneg", "qpoly"):
        if k is None:
            raise ValueError(f"family {tag!r} needs k")
        v = y_neg_order(n, k) if tag == "yneg" else q_poly(n, k)
    else:
        raise ValueError(f"unknown family {tag!r}")
    return FamilyValue(tag, n, k if tag in ("yneg", "qpoly") else None, v)
