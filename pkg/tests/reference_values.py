"""Hand-transcribed closed forms of the first few values of each family.

Every expression is written out term by term with the ring constructors, not
derived from the library's own formulas, so equality with the library is a
genuine cross-check.
"""

from __future__ import annotations

from fractions import Fraction

from apostol_daehee.exact import LambdaPoly, LogElem, RatFunc, XPoly

L = RatFunc.lam()
ONE = RatFunc.const(1)
ELL = LogElem.ell()
X = XPoly.x()


def lm1(e: int) -> RatFunc:
    """``(lam - 1)^e`` for any integer e."""
    return (L - 1) ** e


def poly(*coeffs) -> RatFunc:
    """Polynomial in lambda from coefficients, lowest degree first."""
    return RatFunc(LambdaPoly(coeffs))


def ad_numbers() -> list[LogElem]:
    return [
        ELL * (ONE / lm1(1)),
        ELL * (-(L**2) / lm1(2)) + L / lm1(1),
        ELL * (2 * L**4 / lm1(3)) + L**2 * poly(1, -3) / lm1(2),
        ELL * (-6 * L**6 / lm1(4)) + L**3 * poly(2, -7, 11) / lm1(3),
    ]


def simsek_numbers() -> list[RatFunc]:
    return [
        2 / lm1(1),
        -2 * L**2 / lm1(2),
        4 * L**4 / lm1(3),
        -12 * L**6 / lm1(4),
        48 * L**8 / lm1(5),
    ]


def simsek_polys() -> list[XPoly]:
    return [
        XPoly.constant(2 / lm1(1)),
        X * (2 * L / lm1(1)) - XPoly.constant(2 * L**2 / lm1(2)),
        X**2 * (2 * L**2 / lm1(1)) - X * (poly(0, 0, -2, 6) / lm1(2)) + XPoly.constant(4 * L**4 / lm1(3)),
        X**3 * (2 * L**3 / lm1(1))
        - X**2 * (poly(0, 0, 0, -6, 12) / lm1(2))
        + X * (poly(0, 0, 0, 4, -14, 22) / lm1(3))
        - XPoly.constant(12 * L**6 / lm1(4)),
    ]


def q_polys(k: int) -> list[XPoly]:
    """Q_0, Q_1, Q_2 for a given k.

    The constant term of Q_2 carries ``(lam - 1)^(k - 2)``; the expansion of
    the defining sum leaves no other possibility (see the decisions ledger).
    """
    c = Fraction(1, 2**k)
    q0 = XPoly.constant(c * lm1(k))
    q1 = X * (c * lm1(k) * L) + XPoly.constant(c * k * L**2 * lm1(k - 1))
    q2 = (
        X**2 * (c * lm1(k) * L**2)
        + X * (-c * lm1(k) * L**2 + 2 * c * k * L**3 * lm1(k - 1))
        + XPoly.constant(c * k * (k - 1) * L**4 * lm1(k - 2))
    )
    return [q0, q1, q2]


def ad_polys() -> list[XPoly]:
    return [
        XPoly.constant(ELL * (ONE / lm1(1))),
        XPoly.constant(LogElem.scalar(L / lm1(1)))
        + (X * (L / lm1(1)) - XPoly.constant(L**2 / lm1(2))) * ELL,
        XPoly.constant(-2 * L**3 / lm1(2))
        + (2 * X - 1) * (L**2 / lm1(1))
        + (
            XPoly.constant(2 * L**4 / lm1(3))
            - X * (2 * L**3 / lm1(2))
            + X * (X - 1) * (L**2 / lm1(1))
        )
        * ELL,
    ]


# -- direct evaluation, independent of the exact engine ---------------------
#
# These follow the three-line recipe YNum -> YPoly -> DPoly literally.  The
# lambda- and x-dependent parts are accumulated in Fractions (lambda is the
# exact binary value of the float), and log(lambda) enters once at the end, so
# the only rounding is in the final two-term combination.

import math  # noqa: E402


def _falling(x: Fraction, n: int) -> Fraction:
    out = Fraction(1)
    for i in range(n):
        out *= x - i
    return out


def direct_ynum(lam: Fraction, n: int) -> Fraction:
    return 2 * (-1) ** n * math.factorial(n) / (lam - 1) * (lam * lam / (lam - 1)) ** n


def direct_ypoly(x: Fraction, lam: Fraction, n: int) -> Fraction:
    return sum(
        (math.comb(n, j) * lam ** (n - j) * _falling(x, n - j) * direct_ynum(lam, j) for j in range(n + 1)),
        Fraction(0),
    )


def direct_dpoly(x: float, lam: float, n: int) -> float:
    """``(log lam / 2) Y_n(x) + (n!/2) sum_j (-1)^(n-j-1) lam^(n-j) Y_j(x) / (j! (n-j))``."""
    xq, lq = Fraction(x), Fraction(lam)
    log_coeff = direct_ypoly(xq, lq, n) / 2
    tail = sum(
        (
            Fraction((-1) ** (n - j - 1), math.factorial(j) * (n - j)) * lq ** (n - j) * direct_ypoly(xq, lq, j)
            for j in range(n)
        ),
        Fraction(0),
    )
    free = math.factorial(n) * tail / 2
    return math.fsum([float(log_coeff) * math.log(lam), float(free)])
