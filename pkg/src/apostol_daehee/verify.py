"""Exact and numeric verification of the identities among the families.

Every exact check builds both sides in the ell-ring (or over x-polynomials)
and reports their difference; a check passes only when that difference is
the zero element.  Nothing here falls back to floating point except the
series representation, which is an analytic statement.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Any

from . import apostol as ap
from . import numbers as nb
from . import series as sr
from .errors import BadIndex, DomainError
from .exact import (
    ELL,
    LAM,
    Z,
    LambdaPoly,
    LogElem,
    RatFunc,
    XPoly,
    eval_float,
    xpoly_eval_x,
    xpoly_integrate,
)
from .render import render


@dataclass
class VerifyReport:
    identity: str
    params: dict[str, Any]
    passed: bool
    residual: LogElem | XPoly | RatFunc | Fraction | float
    detail: str = ""
    extra: dict[str, Any] = field(default_factory=dict, compare=False, repr=False)

    def sort_key(self) -> tuple:
        return (self.identity, tuple(self.params.values()))

    def to_json(self) -> dict[str, Any]:
        params = {k: (str(v) if isinstance(v, Fraction) else v) for k, v in self.params.items()}
        res = self.residual
        return {
            "identity": self.identity,
            "params": params,
            "passed": self.passed,
            "residual": res if isinstance(res, float) else render(res),
            "detail": self.detail,
        }


def _exact(identity: str, params: dict, residual, detail: str = "", **extra) -> VerifyReport:
    return VerifyReport(identity, params, residual == 0, residual, detail, extra)


# -- Chu-Vandermonde form with Stirling numbers ------------------------------


def theorem1_A(m: int, x0: Rational | int, y0: Rational | int, literal: bool = False) -> LogElem:
    """Triple sum ``A(m)`` over products of Apostol-Daehee values at x0 and y0.

    Expanding ``(log(1 + lam t))^n`` brings a factor ``lam^k`` into the
    coefficient of ``t^k / k!``; it is included unless ``literal`` is set.
    """
    if m < 0:
        return LogElem()
    dx = [xpoly_eval_x(ap.ad_poly(j), x0) for j in range(m + 1)]
    dy = [xpoly_eval_x(ap.ad_poly(j), y0) for j in range(m + 1)]
    total = LogElem()
    for k in range(m + 1):
        inner = LogElem()
        for j in range(m - k + 1):
            inner = inner + dx[j] * dy[m - k - j] * math.comb(m - k, j)
        for n in range(k + 1):
            w = math.comb(m, k) * nb.gbinom(-2, n) * math.factorial(n) * nb.stirling1(k, n)
            if w == 0:
                continue
            scale = RatFunc.const(w) if literal else RatFunc.lam_pow(k) * w
            total = total + inner.shift(-n) * scale
    return total


def theorem1_rhs(m: int, x0: Rational | int, y0: Rational | int, literal: bool = False) -> LogElem:
    lp = RatFunc.lam_pow
    total = (
        theorem1_A(m - 2, x0, y0, literal) * (lp(4 - m) * (m * (m - 1)))
        + theorem1_A(m - 1, x0, y0, literal) * (lp(2 - m) * (LAM - 1) * (2 * m))
        + theorem1_A(m, x0, y0, literal) * (lp(-m) * (LAM - 1) ** 2)
    )
    return total.shift(-2)


def check_theorem1(m: int, x0: Rational | int, y0: Rational | int, literal: bool = False) -> VerifyReport:
    """``C(x0 + y0, m)`` from products of Apostol-Daehee polynomials.

    The right-hand side equals ``m! C(x0 + y0, m)`` (the Chu-Vandermonde sum),
    so it is divided by ``m!`` before comparison.  With ``literal`` the
    ``lam^k`` factor and the ``1/m!`` are omitted, reproducing the formula as
    usually printed; that variant does not cancel.
    """
    if m < 2:
        raise BadIndex(f"the identity needs m >= 2, got {m}")
    x0, y0 = Fraction(x0), Fraction(y0)
    rhs = theorem1_rhs(m, x0, y0, literal)
    if not literal:
        rhs = rhs * Fraction(1, math.factorial(m))
    target = nb.gbinom(x0 + y0, m)
    residual = rhs - target
    return _exact(
        "theorem1" + ("_literal" if literal else ""),
        {"m": m, "x0": x0, "y0": y0},
        residual,
        f"binom(x0+y0, m) = {target}",
        rhs=rhs,
    )


def check_theorem1_exhaustive(m: int) -> VerifyReport:
    """Both sides are polynomials of degree m in x and in y; agreement on an
    (m+1) x (m+1) grid of distinct points proves the identity for all x, y."""
    bad = []
    for x0 in range(m + 1):
        for y0 in range(m + 1):
            if not check_theorem1(m, x0, y0).passed:
                bad.append((x0, y0))
    return VerifyReport(
        "theorem1_grid",
        {"m": m},
        not bad,
        LogElem() if not bad else LogElem.scalar(len(bad)),
        f"{(m + 1) ** 2} grid points, {len(bad)} failing",
    )


# -- Simsek-polynomial forms --------------------------------------------------


def check_theorem2_forms(n: int) -> VerifyReport:
    """Daehee-number form against the factorial form of the polynomials."""
    residual = ap.ad_poly(n) - ap.ad_poly_factorial_form(n)
    return _exact("theorem2_forms", {"n": n}, residual)


def check_cor2(n: int) -> VerifyReport:
    """Numbers from Simsek numbers, from x = 0, and from the closed form agree."""
    closed = ap.ad_num(n)
    from_simsek = ap.ad_num_from_simsek(n) - closed
    at_zero = xpoly_eval_x(ap.ad_poly(n), 0) - closed
    residual = from_simsek if not from_simsek.is_zero() else at_zero
    return _exact("cor2", {"n": n}, residual)


def check_cor4(n: int) -> VerifyReport:
    """``sum_{j<n} (lam/(lam-1))^j / (n-j)`` recovered from the n-th number."""
    if n < 1:
        raise BadIndex(f"the finite-sum identity needs n >= 1, got {n}")
    r = LAM / (LAM - 1)
    lhs = sum((r**j * Fraction(1, n - j) for j in range(n)), RatFunc.const(0))
    scale = (LAM - 1) * LAM ** (-n) * Fraction((-1) ** (n + 1), math.factorial(n))
    rhs = ap.ad_num(n) * scale + ELL * r**n
    return _exact("cor4", {"n": n}, rhs - lhs, f"lhs = {lhs}")


def check_oracle_numbers(n: int) -> VerifyReport:
    return _exact("oracle_numbers", {"n": n}, ap.ad_num(n) - ap.ad_num_oracle(n, n))


def check_oracle_poly(n: int, x0: Rational | int) -> VerifyReport:
    x0 = Fraction(x0)
    residual = xpoly_eval_x(ap.ad_poly(n), x0) - ap.ad_poly_oracle(n, x0, n)
    return _exact("oracle_poly", {"n": n, "x0": x0}, residual)


# -- integral identities ------------------------------------------------------


def integral01_rhs(n: int) -> LogElem:
    return sum(
        (ap.ad_num(n - m) * (RatFunc.lam_pow(m) * (math.comb(n, m) * nb.cauchy(m))) for m in range(n + 1)),
        LogElem(),
    )


def check_integral01(n: int) -> VerifyReport:
    """``int_0^1 D_n(x) dx = sum_m C(n, m) lam^m b_m(0) D_(n-m)``."""
    lhs = xpoly_integrate(ap.ad_poly(n), 0, 1)
    return _exact("integral01", {"n": n}, lhs - integral01_rhs(n))


def check_integral0z(n: int) -> VerifyReport:
    """``int_0^z D_n(x) dx`` against the Cauchy-number expansion in z."""
    lhs = xpoly_integrate(ap.ad_poly(n), 0, Z)
    rhs = XPoly()
    for m in range(n + 2):
        diff = ap.ad_poly(n + 1 - m) - ap.ad_num(n + 1 - m)
        c = RatFunc.lam_pow(m - 1) * (Fraction(math.comb(n + 1, m), n + 1) * nb.cauchy(m))
        rhs = rhs + diff * c
    return _exact("integral0z", {"n": n}, lhs - rhs)


def choi_p(m: int) -> Fraction:
    """Normalized Cauchy numbers ``p_m = b_m(0) / m!``."""
    return nb.cauchy(m) / math.factorial(m)


def check_choi_reconciliation(m: int) -> VerifyReport:
    """With ``p_i = b_i(0)/i!`` the sum ``sum_i i! C(m, i) lam^i D_(m-i) p_i``
    matches the Cauchy-number integral formula term by term, and its total is
    ``int_0^1 D_m(x) dx``."""
    residual = LogElem()
    total = LogElem()
    for i in range(m + 1):
        base = ap.ad_num(m - i) * (RatFunc.lam_pow(i) * math.comb(m, i))
        normalized_term = base * (math.factorial(i) * choi_p(i))
        cauchy_term = base * nb.cauchy(i)
        residual = residual + (normalized_term - cauchy_term)
        total = total + normalized_term
    if residual.is_zero():
        residual = total - xpoly_integrate(ap.ad_poly(m), 0, 1)
    return _exact("normalized_cauchy", {"m": m}, residual, f"p_m = {choi_p(m)}", p=choi_p(m))


# -- series representation (numeric) -------------------------------------------


def check_series_rep(m: int, x0: Rational | float, lam0: float, N: int, tol: float = 1e-9) -> VerifyReport:
    lam0 = float(lam0)
    if not (lam0 > 0 and abs(lam0 - 1) < 1) or lam0 == 1:
        raise DomainError(f"series representation needs 0 < |lambda - 1| < 1, got {lam0}")
    partial = ap.series_rep_partial(m, x0, lam0, N)
    closed = eval_float(xpoly_eval_x(ap.ad_poly(m), Fraction(x0)), lam0)
    err = abs(partial - closed)
    return VerifyReport(
        "series_rep",
        {"m": m, "x0": Fraction(x0), "lambda": lam0, "N": N},
        err <= tol * (1 + abs(closed)),
        partial - closed,
        f"partial = {partial!r}, closed = {closed!r}",
    )


# -- negative-order Simsek numbers and Bernstein basis --------------------------


def bernstein_poly(k: int, n: int) -> LambdaPoly:
    """``B_k^n(lam) = C(n, k) lam^k (1 - lam)^(n-k)`` as a polynomial in lambda."""
    if k > n:
        return LambdaPoly()
    return LambdaPoly.monomial(math.comb(n, k), k) * LambdaPoly((1, -1)) ** (n - k)


def check_bernstein_bridge(n: int, k: int) -> VerifyReport:
    """``Y_n^(-k)(lam) = (-1)^(k-n) n! / 2^k lam^n B_n^k(lam)`` in Q[lam]."""
    scale = Fraction((-1) ** (k - n) * math.factorial(n), 2**k)
    rhs = RatFunc(LambdaPoly.monomial(scale, n) * bernstein_poly(n, k))
    residual = ap.y_neg_order(n, k) - rhs
    return _exact("bernstein_bridge", {"n": n, "k": k}, residual)


def check_gf_simsek(n: int) -> VerifyReport:
    residual = ap.y_num(n) - sr.egf_coeff(sr.gf_simsek(n), n)
    return _exact("gf_simsek", {"n": n}, residual)


def check_gf_neg_simsek(n: int, k: int) -> VerifyReport:
    residual = ap.y_neg_order(n, k) - sr.egf_coeff(sr.gf_neg_simsek(k, n), n)
    return _exact("gf_neg_simsek", {"n": n, "k": k}, residual)


def check_gf_simsek_poly(n: int, x0: Rational | int) -> VerifyReport:
    x0 = Fraction(x0)
    closed = xpoly_eval_x(ap.y_poly(n), x0)
    residual = closed - LogElem.scalar(sr.egf_coeff(sr.gf_simsek_poly(x0, n), n))
    return _exact("gf_simsek_poly", {"n": n, "x0": x0}, residual)


def check_gf_q_poly(n: int, k: int, x0: Rational | int) -> VerifyReport:
    x0 = Fraction(x0)
    closed = xpoly_eval_x(ap.q_poly(n, k), x0)
    residual = closed - LogElem.scalar(sr.egf_coeff(sr.gf_neg_simsek_poly(x0, k, n), n))
    return _exact("gf_q_poly", {"n": n, "k": k, "x0": x0}, residual)


# -- classical sequences ----------------------------------------------------------


def check_daehee(n: int) -> VerifyReport:
    return _exact("daehee", {"n": n}, nb.daehee(n) - sr.egf_coeff(sr.gf_daehee(n), n))


def check_cauchy(n: int) -> VerifyReport:
    """Stirling-sum formula against the integral of ``(x)_n`` and against the
    generating function ``t / log(1 + t)``."""
    integral = xpoly_integrate(ap.falling_factorial_x(n), 0, 1).coeff(0).constant_value()
    gf = sr.egf_coeff(sr.gf_cauchy(n), n)
    value = nb.cauchy(n)
    residual = value - integral if value != integral else value - gf
    return _exact("cauchy", {"n": n}, residual)


def check_stirling(n: int) -> VerifyReport:
    """Row n against the expansion of ``(x)_n`` and ``log(1+t)^k / k!``."""
    ff = ap.falling_factorial_x(n)
    residual = Fraction(0)
    for k in range(n + 1):
        c = ff.coeff(k).coeff(0).constant_value()
        gf = sr.egf_coeff(sr.gf_stirling1(k, n), n)
        s = nb.stirling1(n, k)
        if s != c or s != gf:
            residual = s - c if s != c else s - gf
            break
    return _exact("stirling1", {"n": n}, residual)


def check_chu_vandermonde(x0: Rational | int, y0: Rational | int, n: int) -> VerifyReport:
    lhs, rhs = nb.chu_vandermonde_lhs_rhs(x0, y0, n)
    return _exact("chu_vandermonde", {"x0": Fraction(x0), "y0": Fraction(y0), "n": n}, lhs - rhs)


# -- sweep -----------------------------------------------------------------------


def random_rational(rng: random.Random, bound: int = 20) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


SERIES_REP_LAMBDAS = (1.25, 1.5)


def run_suite(max_n: int = 6, samples: int = 3, seed: int = 0) -> list[VerifyReport]:
    """Deterministic sweep over every check with indices up to ``max_n``.

    Rational sample points have numerator and denominator bounded by 20.
    The Chu-Vandermonde form is checked at sampled (x0, y0) only; since both
    sides have degree m in each variable, ``check_theorem1_exhaustive`` on an
    (m+1) x (m+1) grid would settle it for symbolic x and y.
    """
    if max_n < 2:
        raise BadIndex("run_suite needs max_n >= 2")
    rng = random.Random(seed)
    reports: list[VerifyReport] = []
    for m in range(2, max_n + 1):
        for _ in range(samples):
            reports.append(check_theorem1(m, random_rational(rng), random_rational(rng)))
    for n in range(max_n + 1):
        reports.append(check_theorem2_forms(n))
        reports.append(check_cor2(n))
        reports.append(check_oracle_numbers(n))
        reports.append(check_integral01(n))
        reports.append(check_integral0z(n))
        reports.append(check_choi_reconciliation(n))
        reports.append(check_gf_simsek(n))
        reports.append(check_daehee(n))
        reports.append(check_cauchy(n))
        reports.append(check_stirling(n))
        if n >= 1:
            reports.append(check_cor4(n))
        for _ in range(samples):
            x0 = random_rational(rng)
            reports.append(check_oracle_poly(n, x0))
            reports.append(check_gf_simsek_poly(n, x0))
            reports.append(check_chu_vandermonde(x0, random_rational(rng), n))
        for k in range(max_n + 1):
            if n <= k:
                reports.append(check_bernstein_bridge(n, k))
            reports.append(check_gf_neg_simsek(n, k))
        reports.append(check_gf_q_poly(n, n, random_rational(rng)))
    for m in range(min(max_n, 3) + 1):
        for lam0 in SERIES_REP_LAMBDAS:
            x0 = Fraction(rng.randint(-4, 4), rng.randint(1, 4))
            reports.append(check_series_rep(m, x0, lam0, 200))
    reports.sort(key=VerifyReport.sort_key)
    return reports
