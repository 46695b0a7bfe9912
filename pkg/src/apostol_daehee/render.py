"""Text and LaTeX rendering of exact values.

Each rational coefficient is displayed in factored form
``c * lam^a * (lam - 1)^b * r(lam)``, the shape in which the Apostol-type
families are usually written.  Terms are ordered by descending power of
``log(lambda)``, then by descending degree in x.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from numbers import Rational

from .exact import LambdaPoly, LogElem, RatFunc, XPoly


class _Style:
    def __init__(self, latex: bool, var: str = "x"):
        self.latex = latex
        self.var = var

    @property
    def lam(self) -> str:
        return "\\lambda" if self.latex else "lambda"

    @property
    def log(self) -> str:
        return "\\log \\lambda" if self.latex else "log(lambda)"

    def power(self, base: str, e: int, atomic: bool) -> str:
        if not atomic:
            base = f"({base})"
        if e == 1:
            return base
        return f"{base}^{{{e}}}" if self.latex else f"{base}^{e}"

    def join(self, factors: list[str]) -> str:
        return " ".join(factors) if self.latex else "*".join(factors)


def _split(p: LambdaPoly) -> tuple[Fraction, int, int, LambdaPoly]:
    """Write ``p = c * lam^a * (lam - 1)^b * r`` with r integral and primitive."""
    a = p.valuation()
    r = p.shift(-a)
    b = 0
    while r.degree >= 1:
        q, rem = r.div_lam_minus_one()
        if rem != 0:
            break
        r, b = q, b + 1
    den = lcm(*(c.denominator for c in r.coeffs))
    ints = [int(c * den) for c in r.coeffs]
    g = gcd(*ints)
    if ints[-1] < 0:
        g = -g
    c = Fraction(g, den)
    return c, a, b, LambdaPoly(Fraction(v, 1) / g for v in ints)


def _poly_str(r: LambdaPoly, st: _Style) -> str:
    parts = []
    for i in range(r.degree, -1, -1):
        c = r.coeffs[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = st.power(st.lam, i, True)
            if mag == 1:
                body = mono
            else:
                body = f"{mag}{mono}" if st.latex else f"{mag}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def _factor_list(p: LambdaPoly, st: _Style) -> tuple[Fraction, list[tuple[str, bool]]]:
    """Content and symbolic factors ``(text, is_atomic)`` of a polynomial."""
    c, a, b, r = _split(p)
    out: list[tuple[str, bool]] = []
    if a:
        out.append((st.power(st.lam, a, True), True))
    if b:
        base = f"{st.lam} - 1"
        out.append((st.power(base, b, False), True) if b > 1 else (base, False))
    if r.degree >= 1:
        out.append((_poly_str(r, st), False))
    return c, out


def _product(int_coeff: int, factors: list[tuple[str, bool]], st: _Style, standalone: bool) -> str:
    """Multiply out; a lone sum factor stays bare when ``standalone``."""
    texts: list[str] = []
    if int_coeff != 1 or not factors:
        texts.append(str(int_coeff))
    lone = standalone and len(factors) == 1 and int_coeff == 1
    for text, atomic in factors:
        texts.append(text if atomic or lone else f"({text})")
    return st.join(texts)


def _term(coeff: RatFunc, x_deg: int, ell_exp: int, st: _Style) -> tuple[bool, str]:
    cn, num_f = _factor_list(coeff.num, st)
    cd, den_f = _factor_list(coeff.den, st)
    scale = cn / cd
    negative = scale < 0
    scale = abs(scale)
    if x_deg:
        num_f.append((st.power(st.var, x_deg, True), True))
    if ell_exp > 0:
        num_f.append((st.power(st.log, ell_exp, not st.latex or ell_exp == 1), True))
    elif ell_exp < 0:
        den_f.append((st.power(st.log, -ell_exp, not st.latex or ell_exp == -1), True))
    num_int, den_int = scale.numerator, scale.denominator
    if den_int == 1 and not den_f:
        return negative, _product(num_int, num_f, st, standalone=False)
    num_s = _product(num_int, num_f, st, standalone=st.latex)
    den_s = _product(den_int, den_f, st, standalone=st.latex)
    if st.latex:
        return negative, f"\\frac{{{num_s}}}{{{den_s}}}"
    if len(den_f) + (den_int != 1) > 1:
        den_s = f"({den_s})"
    return negative, f"{num_s}/{den_s}"


def _join_terms(terms: list[tuple[bool, str]]) -> str:
    if not terms:
        return "0"
    out = []
    for i, (neg, body) in enumerate(terms):
        if i == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out)


def _render_logelem(a: LogElem, st: _Style) -> str:
    return _join_terms([_term(c, 0, e, st) for e, c in a.items()])


def _render_xpoly(p: XPoly, st: _Style) -> str:
    triples = []
    for i, c in enumerate(p.coeffs):
        for e, rf in c.items():
            triples.append((e, i, rf))
    triples.sort(key=lambda t: (-t[0], -t[1]))
    return _join_terms([_term(rf, i, e, st) for e, i, rf in triples])


def render(value, fmt: str = "text", var: str = "x") -> str:
    """Render a scalar, RatFunc, LogElem or XPoly as ``text`` or ``latex``."""
    if fmt not in ("text", "latex"):
        raise ValueError(f"unknown format {fmt!r}")
    st = _Style(fmt == "latex", var)
    if isinstance(value, XPoly):
        return _render_xpoly(value, st)
    if isinstance(value, LogElem):
        return _render_logelem(value, st)
    if isinstance(value, RatFunc):
        return _render_logelem(LogElem.scalar(value), st)
    if isinstance(value, (int, Rational)):
        value = Fraction(value)
        if st.latex and value.denominator != 1:
            sign = "-" if value < 0 else ""
            return f"{sign}\\frac{{{abs(value.numerator)}}}{{{value.denominator}}}"
        return str(value)
    if isinstance(value, float):
        return repr(value)
    raise TypeError(f"cannot render {type(value).__name__}")


def ratfunc_text(r: RatFunc) -> str:
    return render(r)


def logelem_text(a: LogElem) -> str:
    return render(a)


def xpoly_text(p: XPoly) -> str:
    return render(p)
