"""Exact arithmetic: rationals, rational functions in lambda, the ell-ring and x-polynomials."""

from fractions import Fraction as Rational

from .lambdapoly import LambdaPoly
from .logelem import EvalExact, LogElem, eval_exact_lambda, eval_float, log_arith, log_div_monomial
from .ratfunc import LAM, LAM_MINUS_ONE, RatFunc, ratfunc_make
from .xpoly import Z, XPoly, eval_float_xpoly, xpoly_eval_x, xpoly_integrate

ELL = LogElem.ell()

__all__ = [
    "ELL",
    "LAM",
    "LAM_MINUS_ONE",
    "EvalExact",
    "LambdaPoly",
    "LogElem",
    "RatFunc",
    "Rational",
    "XPoly",
    "Z",
    "eval_exact_lambda",
    "eval_float",
    "eval_float_xpoly",
    "log_arith",
    "log_div_monomial",
    "ratfunc_make",
    "xpoly_eval_x",
    "xpoly_integrate",
]
