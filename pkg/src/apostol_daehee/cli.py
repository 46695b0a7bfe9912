"""Command-line front end: ``value``, ``verify`` and ``plot-data``."""

from __future__ import annotations

import argparse
import csv
import json
import math
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import apostol as ap
from . import numbers as nb
from . import verify as vf
from .errors import ApostolError, DomainError, MissingParameter
from .exact import EvalExact, LogElem, RatFunc, XPoly, eval_exact_lambda, eval_float, eval_float_xpoly, xpoly_eval_x
from .render import render

FAMILIES = ap.FAMILIES + ("stirling1", "daehee", "cauchy", "bernstein")
PLOT_FAMILIES = {"adpoly": "D", "adnum": "D", "ypoly": "Y", "ynum": "Y", "qpoly": "Q", "yneg": "Y"}

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


# -- argument parsing helpers --------------------------------------------------

_EXP_RE = re.compile(r"^e(?:\s*(?:\^|\*\*)\s*(.+))?$")


def parse_real(text: str) -> float:
    """A float from ``3.5``, ``7/2``, ``e``, ``e^2`` or ``exp(2)``."""
    s = text.strip()
    m = _EXP_RE.match(s)
    if m:
        return math.exp(parse_real(m.group(1))) if m.group(1) else math.e
    if s.startswith("exp(") and s.endswith(")"):
        return math.exp(parse_real(s[4:-1]))
    try:
        return float(Fraction(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a real number: {text!r}") from exc


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def parse_n_list(text: str) -> list[int]:
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise argparse.ArgumentTypeError("empty index list")
    return out


# -- value ---------------------------------------------------------------------


def _render_eval_exact(v: EvalExact, lam0: Fraction, fmt: str) -> str:
    if not v.terms:
        return "0"
    log = f"\\log {lam0}" if fmt == "latex" else f"log({lam0})"
    parts = []
    for e in sorted(v.terms, reverse=True):
        c = v.terms[e]
        mag = render(abs(c), fmt)
        if e == 0:
            body = mag
        else:
            powered = log if e == 1 else (f"({log})^{{{e}}}" if fmt == "latex" else f"{log}^{e}")
            if abs(c) == 1:
                body = powered
            else:
                body = f"{mag} {powered}" if fmt == "latex" else f"{mag}*{powered}"
        sign = "-" if c < 0 else "+"
        parts.append(("-" if c < 0 else "") + body if not parts else f"{sign} {body}")
    return " ".join(parts)


def compute_value(family: str, n: int, k: int | None = None, x: Fraction | None = None,
                  lam: Fraction | float | None = None):
    """The value a ``value`` command reports, before rendering.

    Returns a symbolic object, an :class:`EvalExact` when ``lam`` is a
    Fraction, or a float when ``lam`` is a float.
    """
    if family not in FAMILIES:
        raise MissingParameter(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if family in ("yneg", "qpoly", "stirling1", "bernstein") and k is None:
        raise MissingParameter(f"family {family!r} needs --k")
    if family == "bernstein" and x is None:
        raise MissingParameter("family 'bernstein' needs --x")
    if family == "stirling1":
        return nb.stirling1(n, k)
    if family == "daehee":
        return nb.daehee(n)
    if family == "cauchy":
        return nb.cauchy(n)
    if family == "bernstein":
        return nb.bernstein(k, n, x)

    value = ap.family_value(family, n, k).value
    if isinstance(value, RatFunc):
        value = LogElem.scalar(value)
    if lam is None:
        if isinstance(value, XPoly) and x is not None:
            return xpoly_eval_x(value, x)
        return value
    if isinstance(lam, float):
        if isinstance(value, XPoly):
            if x is None:
                raise MissingParameter("a numeric value of a polynomial family needs --x")
            return eval_float_xpoly(value, x, lam)
        return eval_float(value, lam)
    if isinstance(value, XPoly):
        if x is None:
            raise MissingParameter("an exact value of a polynomial family needs --x")
        value = xpoly_eval_x(value, x)
    return eval_exact_lambda(value, lam)


def format_value(value, fmt: str, lam: Fraction | float | None = None) -> str:
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, EvalExact):
        return _render_eval_exact(value, lam, fmt)
    return render(value, fmt)


def cmd_value(family: str, n: int, k: int | None = None, x0: Fraction | None = None,
              lam0: Fraction | float | None = None, fmt: str = "text") -> str:
    """Rendered value of one family member.

    Symbolic without ``lam0``; exact with ``log(lam0)`` kept symbolic when
    ``lam0`` is a Fraction; a float when ``lam0`` is a float.
    """
    if fmt not in ("text", "latex", "json"):
        raise ValueError(f"unknown format {fmt!r}")
    if isinstance(lam0, float) and (not lam0 > 0 or lam0 == 1):
        raise DomainError(f"numeric evaluation needs lambda > 0 and lambda != 1, got {lam0}")
    value = compute_value(family, n, k, x0, lam0)
    if fmt != "json":
        return format_value(value, fmt, lam0)
    params: dict = {}
    if x0 is not None:
        params["x"] = str(x0)
    if lam0 is not None:
        params["lambda"] = str(lam0) if isinstance(lam0, Fraction) else lam0
    payload = {
        "family": family,
        "n": n,
        "k": k,
        "params": params,
        "value": value if isinstance(value, float) else format_value(value, "text", lam0),
    }
    if not isinstance(value, float):
        payload["latex"] = format_value(value, "latex", lam0)
    return json.dumps(payload)


def _value_from_args(args: argparse.Namespace) -> int:
    lam0 = None
    if args.lam is not None:
        lam0 = parse_rational(args.lam) if args.exact else parse_real(args.lam)
    x0 = parse_rational(args.x) if args.x is not None else None
    print(cmd_value(args.family, args.n, args.k, x0, lam0, args.format))
    return EXIT_OK


# -- verify ----------------------------------------------------------------------


def cmd_verify(max_n: int = 6, samples: int = 3, seed: int = 0, json_lines: bool = False, out=None) -> int:
    """Run the suite, stream one line per report, and return the exit code."""
    out = out if out is not None else sys.stdout
    reports = vf.run_suite(max_n, samples, seed)
    for r in reports:
        if json_lines:
            print(json.dumps(r.to_json()), file=out)
        else:
            status = "PASS" if r.passed else "FAIL"
            params = ", ".join(f"{k}={v}" for k, v in r.params.items())
            print(f"{status} {r.identity}({params})", file=out)
    failed = sum(not r.passed for r in reports)
    if not json_lines:
        print(f"{len(reports) - failed}/{len(reports)} checks passed", file=out)
    return EXIT_OK if failed == 0 else EXIT_FAILED


# -- plot-data ---------------------------------------------------------------------


@dataclass(frozen=True)
class PlotSpec:
    family: str
    n_list: tuple[int, ...]
    sweep: str
    fixed: float | Fraction
    lo: float
    hi: float
    samples: int
    k: int | None = None

    def __post_init__(self):
        if self.family not in PLOT_FAMILIES:
            raise MissingParameter(f"family {self.family!r} cannot be plotted")
        if self.family in ("qpoly", "yneg") and self.k is None:
            raise MissingParameter(f"family {self.family!r} needs --k")
        if self.sweep not in ("lambda", "x"):
            raise ValueError("sweep must be 'lambda' or 'x'")
        if not self.lo < self.hi:
            raise DomainError(f"empty range [{self.lo}, {self.hi}]")
        if self.samples < 2:
            raise DomainError("at least two samples are needed")
        if self.sweep == "lambda":
            if self.lo <= 0:
                raise DomainError("lambda sweep must stay positive")
            if self.lo <= 1 <= self.hi:
                raise DomainError("lambda sweep range contains the pole at lambda = 1")
        else:
            lam = float(self.fixed)
            if not lam > 0 or lam == 1:
                raise DomainError(f"fixed lambda must be positive and != 1, got {lam}")

    def grid(self) -> list[float]:
        step = (self.hi - self.lo) / (self.samples - 1)
        pts = [self.lo + i * step for i in range(self.samples - 1)]
        return pts + [self.hi]

    def columns(self) -> list[str]:
        prefix = PLOT_FAMILIES[self.family]
        return ["param"] + [f"{prefix}{n}" for n in self.n_list]


PRESETS: dict[str, dict] = {
    "fig1": dict(sweep="lambda", fixed=Fraction(1), lo=1.5, hi=3.5),
    "fig2": dict(sweep="lambda", fixed=Fraction(2), lo=1.5, hi=3.5),
    "fig3": dict(sweep="lambda", fixed=Fraction(3), lo=1.5, hi=3.5),
    "fig4a": dict(sweep="x", fixed=1.5, lo=-2.0, hi=2.0),
    "fig4b": dict(sweep="x", fixed=math.e, lo=-2.0, hi=2.0),
    "fig4c": dict(sweep="x", fixed=3.5, lo=-2.0, hi=2.0),
    "fig4d": dict(sweep="x", fixed=math.exp(2), lo=-2.0, hi=2.0),
}


def preset_spec(name: str, samples: int = 201) -> PlotSpec:
    """A named sweep of D_n(x; lambda) for n = 0..3."""
    return PlotSpec(family="adpoly", n_list=(0, 1, 2, 3), samples=samples, **PRESETS[name])


def _symbolic(family: str, n: int, k: int | None) -> XPoly:
    v = ap.family_value(family, n, k).value
    return v if isinstance(v, XPoly) else XPoly.constant(v)


def plot_rows(spec: PlotSpec) -> list[list[float]]:
    polys = [_symbolic(spec.family, n, spec.k) for n in spec.n_list]
    rows = []
    for p in spec.grid():
        if spec.sweep == "lambda":
            vals = [eval_float_xpoly(q, spec.fixed, p) for q in polys]
        else:
            vals = [eval_float_xpoly(q, p, spec.fixed) for q in polys]
        rows.append([p] + vals)
    return rows


def cmd_plot_data(spec: PlotSpec, out: str | Path) -> Path:
    """Write the sweep as CSV: header ``param,D0,...`` and one row per sample."""
    out = Path(out)
    rows = plot_rows(spec)
    with out.open("w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(spec.columns())
        for row in rows:
            w.writerow(f"{v:.17g}" for v in row)
    return out


def _plot_from_args(args: argparse.Namespace) -> int:
    if args.preset:
        spec = preset_spec(args.preset, args.samples or 201)
    else:
        missing = [name for name in ("sweep", "fixed", "min", "max") if getattr(args, name) is None]
        if missing:
            raise MissingParameter("plot-data needs --" + ", --".join(missing) + " (or --preset)")
        if args.sweep == "lambda":
            fixed = parse_rational(args.fixed) if _is_rational(args.fixed) else parse_real(args.fixed)
        else:
            fixed = parse_real(args.fixed)
        spec = PlotSpec(
            family=args.family,
            n_list=tuple(args.n_list),
            sweep=args.sweep,
            fixed=fixed,
            lo=parse_real(args.min),
            hi=parse_real(args.max),
            samples=args.samples or 201,
            k=args.k,
        )
    cmd_plot_data(spec, args.out)
    return EXIT_OK


def _is_rational(text: str) -> bool:
    try:
        Fraction(text)
    except ValueError:
        return False
    return True


# -- entry point -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apostol-daehee",
        description="Exact lambda-Apostol-Daehee and Simsek numbers and polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("value", help="compute one value")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--x", help="rational x, e.g. 1/2")
    p.add_argument("--lambda", dest="lam", help="lambda value (float, 7/2, e, e^2)")
    p.add_argument("--exact", action="store_true", help="treat --lambda as an exact rational")
    p.add_argument("--format", choices=("text", "latex", "json"), default="text")

    p = sub.add_parser("verify", help="run the identity verification suite")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--samples", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true", help="emit one JSON object per report")

    p = sub.add_parser("plot-data", help="write CSV data for a parameter sweep")
    p.add_argument("--family", default="adpoly", choices=sorted(PLOT_FAMILIES))
    p.add_argument("--n-list", type=parse_n_list, default=[0, 1, 2, 3])
    p.add_argument("--k", type=int)
    p.add_argument("--sweep", choices=("lambda", "x"))
    p.add_argument("--fixed", help="value of the parameter that is not swept")
    p.add_argument("--min")
    p.add_argument("--max")
    p.add_argument("--samples", type=int)
    p.add_argument("--preset", choices=sorted(PRESETS))
    p.add_argument("--out", required=True)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "value":
            return _value_from_args(args)
        if args.command == "verify":
            return cmd_verify(args.max_n, args.samples, args.seed, args.json)
        return _plot_from_args(args)
    except (ApostolError, ValueError, ZeroDivisionError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
