"""Acceptance gate: one test per criterion, each reporting a pass/fail line."""

from __future__ import annotations

import csv
import math
import random
import time
from fractions import Fraction

import reference_values as ref
from apostol_daehee import apostol as ap
from apostol_daehee import numbers as nb
from apostol_daehee import verify as vf
from apostol_daehee.cli import PRESETS, cmd_plot_data, preset_spec
from apostol_daehee.exact import xpoly_eval_x

X_POINTS = (Fraction(0), Fraction(1), Fraction(1, 2), Fraction(-2))


def _elapsed(start: float) -> float:
    return time.perf_counter() - start


def test_criterion_1_golden_values(criterion):
    start = time.perf_counter()
    mismatches = []
    mismatches += [f"ad_num({n})" for n, v in enumerate(ref.ad_numbers()) if ap.ad_num(n) != v]
    mismatches += [f"y_num({n})" for n, v in enumerate(ref.simsek_numbers()) if ap.y_num(n) != v]
    mismatches += [f"y_poly({n})" for n, v in enumerate(ref.simsek_polys()) if ap.y_poly(n) != v]
    for k in range(7):
        mismatches += [f"q_poly({n},{k})" for n, v in enumerate(ref.q_polys(k)) if ap.q_poly(n, k) != v]
    mismatches += [f"ad_poly({n})" for n, v in enumerate(ref.ad_polys()) if ap.ad_poly(n) != v]
    dt = _elapsed(start)
    criterion.record(
        1, "golden symbolic values", not mismatches and dt < 1.0, f"{dt:.3f}s, mismatches={mismatches}"
    )


def test_criterion_2_oracle_equivalence(criterion):
    start = time.perf_counter()
    bad = [f"ad_num({n})" for n in range(13) if ap.ad_num(n) != ap.ad_num_oracle(n, n)]
    for n in range(13):
        for x0 in X_POINTS:
            if xpoly_eval_x(ap.ad_poly(n), x0) != ap.ad_poly_oracle(n, x0, n):
                bad.append(f"ad_poly({n}, x={x0})")
    dt = _elapsed(start)
    criterion.record(2, "closed forms equal generating-function oracles", not bad and dt < 10.0, f"{dt:.2f}s, bad={bad}")


def test_criterion_3_theorem1(criterion):
    start = time.perf_counter()
    rng = random.Random(2024)
    bad = []
    for m in range(2, 9):
        for _ in range(5):
            x0, y0 = vf.random_rational(rng), vf.random_rational(rng)
            r = vf.check_theorem1(m, x0, y0)
            if not (r.passed and r.extra["rhs"] == nb.gbinom(x0 + y0, m)):
                bad.append((m, x0, y0))
    dt = _elapsed(start)
    criterion.record(
        3, "binomial identity from Apostol-Daehee products", not bad and dt < 60.0, f"{dt:.2f}s, 35 cases, bad={bad}"
    )


def test_criterion_4_corollaries(criterion):
    reports = [vf.check_cor4(n) for n in range(1, 13)]
    reports += [vf.check_theorem2_forms(n) for n in range(13)]
    reports += [vf.check_cor2(n) for n in range(13)]
    bad = [(r.identity, r.params) for r in reports if not r.passed]
    criterion.record(4, "alternative closed forms agree", not bad, f"{len(reports)} checks, bad={bad}")


def test_criterion_5_integrals(criterion):
    reports = [vf.check_integral01(n) for n in range(11)] + [vf.check_integral0z(n) for n in range(11)]
    bad = [(r.identity, r.params) for r in reports if not r.passed]
    criterion.record(5, "integral identities", not bad, f"{len(reports)} checks, bad={bad}")


def test_criterion_6_bernstein_and_classical(criterion):
    reports = [vf.check_bernstein_bridge(n, k) for k in range(9) for n in range(k + 1)]
    reports += [vf.check_daehee(n) for n in range(13)]
    reports += [vf.check_cauchy(n) for n in range(13)]
    reports += [vf.check_stirling(n) for n in range(13)]
    bad = [(r.identity, r.params) for r in reports if not r.passed]
    criterion.record(6, "Bernstein bridge and classical sequences", not bad, f"{len(reports)} checks, bad={bad}")


def test_criterion_7_series_representation(criterion):
    cases = [(0, 0, 1.25, 60), (1, 1, 1.25, 60), (2, Fraction(1, 2), 1.1, 80), (3, 1, 1.5, 160)]
    start = time.perf_counter()
    reports = [vf.check_series_rep(m, x0, lam0, N, tol=1e-9) for m, x0, lam0, N in cases]
    dt = _elapsed(start)
    bad = [r.params for r in reports if not r.passed]
    worst = max(abs(r.residual) for r in reports)
    criterion.record(
        7, "series representation", not bad and dt < 5.0, f"{dt:.2f}s, max |error| = {worst:.2e}, bad={bad}"
    )


def test_criterion_8_figure_data(criterion, tmp_path):
    worst, count, problems = 0.0, 0, []
    for name in sorted(PRESETS):
        spec = preset_spec(name, samples=201)
        path = cmd_plot_data(spec, tmp_path / f"{name}.csv")
        with path.open(newline="") as fh:
            rows = list(csv.reader(fh))
        if rows[0] != ["param", "D0", "D1", "D2", "D3"] or len(rows) != 202:
            problems.append(f"{name}: bad shape")
            continue
        for row in rows[1:]:
            p = float(row[0])
            x, lam = (float(spec.fixed), p) if spec.sweep == "lambda" else (p, float(spec.fixed))
            for n, cell in enumerate(row[1:]):
                expected = ref.direct_dpoly(x, lam, n)
                got = float(cell)
                rel = abs(got - expected) / abs(expected) if expected else abs(got)
                worst = max(worst, rel)
                count += 1
                if not math.isfinite(got) or rel > 1e-12:
                    problems.append(f"{name}: n={n} param={p} rel={rel:.2e}")
    criterion.record(
        8, "figure data", not problems, f"{count} values, max relative error {worst:.2e}, problems={problems[:5]}"
    )
