"""End-to-end acceptance criteria, one test per criterion.

Each test appends a PASS/FAIL line that is printed in the terminal summary.
"""

import math
import time

import numpy as np
import pytest

from hedgehogs import Hedgehog, TrigPoly
from hedgehogs import curvegeom as cg
from hedgehogs.fourier import evaluate, phase_shift
from hedgehogs.fuzz import random_case
from hedgehogs.inequality import (
    check_thm1,
    check_thm2,
    d_2,
    d_inf,
    full_report,
    isoperimetric_deficit,
    stability_bounds,
    symmetral_reference,
)
from hedgehogs.midpoint import circumscribed_polygon, midpoint_oriented_area, midpoint_points, midpoint_set
from hedgehogs.oracle import green_area, quadrature_integral
from hedgehogs.preserving import (
    preserving_from_isogonal,
    preserving_oriented_area,
    preserving_point_at,
    preserving_set,
    preserving_singularities,
)

from conftest import ACCEPTANCE_LINES, GOLDEN, MIXED34, PENTAGON

PI2 = math.pi**2
SEED, TRIALS, MAX_DEGREE, K_MIN, K_MAX = 42, 1000, 12, 3, 8
QUAD = 4096


def record(number, title, failures, elapsed):
    status = "PASS" if not failures else "FAIL"
    detail = "" if not failures else ": " + "; ".join(failures[:5])
    ACCEPTANCE_LINES.append(f"[{status}] criterion {number} ({title}) {elapsed:.2f}s{detail}")
    print(ACCEPTANCE_LINES[-1])
    assert not failures, "\n".join(failures)


def rel_ok(x, ref, rel):
    return abs(x - ref) <= rel * abs(ref)


@pytest.fixture(scope="module")
def corpus():
    return [random_case(SEED, t, MAX_DEGREE, K_MIN, K_MAX) for t in range(TRIALS)]


def test_criterion_1_golden_example():
    t0 = time.perf_counter()
    O = Hedgehog(GOLDEN)
    N = symmetral_reference(O, 5)
    delta5 = check_thm1(O, 5).slack
    stab1, stab2 = stability_bounds(O, 5)
    expected = {
        "L": (cg.algebraic_length(O), 274 * math.pi),
        "A": (cg.oriented_area(O), 325225 * math.pi / 18),
        "A_P5": (preserving_oriented_area(preserving_set(O, 5)), -35 * math.pi / 2),
        "Delta5": (delta5, 24604 * PI2 / 9),
        "d_inf": (d_inf(O, N), 67 / 3),
        "d_2": (d_2(O, N), math.sqrt(3979 * math.pi) / 3),
        "stab1": (stab1, 179560 * PI2 / (9 * (5 + 2 * math.pi / math.tan(math.pi / 5)))),
        "stab2": (stab2, 7958 * PI2 / 3),
    }
    failures = [f"{name}={got!r} want {want!r}" for name, (got, want) in expected.items() if not rel_ok(got, want, 1e-10)]
    if not abs(delta5 - 26981.3) < 0.05:
        failures.append(f"Delta5 ~ 26981.3, got {delta5}")
    if not (abs(stab1 - 14427.7) < 0.05 and abs(stab2 - 26180.8) < 0.05):
        failures.append(f"stab approximations {stab1}, {stab2}")
    if not (stab1 <= delta5 and stab2 <= delta5):
        failures.append("stability bound exceeds Delta5")
    elapsed = time.perf_counter() - t0
    if elapsed >= 1.0:
        failures.append(f"runtime {elapsed:.2f}s >= 1s")
    record(1, "golden example", failures, elapsed)


def test_criterion_2_midpoint_sign_triple():
    t0 = time.perf_counter()
    cases = [
        (TrigPoly(81.0, ((3, 0.0, 1.0), (5, 0.0, -1.0), (7, 0.0, 1.0))), 2 * math.pi),
        (TrigPoly(105.0, ((3, 0.0, 1.0), (5, 0.0, -2.0), (7, 0.0, 1.0))), -math.pi),
        (TrigPoly(108.0, ((3, 0.0, math.sqrt(2.0)), (5, 0.0, -2.0), (7, 0.0, 1.0))), 0.0),
    ]
    failures = []
    for f, want in cases:
        got = midpoint_oriented_area(Hedgehog(f), 4)
        scale = max(1.0, isoperimetric_deficit(Hedgehog(f)))
        ok = abs(got) <= 1e-9 * scale if want == 0.0 else rel_ok(got, want, 1e-10)
        if not ok or (want != 0.0 and math.copysign(1, got) != math.copysign(1, want)):
            failures.append(f"a0={f.a0}: A_Omega={got!r} want {want!r}")
    elapsed = time.perf_counter() - t0
    if elapsed >= 1.0:
        failures.append(f"runtime {elapsed:.2f}s >= 1s")
    record(2, "midpoint sign triple", failures, elapsed)


def test_criterion_3_equality_case():
    t0 = time.perf_counter()
    O = Hedgehog(PENTAGON)
    t1, t2 = check_thm1(O, 5), check_thm2(O, 5)
    scale = max(1.0, t1.lhs)
    failures = []
    if abs(t1.slack) > 1e-9 * scale or abs(t2.slack) > 1e-9 * scale:
        failures.append(f"slacks {t1.slack}, {t2.slack}")
    if not (t1.equality and t2.equality):
        failures.append("equality flags not set")
    curve = midpoint_set(O, 5).sample(512)
    diameter = float(np.ptp(curve, axis=0).max())
    if diameter > 1e-9 * scale:
        failures.append(f"midpoint diameter {diameter}")
    poly = circumscribed_polygon(O, 5, 0.0)
    d = poly.vertex_distances()
    if float(np.ptp(d)) > 1e-9:
        failures.append(f"vertex distances spread {np.ptp(d)}")
    elapsed = time.perf_counter() - t0
    if elapsed >= 1.0:
        failures.append(f"runtime {elapsed:.2f}s >= 1s")
    record(3, "equality case", failures, elapsed)


def test_criterion_4_cusp_counts():
    t0 = time.perf_counter()
    H = Hedgehog(MIXED34)
    failures = []
    for k, want in ((3, 6), (4, 8)):
        pts = preserving_singularities(preserving_set(H, k), strict=True)
        cusps = [p for p in pts if p.is_cusp]
        if len(cusps) != want or len(pts) != want or len(pts) % k:
            failures.append(f"k={k}: {len(cusps)} cusps of {len(pts)} singular points, want {want}")
    elapsed = time.perf_counter() - t0
    if elapsed >= 1.0:
        failures.append(f"runtime {elapsed:.2f}s >= 1s")
    record(4, "cusp counts", failures, elapsed)


def oracle_failures(f, k, s):
    H = Hedgehog(f)
    sup = f.sup_bound()
    out = []
    t = np.arange(QUAD) * (2 * math.pi / QUAD)
    tc = np.append(t, 2 * math.pi)
    h = evaluate(f, t)
    if not rel_ok(green_area(cg.points_at(H, tc)), cg.oriented_area(H), 1e-7):
        out.append("area")
    if not rel_ok(quadrature_integral(lambda x: evaluate(f, x), QUAD), cg.algebraic_length(H), 1e-7):
        out.append("length")
    sp = np.array([np.sum(h * np.cos(t)), np.sum(h * np.sin(t))]) * (2 / QUAD)
    if np.hypot(*(sp - np.asarray(cg.steiner_point(H)))) > 1e-7 * max(1.0, float(np.hypot(*sp)), sup):
        out.append("steiner point")
    exact = k * midpoint_oriented_area(H, k)
    green = green_area(midpoint_points(H, k, tc))
    if abs(green - exact) > 1e-7 * abs(exact) + 1e-9 * sup**2:
        out.append("midpoint green = k * area")
    p, q = preserving_from_isogonal(H, k, s), preserving_point_at(preserving_set(H, k), s)
    if math.hypot(p.x - q.x, p.y - q.y) > 1e-8 * (1 + sup):
        out.append("preserving dual route")
    return out


def test_criterion_5_oracle_equivalence(corpus):
    t0 = time.perf_counter()
    failures = []
    for trial, (f, k, s) in enumerate(corpus):
        bad = oracle_failures(f, k, s)
        if bad:
            failures.append(f"trial {trial} k={k}: {', '.join(bad)}")
    elapsed = time.perf_counter() - t0
    if elapsed >= 60.0:
        failures.append(f"runtime {elapsed:.1f}s >= 60s")
    record(5, f"oracle equivalence, {len(corpus)} inputs", failures, elapsed)


def test_criterion_6_inequality_fuzz(corpus):
    t0 = time.perf_counter()
    failures = []
    for trial, (f, k, _) in enumerate(corpus):
        r = full_report(Hedgehog(f), k)
        tol = 1e-9 * max(1.0, r.deficit)
        checks = {
            "slack_thm1 >= 0": r.slack_thm1 >= -tol,
            "slack_thm2 >= 0": r.slack_thm2 >= -tol,
            "stab1 <= slack_thm1": r.stab1_bound <= r.slack_thm1 + tol,
            "stab2 <= slack_thm1": r.stab2_bound <= r.slack_thm1 + tol,
        }
        bad = [name for name, ok in checks.items() if not ok]
        if bad:
            failures.append(f"trial {trial} k={k}: {', '.join(bad)}")
    record(6, f"inequality fuzz, {len(corpus)} inputs", failures, time.perf_counter() - t0)


def property_failures(f, k, s):
    H = Hedgehog(f)
    sup = f.sup_bound()
    out = []
    P = preserving_set(H, k)
    grid = np.linspace(0, 2 * math.pi, 97)
    hk = P.support
    if np.max(np.abs(evaluate(hk, grid + 2 * math.pi / k) - evaluate(hk, grid))) > 1e-10 * (1 + sup):
        out.append("h_k periodicity")

    eps = 1e-6
    for t in (s, s + 1.0, s + 2.5):
        rho, rho_k = cg.radius_of_curvature(H, t), evaluate(hk, t) + evaluate(hk, t, 2)
        if abs(rho) < 1e-3 * (1 + sup) or abs(rho_k) < 1e-3 * (1 + sup):
            continue
        dH = cg.points_at(H, t + eps) - cg.points_at(H, t - eps)
        dP = cg.points_at(P.as_hedgehog, t + eps) - cg.points_at(P.as_hedgehog, t - eps)
        sine = abs(dH[0] * dP[1] - dH[1] * dP[0]) / (np.hypot(*dH) * np.hypot(*dP))
        if sine > 1e-5:
            out.append("parallel tangents")
            break

    back = phase_shift(phase_shift(f, s), -s)
    if abs(back.a0 - f.a0) > 1e-12 * (1 + abs(f.a0)) or any(
        np.hypot(*(np.subtract(back.coeff(n), (a, b)))) > 1e-12 * (1 + sup) for n, a, b in f.harmonics
    ):
        out.append("phase-shift round trip")

    c = circumscribed_polygon(H, k, s).centroid
    m = midpoint_points(H, k, s)
    if math.hypot(c.x - m[0], c.y - m[1]) > 1e-9 * (1 + sup):
        out.append("centroid identity")

    for big in (f.degree + 1, f.degree + 7):
        if big >= 3 and (not preserving_set(H, big).is_degenerate or preserving_point_at(preserving_set(H, big), s) != (0.0, 0.0)):
            out.append(f"degeneration k={big}")

    base = isoperimetric_deficit(H)
    moved = Hedgehog(cg.rotate(H, s).support + TrigPoly(0.0, ((1, 3.0, -7.0),)))
    if abs(isoperimetric_deficit(moved) - base) > 1e-10 * max(1.0, base):
        out.append("deficit rigid motion")
    return out


def test_criterion_7_property_suites(corpus):
    t0 = time.perf_counter()
    failures = []
    for trial, (f, k, s) in enumerate(corpus):
        bad = property_failures(f, k, s)
        if bad:
            failures.append(f"trial {trial} k={k}: {', '.join(bad)}")
    record(7, f"property suites, {len(corpus)} inputs", failures, time.perf_counter() - t0)
