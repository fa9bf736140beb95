import math

import numpy as np
import pytest
from hypothesis import given

from hedgehogs import DomainError, Hedgehog, NumericalError, TrigPoly
from hedgehogs import curvegeom as cg
from hedgehogs.fuzz import random_oval
from hedgehogs.inequality import (
    check_thm1,
    check_thm2,
    corollary_bounds,
    d_2,
    d_inf,
    equality_tolerance,
    full_report,
    isoperimetric_deficit,
    isoperimetric_deficit_direct,
    stability_bounds,
    stability_constant,
    sup_norm,
    symmetral_reference,
)
from hedgehogs.oracle import quadrature_integral

from conftest import GOLDEN, PENTAGON, angles, ks, ovals

PI2 = math.pi**2
NONCONVEX = Hedgehog(TrigPoly(10.0, ((2, 0.0, 1.0), (3, 1.0, 0.0), (6, 1.0, 0.0))))


def disk(r, x=0.0, y=0.0):
    return Hedgehog(TrigPoly(r, ((1, x, y),)))


def test_deficit_examples(golden, pentagon):
    assert isoperimetric_deficit(disk(3.0)) == 0.0
    assert isoperimetric_deficit(pentagon) == pytest.approx(246 * PI2, rel=1e-14)
    full = 2 * PI2 * (3 * 441 + 24 + 35 + 80 / 9 + 99 / 9)
    assert isoperimetric_deficit(golden) == pytest.approx(full, rel=1e-14)
    assert isoperimetric_deficit(golden) == pytest.approx(24604 * PI2 / 9 + 70 * PI2, rel=1e-14)
    assert isoperimetric_deficit_direct(golden) == pytest.approx(full, rel=1e-10)


def test_thm1_examples(golden, pentagon):
    t = check_thm1(pentagon, 5)
    assert t.slack == pytest.approx(0.0, abs=1e-9 * t.lhs) and t.equality
    assert t.rhs == pytest.approx(4 * math.pi * 123 * math.pi / 2)
    t = check_thm1(golden, 5)
    assert t.slack == pytest.approx(24604 * PI2 / 9, rel=1e-12) and not t.equality
    for k in (3, 4, 7):
        t = check_thm1(disk(2.0), k)
        assert t.lhs == t.rhs == 0.0 and t.equality


def test_thm2_examples(golden, pentagon):
    t = check_thm2(golden, 5)
    assert t.rhs - check_thm1(golden, 5).rhs == pytest.approx(14 * PI2 / 9, rel=1e-12)
    assert t.slack == pytest.approx(24590 * PI2 / 9, rel=1e-12) and not t.equality
    t = check_thm2(pentagon, 5)
    assert abs(t.slack) <= 1e-9 * t.lhs and t.equality
    t = check_thm2(disk(1.0), 6)
    assert t.slack == 0.0 and t.equality


def test_nonconvex_rejected_unless_unchecked():
    for fn in (check_thm1, check_thm2, stability_bounds, full_report):
        with pytest.raises(DomainError, match="outside theorem hypotheses"):
            fn(NONCONVEX, 3)
    with pytest.raises(DomainError):
        corollary_bounds(NONCONVEX)
    rep = full_report(NONCONVEX, 3, unchecked=True)
    assert rep.convexity_status == "nonconvex" and not rep.hypotheses_checked
    assert check_thm1(NONCONVEX, 3, unchecked=True).lhs == pytest.approx(2 * PI2 * (3 + 8 + 35))


def test_distance_examples(golden):
    N = symmetral_reference(golden, 5)
    assert d_inf(golden, N) == pytest.approx(67 / 3, rel=1e-10)
    assert d_2(golden, N) == pytest.approx(math.sqrt(3979 * math.pi) / 3, rel=1e-12)
    assert d_inf(golden, golden) == 0.0 and d_2(golden, golden) == 0.0
    assert d_inf(disk(1.0), disk(1.0, 0.25)) == pytest.approx(0.25, rel=1e-12)
    assert d_2(Hedgehog(TrigPoly(0.0, ((2, 1.0, 0.0),))), Hedgehog(TrigPoly())) == pytest.approx(math.sqrt(math.pi))


def test_sup_norm_guard():
    f = TrigPoly(0.0, ((3, 2.0, 0.0),))
    assert sup_norm(f) == pytest.approx(2.0, rel=1e-14)
    assert sup_norm(TrigPoly(-4.0)) == 4.0


@given(f=ovals(), g=ovals())
def test_d2_parseval_matches_quadrature(f, g):
    diff = f - g
    quad = quadrature_integral(lambda t: diff(t) ** 2, 512)
    exact = d_2(Hedgehog(f), Hedgehog(g)) ** 2
    assert abs(quad - exact) <= 1e-9 * exact + 1e-12


@given(f=ovals(), g=ovals())
def test_d_inf_matches_dense_grid(f, g):
    diff = f - g
    s = np.linspace(0, 2 * math.pi, 200_001)
    dense = float(np.abs(diff(s)).max())
    d = d_inf(Hedgehog(f), Hedgehog(g))
    assert dense <= d * (1 + 1e-12) + 1e-12
    assert d - dense <= 1e-6 * (1 + d)
    assert d <= diff.sup_bound() * (1 + 1e-12) + 1e-12


def test_stability_examples(golden, pentagon):
    s1, s2 = stability_bounds(golden, 5)
    assert s1 == pytest.approx(179560 * PI2 / (9 * (5 + 2 * math.pi / math.tan(math.pi / 5))), rel=1e-10)
    assert s1 == pytest.approx(14427.7, abs=0.05)
    assert s2 == pytest.approx(7958 * PI2 / 3, rel=1e-10)
    delta = check_thm1(golden, 5).slack
    assert s1 <= delta and s2 <= delta
    assert stability_bounds(pentagon, 5) == pytest.approx((0.0, 0.0), abs=1e-12)
    assert stability_bounds(disk(2.0), 4) == (0.0, 0.0)


def test_corollary_examples(golden):
    assert corollary_bounds(disk(5.0)) == (0.0, 0.0)
    for eps in (1e-3, 0.1, 1.0):
        O = Hedgehog(TrigPoly(10.0, ((2, eps, 0.0),)))
        b1, b2 = corollary_bounds(O)
        assert b2 == pytest.approx(6 * PI2 * eps**2, rel=1e-12)
        assert b2 == pytest.approx(isoperimetric_deficit(O), rel=1e-12)
        assert b1 <= isoperimetric_deficit(O)
    b1, b2 = corollary_bounds(golden)
    assert b2 == pytest.approx(6 * PI2 * (441 + 1 + 1 + 2 / 9), rel=1e-12)
    assert max(b1, b2) <= isoperimetric_deficit(golden)


def test_cotangent_constant():
    assert 1 / math.tan(math.pi / 5) == pytest.approx(math.sqrt(1 + 2 / math.sqrt(5)), abs=1e-12)
    m = np.arange(1, 1_000_001, dtype=float)
    for k in range(3, 13):
        x = 1 / k
        series = 1 / x + float(np.sum(2 * x / (x * x - m * m)))
        assert series == pytest.approx(math.pi / math.tan(math.pi * x), abs=1e-5)
        assert stability_constant(k) == pytest.approx(8 * PI2 * k / (k + 2 * math.pi / math.tan(math.pi / k)))


@given(f=ovals(), alpha=angles, x=angles, y=angles)
def test_deficit_rigid_motion_invariance(f, alpha, x, y):
    O = Hedgehog(f)
    base = isoperimetric_deficit(O)
    assert isoperimetric_deficit(cg.rotate(O, alpha)) == pytest.approx(base, rel=1e-10, abs=1e-10)
    moved = Hedgehog(f + TrigPoly(0.0, ((1, x, y),)))
    assert isoperimetric_deficit(moved) == pytest.approx(base, rel=1e-10, abs=1e-10)


@given(f=ovals(), k=ks)
def test_monotone_chain_and_report_consistency(f, k):
    O = Hedgehog(f)
    rep = full_report(O, k)
    tol = 1e-9 * rep.scale
    assert rep.deficit >= rep.slack_thm1 - tol
    assert rep.slack_thm1 >= rep.slack_thm2 - tol
    assert rep.slack_thm2 >= -tol
    assert rep.violations() == []
    if rep.equality_thm1:
        assert abs(rep.slack_thm1) <= tol


def test_stability_bounds_on_seeded_ovals():
    rng = np.random.default_rng(7)
    for _ in range(60):
        O = Hedgehog(random_oval(rng, 12))
        for k in range(3, 13):
            delta = check_thm1(O, k).slack
            tol = 1e-9 * max(1.0, isoperimetric_deficit(O))
            s1, s2 = stability_bounds(O, k)
            assert s1 <= delta + tol and s2 <= delta + tol


def test_equality_flag_from_exact_coefficients():
    # only multiples of k beyond the first harmonic: every k-gon regular
    O = Hedgehog(TrigPoly(200.0, ((1, 3.0, 4.0), (4, 1.0, 2.0), (8, 0.5, 0.0))))
    assert check_thm1(O, 4).equality and abs(check_thm1(O, 4).slack) <= 1e-9 * isoperimetric_deficit(O)
    assert not check_thm1(O, 3).equality


def test_tolerance_override(monkeypatch):
    O = Hedgehog(PENTAGON + TrigPoly(0.0, ((2, 1e-6, 0.0),)))
    assert equality_tolerance() == 1e-9
    assert not check_thm1(O, 5).equality
    monkeypatch.setenv("HEDGEHOG_TOL", "1e-6")
    assert equality_tolerance() == 1e-6
    assert check_thm1(O, 5).equality
    monkeypatch.setenv("HEDGEHOG_TOL", "nope")
    with pytest.raises(DomainError):
        check_thm1(O, 5)


def test_golden_report(golden):
    rep = full_report(golden, 5)
    assert rep.deficit - rep.abs_area_preserving == pytest.approx(24604 * PI2 / 9, rel=1e-12)
    assert rep.abs_area_midpoint_term == pytest.approx(14 * PI2 / 9, rel=1e-12)
    assert rep.d_inf == pytest.approx(67 / 3, rel=1e-10)
    assert rep.stab2_bound == pytest.approx(7958 * PI2 / 3, rel=1e-10)
    assert set(rep.to_dict()) >= {"slack_thm1", "slack_thm2", "d_inf", "d_2", "corollary_bounds"}
    circle = full_report(disk(1.0), 3)
    assert circle.deficit == 0.0 and circle.equality_thm1 and circle.equality_thm2


def test_numerical_error_is_arithmetic():
    assert issubclass(NumericalError, ArithmeticError)
