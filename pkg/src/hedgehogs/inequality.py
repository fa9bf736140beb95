"""Isoperimetric-type inequalities for ovals and their stability bounds.

For an oval with support h = a0 + sum a_n cos(ns) + b_n sin(ns):

    deficit   = L^2 - 4 pi A = 2 pi^2 sum_{n>=2} (n^2 - 1)(a_n^2 + b_n^2)
    Delta_k   = deficit - 4 pi |A(P_k)|
    thm 1     : Delta_k >= 0
    thm 2     : Delta_k - 2 pi |A(Omega_k)| >= 0
    stability : Delta_k >= 8 pi^2 k / (2 pi cot(pi/k) + k) * d_inf^2(O, P_k + D_O)
                Delta_k >= 6 pi d_2^2(O, P_k + D_O)

The theorems are stated for ovals. Every check refuses non-convex input unless
``unchecked=True``; the formulas stay well defined but the result is then
outside the theorem hypotheses.
"""

from __future__ import annotations

import math
import os
from dataclasses import asdict, dataclass
from typing import NamedTuple

import numpy as np
from scipy.optimize import minimize_scalar

from .curvegeom import (
    TWO_PI,
    Hedgehog,
    algebraic_length,
    convexity_status,
    oriented_area,
    steiner_disk_hedgehog,
)
from .errors import DomainError, NumericalError, check_k
from .fourier import TrigPoly, evaluate, l2_norm_squared
from .midpoint import all_kgons_regular, midpoint_oriented_area
from .preserving import minkowski_sum, preserving_oriented_area, preserving_set

DEFAULT_EQUALITY_TOL = 1e-9
SLACK_TOL = 1e-9


def equality_tolerance() -> float:
    """Relative tolerance for equality detection; ``HEDGEHOG_TOL`` overrides."""
    raw = os.environ.get("HEDGEHOG_TOL")
    if raw is None or raw.strip() == "":
        return DEFAULT_EQUALITY_TOL
    try:
        tol = float(raw)
    except ValueError as exc:
        raise DomainError(f"HEDGEHOG_TOL must be a decimal number, got {raw!r}") from exc
    if not tol > 0:
        raise DomainError(f"HEDGEHOG_TOL must be positive, got {raw!r}")
    return tol


def _harmonic_tol(O: Hedgehog, tol: float | None) -> float:
    rel = equality_tolerance() if tol is None else tol
    return rel * max(1.0, abs(O.support.a0))


def _require_oval(O: Hedgehog, unchecked: bool) -> None:
    if unchecked:
        return
    status = convexity_status(O)
    if status != "convex":
        raise DomainError(f"curve is {status}: outside theorem hypotheses (pass unchecked=True to override)")


def isoperimetric_deficit(O: Hedgehog) -> float:
    f = O.support
    n = f.indices.astype(float)
    return 2.0 * math.pi**2 * float(np.sum((n**2 - 1.0) * (f.cos_coeffs**2 + f.sin_coeffs**2)))


def isoperimetric_deficit_direct(O: Hedgehog) -> float:
    """L^2 - 4 pi A from the length and area formulas (no cancellation-free rewrite)."""
    return algebraic_length(O) ** 2 - 4.0 * math.pi * oriented_area(O)


class TheoremCheck(NamedTuple):
    lhs: float
    rhs: float
    slack: float
    equality: bool


def check_thm1(O: Hedgehog, k: int, unchecked: bool = False, tol: float | None = None) -> TheoremCheck:
    """deficit >= 4 pi |A(P_k)|, with equality iff all circumscribed k-gons are regular."""
    k = check_k(k)
    _require_oval(O, unchecked)
    lhs = isoperimetric_deficit(O)
    rhs = 4.0 * math.pi * abs(preserving_oriented_area(preserving_set(O, k)))
    return TheoremCheck(lhs, rhs, lhs - rhs, all_kgons_regular(O, k, _harmonic_tol(O, tol)))


def check_thm2(O: Hedgehog, k: int, unchecked: bool = False, tol: float | None = None) -> TheoremCheck:
    """deficit >= 4 pi |A(P_k)| + 2 pi |A(Omega_k)|; same equality case as thm 1."""
    k = check_k(k)
    _require_oval(O, unchecked)
    lhs = isoperimetric_deficit(O)
    rhs = 4.0 * math.pi * abs(preserving_oriented_area(preserving_set(O, k))) + 2.0 * math.pi * abs(
        midpoint_oriented_area(O, k)
    )
    return TheoremCheck(lhs, rhs, lhs - rhs, all_kgons_regular(O, k, _harmonic_tol(O, tol)))


def _golden_peak(f: TrigPoly, s0: float, step: float, sign: float) -> float:
    """Largest value of ``sign * f`` near a grid peak at s0."""
    objective = lambda t: -sign * evaluate(f, t)  # noqa: E731
    try:
        res = minimize_scalar(
            objective, bracket=(s0 - step, s0, s0 + step), method="golden", options={"xtol": 1e-12}
        )
    except ValueError:
        # flat-topped grid peak: the three points do not form a strict bracket
        res = minimize_scalar(objective, bounds=(s0 - step, s0 + step), method="bounded", options={"xatol": 1e-12})
    return -float(res.fun)


def sup_norm(f: TrigPoly) -> float:
    """max |f| over a period: dense grid, then golden-section on every grid peak."""
    if not f.harmonics:
        return abs(f.a0)
    N = 4096 * max(1, f.degree)
    step = TWO_PI / N
    grid = np.arange(N) * step
    vals = evaluate(f, grid)
    best = float(np.abs(vals).max())
    for sign in (1.0, -1.0):
        v = sign * vals
        peaks = np.nonzero((v >= np.roll(v, 1)) & (v > np.roll(v, -1)) & (v > 0))[0]
        for i in peaks:
            best = max(best, _golden_peak(f, grid[i], step, sign))
    bound = f.sup_bound()
    if best > bound * (1.0 + 1e-12) + 1e-300:
        raise NumericalError(f"refined maximum {best!r} exceeds the amplitude bound {bound!r}")
    return best


def d_inf(A: Hedgehog, B: Hedgehog) -> float:
    """Hausdorff distance max_s |h_A(s) - h_B(s)| between support functions."""
    return sup_norm(A.support - B.support)


def d_2(A: Hedgehog, B: Hedgehog) -> float:
    """L2 distance between support functions, by Parseval."""
    return math.sqrt(l2_norm_squared(A.support - B.support))


def stability_constant(k: int) -> float:
    """8 pi^2 k / (2 pi cot(pi/k) + k)."""
    k = check_k(k)
    return 8.0 * math.pi**2 * k / (2.0 * math.pi / math.tan(math.pi / k) + k)


def symmetral_reference(O: Hedgehog, k: int) -> Hedgehog:
    """P_k + D_O, the body the stability bounds measure distance to."""
    return minkowski_sum(preserving_set(O, k).as_hedgehog, steiner_disk_hedgehog(O))


def stability_bounds(O: Hedgehog, k: int, unchecked: bool = False) -> tuple[float, float]:
    k = check_k(k)
    _require_oval(O, unchecked)
    N = symmetral_reference(O, k)
    return stability_constant(k) * d_inf(O, N) ** 2, 6.0 * math.pi * d_2(O, N) ** 2


def corollary_bounds(O: Hedgehog, unchecked: bool = False) -> tuple[float, float]:
    """(8/3) pi^2 d_inf^2(O, D_O) and 6 pi d_2^2(O, D_O); both at most the deficit."""
    _require_oval(O, unchecked)
    D = steiner_disk_hedgehog(O)
    return (8.0 / 3.0) * math.pi**2 * d_inf(O, D) ** 2, 6.0 * math.pi * d_2(O, D) ** 2


@dataclass(frozen=True)
class InequalityReport:
    k: int
    deficit: float
    abs_area_preserving: float
    abs_area_midpoint_term: float
    slack_thm1: float
    slack_thm2: float
    equality_thm1: bool
    equality_thm2: bool
    d_inf: float
    d_2: float
    stab1_bound: float
    stab2_bound: float
    corollary_bounds: tuple[float, float]
    convexity_status: str
    hypotheses_checked: bool = True

    @property
    def scale(self) -> float:
        return max(1.0, self.deficit)

    def violations(self) -> list[str]:
        """Names of the report invariants that fail; empty when consistent."""
        tol = SLACK_TOL * self.scale
        out = []
        if self.slack_thm1 < -tol:
            out.append("slack_thm1 < 0")
        if self.slack_thm2 < -tol:
            out.append("slack_thm2 < 0")
        if self.slack_thm2 > self.slack_thm1 + tol:
            out.append("slack_thm2 > slack_thm1")
        if self.stab1_bound > self.slack_thm1 + tol:
            out.append("stab1_bound > slack_thm1")
        if self.stab2_bound > self.slack_thm1 + tol:
            out.append("stab2_bound > slack_thm1")
        if any(b > self.deficit + tol for b in self.corollary_bounds):
            out.append("corollary bound > deficit")
        if self.equality_thm1 and abs(self.slack_thm1) > tol:
            out.append("equality_thm1 set with nonzero slack")
        return out

    def to_dict(self) -> dict:
        d = asdict(self)
        d["corollary_bounds"] = list(self.corollary_bounds)
        return d


def full_report(O: Hedgehog, k: int, unchecked: bool = False, tol: float | None = None) -> InequalityReport:
    k = check_k(k)
    status = convexity_status(O)
    if status != "convex" and not unchecked:
        raise DomainError(f"curve is {status}: outside theorem hypotheses (pass unchecked=True to override)")
    t1 = check_thm1(O, k, unchecked=True, tol=tol)
    t2 = check_thm2(O, k, unchecked=True, tol=tol)
    N = symmetral_reference(O, k)
    dinf, d2 = d_inf(O, N), d_2(O, N)
    return InequalityReport(
        k=k,
        deficit=t1.lhs,
        abs_area_preserving=t1.rhs,
        abs_area_midpoint_term=2.0 * math.pi * abs(midpoint_oriented_area(O, k)),
        slack_thm1=t1.slack,
        slack_thm2=t2.slack,
        equality_thm1=t1.equality,
        equality_thm2=t2.equality,
        d_inf=dinf,
        d_2=d2,
        stab1_bound=stability_constant(k) * dinf**2,
        stab2_bound=6.0 * math.pi * d2**2,
        corollary_bounds=corollary_bounds(O, unchecked=True),
        convexity_status=status,
        hypotheses_checked=status == "convex",
    )
