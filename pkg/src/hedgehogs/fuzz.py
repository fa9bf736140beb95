"""Seeded random ovals and the per-trial invariant suite behind ``hedgehogs fuzz``."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import oracle
from .curvegeom import (
    TWO_PI,
    Hedgehog,
    algebraic_length,
    is_convex,
    oriented_area,
    points_at,
    steiner_point,
)
from .errors import HedgehogError, NumericalError
from .fourier import TrigPoly
from .inequality import SLACK_TOL, full_report
from .midpoint import circumscribed_polygon, midpoint_oriented_area, midpoint_points
from .preserving import preserving_from_isogonal, preserving_point_at, preserving_set

QUAD_SAMPLES = 1 << 12
REL_TOL = 1e-7


@dataclass(frozen=True)
class FuzzConfig:
    seed: int = 42
    trials: int = 1000
    max_degree: int = 12
    k_min: int = 3
    k_max: int = 8
    jobs: int = 1


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Independent stream per trial, so results do not depend on scheduling."""
    return np.random.default_rng([seed, trial])


def random_oval(rng: np.random.Generator, max_degree: int = 12) -> TrigPoly:
    """Random convex support function.

    a0 is uniform on [10, 200]; harmonic n >= 2 gets amplitude a0 * c * u / n^2
    with a shared spread c and u uniform on [0, 1], and a uniform phase. The
    first harmonic is a free translation. Draws that are not convex are
    rejected and redrawn.
    """
    while True:
        a0 = rng.uniform(10.0, 200.0)
        degree = int(rng.integers(2, max_degree + 1))
        spread = rng.uniform(0.0, 0.25)
        harmonics = []
        for n in range(1, degree + 1):
            if n > 1 and rng.random() < 0.3:
                continue
            amp = a0 * (rng.uniform(0.0, 1.0) if n == 1 else spread * rng.uniform(0.0, 1.0) / n**2)
            phase = rng.uniform(0.0, TWO_PI)
            harmonics.append((n, amp * math.cos(phase), amp * math.sin(phase)))
        f = TrigPoly(a0, tuple(harmonics))
        if is_convex(Hedgehog(f)):
            return f


def random_case(seed: int, trial: int, max_degree: int, k_min: int, k_max: int) -> tuple[TrigPoly, int, float]:
    rng = trial_rng(seed, trial)
    f = random_oval(rng, max_degree)
    k = int(rng.integers(k_min, k_max + 1))
    s = float(rng.uniform(0.0, TWO_PI))
    return f, k, s


def _rel_close(x: float, ref: float, rel: float, floor: float = 1e-9) -> bool:
    return abs(x - ref) <= rel * abs(ref) + floor


def check_case(f: TrigPoly, k: int, s: float) -> list[str]:
    """Run the invariant suite on one input; return the names of failed checks."""
    H = Hedgehog(f)
    bad = []
    scale = f.sup_bound()
    grid = np.arange(QUAD_SAMPLES) * (TWO_PI / QUAD_SAMPLES)

    closed = np.concatenate([points_at(H, grid), points_at(H, grid[:1])])
    if not _rel_close(oracle.green_area(closed), oriented_area(H), REL_TOL):
        bad.append("area vs green quadrature")
    if not _rel_close(oracle.quadrature_integral(lambda t: H.h(t), QUAD_SAMPLES), algebraic_length(H), REL_TOL):
        bad.append("length vs quadrature")
    sp = oracle.quadrature_integral(
        lambda t: H.h(t)[:, None] * np.stack([np.cos(t), np.sin(t)], axis=1), QUAD_SAMPLES
    ) / math.pi
    if np.hypot(*(sp - np.asarray(steiner_point(H)))) > REL_TOL * scale:
        bad.append("steiner point vs quadrature")

    mid = midpoint_points(H, k, np.append(grid, TWO_PI))
    area_mid = midpoint_oriented_area(H, k)
    if not _rel_close(oracle.green_area(mid), k * area_mid, REL_TOL, 1e-9 * scale**2):
        bad.append("midpoint green area vs k * closed form")

    P = preserving_set(H, k)
    p1, p2 = preserving_from_isogonal(H, k, s), preserving_point_at(P, s)
    if math.hypot(p1.x - p2.x, p1.y - p2.y) > 1e-8 * (1.0 + scale):
        bad.append("preserving dual route")

    poly = circumscribed_polygon(H, k, s)
    c = midpoint_points(H, k, s)
    if np.hypot(*(np.asarray(poly.centroid) - c)) > 1e-9 * (1.0 + scale):
        bad.append("centroid identity")

    report = full_report(H, k)
    bad.extend(report.violations())
    return bad


@dataclass
class TrialResult:
    trial: int
    k: int
    failures: list[str] = field(default_factory=list)
    numerical: str | None = None
    curve: TrigPoly | None = None


def run_trial(args: tuple[int, int, int, int, int]) -> TrialResult:
    seed, trial, max_degree, k_min, k_max = args
    f, k, s = random_case(seed, trial, max_degree, k_min, k_max)
    try:
        failures = check_case(f, k, s)
    except NumericalError as exc:
        return TrialResult(trial, k, [], str(exc), f)
    return TrialResult(trial, k, failures, None, f if failures else None)


def minimize_counterexample(f: TrigPoly, k: int, s: float) -> TrigPoly:
    """Greedily zero harmonics while the case stays convex and still fails."""
    current = f
    changed = True
    while changed:
        changed = False
        for n, _, _ in current.harmonics:
            candidate = TrigPoly(current.a0, tuple(t for t in current.harmonics if t[0] != n))
            try:
                if is_convex(Hedgehog(candidate)) and check_case(candidate, k, s):
                    current, changed = candidate, True
                    break
            except HedgehogError:
                continue
    return current


def run_fuzz(cfg: FuzzConfig) -> list[TrialResult]:
    tasks = [(cfg.seed, t, cfg.max_degree, cfg.k_min, cfg.k_max) for t in range(cfg.trials)]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(run_trial, tasks, chunksize=16))
    else:
        results = [run_trial(t) for t in tasks]
    return sorted(results, key=lambda r: r.trial)


__all__ = [
    "FuzzConfig",
    "SLACK_TOL",
    "check_case",
    "minimize_counterexample",
    "random_case",
    "random_oval",
    "run_fuzz",
    "trial_rng",
]
