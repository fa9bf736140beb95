"""Planar hedgehogs parameterized by their support function.

A hedgehog with support function h is the envelope

    H(s) = h(s) u(s) + h'(s) u'(s),   u(s) = (cos s, sin s),

traversed counterclockwise in the outward-normal angle s. Its velocity is
H'(s) = rho(s) u'(s) with rho = h + h'' the signed radius of curvature, so the
singular points are exactly the zeros of rho.

Cusp test. Differentiating H' = rho u' twice gives, at a zero of rho,

    H''  = rho' u',
    H''' = rho'' u' - 2 rho' u,

hence det(H'', H''') = 2 rho'(s)^2. A singular point is therefore a cusp
exactly when rho(s) = 0 and rho'(s) != 0; no third-derivative determinant is
ever formed.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from .errors import NumericalError, check_k
from .fourier import TrigPoly, evaluate, phase_shift

TWO_PI = 2.0 * math.pi
RHO_TOL = 1e-9  # |rho| below this counts as zero (tangential zeros, convexity)
ROOT_XTOL = 1e-13


class Point2(NamedTuple):
    x: float
    y: float

    def __array__(self, dtype=None, copy=None):
        return np.array([self.x, self.y], dtype=dtype)

    def rotated(self, alpha: float) -> Point2:
        c, s = math.cos(alpha), math.sin(alpha)
        return Point2(c * self.x - s * self.y, s * self.x + c * self.y)

    def norm(self) -> float:
        return math.hypot(self.x, self.y)


def unit_dir(s: float) -> Point2:
    return Point2(math.cos(s), math.sin(s))


def unit_normal_rot(s: float) -> Point2:
    """u'(s) = (-sin s, cos s), the tangent direction of H at s."""
    return Point2(-math.sin(s), math.cos(s))


@dataclass(frozen=True)
class Hedgehog:
    support: TrigPoly

    @classmethod
    def from_coefficients(cls, a0: float, harmonics=()) -> Hedgehog:
        return cls(TrigPoly(a0, tuple(harmonics)))

    def h(self, s, derivative_order: int = 0):
        return evaluate(self.support, s, derivative_order)

    @property
    def degree(self) -> int:
        return self.support.degree


@dataclass(frozen=True)
class SteinerDisk:
    center: Point2
    radius: float


@dataclass(frozen=True)
class SingularPoint:
    s: float
    location: Point2
    is_cusp: bool


def points_at(H: Hedgehog, s) -> np.ndarray:
    """Vectorized parameterization; returns an array of shape ``s.shape + (2,)``."""
    s = np.asarray(s, dtype=float)
    h = evaluate(H.support, s, 0)
    dh = evaluate(H.support, s, 1)
    c, sn = np.cos(s), np.sin(s)
    return np.stack([h * c - dh * sn, h * sn + dh * c], axis=-1)


def point_at(H: Hedgehog, s: float) -> Point2:
    x, y = points_at(H, float(s))
    return Point2(float(x), float(y))


def perp_point_at(H: Hedgehog, s: float) -> Point2:
    """Point of rot(H, pi/2) paired with H(s)."""
    x, y = point_at(H, s)
    return Point2(-y, x)


def rotate(H: Hedgehog, alpha: float) -> Hedgehog:
    """Counterclockwise rotation about the origin: support becomes h(s - alpha)."""
    return Hedgehog(phase_shift(H.support, -alpha))


def width(H: Hedgehog, s) -> float:
    return H.h(s) + H.h(np.asarray(s) + math.pi)


def average_width(H: Hedgehog) -> float:
    return 2.0 * H.support.a0


def steiner_point(H: Hedgehog) -> Point2:
    a1, b1 = H.support.coeff(1)
    return Point2(a1, b1)


def steiner_disk(H: Hedgehog) -> SteinerDisk:
    return SteinerDisk(steiner_point(H), abs(H.support.a0))


def steiner_disk_hedgehog(H: Hedgehog) -> Hedgehog:
    """The Steiner disk as a hedgehog: support a0 + a1 cos s + b1 sin s."""
    a1, b1 = H.support.coeff(1)
    return Hedgehog(TrigPoly(H.support.a0, ((1, a1, b1),)))


def algebraic_length(H: Hedgehog) -> float:
    """Integral of h over a period; the perimeter when H is an oval."""
    return TWO_PI * H.support.a0


def oriented_area(H: Hedgehog) -> float:
    """(1/2) * integral of (h^2 - h'^2), in closed form."""
    f = H.support
    n = f.indices.astype(float)
    energy = (n**2 - 1.0) * (f.cos_coeffs**2 + f.sin_coeffs**2)
    return math.pi * f.a0**2 - 0.5 * math.pi * float(energy.sum())


def curvature_poly(H: Hedgehog) -> TrigPoly:
    """rho = h + h'' as a trigonometric polynomial."""
    return H.support.map_harmonics(lambda n, a, b: ((1 - n * n) * a, (1 - n * n) * b))


def radius_of_curvature(H: Hedgehog, s):
    return H.h(s, 0) + H.h(s, 2)


def _grid_size(rho: TrigPoly) -> int:
    return max(4096, 64 * rho.degree)


def _rho_extremes(rho: TrigPoly) -> tuple[float, float]:
    """Global min and max of a trig polynomial, grid plus local refinement."""
    if not rho.harmonics:
        return rho.a0, rho.a0
    N = _grid_size(rho)
    step = TWO_PI / N
    grid = np.arange(N) * step
    vals = evaluate(rho, grid)
    i_min, i_max = int(np.argmin(vals)), int(np.argmax(vals))
    lo = min(float(vals[i_min]), _refine_extremum(rho, grid[i_min], step, +1.0))
    hi = max(float(vals[i_max]), -_refine_extremum(rho, grid[i_max], step, -1.0))
    return lo, hi


def _refine_extremum(f: TrigPoly, s0: float, step: float, sign: float) -> float:
    """Minimize ``sign * f`` in [s0 - step, s0 + step]; returns the minimum of ``sign * f``."""
    res = minimize_scalar(
        lambda t: sign * evaluate(f, t),
        bounds=(s0 - step, s0 + step),
        method="bounded",
        options={"xatol": 1e-12},
    )
    return float(res.fun)


def convexity_status(H: Hedgehog, tol: float = RHO_TOL) -> str:
    """'convex', 'nonconvex' or 'marginal' from the sign pattern of rho."""
    lo, hi = _rho_extremes(curvature_poly(H))
    if lo > tol or hi < -tol:
        return "convex"
    if lo < -tol and hi > tol:
        return "nonconvex"
    return "marginal"


def is_convex(H: Hedgehog, tol: float = RHO_TOL) -> bool:
    """True iff rho keeps a constant sign away from zero; marginal counts as False."""
    return convexity_status(H, tol) == "convex"


def _wrap(s: float) -> float:
    s = math.fmod(s, TWO_PI)
    if s < 0:
        s += TWO_PI
    if s >= TWO_PI:
        s -= TWO_PI
    return s


def _polish(rho: TrigPoly, s: float, lo: float, hi: float) -> float:
    d = evaluate(rho, s, 1)
    if d != 0.0:
        t = s - evaluate(rho, s) / d
        if lo <= t <= hi and abs(evaluate(rho, t)) <= abs(evaluate(rho, s)):
            return t
    return s


def curvature_zeros(rho: TrigPoly) -> list[tuple[float, bool]]:
    """Zeros of a trig polynomial on [0, 2 pi) as ``(s, simple)`` pairs.

    Sign changes on a uniform grid of max(4096, 64 * degree) points are
    bracketed and refined with Brent's method plus one Newton step; grid
    minima of |rho| below the zero tolerance without a sign change are
    reported as tangential (non-simple) zeros.
    """
    if not rho.harmonics:
        return []
    N = _grid_size(rho)
    step = TWO_PI / N
    grid = np.arange(N + 1) * step
    vals = evaluate(rho, grid)
    # the closing interval is taken as [-step, 0] so that both brackets that
    # touch s = 0 share the exact value rho(0)
    vals[-1] = vals[0]
    scale = rho.sup_bound()
    found: list[float] = []

    for i in range(N):
        v0, v1 = vals[i], vals[i + 1]
        if v0 == 0.0:
            found.append(grid[i])
        elif v0 * v1 < 0.0:
            lo, hi = (grid[i], grid[i + 1]) if i < N - 1 else (-step, 0.0)
            flo, fhi = evaluate(rho, lo), evaluate(rho, hi)
            if flo * fhi > 0.0:
                # rounding moved an endpoint across zero; it is the root
                found.append(lo if abs(flo) < abs(fhi) else hi)
                continue
            try:
                root = brentq(lambda t: evaluate(rho, t), lo, hi, xtol=ROOT_XTOL, maxiter=200)
            except (RuntimeError, ValueError) as exc:
                raise NumericalError(f"root refinement failed on bracket [{lo!r}, {hi!r}]") from exc
            found.append(_polish(rho, root, lo, hi))

    absv = np.abs(vals[:N])
    prev, nxt = np.roll(absv, 1), np.roll(absv, -1)
    signs = np.sign(vals[:N])
    no_change = (signs == np.roll(signs, 1)) & (signs == np.roll(signs, -1)) & (signs != 0)
    candidates = np.nonzero((absv <= prev) & (absv <= nxt) & no_change & (absv < 1e-3 * scale + RHO_TOL))[0]
    tangential: list[float] = []
    for i in candidates:
        sign = float(signs[i])
        # minimize |rho| = sign * rho near a touching extremum
        res = minimize_scalar(
            lambda t: sign * evaluate(rho, t),
            bounds=(grid[i] - step, grid[i] + step),
            method="bounded",
            options={"xatol": 1e-13},
        )
        if abs(res.fun) < RHO_TOL:
            tangential.append(float(res.x))

    out: list[tuple[float, bool]] = []
    for s, simple in sorted([(_wrap(s), True) for s in found] + [(_wrap(s), False) for s in tangential]):
        if out and abs(s - out[-1][0]) < 1e-9:
            continue
        out.append((s, simple))
    if len(out) > 1 and out[0][0] + TWO_PI - out[-1][0] < 1e-9:
        out.pop()
    if len(out) > 2 * rho.degree:
        warnings.warn(f"found {len(out)} zeros for a degree-{rho.degree} polynomial", RuntimeWarning)
    return out


def singular_points(H: Hedgehog) -> list[SingularPoint]:
    """All zeros of rho on [0, 2 pi), sorted, tagged with the cusp criterion.

    A hedgehog with rho identically zero is a single point; it is reported as
    having no isolated singular points.
    """
    rho = curvature_poly(H)
    cusp_tol = RHO_TOL * max(1.0, rho.sup_bound())
    out = []
    for s, simple in curvature_zeros(rho):
        is_cusp = simple and abs(evaluate(rho, s, 1)) > cusp_tol
        out.append(SingularPoint(s, point_at(H, s), is_cusp))
    return out


def isogonal_family(H: Hedgehog, s: float, k: int) -> list[tuple[Point2, Point2]]:
    """The k pairs (H(s_j), H_perp(s_j)) with s_j = s + 2 pi j / k, j = 1..k."""
    k = check_k(k)
    out = []
    for j in range(1, k + 1):
        t = s + TWO_PI * j / k
        out.append((point_at(H, t), perp_point_at(H, t)))
    return out
