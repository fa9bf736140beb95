"""kth Order Midpoint Sets: centroids of circumscribed equiangular k-gons."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .curvegeom import TWO_PI, Hedgehog, Point2
from .errors import check_k
from .fourier import evaluate


@dataclass(frozen=True)
class CircumscribedPolygon:
    """Equiangular k-gon whose jth side lies on the support line with normal
    u(s + 2 pi j / k). Vertex j joins sides j and j + 1 (indices mod k)."""

    k: int
    base_angle: float
    vertices: np.ndarray  # (k, 2)
    foot_points: np.ndarray  # (k, 2), foot of the perpendicular from the origin to side j

    @property
    def centroid(self) -> Point2:
        x, y = self.vertices.mean(axis=0)
        return Point2(float(x), float(y))

    def vertex_distances(self) -> np.ndarray:
        return np.hypot(self.vertices[:, 0], self.vertices[:, 1])

    def side_lengths(self) -> np.ndarray:
        return np.hypot(*(self.vertices - np.roll(self.vertices, 1, axis=0)).T)


def circumscribed_polygon(H: Hedgehog, k: int, s: float) -> CircumscribedPolygon:
    k = check_k(k)
    step = TWO_PI / k
    angles = s + step * np.arange(1, k + 1)
    h = evaluate(H.support, angles)
    u = np.stack([np.cos(angles), np.sin(angles)], axis=1)
    feet = h[:, None] * u
    # vertex j: on line j+1 at distance h_{j+1}, slid along -u'_{j+1} until it hits line j
    h_next = np.roll(h, -1)
    u_next = np.roll(u, -1, axis=0)
    slide = (h - h_next * math.cos(step)) / math.sin(step)
    along = np.stack([u_next[:, 1], -u_next[:, 0]], axis=1)
    vertices = h_next[:, None] * u_next + slide[:, None] * along
    return CircumscribedPolygon(k, float(s), vertices, feet)


def midpoint_points(H: Hedgehog, k: int, s) -> np.ndarray:
    """(2/k) sum_j h(s_j) u(s_j), vectorized over s; shape ``s.shape + (2,)``."""
    k = check_k(k)
    s = np.asarray(s, dtype=float)
    acc = np.zeros(s.shape + (2,))
    for j in range(1, k + 1):
        t = s + TWO_PI * j / k
        h = evaluate(H.support, t)
        acc[..., 0] += h * np.cos(t)
        acc[..., 1] += h * np.sin(t)
    return (2.0 / k) * acc


def midpoint_point_at(H: Hedgehog, k: int, s: float) -> Point2:
    x, y = midpoint_points(H, k, float(s))
    return Point2(float(x), float(y))


@dataclass(frozen=True)
class MidpointSet:
    k: int
    parent: Hedgehog

    def point_at(self, s: float) -> Point2:
        return midpoint_point_at(self.parent, self.k, s)

    def sample(self, samples: int | None = None, turns: int = 1) -> np.ndarray:
        """Closed sampling over [0, 2 pi turns / k], endpoint included.

        ``samples`` counts points per turn and defaults to 256 k.
        """
        n = samples if samples is not None else 256 * self.k
        s = np.linspace(0.0, turns * TWO_PI / self.k, n * turns + 1)
        return midpoint_points(self.parent, self.k, s)

    @property
    def is_degenerate(self) -> bool:
        return midpoint_is_degenerate(self.parent, self.k)

    def oriented_area(self) -> float:
        return midpoint_oriented_area(self.parent, self.k)


def midpoint_set(H: Hedgehog, k: int) -> MidpointSet:
    return MidpointSet(check_k(k), H)


def _congruent_pm1(n: int, k: int) -> bool:
    r = n % k
    return r == 1 or r == k - 1


def midpoint_is_degenerate(H: Hedgehog, k: int) -> bool:
    """True iff h has no harmonic n > 1 with n = +-1 (mod k).

    The first harmonic only translates the set (by the Steiner point), so it
    never spreads it out.
    """
    k = check_k(k)
    return not any(n > 1 and _congruent_pm1(n, k) for n, _, _ in H.support.harmonics)


def midpoint_oriented_area(H: Hedgehog, k: int) -> float:
    """pi * sum_m m (|c_{km-1}|^2 - |c_{km+1}|^2) with |c_n|^2 = a_n^2 + b_n^2."""
    k = check_k(k)
    total = 0.0
    for n, a, b in H.support.harmonics:
        energy = a * a + b * b
        if (n + 1) % k == 0:
            total += ((n + 1) // k) * energy
        elif (n - 1) % k == 0 and n > 1:
            total -= ((n - 1) // k) * energy
    return math.pi * total


def all_kgons_regular(H: Hedgehog, k: int, tolerance: float) -> bool:
    """True iff every harmonic with n > 1 and k not dividing n is below ``tolerance``."""
    k = check_k(k)
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    return all(
        math.hypot(a, b) <= tolerance for n, a, b in H.support.harmonics if n > 1 and n % k != 0
    )
