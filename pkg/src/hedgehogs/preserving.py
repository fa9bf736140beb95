"""kth Order Preserving Sets.

The preserving set of a hedgehog H is the hedgehog whose support function
keeps exactly the harmonics of h with k | n and n > 1:

    h_k = A_k[h] - a0,

where A_k is the k-directional average. It can also be built point by point
from isogonal families, which is what :func:`preserving_from_isogonal` does;
the two routes are tested against each other.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .curvegeom import (
    TWO_PI,
    Hedgehog,
    Point2,
    SingularPoint,
    average_width,
    isogonal_family,
    point_at,
    radius_of_curvature,
    rotate,
    singular_points,
)
from .errors import NumericalError, check_k
from .fourier import TrigPoly, directional_average, filter_indices


@dataclass(frozen=True)
class PreservingSet:
    k: int
    parent: Hedgehog
    as_hedgehog: Hedgehog

    @property
    def support(self) -> TrigPoly:
        return self.as_hedgehog.support

    @property
    def is_degenerate(self) -> bool:
        """True when P_k collapses to the origin."""
        return self.support.is_zero()


def preserving_set(H: Hedgehog, k: int) -> PreservingSet:
    k = check_k(k)
    hk = filter_indices(H.support, lambda n: n % k == 0 and n > 1, keep_constant=False)
    return PreservingSet(k, H, Hedgehog(hk))


def preserving_point_at(P: PreservingSet, s: float) -> Point2:
    return point_at(P.as_hedgehog, s)


def preserving_from_isogonal(H: Hedgehog, k: int, s: float) -> Point2:
    """Literal isogonal-family construction of the preserving-set point at s.

    Each p_j = H(s + 2 pi j / k) is rotated back by -2 pi j / k and the k
    results are averaged; half the average width is then removed along the
    normal u(s), the common normal direction all rotated points share.
    """
    k = check_k(k)
    x = y = 0.0
    for j, (p, p_perp) in enumerate(isogonal_family(H, s, k), start=1):
        c, sn = math.cos(TWO_PI * j / k), math.sin(TWO_PI * j / k)
        x += c * p.x - sn * p_perp.x
        y += c * p.y - sn * p_perp.y
    half_w = 0.5 * average_width(H)
    return Point2(x / k - half_w * math.cos(s), y / k - half_w * math.sin(s))


def preserving_oriented_area(P: PreservingSet) -> float:
    """(pi/2) * sum over k | n, n > 1 of (1 - n^2)(a_n^2 + b_n^2); never positive."""
    total = 0.0
    for n, a, b in P.parent.support.harmonics:
        if n > 1 and n % P.k == 0:
            total += (1 - n * n) * (a * a + b * b)
    return 0.5 * math.pi * total


def preserving_curvature(P: PreservingSet, s):
    """Signed radius of curvature of P_k at parameter s."""
    return radius_of_curvature(P.as_hedgehog, s)


def preserving_curvature_isogonal(P: PreservingSet, s):
    """Same quantity as the isogonal mean of the parent's curvature radii minus w/2."""
    s = np.asarray(s, dtype=float)
    total = sum(radius_of_curvature(P.parent, s + TWO_PI * j / P.k) for j in range(1, P.k + 1))
    out = total / P.k - 0.5 * average_width(P.parent)
    return float(out) if np.ndim(out) == 0 else out


def preserving_singularities(P: PreservingSet, strict: bool = False) -> list[SingularPoint]:
    """Singular points of P_k; their count should be a multiple of k.

    A count that is not a multiple of k means zeros were merged or missed
    (multiple zeros defeat counting). That is a warning by default and a
    :class:`NumericalError` when ``strict`` is set.
    """
    points = singular_points(P.as_hedgehog)
    if points and len(points) % P.k != 0:
        msg = f"{len(points)} singular points found for k={P.k}; expected a multiple of k"
        if strict:
            raise NumericalError(msg)
        warnings.warn(msg, RuntimeWarning)
    return points


def k_central_symmetral(H: Hedgehog, k: int) -> Hedgehog:
    """Minkowski average of H rotated by 2 pi j / k, j = 0..k-1.

    Equals P_k plus a disk of radius a0 centred at the origin. This agrees with
    P_k + D_H only when the Steiner point is at the origin, since the average
    removes the first harmonics and the Steiner disk keeps them.
    """
    return Hedgehog(directional_average(H.support, k))


def k_central_symmetral_literal(H: Hedgehog, k: int) -> Hedgehog:
    """Same symmetral summed rotation by rotation (slow path, for cross-checks)."""
    k = check_k(k)
    acc = TrigPoly()
    for j in range(k):
        acc = acc + rotate(H, TWO_PI * j / k).support
    return Hedgehog(acc.scale(1.0 / k))


def minkowski_sum(A: Hedgehog, B: Hedgehog) -> Hedgehog:
    return Hedgehog(A.support + B.support)
