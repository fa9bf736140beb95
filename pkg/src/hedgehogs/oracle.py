"""Quadrature-based cross-checks for the closed forms.

Everything here works from samples of a curve or a function, never from
Fourier coefficients, so it can serve as an independent oracle.
Sampled curves are arrays of shape (N + 1, 2) taken at uniform parameter
steps over one full period, with the last row repeating the first.
"""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

from .errors import InputError, NumericalError

TWO_PI = 2.0 * math.pi


def _open_samples(curve: np.ndarray, min_samples: int = 64) -> np.ndarray:
    pts = np.asarray(curve, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise InputError(f"expected an (N+1, 2) array of points, got shape {pts.shape}")
    if len(pts) - 1 < min_samples:
        raise InputError(f"need at least {min_samples} samples, got {len(pts) - 1}")
    diameter = float(np.ptp(pts, axis=0).max())
    if np.hypot(*(pts[-1] - pts[0])) > max(1e-6 * diameter, 1e-10):
        raise InputError("sampled curve is not closed: last point differs from the first")
    return pts[:-1]


def _spectral_derivative(values: np.ndarray) -> np.ndarray:
    """d/dtheta of uniformly sampled periodic data with theta in [0, 2 pi)."""
    n = len(values)
    freq = np.fft.rfftfreq(n, d=1.0 / n)
    spec = np.fft.rfft(values, axis=0)
    if n % 2 == 0:
        spec[-1] = 0.0  # Nyquist mode has no odd derivative
    return np.fft.irfft(1j * freq[:, None] * spec, n=n, axis=0)


def green_area(curve: np.ndarray, samples: int | None = None) -> float:
    """(1/2) * closed integral of x dy - y dx over a sampled closed curve.

    Tangents come from spectral differentiation of the samples and the
    integral from the periodic trapezoid rule, which is spectrally accurate
    for smooth closed curves. ``samples``, when given, must match the number
    of distinct points.
    """
    pts = _open_samples(curve)
    if samples is not None and samples != len(pts):
        raise InputError(f"samples={samples} but curve has {len(pts)} distinct points")
    d = _spectral_derivative(pts)
    integrand = pts[:, 0] * d[:, 1] - pts[:, 1] * d[:, 0]
    return 0.5 * float(integrand.sum()) * TWO_PI / len(pts)


def shoelace_area(curve: np.ndarray) -> float:
    """Signed area of the closed polyline through the samples."""
    pts = _open_samples(curve, min_samples=3)
    q = np.roll(pts, -1, axis=0)
    return 0.5 * float(np.sum(pts[:, 0] * q[:, 1] - pts[:, 1] * q[:, 0]))


def quadrature_integral(f: Callable[[np.ndarray], np.ndarray], samples: int = 4096):
    """Periodic trapezoid rule for the integral of f over [0, 2 pi].

    ``f`` takes an array of angles; vector-valued integrands return an array
    whose first axis runs over the angles.
    """
    if samples < 64:
        raise InputError(f"need at least 64 samples, got {samples}")
    s = np.arange(samples) * (TWO_PI / samples)
    vals = np.asarray(f(s), dtype=float)
    out = vals.sum(axis=0) * (TWO_PI / samples)
    return float(out) if np.ndim(out) == 0 else out


def _segment_distance(pts: np.ndarray, p: np.ndarray) -> float:
    a, b = pts, np.roll(pts, -1, axis=0)
    ab = b - a
    denom = np.einsum("ij,ij->i", ab, ab)
    t = np.where(denom > 0, np.einsum("ij,ij->i", p - a, ab) / np.where(denom > 0, denom, 1.0), 0.0)
    t = np.clip(t, 0.0, 1.0)
    closest = a + t[:, None] * ab
    return float(np.hypot(*(closest - p).T).min())


def winding_number(curve: np.ndarray, p) -> int:
    """Winding number of a sampled closed curve around ``p``."""
    pts = _open_samples(curve, min_samples=3)
    p = np.asarray(p, dtype=float)
    diameter = float(np.ptp(pts, axis=0).max())
    if _segment_distance(pts, p) <= 1e-9 * diameter:
        raise InputError("point lies on (or too close to) the sampled curve")
    v = pts - p
    w = np.roll(v, -1, axis=0)
    cross = v[:, 0] * w[:, 1] - v[:, 1] * w[:, 0]
    dot = np.einsum("ij,ij->i", v, w)
    turns = float(np.arctan2(cross, dot).sum()) / TWO_PI
    nearest = round(turns)
    if abs(turns - nearest) > 0.05:
        raise NumericalError(f"winding accumulation {turns:.4f} is not near an integer; increase sampling")
    return int(nearest)
