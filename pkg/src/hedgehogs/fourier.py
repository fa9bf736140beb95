"""Truncated trigonometric polynomials.

A support function is stored as

    f(s) = a0 + sum_n a_n cos(n s) + b_n sin(n s)

with finitely many harmonics ``n >= 1``. All operations are exact finite sums
on the coefficients; nothing here samples or approximates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

import numpy as np

from .errors import check_k

__all__ = [
    "TrigPoly",
    "evaluate",
    "phase_shift",
    "filter_indices",
    "directional_average",
    "t_k_operator",
    "generalized_k_width",
    "l2_norm_squared",
]

MAX_DERIVATIVE_ORDER = 4


@dataclass(frozen=True)
class TrigPoly:
    """Real trigonometric polynomial in canonical form.

    ``harmonics`` is a tuple of ``(n, a_n, b_n)`` with strictly increasing
    ``n >= 1``; harmonics whose two coefficients are exactly zero are dropped.
    """

    a0: float = 0.0
    harmonics: tuple[tuple[int, float, float], ...] = ()

    def __post_init__(self):
        seen: dict[int, tuple[float, float]] = {}
        for term in self.harmonics:
            n, a, b = term
            if isinstance(n, bool) or int(n) != n or n < 1:
                raise ValueError(f"harmonic index must be an integer >= 1, got {n!r}")
            n = int(n)
            if n in seen:
                raise ValueError(f"duplicate harmonic index {n}")
            seen[n] = (float(a), float(b))
        canonical = tuple(
            (n, a, b) for n, (a, b) in sorted(seen.items()) if a != 0.0 or b != 0.0
        )
        for value in [self.a0, *(c for _, a, b in canonical for c in (a, b))]:
            if not math.isfinite(value):
                raise ValueError("coefficients must be finite")
        object.__setattr__(self, "a0", float(self.a0))
        object.__setattr__(self, "harmonics", canonical)

    @classmethod
    def from_dict(cls, a0: float, coeffs: Mapping[int, tuple[float, float]]) -> TrigPoly:
        """Build from ``{n: (a_n, b_n)}``."""
        return cls(a0, tuple((n, a, b) for n, (a, b) in coeffs.items()))

    @classmethod
    def constant(cls, c: float) -> TrigPoly:
        return cls(c)

    @property
    def degree(self) -> int:
        return self.harmonics[-1][0] if self.harmonics else 0

    @property
    def indices(self) -> np.ndarray:
        return np.array([n for n, _, _ in self.harmonics], dtype=np.int64)

    @property
    def cos_coeffs(self) -> np.ndarray:
        return np.array([a for _, a, _ in self.harmonics], dtype=float)

    @property
    def sin_coeffs(self) -> np.ndarray:
        return np.array([b for _, _, b in self.harmonics], dtype=float)

    def coeff(self, n: int) -> tuple[float, float]:
        """Return ``(a_n, b_n)``; ``(a0, 0)`` for ``n == 0``."""
        if n == 0:
            return self.a0, 0.0
        for m, a, b in self.harmonics:
            if m == n:
                return a, b
        return 0.0, 0.0

    def as_dict(self) -> dict[int, tuple[float, float]]:
        return {n: (a, b) for n, a, b in self.harmonics}

    def amplitudes(self) -> np.ndarray:
        """sqrt(a_n^2 + b_n^2) for each stored harmonic."""
        return np.hypot(self.cos_coeffs, self.sin_coeffs)

    def sup_bound(self) -> float:
        """Upper bound |a0| + sum of amplitudes on max |f|."""
        return abs(self.a0) + float(self.amplitudes().sum())

    def is_zero(self) -> bool:
        return self.a0 == 0.0 and not self.harmonics

    def __call__(self, s, derivative_order: int = 0):
        return evaluate(self, s, derivative_order)

    def _combine(self, other: TrigPoly, sign: float) -> TrigPoly:
        coeffs = self.as_dict()
        for n, a, b in other.harmonics:
            a0, b0 = coeffs.get(n, (0.0, 0.0))
            coeffs[n] = (a0 + sign * a, b0 + sign * b)
        return TrigPoly.from_dict(self.a0 + sign * other.a0, coeffs)

    def __add__(self, other: TrigPoly) -> TrigPoly:
        if not isinstance(other, TrigPoly):
            return NotImplemented
        return self._combine(other, 1.0)

    def __sub__(self, other: TrigPoly) -> TrigPoly:
        if not isinstance(other, TrigPoly):
            return NotImplemented
        return self._combine(other, -1.0)

    def __neg__(self) -> TrigPoly:
        return self.scale(-1.0)

    def scale(self, c: float) -> TrigPoly:
        return TrigPoly(c * self.a0, tuple((n, c * a, c * b) for n, a, b in self.harmonics))

    def map_harmonics(self, fn: Callable[[int, float, float], tuple[float, float]]) -> TrigPoly:
        """Replace every ``(a_n, b_n)`` by ``fn(n, a_n, b_n)``; a0 untouched."""
        return TrigPoly(self.a0, tuple((n, *fn(n, a, b)) for n, a, b in self.harmonics))

    def derivative(self, order: int = 1) -> TrigPoly:
        """Term-wise derivative as a new polynomial."""
        out = self
        for _ in range(order):
            out = TrigPoly(0.0, tuple((n, n * b, -n * a) for n, a, b in out.harmonics))
        return out


def evaluate(f: TrigPoly, s, derivative_order: int = 0):
    """Evaluate ``d^m f / ds^m`` at ``s`` (scalar or array).

    Uses the exact quarter-period rotation of (cos, sin) per derivative, so no
    phase constants like pi/2 enter the arguments.
    """
    m = int(derivative_order)
    if not 0 <= m <= MAX_DERIVATIVE_ORDER:
        raise ValueError(f"derivative_order must be in 0..{MAX_DERIVATIVE_ORDER}, got {m}")
    s_arr = np.asarray(s, dtype=float)
    const = f.a0 if m == 0 else 0.0
    if not f.harmonics:
        out = np.full(s_arr.shape, const)
        return float(out) if out.ndim == 0 else out

    n = f.indices.astype(float)
    a = f.cos_coeffs * n**m
    b = f.sin_coeffs * n**m
    phase = np.multiply.outer(s_arr, n)
    c, sn = np.cos(phase), np.sin(phase)
    r = m % 4
    if r == 0:
        terms = c @ a + sn @ b
    elif r == 1:
        terms = c @ b - sn @ a
    elif r == 2:
        terms = -(c @ a + sn @ b)
    else:
        terms = sn @ a - c @ b
    out = const + terms
    return float(out) if np.ndim(out) == 0 else out


def phase_shift(f: TrigPoly, alpha: float) -> TrigPoly:
    """Return g with g(s) = f(s + alpha)."""

    def shift(n, a, b):
        c, s = math.cos(n * alpha), math.sin(n * alpha)
        return a * c + b * s, b * c - a * s

    return f.map_harmonics(shift)


def filter_indices(f: TrigPoly, predicate: Callable[[int], bool], keep_constant: bool = True) -> TrigPoly:
    """Keep the harmonics whose index satisfies ``predicate``."""
    return TrigPoly(
        f.a0 if keep_constant else 0.0,
        tuple(t for t in f.harmonics if predicate(t[0])),
    )


def directional_average(f: TrigPoly, k: int) -> TrigPoly:
    """Average of f over k directions spaced 2*pi/k apart.

    The geometric-series argument reduces the k-term average to the index
    filter that keeps a0 and every harmonic with k | n.
    """
    k = check_k(k)
    return filter_indices(f, lambda n: n % k == 0, keep_constant=True)


def t_k_operator(f: TrigPoly, k: int) -> TrigPoly:
    """Directional average taken at the half-step offsets (2m - 1) pi / k.

    Harmonic n = k q survives with sign (-1)^q; the constant is kept.
    """
    k = check_k(k)
    kept = filter_indices(f, lambda n: n % k == 0, keep_constant=True)
    return kept.map_harmonics(lambda n, a, b: (a, b) if (n // k) % 2 == 0 else (-a, -b))


def generalized_k_width(f: TrigPoly, k: int, s):
    """Sum of f over the k directions s + 2 pi j / k."""
    k = check_k(k)
    return k * evaluate(directional_average(f, k), s)


def l2_norm_squared(f: TrigPoly) -> float:
    """Integral of f^2 over one period, by Parseval."""
    return 2.0 * math.pi * f.a0**2 + math.pi * float(np.sum(f.cos_coeffs**2 + f.sin_coeffs**2))


def from_terms(a0: float, terms: Iterable[tuple[int, float, float]]) -> TrigPoly:
    """Sum possibly repeated ``(n, a, b)`` terms into a canonical polynomial."""
    acc: dict[int, tuple[float, float]] = {}
    for n, a, b in terms:
        pa, pb = acc.get(n, (0.0, 0.0))
        acc[n] = (pa + a, pb + b)
    return TrigPoly.from_dict(a0, acc)
