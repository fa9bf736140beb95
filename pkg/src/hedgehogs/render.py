"""SVG and CSV output for the curve families."""

from __future__ import annotations

import math
from dataclasses import dataclass
from xml.sax.saxutils import escape

import numpy as np

from .curvegeom import Hedgehog, points_at, steiner_disk
from .errors import InputError, check_k
from .midpoint import circumscribed_polygon, midpoint_points
from .preserving import k_central_symmetral, preserving_set

TWO_PI = 2.0 * math.pi

SET_NAMES = ("oval", "perpendicular", "preserving", "midpoint", "symmetral", "polygon", "steiner_disk")

STYLES = {
    "oval": 'stroke="#1f77b4" stroke-width="1.5"',
    "perpendicular": 'stroke="#1f77b4" stroke-width="1" stroke-dasharray="6 4"',
    "preserving": 'stroke="#ff7f0e" stroke-width="1.5"',
    "midpoint": 'stroke="#2ca02c" stroke-width="1.5"',
    "symmetral": 'stroke="#555555" stroke-width="1.2" stroke-dasharray="8 5"',
    "polygon": 'stroke="#d62728" stroke-width="1"',
    "steiner_disk": 'stroke="#9467bd" stroke-width="1" stroke-dasharray="2 3"',
}


@dataclass(frozen=True)
class RenderRequest:
    sets: tuple[str, ...]
    k: int
    samples: int = 1024
    polygon_base_angle: float = 0.0

    def __post_init__(self):
        check_k(self.k)
        if self.samples < 64:
            raise InputError(f"samples must be >= 64, got {self.samples}")
        bad = [s for s in self.sets if s not in SET_NAMES]
        if bad or not self.sets:
            raise InputError(f"unknown set(s) {bad}; choose from {', '.join(SET_NAMES)}")


@dataclass(frozen=True)
class Layer:
    name: str
    s: np.ndarray
    points: np.ndarray  # (len(s), 2)
    closed: bool = True


def build_layers(H: Hedgehog, req: RenderRequest) -> list[Layer]:
    """Sample every requested set with ``req.samples`` points.

    Closed curves are sampled without repeating the first point. The polygon
    layer is the exception: it holds the k vertices only.
    """
    n, k = req.samples, req.k
    full = np.arange(n) * (TWO_PI / n)
    layers = []
    for name in req.sets:
        if name == "oval":
            layers.append(Layer(name, full, points_at(H, full)))
        elif name == "perpendicular":
            p = points_at(H, full)
            layers.append(Layer(name, full, np.stack([-p[:, 1], p[:, 0]], axis=1)))
        elif name == "preserving":
            layers.append(Layer(name, full, points_at(preserving_set(H, k).as_hedgehog, full)))
        elif name == "symmetral":
            layers.append(Layer(name, full, points_at(k_central_symmetral(H, k), full)))
        elif name == "midpoint":
            s = np.arange(n) * (TWO_PI / k / n)
            layers.append(Layer(name, s, midpoint_points(H, k, s)))
        elif name == "polygon":
            poly = circumscribed_polygon(H, k, req.polygon_base_angle)
            s = req.polygon_base_angle + TWO_PI * np.arange(1, k + 1) / k
            layers.append(Layer(name, s, poly.vertices))
        elif name == "steiner_disk":
            disk = steiner_disk(H)
            circle = np.stack([disk.center.x + disk.radius * np.cos(full), disk.center.y + disk.radius * np.sin(full)], axis=1)
            layers.append(Layer(name, full, circle))
    return layers


def _fmt(v: float) -> str:
    return f"{v:.6f}".rstrip("0").rstrip(".") if v != 0 else "0"


def render_svg(layers: list[Layer], title: str = "", width_px: int = 800) -> str:
    """Layered SVG; the y axis is flipped so counterclockwise stays counterclockwise."""
    pts = np.concatenate([layer.points for layer in layers], axis=0)
    if not np.all(np.isfinite(pts)):
        raise InputError("non-finite coordinates in rendered curves")
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    span = float(max(hi[0] - lo[0], hi[1] - lo[1], 1e-9))
    margin = 0.05 * span
    x0, y0 = lo[0] - margin, -(hi[1] + margin)
    w, h = hi[0] - lo[0] + 2 * margin, hi[1] - lo[1] + 2 * margin
    w, h = max(w, 2 * margin), max(h, 2 * margin)
    height_px = int(round(width_px * h / w))
    stroke_scale = span / width_px
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        "<!-- y axis flipped: mathematical (x, y) is drawn at (x, -y) so positive orientation renders counterclockwise -->",
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width_px}" height="{height_px}" '
        f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}">',
    ]
    if title:
        out.append(f"<title>{escape(title)}</title>")
    out.append('<g fill="none" transform="scale(1,-1)" stroke-linejoin="round">')
    for layer in layers:
        coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in layer.points)
        close = " Z" if layer.closed else ""
        # stroke widths are given in pixels; convert to user units
        style = _scale_stroke(STYLES[layer.name], stroke_scale)
        out.append(f'<path id="{layer.name}" data-points="{len(layer.points)}" {style} d="M {coords}{close}"/>')
    out.append("</g>")
    fs = 14 * stroke_scale
    out.append(f'<g font-family="sans-serif" font-size="{_fmt(fs)}">')
    for i, layer in enumerate(layers):
        ty = y0 + fs * (1.5 + 1.4 * i)
        color = STYLES[layer.name].split('"')[1]
        out.append(f'<text x="{_fmt(x0 + fs)}" y="{_fmt(ty)}" fill="{color}">{escape(layer.name)}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _scale_stroke(style: str, factor: float) -> str:
    def repl(attr: str, text: str) -> str:
        head, _, rest = text.partition(f'{attr}="')
        if not rest:
            return text
        value, _, tail = rest.partition('"')
        scaled = " ".join(_fmt(float(v) * factor) for v in value.split())
        return f'{head}{attr}="{scaled}"{tail}'

    return repl("stroke-dasharray", repl("stroke-width", style))


def render_csv(layers: list[Layer]) -> str:
    rows = ["set,s,x,y"]
    for layer in layers:
        for s, (x, y) in zip(layer.s, layer.points):
            rows.append(f"{layer.name},{float(s)!r},{float(x)!r},{float(y)!r}")
    return "\n".join(rows) + "\n"
