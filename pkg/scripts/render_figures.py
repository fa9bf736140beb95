"""Render the standard example curves to SVG.

Usage: python3 scripts/render_figures.py [OUTDIR]   (default: figures/)
"""

import math
import sys
from pathlib import Path

from hedgehogs import Hedgehog, TrigPoly
from hedgehogs.render import RenderRequest, build_layers, render_svg

S2 = math.sqrt(2.0)
FIGURES = [
    # name, support function, k, sets
    ("oval_and_perpendicular", TrigPoly(20.0, ((2, 0.0, 1.0), (3, 1.0, 0.0))), 3, ("oval", "perpendicular")),
    ("preserving_k3", TrigPoly(30.0, ((2, 0.0, 1.0), (3, 1.0, 0.0), (4, 1.0, 0.0))), 3, ("preserving",)),
    ("preserving_k4", TrigPoly(30.0, ((2, 0.0, 1.0), (3, 1.0, 0.0), (4, 1.0, 0.0))), 4, ("preserving",)),
    (
        "symmetral_golden",
        TrigPoly(137.0, ((2, 21.0, 0.0), (5, 0.0, 1.0), (6, 1.0, 0.0), (9, 0.0, -1 / 3), (10, 0.0, 1 / 3))),
        5,
        ("oval", "symmetral", "steiner_disk"),
    ),
    ("regular_pentagons", TrigPoly(130.0, ((5, 0.0, 1.0), (10, 0.0, 1.0))), 5, ("oval", "polygon", "midpoint")),
    (
        "midpoint_k3",
        TrigPoly(10.0, ((2, 0.0, 1.0), (3, 1.0, 0.0), (4, 1.0, 0.0), (5, 1.0, 0.0))),
        3,
        ("oval", "polygon", "midpoint"),
    ),
    ("midpoint_positive", TrigPoly(81.0, ((3, 0.0, 1.0), (5, 0.0, -1.0), (7, 0.0, 1.0))), 4, ("midpoint",)),
    ("midpoint_negative", TrigPoly(105.0, ((3, 0.0, 1.0), (5, 0.0, -2.0), (7, 0.0, 1.0))), 4, ("midpoint",)),
    ("midpoint_zero", TrigPoly(108.0, ((3, 0.0, S2), (5, 0.0, -2.0), (7, 0.0, 1.0))), 4, ("midpoint",)),
]


def main(outdir="figures"):
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    for name, f, k, sets in FIGURES:
        layers = build_layers(Hedgehog(f), RenderRequest(sets, k, 2048))
        path = out / f"{name}.svg"
        path.write_text(render_svg(layers, title=f"{name} (k={k})"))
        print(path)


if __name__ == "__main__":
    main(*sys.argv[1:])
