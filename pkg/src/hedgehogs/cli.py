"""Command-line front end: ``hedgehogs describe|check|render|fuzz``.

Exit codes: 0 success, 1 input or usage error, 2 invariant or inequality
violation, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .curvegeom import (
    algebraic_length,
    average_width,
    convexity_status,
    oriented_area,
    singular_points,
    steiner_disk,
)
from .curvespec import CurveSpec, format_value, load_curve, parse_expression
from .errors import DomainError, HedgehogError, InputError, NumericalError
from .fuzz import FuzzConfig, minimize_counterexample, random_case, run_fuzz
from .inequality import full_report, isoperimetric_deficit
from .render import SET_NAMES, RenderRequest, build_layers, render_csv, render_svg

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION, EXIT_NUMERICAL = 0, 1, 2, 3

CHECK_SCHEMA = "hedgehogs.check/1"
DESCRIBE_SCHEMA = "hedgehogs.describe/1"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _add_input(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--input", metavar="FILE", help="JSON curve file")
    g.add_argument("--expr", metavar="STR", help='support function, e.g. "137 + 21*cos(2s) + sin(5s)"')


def _read_curve(args) -> CurveSpec:
    if args.input is not None:
        return load_curve(args.input)
    return parse_expression(args.expr)


def _k_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        k_min = int(lo)
        k_max = int(hi) if sep else k_min
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected MIN..MAX, got {text!r}") from None
    if k_min < 3 or k_max < k_min:
        raise argparse.ArgumentTypeError(f"need 3 <= MIN <= MAX, got {text!r}")
    return k_min, k_max


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hedgehogs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("describe", help="classical invariants of a hedgehog")
    _add_input(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("check", help="isoperimetric-type inequalities and stability bounds")
    _add_input(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--unchecked", action="store_true", help="allow non-convex input (outside theorem hypotheses)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("render", help="SVG (and CSV) of the curve families")
    _add_input(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--sets", default="oval,preserving", help=f"comma list from {','.join(SET_NAMES)}")
    p.add_argument("--samples", type=int, default=1024)
    p.add_argument("--polygon-angle", type=float, default=0.0, metavar="RAD")
    p.add_argument("-o", "--output", required=True, metavar="FILE")
    p.add_argument("--csv", metavar="FILE")

    p = sub.add_parser("fuzz", help="seeded random property testing")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--max-degree", type=int, default=12)
    p.add_argument("--k", type=_k_range, default=(3, 8), metavar="MIN..MAX")
    p.add_argument("--jobs", type=int, default=1)
    return parser


def describe_dict(spec: CurveSpec) -> dict:
    H = spec.to_hedgehog()
    disk = steiner_disk(H)
    return {
        "schema": DESCRIBE_SCHEMA,
        "label": spec.label,
        "curve": spec.to_json_dict(),
        "length": format_value(algebraic_length(H)),
        "area": format_value(oriented_area(H)),
        "average_width": format_value(average_width(H)),
        "steiner_point": [disk.center.x, disk.center.y],
        "steiner_disk_radius": format_value(disk.radius),
        "convexity": convexity_status(H),
        "deficit": format_value(isoperimetric_deficit(H)),
        "singular_points": [
            {"s": p.s, "x": p.location.x, "y": p.location.y, "cusp": p.is_cusp} for p in singular_points(H)
        ],
    }


def _show(v: dict) -> str:
    sym = v.get("symbolic")
    return v["decimal"] + (f"  ({sym})" if sym else "")


def cmd_describe(args) -> int:
    d = describe_dict(_read_curve(args))
    if args.json:
        print(json.dumps(d, indent=2, ensure_ascii=False))
        return EXIT_OK
    if d["label"]:
        print(f"curve: {d['label']}")
    print(f"L = {_show(d['length'])}")
    print(f"A = {_show(d['area'])}")
    print(f"average width = {_show(d['average_width'])}")
    sx, sy = d["steiner_point"]
    print(f"Steiner point = ({sx:.15g}, {sy:.15g}), disk radius = {_show(d['steiner_disk_radius'])}")
    print(f"convexity: {d['convexity']}")
    print(f"deficit L^2 - 4 pi A = {_show(d['deficit'])}")
    sp = d["singular_points"]
    print(f"singular points: {len(sp)} ({sum(p['cusp'] for p in sp)} cusps)")
    for p in sp:
        kind = "cusp" if p["cusp"] else "non-cusp"
        print(f"  s = {p['s']:.15g}  at ({p['x']:.15g}, {p['y']:.15g})  {kind}")
    return EXIT_OK


NUMERIC_FIELDS = (
    "deficit",
    "abs_area_preserving",
    "abs_area_midpoint_term",
    "slack_thm1",
    "slack_thm2",
    "d_inf",
    "d_2",
    "stab1_bound",
    "stab2_bound",
)


def check_dict(spec: CurveSpec, k: int, unchecked: bool) -> dict:
    report = full_report(spec.to_hedgehog(), k, unchecked=unchecked)
    d = {"schema": CHECK_SCHEMA, "label": spec.label, **report.to_dict()}
    d["symbolic"] = {
        name: sym for name in NUMERIC_FIELDS if (sym := format_value(getattr(report, name)).get("symbolic"))
    }
    d["violations"] = report.violations()
    return d


def cmd_check(args) -> int:
    spec = _read_curve(args)
    try:
        d = check_dict(spec, args.k, args.unchecked)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.json:
        print(json.dumps(d, indent=2, ensure_ascii=False))
    else:
        if not d["hypotheses_checked"]:
            print("WARNING: outside theorem hypotheses (non-convex input, --unchecked)")
        for name in NUMERIC_FIELDS:
            sym = d["symbolic"].get(name)
            print(f"{name} = {d[name]:.15g}" + (f"  ({sym})" if sym else ""))
        print(f"equality_thm1 = {d['equality_thm1']}, equality_thm2 = {d['equality_thm2']}")
        b1, b2 = d["corollary_bounds"]
        print(f"corollary_bounds = ({b1:.15g}, {b2:.15g})")
        print(f"convexity = {d['convexity_status']}")
        print("violations: " + (", ".join(d["violations"]) or "none"))
    return EXIT_VIOLATION if d["violations"] else EXIT_OK


def cmd_render(args) -> int:
    spec = _read_curve(args)
    sets = tuple(s.strip() for s in args.sets.split(",") if s.strip())
    req = RenderRequest(sets, args.k, args.samples, args.polygon_angle)
    layers = build_layers(spec.to_hedgehog(), req)
    title = spec.label or (args.expr or Path(args.input).name)
    try:
        Path(args.output).write_text(render_svg(layers, title=title))
        if args.csv:
            with open(args.csv, "w", newline="\n") as fh:
                fh.write(render_csv(layers))
    except OSError as exc:
        raise InputError(f"cannot write output: {exc}") from exc
    return EXIT_OK


def cmd_fuzz(args) -> int:
    if args.trials < 1:
        raise InputError("--trials must be >= 1")
    if args.max_degree < 2:
        raise InputError("--max-degree must be >= 2")
    k_min, k_max = args.k
    cfg = FuzzConfig(args.seed, args.trials, args.max_degree, k_min, k_max, max(1, args.jobs))
    results = run_fuzz(cfg)
    failed = [r for r in results if r.failures]
    numerical = [r for r in results if r.numerical]
    passed = len(results) - len(failed) - len(numerical)
    print(f"seed={cfg.seed} trials={cfg.trials} max_degree={cfg.max_degree} k={k_min}..{k_max}")
    print(f"passed={passed} violations={len(failed)} numerical_failures={len(numerical)}")
    if failed:
        first = failed[0]
        f, k, s = random_case(cfg.seed, first.trial, cfg.max_degree, k_min, k_max)
        small = minimize_counterexample(f, k, s)
        print(f"first violation: trial {first.trial}, k={k}: {', '.join(first.failures)}")
        print("minimized counterexample:")
        print(CurveSpec.from_trigpoly(small).dumps())
        return EXIT_VIOLATION
    if numerical:
        print(f"first numerical failure: trial {numerical[0].trial}: {numerical[0].numerical}")
        return EXIT_NUMERICAL
    return EXIT_OK


COMMANDS = {"describe": cmd_describe, "check": cmd_check, "render": cmd_render, "fuzz": cmd_fuzz}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except NumericalError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (HedgehogError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
