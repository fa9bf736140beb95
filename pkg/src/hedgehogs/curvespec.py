"""Curve input/output: the JSON curve format, the expression shorthand, and
number formatting with symbolic multiples of pi."""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .curvegeom import Hedgehog
from .errors import InputError
from .fourier import TrigPoly


@dataclass(frozen=True)
class CurveSpec:
    a0: float
    harmonics: tuple[tuple[int, float, float], ...] = ()
    label: str | None = None

    def to_trigpoly(self) -> TrigPoly:
        return TrigPoly(self.a0, self.harmonics)

    def to_hedgehog(self) -> Hedgehog:
        return Hedgehog(self.to_trigpoly())

    def to_json_dict(self) -> dict:
        d: dict = {
            "a0": self.a0,
            "harmonics": [{"n": n, "a": a, "b": b} for n, a, b in self.harmonics],
        }
        if self.label is not None:
            d["label"] = self.label
        return d

    def dumps(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    @classmethod
    def from_trigpoly(cls, f: TrigPoly, label: str | None = None) -> CurveSpec:
        return cls(f.a0, f.harmonics, label)


def _number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InputError(f"{where}: expected a number, got {value!r}")
    if not math.isfinite(value):
        raise InputError(f"{where}: number must be finite")
    return float(value)


def parse_curve_dict(doc, source: str = "<input>") -> CurveSpec:
    if not isinstance(doc, dict):
        raise InputError(f"{source}: top level must be an object")
    unknown = set(doc) - {"a0", "harmonics", "label"}
    if unknown:
        raise InputError(f"{source}: unknown field(s) {sorted(unknown)}")
    if "a0" not in doc:
        raise InputError(f"{source}: missing field 'a0'")
    a0 = _number(doc["a0"], f"{source}: field 'a0'")
    raw = doc.get("harmonics", [])
    if not isinstance(raw, list):
        raise InputError(f"{source}: field 'harmonics' must be a list")
    harmonics = []
    seen = set()
    for i, item in enumerate(raw):
        where = f"{source}: harmonics[{i}]"
        if not isinstance(item, dict):
            raise InputError(f"{where}: expected an object with n, a, b")
        extra = set(item) - {"n", "a", "b"}
        if extra:
            raise InputError(f"{where}: unknown field(s) {sorted(extra)}")
        n = item.get("n")
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise InputError(f"{where}.n: expected an integer >= 1, got {n!r}")
        if n in seen:
            raise InputError(f"{where}.n: duplicate harmonic index {n}")
        seen.add(n)
        a = _number(item.get("a", 0.0), f"{where}.a")
        b = _number(item.get("b", 0.0), f"{where}.b")
        harmonics.append((n, a, b))
    label = doc.get("label")
    if label is not None and not isinstance(label, str):
        raise InputError(f"{source}: field 'label' must be a string")
    return CurveSpec(a0, tuple(sorted(harmonics)), label)


def load_curve(path: str | Path) -> CurveSpec:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}") from exc
    return parse_curve_dict(doc, str(path))


_TERM = re.compile(
    r"""
    (?P<sign>[+-])?\s*
    (?:
        (?P<coef>\d+(?:\.\d*)?(?:[eE][+-]?\d+)?(?:\s*/\s*\d+)?|\.\d+(?:[eE][+-]?\d+)?)
        \s*(?:\*\s*)?
    )?
    (?:
        (?P<fn>cos|sin)\s*\(\s*(?P<n>\d+)?\s*\*?\s*s\s*\)
    )?
    \s*
    """,
    re.VERBOSE,
)


def _coefficient(text: str | None) -> Fraction:
    if text is None:
        return Fraction(1)
    text = text.replace(" ", "")
    if "/" in text:
        p, q = text.split("/")
        if int(q) == 0:
            raise InputError(f"zero denominator in {text!r}")
        return Fraction(p) / int(q)
    return Fraction(text)


def parse_expression(expr: str, label: str | None = None) -> CurveSpec:
    """Parse e.g. ``137 + 21*cos(2s) + sin(5s) - 1/3*sin(9s)``.

    Terms are ``C``, ``A*cos(N s)`` and ``A*sin(N s)`` joined by + or -, with
    integer N and decimal or rational ``p/q`` coefficients. Repeated terms add.
    """
    pos, first = 0, True
    a0 = Fraction(0)
    acc: dict[int, list[Fraction]] = {}
    text = expr.strip()
    if not text:
        raise InputError("empty expression")
    while pos < len(text):
        m = _TERM.match(text, pos)
        if m is None or m.end() == pos or (m.group("coef") is None and m.group("fn") is None):
            raise InputError(f"cannot parse expression at column {pos + 1}: {text[pos:]!r}")
        if m.group("sign") is None and not first:
            raise InputError(f"missing '+' or '-' before column {pos + 1}")
        sign = -1 if m.group("sign") == "-" else 1
        coef = sign * _coefficient(m.group("coef"))
        if m.group("fn") is None:
            a0 += coef
        else:
            n = int(m.group("n") or 1)
            if n < 1:
                raise InputError(f"harmonic index must be >= 1 at column {pos + 1}")
            slot = acc.setdefault(n, [Fraction(0), Fraction(0)])
            slot[0 if m.group("fn") == "cos" else 1] += coef
        pos, first = m.end(), False
    harmonics = tuple((n, float(a), float(b)) for n, (a, b) in sorted(acc.items()))
    return CurveSpec(float(a0), harmonics, label)


PI_SYMBOLS = {1: "π", 2: "π²"}


def symbolic_pi_multiple(value: float, max_denominator: int = 10**6) -> str | None:
    """Return e.g. ``'325225π/18'`` when value is a rational multiple of pi^m.

    A candidate p/q is accepted only when it matches to a few ulps and q is
    small enough that such a match cannot be a generic Diophantine accident
    (generic best approximants are off by about 1/q^2).
    """
    if not math.isfinite(value) or value == 0.0:
        return None
    best = None
    for m in (1, 2):
        x = value / math.pi**m
        frac = Fraction(x).limit_denominator(max_denominator)
        err = abs(x - float(frac))
        tol = 64 * math.ulp(abs(x))
        q = frac.denominator
        if err <= tol and q * q * tol < 1e-2:
            if best is None or q < best[1].denominator:
                best = (m, frac)
    if best is None:
        return None
    m, frac = best
    p, q = frac.numerator, frac.denominator
    sym = PI_SYMBOLS[m]
    head = f"{'-' if p < 0 else ''}{'' if abs(p) == 1 else abs(p)}{sym}"
    return head if q == 1 else f"{head}/{q}"


def format_value(value: float) -> dict:
    out = {"value": value, "decimal": f"{value:.15g}"}
    sym = symbolic_pi_multiple(value)
    if sym is not None:
        out["symbolic"] = sym
    return out
