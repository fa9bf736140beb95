import math

import numpy as np
import pytest
from hypothesis import settings, strategies as st

from hedgehogs import Hedgehog, TrigPoly

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

THIRD = 1.0 / 3.0

# 137 + 21cos2s + sin5s + cos6s - (1/3)sin9s + (1/3)sin10s
GOLDEN = TrigPoly(137.0, ((2, 21.0, 0.0), (5, 0.0, 1.0), (6, 1.0, 0.0), (9, 0.0, -THIRD), (10, 0.0, THIRD)))
# 130 + sin5s + sin10s
PENTAGON = TrigPoly(130.0, ((5, 0.0, 1.0), (10, 0.0, 1.0)))
# 30 + sin2s + cos3s + cos4s
MIXED34 = TrigPoly(30.0, ((2, 0.0, 1.0), (3, 1.0, 0.0), (4, 1.0, 0.0)))


@pytest.fixture
def golden():
    return Hedgehog(GOLDEN)


@pytest.fixture
def pentagon():
    return Hedgehog(PENTAGON)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


# exact zeros or magnitudes well above rounding; subnormal amplitudes only
# exercise float underflow, not geometry
_magnitude = st.floats(min_value=1e-6, max_value=5.0)
coefficient = st.one_of(st.just(0.0), _magnitude, _magnitude.map(lambda x: -x))


@st.composite
def trig_polys(draw, max_degree=10, a0=None):
    degree = draw(st.integers(min_value=0, max_value=max_degree))
    indices = draw(st.lists(st.integers(1, max(degree, 1)), unique=True, max_size=degree))
    terms = tuple((n, draw(coefficient), draw(coefficient)) for n in indices)
    const = draw(coefficient) if a0 is None else a0
    return TrigPoly(const, terms)


@st.composite
def ovals(draw, max_degree=10):
    """Convex support functions: a0 dominates sum (n^2 - 1) * amplitude."""
    f = draw(trig_polys(max_degree=max_degree, a0=0.0))
    n = f.indices.astype(float)
    budget = float(np.sum(np.abs(1 - n**2) * f.amplitudes()))
    a0 = draw(st.floats(min_value=1.0, max_value=50.0)) + budget
    return TrigPoly(a0, f.harmonics)


angles = st.floats(min_value=-4 * math.pi, max_value=4 * math.pi, allow_nan=False)
ks = st.integers(min_value=3, max_value=12)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
