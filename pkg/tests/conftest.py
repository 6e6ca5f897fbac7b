import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from gspline.algebra import Poly
from gspline.graph import CycleGraph

settings.register_profile(
    "default", deadline=None, max_examples=40,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

X, Y = Poly.var(0), Poly.var(1)


def quad(a) -> Poly:
    return (X + Y * Fraction(a)) ** 2


def cycle_with_params(params, prefix="v") -> CycleGraph:
    """Cycle whose i-th edge is labeled (x + params[i] y)^2."""
    return CycleGraph([f"{prefix}{i}" for i in range(len(params))],
                      [quad(a) for a in params], nvars=2)


def random_cycle_params(rng: random.Random, n: int, regime: int) -> list[Fraction]:
    """Edge parameters for an n-cycle with exactly 1, exactly 2 or at least 3
    distinct labels (regime 1, 2, 3)."""
    pool = rng.sample([Fraction(k, rng.choice([1, 1, 2, 3])) for k in range(-9, 10) if k], 6)
    pool = list(dict.fromkeys(pool))
    if regime == 1:
        return [pool[0]] * n
    if regime == 2:
        while True:
            pat = [rng.randrange(2) for _ in range(n)]
            if len(set(pat)) == 2:
                return [pool[k] for k in pat]
    while True:
        k = rng.randint(3, min(n, len(pool)))
        pat = [rng.randrange(k) for _ in range(n)]
        if len(set(pat)) >= 3:
            return [pool[j] for j in pat]


small_rationals = st.fractions(min_value=-6, max_value=6, max_denominator=4)


@st.composite
def polys(draw, nvars=2, max_degree=3, max_terms=5):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        exp = tuple(draw(st.integers(0, max_degree)) for _ in range(nvars))
        if sum(exp) <= max_degree:
            terms[exp] = draw(small_rationals)
    return Poly(terms, nvars)


@pytest.fixture
def rng():
    return random.Random(20240611)


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
