import random
from pathlib import Path

import pytest

from w2bound.curve import BadReduction, reduce_curve

ROOT = Path(__file__).resolve().parent.parent
JOBS = ROOT / "jobs"

# integer coefficients, constant term first
CURVE_1 = [64, -16, 1, 0, 0, 49, -14, 1]      # x^7 - 14x^6 + 49x^5 + x^2 - 16x + 64
CURVE_2 = [10, 11, -3, 19, 5, 9, -7, 1]       # (x^3-2x^2-3x-5)(x^4-5x^3+2x^2-x-2)
CURVE_3 = [0, -24, -80, -74, -20, -13, 0, 1]  # x(x^2+4)(x^2-4x-3)(x^2+4x+2)
CURVES = {"one": CURVE_1, "two": CURVE_2, "three": CURVE_3}

ALPHA_1 = [[0, 1, 0], [0, 0, 1]]
ALPHA_2 = [[2, 3, 0], [3, 0, 3]]
ALPHA_3 = [[4, 3, 0], [4, 0, 3]]


def good_curves(primes=(5, 7)):
    """(label, p, CurveModP) for the fixture curves with good reduction at p."""
    out = []
    for label, co in CURVES.items():
        for p in primes:
            try:
                out.append((label, p, reduce_curve(co, p)))
            except BadReduction:
                pass
    return out


def random_good_curves(n, primes=(5, 7, 11, 13), seed=1234):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        p = primes[len(out) % len(primes)]
        co = [rng.randrange(-50, 51) for _ in range(7)] + [rng.choice([1, 2, 3])]
        try:
            out.append(reduce_curve(co, p))
        except BadReduction:
            continue
    return out


@pytest.fixture(scope="session")
def c1():
    return reduce_curve(CURVE_1, 7)


@pytest.fixture(scope="session")
def c2():
    return reduce_curve(CURVE_2, 5)


@pytest.fixture(scope="session")
def c3():
    return reduce_curve(CURVE_3, 5)


# one line per acceptance criterion, echoed in the terminal summary
CRITERIA_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if CRITERIA_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(CRITERIA_LINES):
            terminalreporter.write_line(line)
