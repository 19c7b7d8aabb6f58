import random

import pytest

from multitile import QQ, Vec, validate_polygon
from multitile.generators import SQRT2


@pytest.fixture
def K():
    return SQRT2


@pytest.fixture
def r2():
    return SQRT2(0, 1)


def vec(spec, x, y):
    return Vec.of(spec, x, y)


def qpoly(*pts):
    return validate_polygon([Vec.of(QQ, x, y) for x, y in pts])


SQUARE = ((0, 0), (1, 0), (1, 1), (0, 1))
HEXAGON = ((0, 0), (1, 0), (2, 1), (2, 2), (1, 2), (0, 1))
OCTAGON = ((0, 0), (1, 0), (2, 1), (2, 2), (1, 3), (0, 3), (-1, 2), (-1, 1))


@pytest.fixture
def rng():
    return random.Random(20201)


# one line per acceptance criterion, repeated in the terminal summary
ACCEPTANCE_LINES = []


def record_acceptance(number: int, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
