from __future__ import annotations

import random

import pytest
from hypothesis import settings

from legcat.braid import parse_braid
from legcat.exactlin import PrimeField

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

HOPF = parse_braid("n=3; w=1,2,1")
TREFOIL = parse_braid("n=3; w=1,2,1,2")
TREFOIL2 = parse_braid("n=2; w=1,1,1")
F2, F3, F5 = PrimeField(2), PrimeField(3), PrimeField(5)


@pytest.fixture
def rng():
    return random.Random(20240611)


# one line per acceptance criterion, collected by tests/test_acceptance.py
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
