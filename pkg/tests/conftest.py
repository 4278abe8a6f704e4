from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from energeia import parse_geometry, symbolic_generators  # noqa: E402

def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is not None and module.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(module.RESULTS):
            terminalreporter.write_line(line)


K2 = [[1], [2], [1, 2]]
SIX = [[1], [2], [3], [1, 2], [1, 3], [2, 3]]
NON_COMPLEX = [[1], [2], [1, 2, 3]]


@pytest.fixture
def k2_free():
    return symbolic_generators(parse_geometry(K2), commutative=False, names=["x1", "x2", "x3"])


@pytest.fixture
def k2_poly():
    return symbolic_generators(parse_geometry(K2), commutative=True, names=["x1", "x2", "x3"])


@pytest.fixture
def six_free():
    return symbolic_generators(parse_geometry(SIX), commutative=False, names=list("xyzabc"))


@pytest.fixture
def six_poly():
    return symbolic_generators(parse_geometry(SIX), commutative=True, names=list("xyzabc"))


@pytest.fixture
def noncomplex_poly():
    return symbolic_generators(parse_geometry(NON_COMPLEX), commutative=True, names=list("xyz"))


@pytest.fixture
def noncomplex_free():
    return symbolic_generators(parse_geometry(NON_COMPLEX), commutative=False, names=list("xyz"))
