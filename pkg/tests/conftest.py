from pathlib import Path

import pytest

from groebnercheck.cases import fixture_dir
from groebnercheck.parse import load_system, parse_poly
from groebnercheck.poly import TermOrder, VariableTable

FIXTURES = fixture_dir()
ALL_FIXTURES = sorted(FIXTURES.rglob("*.sys"))


@pytest.fixture
def xy():
    return VariableTable(("x", "y"))


@pytest.fixture
def P(xy):
    """Parse on the {x, y} table."""
    return lambda s: parse_poly(s, xy)


@pytest.fixture
def lex(xy):
    return TermOrder.make("lex", xy)


def fixture(rel) -> "SystemFile":
    return load_system(FIXTURES / rel)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for n in sorted(lines):
            terminalreporter.write_line(lines[n])
