import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cyclelab.cycles import analyze
from cyclelab.graph import from_graph6, to_graph6
from cyclelab.search import generate_graphs

FIXTURES = Path(__file__).parent / "fixtures"

_ACCEPTANCE_LINES: list[str] = []


@lru_cache(maxsize=None)
def graphs_of_order(n, connected=False):
    """One graph per isomorphism class, as graph6 strings."""
    return tuple(to_graph6(g) for g in generate_graphs(n, connected=connected))


def graphs_up_to(n_max, connected=False, n_min=1):
    return [from_graph6(s) for n in range(n_min, n_max + 1) for s in graphs_of_order(n, connected)]


@lru_cache(maxsize=None)
def analyzed(g6):
    return analyze(from_graph6(g6))


@pytest.fixture(scope="session")
def small_graphs():
    """Every graph with at most 7 vertices, up to isomorphism."""
    return graphs_up_to(7)


@pytest.fixture(scope="session")
def graphs_upto8():
    return graphs_up_to(8)


@pytest.fixture
def acceptance_log():
    def record(criterion: str, passed: bool, detail: str = "") -> None:
        _ACCEPTANCE_LINES.append(f"{'PASS' if passed else 'FAIL'}  {criterion}  {detail}".rstrip())

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
