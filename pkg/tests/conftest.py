from __future__ import annotations

import itertools
import sys

import pytest
from hypothesis import strategies as st

from brushnumber.graph import Graph


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7, connected: bool = False) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    edges = set(chosen)
    if connected:
        # a random spanning tree keeps every draw connected
        for v in range(1, n):
            edges.add((draw(st.integers(0, v - 1)), v))
    return Graph(n, frozenset(edges))


def all_connected_graphs(n: int):
    """Every connected labelled graph on ``n`` vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = Graph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))
        if g.is_connected():
            yield g


@pytest.fixture
def k2() -> Graph:
    return Graph(2, frozenset({(0, 1)}))


@pytest.fixture
def p3() -> Graph:
    return Graph(3, frozenset({(0, 1), (1, 2)}))


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULT_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for number in sorted(lines):
            terminalreporter.write_line(lines[number])
