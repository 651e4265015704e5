import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from lpa_ibn import Graph

DATA = Path(__file__).parent / "data"


def fib():
    """u: loop + edge to v; v: edge to u.  A = [[1, 1], [1, 0]]."""
    return Graph.from_matrix([[1, 1], [1, 0]], ["u", "v"])


def sink_loops():
    """u: two loops + edge to the sink v."""
    return Graph.from_matrix([[2, 1], [0, 0]], ["u", "v"])


def uniform4():
    return Graph.from_matrix([[3, 2], [1, 2]], ["u", "v"])


def uniform4_sink():
    return Graph.from_matrix([[3, 2, 0], [1, 2, 1], [0, 0, 0]], ["u", "v", "w"])


def c4():
    return Graph.from_matrix([[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0]])


@pytest.fixture
def data_dir():
    return DATA


@st.composite
def graphs(draw, min_vertices=1, max_vertices=4, max_mult=2):
    h = draw(st.integers(min_vertices, max_vertices))
    rows = draw(st.lists(st.lists(st.integers(0, max_mult), min_size=h, max_size=h),
                         min_size=h, max_size=h))
    return Graph.from_matrix(rows)


@st.composite
def sinkless_graphs(draw, max_vertices=4, max_mult=2):
    g = draw(graphs(max_vertices=max_vertices, max_mult=max_mult))
    rows = [list(r) for r in g.adjacency]
    for i, row in enumerate(rows):
        if not any(row):
            row[draw(st.integers(0, g.order - 1))] = 1
    return Graph.from_matrix(rows)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
