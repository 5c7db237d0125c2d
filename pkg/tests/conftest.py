from pathlib import Path

import pytest

from binedge import Graph, complete_bipartite, cycle_graph, parse_edge_list, path_graph

DATA = Path(__file__).parent / "data"

TWIN_TRIANGLE_EDGES = [(1, 2), (2, 3), (2, 4), (3, 4), (4, 5), (2, 7),
                       (6, 7), (7, 8), (7, 9), (8, 9), (9, 10)]


@pytest.fixture
def p5():
    return path_graph(5)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def k25():
    return complete_bipartite(2, 5)


@pytest.fixture
def twin_triangles():
    return Graph(10, TWIN_TRIANGLE_EDGES)


@pytest.fixture
def data_graph():
    def load(name):
        return parse_edge_list((DATA / name).read_text())
    return load


_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
