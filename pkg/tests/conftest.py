import pytest
from hypothesis import strategies as st

from transcorr.graph import DiGraph, parse_edge_list


def graph_from_arcs(n, arcs):
    return DiGraph(n, frozenset(arcs))


@st.composite
def digraphs(draw, min_n=3, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    if not pairs:
        return DiGraph(n, frozenset())
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return DiGraph(n, frozenset(chosen))


@pytest.fixture
def cycle3():
    return graph_from_arcs(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def trans_triangle():
    # nodes 1,2,3 of the text examples map to 0,1,2
    return parse_edge_list("1 2\n2 3\n1 3")


@pytest.fixture
def empty5():
    return DiGraph(5, frozenset())


@pytest.fixture
def complete4():
    return DiGraph(4, frozenset((i, j) for i in range(4) for j in range(4) if i != j))


ACCEPTANCE_RESULTS = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance" in report.nodeid:
        ACCEPTANCE_RESULTS.append((report.nodeid.split("::")[-1], report.outcome))
    elif report.when == "setup" and report.skipped and "test_acceptance" in report.nodeid:
        ACCEPTANCE_RESULTS.append((report.nodeid.split("::")[-1], "skipped"))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in ACCEPTANCE_RESULTS:
        tag = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[outcome]
        terminalreporter.write_line(f"{tag}  {name}")
