import itertools

import networkx as nx
import pytest
from hypothesis import strategies as st

from sysbounds.families import gen_cycle, gen_groetzsch, gen_mycielski, gen_petersen
from sysbounds.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    nodes = sorted(h.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), ((index[u], index[v]) for u, v in h.edges()))


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, (e for e, keep in zip(pairs, chosen) if keep))


@pytest.fixture
def c5():
    return gen_cycle(5)


@pytest.fixture
def petersen():
    return gen_petersen()


@pytest.fixture
def groetzsch():
    return gen_groetzsch()


@pytest.fixture(scope="session")
def mycielski_groetzsch():
    return gen_mycielski(gen_groetzsch())


# One line per acceptance criterion, filled in by test_acceptance.py and
# echoed in the terminal summary so it lands in captured logs.
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[num])
