import random

import pytest
from hypothesis import strategies as st

from d2crit.graph import Graph, build_graph, cycle_graph


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 9) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, chosen)


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return build_graph(n, [(u, v) for v in range(n) for u in range(v) if rng.random() < p])


@pytest.fixture
def c5() -> Graph:
    return cycle_graph(5)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(module.RESULTS, key=lambda s: int(s.split()[2])):
        terminalreporter.write_line(line)
