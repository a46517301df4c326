import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from kflab.enumeration import random_cactus
from kflab.graph import Graph

settings.register_profile("kflab", derandomize=True, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("kflab")

_ACCEPTANCE = []


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in _ACCEPTANCE:
        terminalreporter.write_line(line)


@st.composite
def cacti(draw, nmin=1, nmax=12, tmin=0):
    n = draw(st.integers(min_value=max(nmin, 2 * tmin + 1), max_value=nmax))
    t = draw(st.integers(min_value=tmin, max_value=(n - 1) // 2))
    seed = draw(st.integers(min_value=0, max_value=2 ** 32))
    return random_cactus(n, t, seed)


def random_connected_graph(rng: random.Random, n: int, extra: float = 0.3) -> Graph:
    edges = set()
    for v in range(1, n):
        u = rng.randrange(v)
        edges.add((u, v))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < extra:
                edges.add((u, v))
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph.from_edges(n, edges).relabel(perm)


@st.composite
def connected_graphs(draw, nmin=1, nmax=10):
    n = draw(st.integers(min_value=nmin, max_value=nmax))
    seed = draw(st.integers(min_value=0, max_value=2 ** 32))
    density = draw(st.sampled_from([0.0, 0.1, 0.3, 0.6]))
    return random_connected_graph(random.Random(seed), n, density)
