import itertools

import pytest
from hypothesis import strategies as st

from twinbraess.graph import Graph, complete_graph, diamond_graph, path_graph, star_graph


@pytest.fixture
def k2():
    return Graph(2, ((0, 1),))


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def diamond():
    return diamond_graph()


@pytest.fixture
def claw():
    return star_graph(3)


@st.composite
def connected_graphs(draw, min_n=2, max_n=9):
    """Random spanning tree plus random extra edges; always connected."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(min_value=0, max_value=v - 1))
        edges.add((u, v))
    extra = [p for p in itertools.combinations(range(n), 2) if p not in edges]
    if extra:
        edges.update(draw(st.lists(st.sampled_from(extra), unique=True, max_size=len(extra))))
    perm = draw(st.permutations(range(n)))
    return Graph(n, tuple((perm[u], perm[v]) for u, v in edges))
