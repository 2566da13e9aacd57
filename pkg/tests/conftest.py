"""Shared fixtures: named small graphs and session-cached corpora."""

from __future__ import annotations

import pytest

from invdom.generate import (
    all_graphs,
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
)
from invdom.graph import Graph


@pytest.fixture
def k1():
    return Graph(1)


@pytest.fixture
def k2():
    return Graph(2, [(0, 1)])


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def star4():
    """K_{1,4}: center 0, leaves 1..4."""
    return star_graph(4)


@pytest.fixture(scope="session")
def corpus7():
    """All non-isomorphic graphs with 1 <= n <= 7, keyed by order."""
    return {n: all_graphs(n) for n in range(1, 8)}


@pytest.fixture(scope="session")
def corpus8(corpus7):
    """All non-isomorphic graphs with 1 <= n <= 8 (takes ~30s to build)."""
    out = dict(corpus7)
    out[8] = all_graphs(8)
    return out
