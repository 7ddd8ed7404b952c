import sys
from pathlib import Path

import pytest

from indexcoding.graphs import Digraph

sys.path.insert(0, str(Path(__file__).parent))  # make `oracles` importable


def side_info_graph(*sets) -> Digraph:
    return Digraph.from_side_info([set(s) for s in sets])


def ring(n: int) -> Digraph:
    """Directed ring where each receiver holds the previous message."""
    return Digraph.from_edges(n, [(j, j % n + 1) for j in range(1, n + 1)])


@pytest.fixture
def fig1() -> Digraph:
    """Three receivers: A1={2,3}, A2={1}, A3={1,2}."""
    return side_info_graph({2, 3}, {1}, {1, 2})


@pytest.fixture
def two_cycle() -> Digraph:
    return side_info_graph({2}, {1})
