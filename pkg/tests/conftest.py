from __future__ import annotations

import os
import random
from itertools import combinations

import pytest

from konigtype.graphs import Graph, parse_graph6

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")
DATA = os.path.join(os.path.dirname(__file__), "..", "data")


def load_graph6(name: str) -> list[Graph]:
    with open(os.path.join(FIXTURES, name), encoding="ascii") as fh:
        return [parse_graph6(line) for line in fh if line.strip()]


@pytest.fixture(scope="session")
def all_n_le_7() -> list[Graph]:
    return load_graph6("all_n_le_7.g6")


@pytest.fixture(scope="session")
def connected_n_le_7() -> list[Graph]:
    return load_graph6("connected_n_le_7.g6")


@pytest.fixture(scope="session")
def trees_n_le_9() -> list[Graph]:
    return load_graph6("trees_n_le_9.g6")


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [e for e in combinations(range(1, n + 1), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


# named graphs used throughout

def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, list(combinations(range(1, n + 1), 2)))


def star(leaves: int) -> Graph:
    """K_{1,leaves} with centre 1."""
    return Graph.from_edges(leaves + 1, [(1, i) for i in range(2, leaves + 2)])


def net() -> Graph:
    """Triangle 1,2,3 with pendant leaves 4,5,6."""
    return Graph.from_edges(
        6, [(1, 2), (2, 3), (1, 3), (1, 4), (2, 5), (3, 6)]
    )
