from itertools import combinations

import pytest

from ncigraph.enumeration import generate_graphs
from ncigraph.graph import Graph

EXAMPLE_EDGES = [("f", "d"), ("f", "g"), ("g", "d"), ("d", "b"), ("b", "c"), ("b", "a"), ("d", "e")]


def worked_graph() -> Graph:
    """Seven-vertex example; its inversions at c and f are not complete intersections."""
    return Graph.from_edges(EXAMPLE_EDGES)


@pytest.fixture
def example_graph():
    return worked_graph()


def all_graphs_up_to(n_max: int):
    """Every isomorphism class with at most n_max vertices, plus the empty graph."""
    yield Graph(frozenset(), frozenset())
    for n in range(1, n_max + 1):
        yield from generate_graphs(n)


def labeled_graph(n: int, mask: int) -> Graph:
    names = [f"v{k}" for k in range(1, n + 1)]
    pairs = list(combinations(names, 2))
    return Graph.from_edges([p for k, p in enumerate(pairs) if mask >> k & 1], names)
