"""Finite simple graphs with named vertices, and the vertex inversion.

Graphs are immutable. Isolated vertices (singletons) are ordinary members of
the vertex set; nothing here ever drops them implicitly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

VERTEX_NAME = re.compile(r"^[A-Za-z0-9_]+$")

MAX_SPANNING_TREE_VERTICES = 8


class GraphError(ValueError):
    """Raised for malformed graphs and unknown vertices."""


def _edge(u: str, v: str) -> frozenset[str]:
    if u == v:
        raise GraphError(f"loop at vertex {u!r}")
    return frozenset((u, v))


@dataclass(frozen=True)
class Graph:
    vertices: frozenset[str]
    edges: frozenset[frozenset[str]]

    def __post_init__(self):
        for v in self.vertices:
            if not isinstance(v, str) or not VERTEX_NAME.match(v):
                raise GraphError(f"invalid vertex name {v!r}")
        for e in self.edges:
            if len(e) != 2:
                raise GraphError(f"edge {sorted(e)} does not have two distinct endpoints")
            missing = e - self.vertices
            if missing:
                raise GraphError(f"edge endpoint {sorted(missing)[0]!r} is not a vertex")

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[str, str]], vertices: Iterable[str] = ()) -> Graph:
        """Build a graph; endpoints are added to the vertex set automatically."""
        es = set()
        vs = set(vertices)
        for u, v in edges:
            e = _edge(u, v)
            if e in es:
                raise GraphError(f"duplicate edge {u} {v}")
            es.add(e)
            vs.update(e)
        return cls(frozenset(vs), frozenset(es))

    @cached_property
    def adjacency(self) -> dict[str, frozenset[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(n) for v, n in adj.items()}

    def degree(self, v: str) -> int:
        return len(neighbors(self, v))

    def sorted_vertices(self) -> list[str]:
        return sorted(self.vertices)

    def sorted_edges(self) -> list[tuple[str, str]]:
        return sorted(tuple(sorted(e)) for e in self.edges)

    def isolated_vertices(self) -> list[str]:
        return [v for v in self.sorted_vertices() if not self.adjacency[v]]

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        es = " ".join(u + v if len(u) == len(v) == 1 else f"{u}-{v}" for u, v in self.sorted_edges())
        iso = ",".join(self.isolated_vertices())
        return f"Graph(edges=[{es}], isolated=[{iso}])"


def neighbors(G: Graph, v: str) -> frozenset[str]:
    try:
        return G.adjacency[v]
    except KeyError:
        raise GraphError(f"unknown vertex {v!r}") from None


def induced_subgraph(G: Graph, S: Iterable[str]) -> Graph:
    S = frozenset(S)
    extra = S - G.vertices
    if extra:
        raise GraphError(f"vertices {sorted(extra)} are not in the graph")
    return Graph(S, frozenset(e for e in G.edges if e <= S))


def invert_vertex(G: Graph, v: str) -> Graph:
    """Delete ``v`` and keep only the edges among its non-neighbours.

    The neighbours of ``v`` stay in the result as isolated vertices.
    """
    nv = neighbors(G, v)
    rest = G.vertices - {v}
    keep = rest - nv
    return Graph(rest, frozenset(e for e in G.edges if e <= keep))


def is_ci_graph(G: Graph) -> bool:
    """True iff G is a disjoint union of edges and singletons (max degree <= 1)."""
    return all(len(n) <= 1 for n in G.adjacency.values())


def components(G: Graph) -> list[frozenset[str]]:
    """Connected components, each found by depth-first search; sorted by least vertex."""
    seen: set[str] = set()
    comps = []
    for start in G.sorted_vertices():
        if start in seen:
            continue
        stack = [start]
        comp = {start}
        while stack:
            u = stack.pop()
            for w in G.adjacency[u]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def is_connected(G: Graph) -> bool:
    # the empty graph counts as connected
    return len(components(G)) <= 1


def spanning_trees(G: Graph) -> list[frozenset[frozenset[str]]]:
    """All spanning trees of a small graph, as edge sets.

    Candidates are the (|V|-1)-subsets of edges in sorted order; a subset is kept
    when union-find sees no cycle.
    """
    n = len(G)
    if n > MAX_SPANNING_TREE_VERTICES:
        raise GraphError(f"spanning tree enumeration is capped at {MAX_SPANNING_TREE_VERTICES} vertices, got {n}")
    if n == 0:
        return [frozenset()]
    edges = G.sorted_edges()
    trees = []
    for subset in combinations(edges, n - 1):
        parent = {v: v for v in G.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in subset:
            ru, rv = find(u), find(v)
            if ru == rv:
                break
            parent[ru] = rv
        else:
            trees.append(frozenset(frozenset(e) for e in subset))
    return trees


def tree_degrees(tree: Iterable[frozenset[str]]) -> dict[str, int]:
    deg: dict[str, int] = {}
    for e in tree:
        for v in e:
            deg[v] = deg.get(v, 0) + 1
    return deg


# Named families on vertices x1..xn.

def _names(n: int, prefix: str = "x") -> list[str]:
    return [f"{prefix}{i}" for i in range(1, n + 1)]


def path_graph(n: int) -> Graph:
    vs = _names(n)
    return Graph.from_edges(zip(vs, vs[1:]), vs)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    vs = _names(n)
    return Graph.from_edges(zip(vs, vs[1:] + vs[:1]), vs)


def complete_graph(n: int) -> Graph:
    vs = _names(n)
    return Graph.from_edges(combinations(vs, 2), vs)


def star_graph(leaves: int) -> Graph:
    """Star with centre ``x0`` and leaves x1..x<leaves>."""
    return Graph.from_edges((("x0", v) for v in _names(leaves)), ["x0"])


def t_graph() -> Graph:
    """The 5-vertex tree t1-t2-t3 with t4 and t5 hanging off t3."""
    return Graph.from_edges([("t1", "t2"), ("t2", "t3"), ("t3", "t4"), ("t3", "t5")])
