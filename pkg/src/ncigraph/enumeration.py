"""Small-graph enumeration up to isomorphism, and the verdict harnesses.

Canonical form: the upper-triangle adjacency bitstring (row-major, pairs
(0,1), (0,2), ..., (n-2,n-1)) minimized over all n! vertex orderings.  The
minimization is done for all permutations at once with numpy, which is exact
and fast enough for n <= 8.

Connected graphs on n vertices are produced by extending every connected
(n-1)-vertex representative with a new vertex joined to a nonempty subset;
every connected graph arises this way because it has a vertex whose removal
leaves it connected.
"""

from __future__ import annotations

import random
import string
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator

import numpy as np

from .classify import Verdict, classify, is_nci_definitional
from .formats import encode_graph6
from .graph import Graph, is_connected
from .ideal import Monomial, MonomialIdeal, is_nci

MAX_N = 8
EXHAUSTIVE_N = 7  # n = 8 works but takes many minutes


@dataclass(frozen=True, order=True)
class CanonicalGraph:
    n: int
    bits: str

    @property
    def code(self) -> int:
        return int(self.bits, 2) if self.bits else 0

    def to_graph(self) -> Graph:
        names = [f"v{k}" for k in range(1, self.n + 1)]
        edges = [(names[i], names[j]) for (i, j), b in zip(_pairs(self.n), self.bits) if b == "1"]
        return Graph.from_edges(edges, names)


@lru_cache(maxsize=None)
def _pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(combinations(range(n), 2))


@lru_cache(maxsize=None)
def _permutation_table(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    # permutations(range(n)) is ordered by first element: block v is rows v*(n-1)! .. (v+1)*(n-1)!
    perms = np.array(list(permutations(range(n))), dtype=np.intp).reshape(-1, n)
    pairs = np.array(_pairs(n), dtype=np.intp).reshape(-1, 2)
    rows = perms[:, pairs[:, 0]]
    cols = perms[:, pairs[:, 1]]
    weights = (1 << np.arange(len(pairs) - 1, -1, -1, dtype=np.int64)) if len(pairs) else np.zeros(0, np.int64)
    return perms, rows, cols, weights


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be between 1 and {MAX_N}, got {n}")


def canonical_code(adj: np.ndarray) -> tuple[int, np.ndarray]:
    """Minimal bitstring value over all orderings, and one ordering attaining it.

    ``perm[k]`` is the original vertex placed at position k.
    """
    n = adj.shape[0]
    perms, rows, cols, weights = _permutation_table(n)
    if not len(weights):
        return 0, perms[0]
    # The first n-1 bits are the row of the vertex placed first, so a minimal
    # code starts with a minimum-degree vertex; only those blocks are searched.
    deg = adj.sum(axis=1)
    block = len(perms) // n
    starts = np.flatnonzero(deg == deg.min())
    idx = np.concatenate([np.arange(v * block, (v + 1) * block) for v in starts])
    codes = adj[rows[idx], cols[idx]].astype(np.int64) @ weights
    best = int(np.argmin(codes))
    return int(codes[best]), perms[idx[best]]


def _bits(code: int, n: int) -> str:
    m = n * (n - 1) // 2
    return format(code, f"0{m}b") if m else ""


def canonical_form(G: Graph) -> CanonicalGraph:
    vs = G.sorted_vertices()
    n = len(vs)
    _check_n(n)
    pos = {v: k for k, v in enumerate(vs)}
    adj = np.zeros((n, n), dtype=np.uint8)
    for u, v in G.sorted_edges():
        adj[pos[u], pos[v]] = adj[pos[v], pos[u]] = 1
    code, _ = canonical_code(adj)
    return CanonicalGraph(n, _bits(code, n))


@lru_cache(maxsize=None)
def _canonical_codes(n: int, connected: bool) -> tuple[int, ...]:
    """Sorted canonical codes of all (connected) graphs on n vertices."""
    if n == 1:
        return (0,)
    parents = _canonical_codes(n - 1, connected)
    m_prev = (n - 1) * (n - 2) // 2
    prev_pairs = _pairs(n - 1)
    found: set[int] = set()
    adj = np.zeros((n, n), dtype=np.uint8)
    start = 1 if connected else 0
    for code in parents:
        adj[:] = 0
        for k, (i, j) in enumerate(prev_pairs):
            if (code >> (m_prev - 1 - k)) & 1:
                adj[i, j] = adj[j, i] = 1
        for mask in range(start, 1 << (n - 1)):
            for i in range(n - 1):
                adj[i, n - 1] = adj[n - 1, i] = (mask >> i) & 1
            found.add(canonical_code(adj)[0])
    return tuple(sorted(found))


def generate_connected_graphs(n: int) -> Iterator[Graph]:
    """One graph per isomorphism class of connected graphs on n vertices, in canonical order."""
    _check_n(n)
    for code in _canonical_codes(n, True):
        yield CanonicalGraph(n, _bits(code, n)).to_graph()


def generate_graphs(n: int) -> Iterator[Graph]:
    """Like :func:`generate_connected_graphs` but including disconnected graphs."""
    _check_n(n)
    for code in _canonical_codes(n, False):
        yield CanonicalGraph(n, _bits(code, n)).to_graph()


def labeled_connected_canonical_set(n: int) -> set[CanonicalGraph]:
    """Canonicalize every connected labeled graph on n vertices (the brute-force recount)."""
    _check_n(n)
    names = [f"v{k}" for k in range(1, n + 1)]
    pairs = list(combinations(names, 2))
    out = set()
    for mask in range(1 << len(pairs)):
        G = Graph.from_edges([p for k, p in enumerate(pairs) if mask >> k & 1], names)
        if is_connected(G):
            out.add(canonical_form(G))
    return out


@dataclass
class Mismatch:
    graph6: str
    edges: list[tuple[str, str]]
    definitional: str
    structural: str

    def to_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "edges": [list(e) for e in self.edges],
            "definitional": self.definitional,
            "structural": self.structural,
        }


@dataclass
class CrossValidation:
    n: int
    checked: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"n": self.n, "checked": self.checked, "mismatches": [m.to_dict() for m in self.mismatches]}


def cross_validate(n: int, connected_only: bool = True) -> CrossValidation:
    """Compare the definitional and structural verdicts on every graph with n vertices."""
    graphs = generate_connected_graphs(n) if connected_only else generate_graphs(n)
    report = CrossValidation(n)
    for G in graphs:
        d = is_nci_definitional(G).verdict
        s = classify(G).verdict
        report.checked += 1
        if d is not s:
            report.mismatches.append(Mismatch(encode_graph6(G), G.sorted_edges(), d.value, s.value))
    return report


@dataclass
class CensusRow:
    n: int
    connected_count: int = 0
    nci_count: int = 0
    neither_count: int = 0
    ci_count: int = 0

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def nci_census(n_max: int) -> list[CensusRow]:
    _check_n(n_max)
    rows = []
    for n in range(1, n_max + 1):
        row = CensusRow(n)
        for G in generate_connected_graphs(n):
            row.connected_count += 1
            v = classify(G).verdict
            if v is Verdict.NCI:
                row.nci_count += 1
            elif v is Verdict.CI:
                row.ci_count += 1
            else:
                row.neither_count += 1
        rows.append(row)
    return rows


# hypergraph search

@dataclass(frozen=True)
class HypergraphSearchParams:
    max_vars: int = 7
    max_gens: int = 8
    max_degree: int = 3
    sample_count: int = 200
    seed: int = 0

    def validate(self) -> None:
        if not 1 <= self.max_vars <= 10:
            raise ValueError(f"max_vars must be in 1..10, got {self.max_vars}")
        if self.max_degree < 3:
            raise ValueError(f"max_degree must be at least 3, got {self.max_degree}")
        if self.max_gens < 1:
            raise ValueError(f"max_gens must be positive, got {self.max_gens}")
        if self.sample_count < 0:
            raise ValueError(f"sample_count must be nonnegative, got {self.sample_count}")


def coned_pair(p: int, q: int) -> MonomialIdeal:
    """Two disjoint hyperedges of sizes p and q, every vertex also joined to an apex.

    Variables are letters in order: the first part, the second part, then the apex.
    """
    letters = string.ascii_lowercase
    A = letters[:p]
    B = letters[p:p + q]
    apex = letters[p + q]
    gens = [Monomial.of(*A), Monomial.of(*B)] + [Monomial.of(x, apex) for x in A + B]
    return MonomialIdeal.from_generators(gens)


def _qualifies(I: MonomialIdeal) -> bool:
    return any(g.degree >= 3 for g in I.generators) and is_nci(I)


def hypergraph_nci_search(params: HypergraphSearchParams) -> list[MonomialIdeal]:
    """NCI ideals with a generator of degree >= 3: the coned family first, then random antichains."""
    params.validate()
    found: list[MonomialIdeal] = []
    seen: set[frozenset[Monomial]] = set()

    def keep(I: MonomialIdeal) -> None:
        if I.generators not in seen and _qualifies(I):
            seen.add(I.generators)
            found.append(I)

    for p in range(1, params.max_degree + 1):
        for q in range(p, params.max_degree + 1):
            if p + q + 1 <= params.max_vars and p + q + 2 <= params.max_gens:
                keep(coned_pair(p, q))

    rng = random.Random(params.seed)
    variables = string.ascii_lowercase[:params.max_vars]
    top = min(params.max_degree, params.max_vars)
    for _ in range(params.sample_count):
        if top < 2 or params.max_gens < 2:
            break
        k = rng.randint(2, params.max_gens)
        gens = []
        for _ in range(k):
            size = rng.randint(2, top)
            gens.append(Monomial.of(*sorted(rng.sample(variables, size))))
        if any(g.divides(h) or h.divides(g) for g, h in combinations(gens, 2)):
            continue
        keep(MonomialIdeal.from_generators(gens))
    return found
