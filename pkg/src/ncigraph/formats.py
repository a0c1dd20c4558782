"""Text formats: edge lists, graph6, monomial lists, and DOT output."""

from __future__ import annotations

import logging
import re
from typing import Optional

from .classify import Obstruction
from .graph import VERTEX_NAME, Graph, GraphError
from .ideal import IdealError, Monomial, MonomialIdeal, minimalize

log = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"
FACTOR = re.compile(r"^([A-Za-z0-9_]+)(?:\^([0-9]+))?$")


class ParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _records(text: str):
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield n, line


# graph6

def _n_bytes(n: int) -> list[int]:
    if n < 63:
        return [n]
    if n < 258048:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    raise ValueError("graph6 supports at most 258047 vertices here")


def encode_graph6(G: Graph) -> str:
    """graph6 string; vertex k is the k-th vertex in sorted name order."""
    vs = G.sorted_vertices()
    pos = {v: k for k, v in enumerate(vs)}
    adj = {(min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in G.sorted_edges()}
    bits = [1 if (i, j) in adj else 0 for j in range(1, len(vs)) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    data = [int("".join(map(str, bits[k:k + 6])), 2) for k in range(0, len(bits), 6)]
    return "".join(chr(b + 63) for b in _n_bytes(len(vs)) + data)


def decode_graph6(s: str, prefix: str = "v") -> Graph:
    """Decode graph6; vertices are named ``v1..vn``, zero-padded so name order is graph6 order."""
    s = s.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    vals = [ord(ch) - 63 for ch in s]
    if not vals or any(not 0 <= b <= 63 for b in vals):
        raise ParseError(f"not a graph6 string: {s!r}")
    if vals[0] == 63:
        if len(vals) < 4 or vals[1] == 63:
            raise ParseError("graph6 sizes above 258047 are not supported")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        data = vals[4:]
    else:
        n = vals[0]
        data = vals[1:]
    nbits = n * (n - 1) // 2
    if len(data) != -(-nbits // 6):
        raise ParseError(f"graph6 string has {len(data)} data bytes, expected {-(-nbits // 6)} for {n} vertices")
    bits = [(b >> (5 - k)) & 1 for b in data for k in range(6)]
    width = len(str(n))
    names = [f"{prefix}{k + 1:0{width}d}" for k in range(n)]
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((names[i], names[j]))
            idx += 1
    return Graph.from_edges(edges, names)


def looks_like_graph6(text: str) -> bool:
    records = list(_records(text))
    if len(records) != 1 or len(records[0][1].split()) != 1:
        return False
    try:
        decode_graph6(records[0][1])
    except ParseError:
        return False
    return True


# edge lists

def parse_edge_list(text: str) -> Graph:
    vertices: list[str] = []
    edges: list[tuple[str, str]] = []
    seen: dict[frozenset, int] = {}
    for n, line in _records(text):
        tokens = line.split()
        if len(tokens) > 2:
            raise ParseError(f"expected 'u v' or 'u', got {line!r}", n)
        for t in tokens:
            if not VERTEX_NAME.match(t):
                raise ParseError(f"malformed vertex token {t!r}", n)
        if len(tokens) == 1:
            vertices.append(tokens[0])
            continue
        u, v = tokens
        if u == v:
            raise ParseError(f"loop at vertex {u!r}", n)
        key = frozenset(tokens)
        if key in seen:
            raise ParseError(f"duplicate edge {u} {v} (first declared on line {seen[key]})", n)
        seen[key] = n
        edges.append((u, v))
    return Graph.from_edges(edges, vertices)


def parse_graph_input(text: str) -> Graph:
    """Edge-list text, or a single graph6 token (optionally with the ``>>graph6<<`` header)."""
    if text.lstrip().startswith(GRAPH6_HEADER) or looks_like_graph6(text):
        (_, line), = _records(text)
        return decode_graph6(line)
    return parse_edge_list(text)


def render_edge_list(G: Graph) -> str:
    lines = [f"{u} {v}" for u, v in G.sorted_edges()]
    lines += G.isolated_vertices()
    return "".join(line + "\n" for line in lines)


# monomial lists

def parse_monomial(token: str, line: Optional[int] = None) -> Monomial:
    exps: dict[str, int] = {}
    for factor in token.split("*"):
        m = FACTOR.match(factor.strip())
        if not m:
            raise ParseError(f"malformed factor {factor!r}", line)
        name, power = m.group(1), m.group(2)
        e = int(power) if power is not None else 1
        if e <= 0:
            raise ParseError(f"exponent must be positive in {factor!r}", line)
        if name == "1" and power is None:
            raise ParseError("the generator 1 gives the unit ideal", line)
        exps[name] = exps.get(name, 0) + e
    return Monomial.from_mapping(exps)


def parse_ideal_input(text: str) -> MonomialIdeal:
    universe = None
    gens: list[Monomial] = []
    for n, line in _records(text):
        if line.startswith("vars:"):
            if universe is not None or gens:
                raise ParseError("the 'vars:' header must come first and only once", n)
            universe = line[len("vars:"):].split()
            for v in universe:
                if not VERTEX_NAME.match(v):
                    raise ParseError(f"malformed variable {v!r}", n)
            continue
        gens.append(parse_monomial(line, n))
    kept = minimalize(gens)
    if len(kept) != len(set(gens)):
        dropped = sorted(set(gens) - kept, key=Monomial.sort_key)
        log.warning("input is not minimal; dropped %s", ", ".join(map(str, dropped)))
    try:
        return MonomialIdeal.from_generators(kept, universe)
    except IdealError as exc:
        raise ParseError(str(exc)) from exc


def render_ideal(I: MonomialIdeal) -> str:
    lines = []
    if I.universe != I.support:
        lines.append("vars: " + " ".join(sorted(I.universe)))
    lines += [str(g) for g in I.sorted_generators()]
    return "".join(line + "\n" for line in lines)


# DOT

def render_dot(G: Graph, obstruction: Optional[Obstruction] = None, name: str = "G") -> str:
    role = {}
    tree = set()
    if obstruction is not None:
        role = {v: f"v{k}" for k, v in enumerate(obstruction.vertices, start=1)}
        tree = {tuple(e) for e in obstruction.sorted_tree_edges()}
    out = [f"graph {name} {{"]
    for v in G.sorted_vertices():
        attrs = f' [obstruction="{role[v]}", style=filled]' if v in role else ""
        out.append(f"  {v}{attrs};")
    for u, v in G.sorted_edges():
        attrs = ' [tree="true", penwidth=3]' if (u, v) in tree else ""
        out.append(f"  {u} -- {v}{attrs};")
    out.append("}")
    return "\n".join(out) + "\n"


__all__ = [
    "ParseError",
    "GraphError",
    "decode_graph6",
    "encode_graph6",
    "parse_edge_list",
    "parse_graph_input",
    "parse_ideal_input",
    "parse_monomial",
    "render_dot",
    "render_edge_list",
    "render_ideal",
]
