"""Monomial ideals, the substitution ``I(x=1)``, and CI / NCI tests.

Monomials are stored as sorted ``(variable, exponent)`` tuples with positive
exponents only; the empty tuple is the monomial 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping

from .graph import Graph, GraphError

VARIABLE_NAME = re.compile(r"^[A-Za-z0-9_]+$")


class IdealError(ValueError):
    """Raised when an operation's precondition on an ideal fails."""


class UnitIdealError(IdealError):
    """Raised when a result would be the unit ideal, which is not represented."""


@dataclass(frozen=True, order=True)
class Monomial:
    exponents: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        names = [v for v, _ in self.exponents]
        if names != sorted(set(names)):
            raise ValueError(f"exponents must be sorted by unique variable: {self.exponents}")
        for v, e in self.exponents:
            if not isinstance(e, int) or e <= 0:
                raise ValueError(f"exponent of {v} must be a positive integer, got {e!r}")
            if not VARIABLE_NAME.match(v):
                raise ValueError(f"invalid variable name {v!r}")

    @classmethod
    def of(cls, *variables: str, **powers: int) -> Monomial:
        """``Monomial.of("a", "b")`` is ab; repeated variables multiply."""
        exps: dict[str, int] = dict(powers)
        for v in variables:
            exps[v] = exps.get(v, 0) + 1
        return cls.from_mapping(exps)

    @classmethod
    def from_mapping(cls, exps: Mapping[str, int]) -> Monomial:
        return cls(tuple(sorted((v, e) for v, e in exps.items() if e)))

    @cached_property
    def as_dict(self) -> dict[str, int]:
        return dict(self.exponents)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exponents)

    @property
    def support(self) -> frozenset[str]:
        return frozenset(v for v, _ in self.exponents)

    @property
    def is_one(self) -> bool:
        return not self.exponents

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.exponents)

    def divides(self, other: Monomial) -> bool:
        od = other.as_dict
        return all(od.get(v, 0) >= e for v, e in self.exponents)

    def lcm(self, other: Monomial) -> Monomial:
        exps = dict(self.exponents)
        for v, e in other.exponents:
            exps[v] = max(exps.get(v, 0), e)
        return Monomial.from_mapping(exps)

    def drop(self, x: str) -> Monomial:
        """Set ``x = 1``."""
        return Monomial(tuple(p for p in self.exponents if p[0] != x))

    def sort_key(self):
        return (self.degree, self.exponents)

    def __str__(self) -> str:
        if self.is_one:
            return "1"
        return "*".join(v if e == 1 else f"{v}^{e}" for v, e in self.exponents)

    def __repr__(self) -> str:
        return f"Monomial({self})"


def minimalize(gens: Iterable[Monomial]) -> frozenset[Monomial]:
    """Keep the divisibility-minimal generators."""
    gens = set(gens)
    if any(g.is_one for g in gens):
        raise UnitIdealError("the monomial 1 generates the unit ideal")
    ordered = sorted(gens, key=Monomial.sort_key)
    kept: list[Monomial] = []
    for g in ordered:
        if not any(k.divides(g) for k in kept):
            kept.append(g)
    return frozenset(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    generators: frozenset[Monomial]
    universe: frozenset[str]

    def __post_init__(self):
        for g in self.generators:
            if g.is_one:
                raise UnitIdealError("the monomial 1 generates the unit ideal")
        for g, h in combinations(self.generators, 2):
            if g.divides(h) or h.divides(g):
                raise IdealError(f"generators {g} and {h} are not an antichain")
        stray = self.support - self.universe
        if stray:
            raise IdealError(f"variables {sorted(stray)} are not in the universe")

    @classmethod
    def from_generators(cls, gens: Iterable[Monomial], universe: Iterable[str] | None = None) -> MonomialIdeal:
        """Minimalize ``gens``; the universe defaults to their support."""
        gens = minimalize(gens)
        if universe is None:
            universe = frozenset().union(*(g.support for g in gens))
        return cls(gens, frozenset(universe))

    @classmethod
    def parse(cls, *words: str, universe: Iterable[str] | None = None) -> MonomialIdeal:
        """Shorthand for tests and examples: ``MonomialIdeal.parse("ab", "bc")``.

        Each word is read one character per variable.
        """
        return cls.from_generators((Monomial.of(*w) for w in words), universe)

    @cached_property
    def support(self) -> frozenset[str]:
        return frozenset().union(*(g.support for g in self.generators))

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self.generators)

    def sorted_generators(self) -> list[Monomial]:
        return sorted(self.generators, key=Monomial.sort_key)

    def __str__(self) -> str:
        return "(" + ", ".join(str(g).replace("*", "") if all(len(v) == 1 for v in g.support) and g.is_squarefree
                               else str(g) for g in self.sorted_generators()) + ")"


def support(I: MonomialIdeal) -> frozenset[str]:
    return I.support


def substitute_one(I: MonomialIdeal, x: str) -> MonomialIdeal:
    """The ideal I(x=1), minimally generated, over the universe without ``x``."""
    if x not in I.universe:
        raise IdealError(f"unknown variable {x!r}")
    dropped = [g.drop(x) for g in I.generators]
    if any(g.is_one for g in dropped):
        raise UnitIdealError(f"setting {x}=1 produces the unit ideal")
    return MonomialIdeal(minimalize(dropped), I.universe - {x})


def is_complete_intersection(I: MonomialIdeal) -> bool:
    """Minimal generators with pairwise disjoint supports form a regular sequence, and conversely."""
    seen: set[str] = set()
    for g in I.generators:
        s = g.support
        if s & seen:
            return False
        seen |= s
    return True


def is_nci(I: MonomialIdeal) -> bool:
    if not I.is_squarefree:
        raise IdealError("NCI is only defined for squarefree ideals")
    if any(g.degree < 2 for g in I.generators):
        return False
    if is_complete_intersection(I):
        return False
    # degree >= 2 and squarefree, so no substitution can reach the unit ideal
    return all(is_complete_intersection(substitute_one(I, x)) for x in sorted(I.support))


def edge_ideal(G: Graph) -> MonomialIdeal:
    """One generator uv per edge plus one linear generator per isolated vertex."""
    gens = [Monomial.of(*sorted(e)) for e in G.edges]
    gens += [Monomial.of(v) for v in G.isolated_vertices()]
    return MonomialIdeal(frozenset(gens), G.vertices)


def graph_of(I: MonomialIdeal) -> Graph:
    edges = []
    for g in I.sorted_generators():
        if not g.is_squarefree:
            raise IdealError(f"generator {g} is not squarefree")
        if g.degree > 2:
            raise IdealError(f"generator {g} has degree {g.degree}; only degrees 1 and 2 correspond to graphs")
        if g.degree == 2:
            edges.append(tuple(sorted(g.support)))
    try:
        return Graph.from_edges(edges, I.universe)
    except GraphError as exc:
        raise IdealError(str(exc)) from exc


def height(I: MonomialIdeal) -> int:
    """Minimum number of variables meeting every generator (brute force by size)."""
    if I.is_zero:
        raise IdealError("height of the zero ideal is not defined here")
    supports = [g.support for g in I.generators]
    variables = sorted(I.support)
    for k in range(1, len(variables) + 1):
        for cover in combinations(variables, k):
            c = set(cover)
            if all(s & c for s in supports):
                return k
    raise AssertionError("the full support always covers")  # pragma: no cover
