"""Graded Betti numbers of R/I from the Taylor complex.

The Taylor complex of I = (m_1, ..., m_g) has a basis element e_S for every
subset S of generators, in homological degree |S| and multidegree lcm(S).
Tensoring with the residue field keeps only the boundary terms that do not
change the lcm, so the complex splits into strands, one per lcm multidegree
m, and beta_{i,m}(R/I) is the i-th homology of the strand at m.

Two exact ways to get strand homology are offered:

``"taylor"``
    build the strand (all S with lcm(S) = m) and take ranks of its boundary
    matrices.  Size is exponential in the number of generators dividing m.
``"nerve"`` (default)
    the strand is the relative chain complex of the full simplex on the
    generators dividing m modulo K_m = {S : lcm(S) != m}; so
    H_i(strand) = reduced H_{i-2}(K_m).  K_m is covered by the simplices
    {g : deg_x g < deg_x m}, one per variable x, whose intersections are
    simplices, so K_m has the homotopy type of the nerve of that cover, a
    complex on at most |supp m| vertices.

All ranks are computed over the rationals with :class:`fractions.Fraction`.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .ideal import IdealError, Monomial, MonomialIdeal, height, is_complete_intersection

MAX_GENERATORS = 16


def exact_rank(rows: Iterable[dict[int, int]]) -> int:
    """Rank over Q of a sparse matrix given as ``{column: entry}`` rows."""
    pivots: dict[int, dict[int, Fraction]] = {}
    rank = 0
    for row in rows:
        r = {c: Fraction(v) for c, v in row.items() if v}
        while r:
            col = min(r)
            p = pivots.get(col)
            if p is None:
                inv = 1 / r[col]
                pivots[col] = {c: v * inv for c, v in r.items()}
                rank += 1
                break
            f = r[col]
            for c, v in p.items():
                nv = r.get(c, 0) - f * v
                if nv:
                    r[c] = nv
                else:
                    r.pop(c, None)
    return rank


def _boundary_ranks(cells: dict[int, list[tuple[int, ...]]]) -> dict[int, int]:
    """Ranks of the boundary maps of a chain complex whose cells are sorted index tuples.

    ``cells[k]`` lists the basis in degree k.  The boundary of a cell drops one
    entry at a time with sign (-1)^position, keeping only faces that are cells
    themselves.  Entry k of the result is rank(d_k: C_k -> C_{k-1}).
    """
    index = {k: {c: n for n, c in enumerate(cs)} for k, cs in cells.items()}
    ranks: dict[int, int] = {}
    for k, cs in cells.items():
        below = index.get(k - 1)
        if not below:
            ranks[k] = 0
            continue
        rows = []
        for c in cs:
            row = {}
            for pos in range(len(c)):
                face = c[:pos] + c[pos + 1:]
                j = below.get(face)
                if j is not None:
                    row[j] = -1 if pos % 2 else 1
            rows.append(row)
        ranks[k] = exact_rank(rows)
    return ranks


def _homology(cells: dict[int, list], ranks: dict[int, int]) -> dict[int, int]:
    return {k: len(cs) - ranks[k] - ranks.get(k + 1, 0) for k, cs in cells.items()}


@dataclass(frozen=True)
class TaylorStrand:
    multidegree: Monomial
    basis: dict[int, list[tuple[int, ...]]]  # homological degree -> generator-index subsets
    boundary_ranks: dict[int, int]
    homology: dict[int, int]

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * len(b) for i, b in self.basis.items())


@dataclass(frozen=True)
class BettiTable:
    entries: dict[tuple[int, int], int]
    ideal_height: int

    def sequence(self) -> list[int]:
        return betti_sequence(self)

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    @property
    def projective_dimension(self) -> int:
        return max(i for i, _ in self.entries)

    def to_dict(self) -> dict:
        rows = defaultdict(dict)
        for (i, j), r in sorted(self.entries.items()):
            rows[i][str(j)] = r
        return {
            "height": self.ideal_height,
            "rows": [{"i": i, "entries": rows[i]} for i in sorted(rows)],
            "sequence": self.sequence(),
            "total": self.total,
        }


def generator_order(I: MonomialIdeal) -> list[Monomial]:
    """Fixed ordering used for boundary signs: by degree, then lexicographically."""
    return I.sorted_generators()


def lcm_lattice(gens: Sequence[Monomial]) -> set[Monomial]:
    """All lcms of nonempty subsets of ``gens``."""
    lcms: set[Monomial] = set()
    for g in gens:
        lcms |= {g.lcm(m) for m in lcms}
        lcms.add(g)
    return lcms


def _check_admissible(I: MonomialIdeal) -> None:
    if I.is_zero:
        raise IdealError("Betti numbers of the zero ideal are not computed")
    if len(I.generators) > MAX_GENERATORS:
        raise IdealError(f"at most {MAX_GENERATORS} minimal generators are supported, got {len(I.generators)}")


def taylor_strands(I: MonomialIdeal, order: Optional[Sequence[Monomial]] = None) -> list[TaylorStrand]:
    """Every nonzero strand of the specialized Taylor complex, built explicitly."""
    _check_admissible(I)
    gens = list(order) if order is not None else generator_order(I)
    if set(gens) != I.generators:
        raise IdealError("order must list exactly the minimal generators")
    by_lcm: dict[Monomial, dict[int, list[tuple[int, ...]]]] = defaultdict(lambda: defaultdict(list))
    by_lcm[Monomial()][0].append(())
    g = len(gens)
    for size in range(1, g + 1):
        for S in combinations(range(g), size):
            m = gens[S[0]]
            for s in S[1:]:
                m = m.lcm(gens[s])
            by_lcm[m][size].append(S)
    strands = []
    for m in sorted(by_lcm, key=Monomial.sort_key):
        cells = dict(sorted(by_lcm[m].items()))
        # a face survives specialization iff it keeps the lcm, i.e. lies in this strand
        ranks = _boundary_ranks(cells)
        strands.append(TaylorStrand(m, cells, ranks, _homology(cells, ranks)))
    return strands


def nerve_strand_homology(gens: Sequence[Monomial], m: Monomial) -> dict[int, int]:
    """beta_{i,m} for i >= 1 via the nerve of the lcm-deficient cover of K_m."""
    below = [g for g in gens if g.divides(m)]
    md = m.as_dict
    cover = []
    for x in sorted(md):
        members = frozenset(n for n, g in enumerate(below) if g.as_dict.get(x, 0) < md[x])
        if members:
            cover.append(members)
    if not cover:
        # K_m = {empty face}: reduced H_{-1} = k, so beta_{1,m} = 1
        return {1: 1}
    faces: dict[int, list[tuple[int, ...]]] = {}
    for size in range(0, len(cover) + 1):
        faces[size] = []
        for F in combinations(range(len(cover)), size):
            common = frozenset(range(len(below)))
            for x in F:
                common &= cover[x]
            if common:
                faces[size].append(F)
        if not faces[size]:
            del faces[size]
            break
    # augmented complex: a face of size s sits in reduced degree s - 1, i.e. Betti index s + 1
    reduced = _homology(faces, _boundary_ranks(faces))
    return {s + 1: h for s, h in reduced.items() if h}


def betti_table(I: MonomialIdeal, method: str = "nerve") -> BettiTable:
    _check_admissible(I)
    entries: dict[tuple[int, int], int] = defaultdict(int)
    if method == "taylor":
        for strand in taylor_strands(I):
            for i, h in strand.homology.items():
                if h:
                    entries[(i, strand.multidegree.degree)] += h
    elif method == "nerve":
        gens = generator_order(I)
        entries[(0, 0)] = 1
        for m in sorted(lcm_lattice(gens), key=Monomial.sort_key):
            for i, h in nerve_strand_homology(gens, m).items():
                entries[(i, m.degree)] += h
    else:
        raise ValueError(f"unknown method {method!r}")
    return BettiTable(dict(sorted(entries.items())), height(I))


def betti_sequence(t: BettiTable) -> list[int]:
    seq: dict[int, int] = defaultdict(int)
    for (i, _), r in t.entries.items():
        seq[i] += r
    return [seq[i] for i in range(max(seq) + 1)]


@dataclass(frozen=True)
class TotalRankCheck:
    total: int
    height: int
    bound: int
    meets_bound: bool
    equality: bool

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def total_rank_check(I: MonomialIdeal, table: Optional[BettiTable] = None) -> TotalRankCheck:
    """Compare the total Betti number with 2^c + 2^(c-1), c the height."""
    if I.is_zero or is_complete_intersection(I):
        raise IdealError("the total rank bound applies only to ideals that are not complete intersections")
    t = table if table is not None else betti_table(I)
    c = t.ideal_height
    bound = 2**c + 2 ** (c - 1)
    return TotalRankCheck(t.total, c, bound, t.total >= bound, t.total == bound)


def _poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _poly_pow(p: list[int], k: int) -> list[int]:
    out = [1]
    for _ in range(k):
        out = _poly_mul(out, p)
    return out


@dataclass(frozen=True)
class EqualityPolynomials:
    first: list[int]
    second: Optional[list[int]] = field(default=None)


def equality_polynomials(c: int) -> EqualityPolynomials:
    """Coefficients of (1+3t+2t^2)(1+t)^(c-2) and, for c >= 3, (1+5t+5t^2+t^3)(1+t)^(c-3)."""
    if c < 2:
        raise ValueError(f"c must be at least 2, got {c}")
    first = _poly_mul([1, 3, 2], _poly_pow([1, 1], c - 2))
    second = _poly_mul([1, 5, 5, 1], _poly_pow([1, 1], c - 3)) if c >= 3 else None
    return EqualityPolynomials(first, second)
