import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import all_graphs_up_to
from ncigraph.graph import Graph, complete_graph, invert_vertex, is_ci_graph, path_graph
from ncigraph.ideal import (
    IdealError,
    Monomial,
    MonomialIdeal,
    UnitIdealError,
    edge_ideal,
    graph_of,
    height,
    is_complete_intersection,
    is_nci,
    minimalize,
    substitute_one,
    support,
)

M = Monomial.of
parse = MonomialIdeal.parse
HYPER = ("abc", "def", "ag", "bg", "cg", "dg", "eg", "fg")


def mons(*words):
    return {M(*w) for w in words}


class TestMonomial:
    def test_basics(self):
        m = Monomial.from_mapping({"x1": 1, "x2": 2})
        assert str(m) == "x1*x2^2"
        assert m.degree == 3
        assert not m.is_squarefree
        assert M("a", "b").divides(M("a", "b", "c"))
        assert not M("a", "a").divides(M("a", "b"))
        assert str(Monomial()) == "1"

    def test_zero_exponents_not_stored(self):
        assert Monomial.from_mapping({"a": 0, "b": 1}) == M("b")

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            Monomial((("a", 0),))


class TestMinimalize:
    def test_example_substitution(self):
        assert minimalize(mons("b", "bc", "c")) == mons("b", "c")

    def test_divisible(self):
        assert minimalize(mons("b", "bc")) == mons("b")

    def test_singleton(self):
        assert minimalize(mons("ab")) == mons("ab")

    def test_unit(self):
        with pytest.raises(UnitIdealError):
            minimalize([M("a"), Monomial()])


class TestIdealInvariants:
    def test_antichain_required(self):
        with pytest.raises(IdealError):
            MonomialIdeal(frozenset(mons("a", "ab")), frozenset("ab"))

    def test_universe_must_cover(self):
        with pytest.raises(IdealError):
            MonomialIdeal(frozenset(mons("ab")), frozenset("a"))

    def test_unit_rejected(self):
        with pytest.raises(UnitIdealError):
            MonomialIdeal(frozenset({Monomial()}), frozenset())


class TestSupport:
    def test_examples(self):
        assert support(parse("ab", "ac", "bc")) == set("abc")
        assert support(parse("ab", "ac", "bc", "d")) == set("abcd")
        assert support(MonomialIdeal(frozenset(), frozenset("xy"))) == set()


class TestSubstituteOne:
    def test_triangle(self):
        assert substitute_one(parse("ab", "bc", "ac"), "a").generators == mons("b", "c")

    def test_absorbs(self):
        assert substitute_one(parse("ab", "bc"), "a").generators == mons("b")

    def test_hypergraph_apex(self):
        J = substitute_one(parse(*HYPER), "g")
        assert J.generators == mons(*"abcdef")
        assert J.universe == set("abcdef")

    def test_variable_outside_support(self):
        I = parse("ab", universe="abz")
        J = substitute_one(I, "z")
        assert J.generators == I.generators and J.universe == set("ab")

    def test_unit(self):
        with pytest.raises(UnitIdealError):
            substitute_one(parse("ab", "c"), "c")

    def test_unknown(self):
        with pytest.raises(IdealError):
            substitute_one(parse("ab"), "q")


class TestCompleteIntersection:
    def test_examples(self):
        assert is_complete_intersection(parse("b", "c"))
        assert not is_complete_intersection(parse("ab", "ac", "bc"))
        I = MonomialIdeal.from_generators([M("x1", "y1"), M("x2", "y2"), M("x3", "y3")])
        assert is_complete_intersection(I)
        assert is_complete_intersection(MonomialIdeal(frozenset(), frozenset()))

    def test_non_squarefree(self):
        assert is_complete_intersection(MonomialIdeal.from_generators([M("a", "a"), M("b", "b", "c")]))
        assert not is_complete_intersection(MonomialIdeal.from_generators([M("a", "a"), M("a", "b")]))


class TestNCI:
    def test_triangle(self):
        assert is_nci(parse("ab", "ac", "bc"))
        for x, rest in [("a", "bc"), ("b", "ac"), ("c", "ab")]:
            J = substitute_one(parse("ab", "ac", "bc"), x)
            assert J.generators == mons(*rest)
            assert is_complete_intersection(J)

    def test_ci_is_not_nci(self):
        assert not is_nci(parse("ab"))

    def test_hypergraph(self):
        assert is_nci(parse(*HYPER))

    def test_worked_graph(self, example_graph):
        assert not is_nci(edge_ideal(example_graph))

    def test_linear_generator_fails_degree_condition(self):
        assert not is_nci(parse("ab", "ac", "bc", "d"))

    def test_rejects_non_squarefree(self):
        with pytest.raises(IdealError):
            is_nci(MonomialIdeal.from_generators([M("a", "a"), M("a", "b")]))


class TestEdgeIdealCorrespondence:
    def test_triangle_plus_singleton(self):
        G = Graph.from_edges([("a", "b"), ("a", "c"), ("b", "c")], ["d"])
        I = edge_ideal(G)
        assert I.generators == mons("ab", "ac", "bc", "d")
        assert I.universe == set("abcd")
        assert graph_of(I) == G

    def test_path(self):
        assert edge_ideal(Graph.from_edges([("a", "b"), ("b", "c")])).generators == mons("ab", "bc")

    def test_empty(self):
        assert edge_ideal(Graph(frozenset(), frozenset())).is_zero

    def test_single_edge(self):
        assert graph_of(parse("ab")) == Graph.from_edges([("a", "b")])

    def test_degree_three_rejected(self):
        with pytest.raises(IdealError):
            graph_of(parse(*HYPER))

    def test_non_squarefree_rejected(self):
        with pytest.raises(IdealError):
            graph_of(MonomialIdeal.from_generators([M("a", "a")]))


def _min_cover_by_bitmask(I: MonomialIdeal) -> int:
    vs = sorted(I.support)
    masks = [sum(1 << vs.index(x) for x in g.support) for g in I.generators]
    return min(bin(c).count("1") for c in range(1 << len(vs)) if all(c & m for m in masks))


class TestHeight:
    def test_examples(self):
        assert height(parse("ab", "ac", "bc")) == 2
        assert height(parse("b", "c")) == 2
        assert height(edge_ideal(path_graph(5))) == 2
        assert height(edge_ideal(complete_graph(5))) == 4

    def test_zero(self):
        with pytest.raises(IdealError):
            height(MonomialIdeal(frozenset(), frozenset("a")))

    def test_matches_bitmask_oracle(self):
        for G in all_graphs_up_to(6):
            I = edge_ideal(G)
            if not I.is_zero:
                assert height(I) == _min_cover_by_bitmask(I)


# bridges between the graph and ideal sides, exhaustive up to 6 vertices

@pytest.mark.property
def test_correspondence_bridge():
    for G in all_graphs_up_to(6):
        assert is_ci_graph(G) == is_complete_intersection(edge_ideal(G))


@pytest.mark.property
def test_inversion_bridge():
    for G in all_graphs_up_to(6):
        I = edge_ideal(G)
        for v in G.sorted_vertices():
            if not G.adjacency[v]:
                # I has the linear generator v, so I(v=1) is the unit ideal
                with pytest.raises(UnitIdealError):
                    substitute_one(I, v)
                continue
            assert is_complete_intersection(substitute_one(I, v)) == is_ci_graph(invert_vertex(G, v))


@pytest.mark.property
def test_nci_bridge():
    for G in all_graphs_up_to(6):
        by_inversion = not is_ci_graph(G) and all(is_ci_graph(invert_vertex(G, v)) for v in G.vertices)
        assert is_nci(edge_ideal(G)) == by_inversion


def test_graph_of_inverts_edge_ideal():
    for G in all_graphs_up_to(6):
        I = edge_ideal(G)
        assert graph_of(I) == G
        if I.universe == I.support:
            assert edge_ideal(graph_of(I)) == I


squarefree = st.frozensets(st.sampled_from("abcdef"), min_size=1, max_size=4).map(lambda s: M(*sorted(s)))


@pytest.mark.property
@given(st.lists(squarefree, min_size=1, max_size=8), st.randoms(use_true_random=False))
@settings(max_examples=200, deadline=None)
def test_minimalize_idempotent_and_order_independent(gens, rnd):
    once = minimalize(gens)
    assert minimalize(once) == once
    shuffled = list(gens)
    rnd.shuffle(shuffled)
    assert minimalize(shuffled) == once
    for g in gens:
        assert any(k.divides(g) for k in once)


@given(st.lists(squarefree, min_size=1, max_size=8), st.sampled_from("abcdef"))
@settings(max_examples=200, deadline=None)
def test_substitution_never_grows(gens, x):
    I = MonomialIdeal.from_generators(gens, universe="abcdef")
    try:
        J = substitute_one(I, x)
    except UnitIdealError:
        assert M(x) in I.generators
        return
    assert J.support <= I.support - {x}
    for h in J.generators:
        assert any(h.degree <= g.degree and h == g.drop(x) for g in I.generators)
