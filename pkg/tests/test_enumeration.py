from itertools import combinations, permutations

import networkx as nx
import pytest

from conftest import labeled_graph
from ncigraph.enumeration import (
    CanonicalGraph,
    HypergraphSearchParams,
    canonical_form,
    coned_pair,
    cross_validate,
    generate_connected_graphs,
    generate_graphs,
    hypergraph_nci_search,
    labeled_connected_canonical_set,
    nci_census,
)
from ncigraph.graph import Graph, is_connected
from ncigraph.ideal import MonomialIdeal, is_complete_intersection, is_nci, substitute_one

# connected unlabeled graphs on n vertices, n = 1..7
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def _nx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(G.vertices)
    H.add_edges_from(G.sorted_edges())
    return H


def _nx_classes(n: int) -> list[nx.Graph]:
    """Isomorphism classes of connected labeled graphs, deduplicated with networkx."""
    reps: list[nx.Graph] = []
    m = n * (n - 1) // 2
    for mask in range(1 << m):
        G = labeled_graph(n, mask)
        if not is_connected(G):
            continue
        H = _nx(G)
        if not any(nx.is_isomorphic(H, R) for R in reps):
            reps.append(H)
    return reps


def _brute_canonical(G: Graph) -> str:
    vs = G.sorted_vertices()
    n = len(vs)
    best = None
    for p in permutations(vs):
        bits = "".join("1" if frozenset((p[i], p[j])) in G.edges else "0" for i, j in combinations(range(n), 2))
        best = bits if best is None or bits < best else best
    return best


class TestCanonicalForm:
    def test_invariant_under_relabeling(self, example_graph):
        mapping = dict(zip("abcdefg", "gfedcba"))
        relabeled = Graph.from_edges([(mapping[u], mapping[v]) for u, v in example_graph.sorted_edges()])
        assert canonical_form(example_graph) == canonical_form(relabeled)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_matches_pure_python_minimum(self, n):
        for G in generate_graphs(n):
            assert canonical_form(G).bits == _brute_canonical(G)

    def test_roundtrip(self):
        for G in generate_connected_graphs(5):
            c = canonical_form(G)
            assert c.to_graph() == G
            assert CanonicalGraph(5, c.bits).code == int(c.bits, 2)


class TestGeneration:
    @pytest.mark.parametrize("n, count", [(1, 1), (3, 2), (4, 6)])
    def test_small_counts(self, n, count):
        graphs = list(generate_connected_graphs(n))
        assert len(graphs) == count
        assert [g.sorted_vertices() for g in graphs] == [[f"v{k}" for k in range(1, n + 1)]] * count

    def test_p3_and_k3(self):
        graphs = list(generate_connected_graphs(3))
        assert [len(g.edges) for g in graphs] == [2, 3]

    @pytest.mark.parametrize("n", range(1, 6))
    def test_counts_match_networkx_dedup(self, n):
        assert len(list(generate_connected_graphs(n))) == len(_nx_classes(n))

    @pytest.mark.property
    @pytest.mark.parametrize("n", range(1, 6))
    def test_exhaustive_against_labeled_recount(self, n):
        emitted = [canonical_form(G) for G in generate_connected_graphs(n)]
        assert len(set(emitted)) == len(emitted)
        assert set(emitted) == labeled_connected_canonical_set(n)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_known_counts_and_order(self, n):
        graphs = list(generate_connected_graphs(n))
        assert len(graphs) == CONNECTED_COUNTS[n]
        codes = [canonical_form(G).code for G in graphs]
        assert codes == sorted(set(codes))
        assert all(is_connected(G) for G in graphs)

    def test_pairwise_non_isomorphic_n6(self):
        graphs = [_nx(G) for G in generate_connected_graphs(6)]
        for i, j in combinations(range(len(graphs)), 2):
            a, b = graphs[i], graphs[j]
            if a.number_of_edges() == b.number_of_edges():
                assert not nx.is_isomorphic(a, b)

    def test_all_graph_counts(self):
        assert [len(list(generate_graphs(n))) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]

    @pytest.mark.parametrize("n", [0, 9])
    def test_range(self, n):
        with pytest.raises(ValueError):
            next(generate_connected_graphs(n))


class TestHarness:
    @pytest.mark.parametrize("n, checked", [(5, 21), (6, 112)])
    def test_cross_validate(self, n, checked):
        r = cross_validate(n)
        assert r.checked == checked
        assert r.mismatches == []

    def test_cross_validate_disconnected(self):
        for n in range(1, 7):
            assert cross_validate(n, connected_only=False).mismatches == []

    def test_census(self):
        rows = nci_census(6)
        assert [r.connected_count for r in rows] == [1, 1, 2, 6, 21, 112]
        assert (rows[1].connected_count, rows[1].nci_count, rows[1].ci_count) == (1, 0, 1)
        assert (rows[2].connected_count, rows[2].nci_count) == (2, 2)
        assert (rows[3].connected_count, rows[3].nci_count) == (6, 6)
        for r in rows:
            assert r.connected_count == r.nci_count + r.neither_count + r.ci_count


class TestHypergraphSearch:
    def test_example_example_rediscovered(self):
        found = hypergraph_nci_search(HypergraphSearchParams(max_vars=7, max_gens=8, max_degree=3, sample_count=0))
        target = MonomialIdeal.parse("abc", "def", "ag", "bg", "cg", "dg", "eg", "fg")
        assert target in found

    def test_degree_two_member_excluded(self):
        I = coned_pair(2, 2)
        # apex is the fifth letter here
        assert I == MonomialIdeal.parse("ab", "cd", "ae", "be", "ce", "de")
        assert is_nci(I)
        found = hypergraph_nci_search(HypergraphSearchParams(max_vars=5, max_gens=6, max_degree=3, sample_count=0))
        assert I not in found
        assert found == []

    def test_two_variables(self):
        assert hypergraph_nci_search(HypergraphSearchParams(max_vars=2, max_gens=4, max_degree=3, sample_count=50)) == []

    def test_results_recheck(self):
        params = HypergraphSearchParams(max_vars=8, max_gens=9, max_degree=4, sample_count=400, seed=7)
        found = hypergraph_nci_search(params)
        assert found
        for I in found:
            assert any(g.degree >= 3 for g in I.generators)
            assert not is_complete_intersection(I)
            for x in I.support:
                assert is_complete_intersection(substitute_one(I, x))

    def test_deterministic(self):
        params = HypergraphSearchParams(max_vars=7, max_gens=7, max_degree=3, sample_count=300, seed=3)
        assert hypergraph_nci_search(params) == hypergraph_nci_search(params)

    @pytest.mark.parametrize("kwargs", [{"max_vars": 11}, {"max_degree": 2}, {"sample_count": -1}, {"max_gens": 0}])
    def test_bounds(self, kwargs):
        with pytest.raises(ValueError):
            hypergraph_nci_search(HypergraphSearchParams(**kwargs))
