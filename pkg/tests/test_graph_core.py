from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

import brute
from linefeas.graph_core import (
    DegreeSequence,
    Graph,
    NonGraphical,
    Pattern,
    complete_graph,
    has_induced,
    is_acyclic,
    is_forest_sequence,
    is_graphical,
    is_tree_sequence,
    line_graph,
    line_graph_edge_count,
    path,
    realize_forest,
    realize_sequence,
    split_into_trees,
    star,
)


@st.composite
def graphs(draw, max_vertices=9):
    n = draw(st.integers(0, max_vertices))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, frozenset(chosen))


class TestGraph:
    def test_edges_canonicalised(self):
        g = Graph(3, frozenset({(2, 0), (1, 2)}))
        assert g.sorted_edges() == [(0, 2), (1, 2)]

    @pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 0)]])
    def test_rejects_bad_edges(self, edges):
        with pytest.raises(ValueError):
            Graph(3, frozenset(edges))

    def test_edge_list_round_trip(self):
        g = complete_graph(4)
        text = g.to_edge_list()
        assert text.splitlines()[0] == "4 6"
        assert Graph.from_edge_list(text) == g

    def test_edge_list_header_mismatch(self):
        with pytest.raises(ValueError):
            Graph.from_edge_list("3 2\n0 1\n")

    def test_dot_is_sorted(self):
        dot = Graph(3, frozenset({(1, 2), (0, 1)})).to_dot()
        assert dot.index("0 -- 1") < dot.index("1 -- 2")
        assert dot.startswith("graph G {")

    def test_empty_and_single_vertex(self):
        assert line_graph(Graph(0)) == Graph(0)
        assert line_graph(Graph(1)) == Graph(0)
        assert line_graph(Graph(5)).vertex_count == 0


class TestLineGraph:
    def test_claw_becomes_triangle(self):
        lg = line_graph(star(3))
        assert (lg.vertex_count, lg.edge_count) == (3, 3)

    def test_path_shrinks(self):
        lg = line_graph(path(3))
        assert (lg.vertex_count, lg.edge_count) == (3, 2)
        assert sorted(lg.degrees) == [1, 1, 2]

    def test_k4(self):
        k4 = complete_graph(4)
        lg = line_graph(k4)
        assert lg.vertex_count == 6
        assert lg.edge_count == brute.line_graph_edges_brute(k4.edges) == 12

    @given(graphs())
    def test_matches_pairwise_enumeration(self, g):
        assert line_graph(g).edge_count == brute.line_graph_edges_brute(g.edges)

    @given(graphs())
    def test_degree_formula(self, g):
        assert line_graph(g).edge_count == line_graph_edge_count(g.degree_sequence())

    @given(graphs())
    def test_line_graph_is_claw_free(self, g):
        assert not has_induced(line_graph(g), Pattern.CLAW)


class TestEdgeCount:
    def test_single_edge(self):
        assert line_graph_edge_count([1, 1]) == 0

    def test_k4(self):
        assert line_graph_edge_count([3, 3, 3, 3]) == 12 == line_graph(complete_graph(4)).edge_count

    def test_q_graph_degrees(self):
        n, t = 27, 5
        seq = [n - t, t + 1] + [2] * t + [1] * (n - 2 * t - 1)
        assert line_graph_edge_count(seq) == comb(22, 2) + comb(6, 2) + 5 == 251
        assert 251 == comb(n - t, 2) + comb(t + 2, 2) - 1


class TestDegreeSequence:
    def test_normalises(self):
        assert DegreeSequence([1, 0, 3, 2, 0]) == (3, 2, 1)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            DegreeSequence([2, -1])


class TestGraphical:
    @pytest.mark.parametrize("seq,expected", [
        ([3, 3, 3, 3], True),
        ([3, 3, 1, 1], False),
        ([5, 1, 1, 1, 1, 1], True),
        ([], True),
        ([1], False),
        ([2, 2], False),
        ([0, 0, 1, 1], True),
    ])
    def test_examples(self, seq, expected):
        assert is_graphical(seq) is expected

    def test_331_has_no_realization_on_four_vertices(self):
        assert (3, 3, 1, 1) not in brute.degree_sequences_on(4)

    @pytest.mark.parametrize("k", range(1, 6))
    def test_agrees_with_enumeration_small(self, k):
        realizable = set().union(*(brute.degree_sequences_on(j) for j in range(1, k + 1)))
        for total in range(0, k * (k - 1) + 3):
            for part in brute.partitions(total):
                if len(part) <= k:
                    assert is_graphical(part) == (part in realizable), part


class TestRealize:
    @pytest.mark.parametrize("seq", [[2, 2, 2], [3, 1, 1, 1], [4, 3, 2, 2, 2, 1]])
    def test_round_trip(self, seq):
        g = realize_sequence(seq)
        assert g.degree_sequence() == DegreeSequence(seq)

    def test_triangle(self):
        assert realize_sequence([2, 2, 2]) == complete_graph(3)

    def test_star(self):
        assert realize_sequence([3, 1, 1, 1]) == star(3)

    def test_non_graphical_raises(self):
        with pytest.raises(NonGraphical):
            realize_sequence([3, 3, 1, 1])

    @given(graphs(max_vertices=12))
    def test_round_trip_on_graphical(self, g):
        seq = g.degree_sequence()
        assert realize_sequence(seq).degree_sequence() == seq


class TestTreesAndForests:
    @pytest.mark.parametrize("seq,expected", [([1, 1], True), ([2, 2, 1, 1], True), ([3, 3, 1, 1], False), ([1], False)])
    def test_tree(self, seq, expected):
        assert is_tree_sequence(seq) is expected

    @pytest.mark.parametrize("seq,expected", [
        ([1, 1, 1, 1], True),
        ([3, 1], False),
        ([5, 2, 1, 1, 1, 1, 1, 1, 1], True),
        ([2, 2, 2], False),
        ([1, 1, 1], False),
    ])
    def test_forest(self, seq, expected):
        assert is_forest_sequence(seq) is expected

    def test_explicit_forest_for_example(self):
        seq = [5, 2, 1, 1, 1, 1, 1, 1, 1]
        assert brute.splits_into_trees(seq)
        g = realize_forest(seq)
        assert is_acyclic(g)
        assert g.degree_sequence() == DegreeSequence(seq)

    def test_greedy_split_matches_exhaustive(self):
        for total in range(0, 15):
            for part in brute.partitions(total):
                assert (split_into_trees(part) is not None) == brute.splits_into_trees(part), part

    @given(st.lists(st.integers(1, 6), max_size=10))
    def test_tree_implies_forest_and_graphical(self, seq):
        if is_tree_sequence(seq):
            assert is_forest_sequence(seq)
            assert is_graphical(seq)


class TestInducedPatterns:
    def test_claw_in_claw(self):
        assert has_induced(star(3), Pattern.CLAW)

    def test_no_paw_in_k4(self):
        assert not has_induced(complete_graph(4), Pattern.PAW)

    def test_paw_in_paw(self):
        assert has_induced(Pattern.PAW.graph(), Pattern.PAW)
        assert not has_induced(Pattern.PAW.graph(), Pattern.CLAW)

    @settings(max_examples=200)
    @given(graphs(max_vertices=8))
    def test_matches_subset_enumeration(self, g):
        assert has_induced(g, Pattern.CLAW) == brute.has_induced_brute(g, (3, 1, 1, 1))
        assert has_induced(g, Pattern.PAW) == brute.has_induced_brute(g, (3, 2, 2, 1))
