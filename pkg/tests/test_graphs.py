import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from turantools.errors import ParseError, SizeCapError
from turantools.graphs import (
    CanonicalForm,
    Graph,
    are_isomorphic,
    automorphism_count,
    canonical_form,
    canonical_graph,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_graph6,
    path_graph,
    to_graph6,
    turan_graph,
    turan_parts,
)

from oracles import all_labeled_graphs, brute_isomorphic, random_graph


def _graphs(draw_n=st.integers(0, 8)):
    @st.composite
    def strat(draw):
        n = draw(draw_n)
        pairs = list(itertools.combinations(range(n), 2))
        mask = draw(st.integers(0, (1 << len(pairs)) - 1)) if pairs else 0
        return Graph(n, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1])

    return strat()


class TestGraphBasics:
    def test_immutable(self):
        g = complete_graph(3)
        with pytest.raises(AttributeError):
            g.n = 5

    def test_degree_and_edges(self):
        g = Graph(4, [(0, 1), (1, 2), (2, 3)])
        assert g.degrees() == [1, 2, 2, 1]
        assert sum(g.degrees()) == 2 * g.m
        assert list(g.edges()) == [(0, 1), (1, 2), (2, 3)]

    def test_rejects_self_loops_and_bad_edges(self):
        with pytest.raises(ValueError):
            Graph(3, [(1, 1)])
        with pytest.raises(ValueError):
            Graph(3, [(0, 3)])

    def test_components(self):
        g = disjoint_union(complete_graph(3), path_graph(2))
        assert g.connected_components() == [[0, 1, 2], [3, 4]]
        assert not g.is_connected()
        assert cycle_graph(5).is_connected()


class TestBuilders:
    def test_complete_multipartite_examples(self):
        assert complete_multipartite([1, 1, 1]) == complete_graph(3)
        k23 = complete_multipartite([2, 3])
        assert (k23.n, k23.m) == (5, 6)
        g = complete_multipartite([2, 2, 1])
        assert (g.n, g.m) == (5, (25 - (4 + 4 + 1)) // 2)
        # explicit adjacency: parts {0,1}, {2,3}, {4}
        assert not g.has_edge(0, 1) and not g.has_edge(2, 3)
        assert g.has_edge(0, 2) and g.has_edge(1, 4) and g.has_edge(3, 4)

    @pytest.mark.parametrize("parts", [[], [0], [3, -1], [0, 2]])
    def test_complete_multipartite_rejects(self, parts):
        with pytest.raises(ValueError):
            complete_multipartite(parts)

    def test_edge_count_formula(self):
        rng = random.Random(0)
        for _ in range(50):
            parts = [rng.randint(1, 5) for _ in range(rng.randint(1, 5))]
            g = complete_multipartite(parts)
            n = sum(parts)
            assert g.m == (n * n - sum(p * p for p in parts)) // 2

    def test_turan_examples(self):
        assert are_isomorphic(turan_graph(4, 2), cycle_graph(4))
        assert turan_graph(7, 3).m == 16
        assert turan_graph(5, 5) == complete_graph(5)

    def test_turan_parts_balanced(self):
        for n in range(1, 20):
            for r in range(1, n + 1):
                parts = turan_parts(n, r)
                assert sum(parts) == n and len(parts) == r
                assert max(parts) - min(parts) <= 1

    @pytest.mark.parametrize("n,r", [(3, 0), (3, 4), (0, 1)])
    def test_turan_rejects(self, n, r):
        with pytest.raises(ValueError):
            turan_graph(n, r)


class TestGraph6:
    def test_known_encodings(self):
        assert to_graph6(complete_graph(5)) == "D~{"
        assert to_graph6(empty_graph(5)) == "D??"
        assert from_graph6("D~{") == complete_graph(5)

    @settings(max_examples=150, deadline=None)
    @given(_graphs(st.integers(0, 12)))
    def test_round_trip(self, g):
        assert from_graph6(to_graph6(g)) == g

    def test_long_form_round_trip(self):
        g = Graph(70, [(0, 69), (1, 2), (30, 40)])
        s = to_graph6(g)
        assert s.startswith("~")
        assert from_graph6(s) == g

    def test_short_form_boundary(self):
        rng = random.Random(62)
        g = random_graph(rng, 62, p=0.1)
        s = to_graph6(g)
        assert not s.startswith("~")
        assert from_graph6(s) == g

    def test_header_prefix_stripped(self):
        assert from_graph6(">>graph6<<D~{") == complete_graph(5)

    @pytest.mark.parametrize(
        "bad",
        ["", "D~", "D~{{", "~??", chr(30) + "??", "D~" + chr(5)],
    )
    def test_parse_errors_carry_offsets(self, bad):
        with pytest.raises(ParseError) as err:
            from_graph6(bad)
        assert "byte" in str(err.value)


class TestCanonicalForm:
    def test_relabelings_collide(self):
        a = Graph(3, [(0, 1), (1, 2)])
        b = Graph(3, [(1, 0), (0, 2)])
        assert canonical_form(a) == canonical_form(b)

    def test_distinct_graphs_differ(self):
        assert canonical_form(complete_graph(3)) != canonical_form(path_graph(3))

    def test_permutation_fuzz(self):
        rng = random.Random(2024)
        g = random_graph(rng, 8)
        base = canonical_form(g)
        for _ in range(1000):
            perm = list(range(8))
            rng.shuffle(perm)
            assert canonical_form(g.relabel(perm)) == base

    def test_matches_brute_force_on_random_pairs(self):
        rng = random.Random(5)
        for _ in range(200):
            n = rng.randint(1, 7)
            g, h = random_graph(rng, n), random_graph(rng, n)
            assert (canonical_form(g) == canonical_form(h)) == brute_isomorphic(g, h)

    def test_complete_invariant_exhaustive_n4(self):
        forms = {}
        for g in all_labeled_graphs(4):
            forms.setdefault(canonical_form(g), g)
        assert len(forms) == 11
        for (fa, ga), (fb, gb) in itertools.combinations(forms.items(), 2):
            assert not brute_isomorphic(ga, gb)

    def test_canonical_graph_is_member_of_class(self):
        rng = random.Random(9)
        for _ in range(50):
            g = random_graph(rng, rng.randint(1, 8))
            cg = canonical_graph(g)
            assert brute_isomorphic(g, cg) if g.n <= 7 else are_isomorphic(g, cg)
            assert canonical_form(cg) == canonical_form(g)

    def test_size_cap(self):
        with pytest.raises(SizeCapError):
            canonical_form(empty_graph(65))

    def test_form_includes_vertex_count(self):
        assert canonical_form(empty_graph(1)) != canonical_form(empty_graph(0))
        assert CanonicalForm(2, b"") != CanonicalForm(3, b"")


class TestAutomorphisms:
    @pytest.mark.parametrize(
        "g,expect",
        [
            (complete_graph(3), 6),
            (path_graph(3), 2),
            (path_graph(4), 2),
            (cycle_graph(4), 8),
            (cycle_graph(5), 10),
            (complete_multipartite([2, 3]), 12),
            (turan_graph(6, 3), 48),
            (empty_graph(4), 24),
            (complete_graph(5), 120),
        ],
    )
    def test_known_groups(self, g, expect):
        assert automorphism_count(g) == expect

    def test_versus_permutation_count(self):
        rng = random.Random(31)
        for _ in range(25):
            n = rng.randint(1, 6)
            g = random_graph(rng, n)
            brute = sum(
                1 for p in itertools.permutations(range(n)) if g.relabel(p) == g
            )
            assert automorphism_count(g) == brute

    def test_canonical_form_with_aut(self):
        form = canonical_form(cycle_graph(5), with_aut=True)
        assert form.aut_size == 10
        assert canonical_form(cycle_graph(5)).aut_size is None
