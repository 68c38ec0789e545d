import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from turantools.errors import ParseError, SizeCapError
from turantools.graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    path_graph,
    to_graph6,
)
from turantools.patterns import (
    chromatic_number,
    contains_subgraph,
    friendship_graph,
    intersecting_cliques,
    is_free,
    parse_forbidden,
)

from oracles import contains_by_injections, random_graph


class TestParse:
    def test_complete(self):
        spec = parse_forbidden("K3")
        assert spec.graph == complete_graph(3)
        assert (spec.chi, spec.r) == (3, 2)

    def test_friendship(self):
        spec = parse_forbidden("F2")
        assert (spec.graph.n, spec.graph.m) == (5, 6)
        assert (spec.chi, spec.r) == (3, 2)
        # two triangles meeting in exactly one vertex
        degs = sorted(spec.graph.degrees())
        assert degs == [2, 2, 2, 2, 4]

    def test_intersecting_cliques(self):
        spec = parse_forbidden("F2,4")
        assert (spec.graph.n, spec.graph.m) == (7, 12)
        assert (spec.chi, spec.r) == (4, 3)

    def test_g6_spec(self):
        spec = parse_forbidden("g6:" + to_graph6(cycle_graph(5)))
        assert (spec.chi, spec.r) == (3, 2)

    @pytest.mark.parametrize(
        "bad",
        ["K1", "K0", "F0", "F2,2", "F0,4", "W5", "", "g6:", "k3 extra"],
    )
    def test_rejects(self, bad):
        with pytest.raises(ParseError) as err:
            parse_forbidden(bad)
        assert bad.strip()[:2] in str(err.value) or "spec" in str(err.value)

    def test_rejects_edgeless(self):
        with pytest.raises(ParseError):
            parse_forbidden("g6:" + to_graph6(empty_graph(3)))

    def test_r_is_chi_minus_one(self):
        for token in ["K2", "K3", "K5", "F1", "F3", "F2,4", "F2,5"]:
            spec = parse_forbidden(token)
            assert spec.r == spec.chi - 1 >= 1


class TestContainment:
    def test_k5_contains_bowtie(self):
        assert contains_subgraph(complete_graph(5), friendship_graph(2))

    def test_c5_is_triangle_free(self):
        assert not contains_subgraph(cycle_graph(5), complete_graph(3))

    def test_not_induced_semantics(self):
        # C4 sits inside K4 as a (non-induced) subgraph
        assert contains_subgraph(complete_graph(4), cycle_graph(4))

    def test_disconnected_pattern(self):
        two_edges = disjoint_union(path_graph(2), path_graph(2))
        assert contains_subgraph(path_graph(4), two_edges)
        # P3's two edges share a vertex, so no pair of disjoint edges
        assert not contains_subgraph(path_graph(3), two_edges)

    def test_versus_injection_oracle(self):
        rng = random.Random(77)
        for _ in range(300):
            g = random_graph(rng, rng.randint(1, 7))
            f = random_graph(rng, rng.randint(1, 5))
            assert contains_subgraph(g, f) == contains_by_injections(g, f)

    def test_monotone_under_edge_addition(self):
        rng = random.Random(13)
        for _ in range(100):
            g = random_graph(rng, rng.randint(2, 7))
            f = random_graph(rng, rng.randint(1, 4), p=0.6)
            if not contains_subgraph(g, f):
                continue
            non = list(g.non_edges())
            if non:
                u, v = rng.choice(non)
                assert contains_subgraph(g.with_edge(u, v), f)

    @settings(max_examples=100, deadline=None)
    @given(st.integers(2, 7), st.randoms(use_true_random=False))
    def test_supergraph_keeps_pattern(self, n, pyrandom):
        g = random_graph(pyrandom, n)
        f = random_graph(pyrandom, pyrandom.randint(1, min(4, n)))
        if contains_subgraph(g, f):
            h = g
            for u, v in g.non_edges():
                h = h.with_edge(u, v)
            assert contains_subgraph(h, f)


class TestChromatic:
    @pytest.mark.parametrize(
        "g,expect",
        [
            (complete_graph(4), 4),
            (cycle_graph(5), 3),
            (cycle_graph(6), 2),
            (friendship_graph(2), 3),
            (path_graph(4), 2),
            (empty_graph(3), 1),
            (Graph(0), 0),
        ],
    )
    def test_known(self, g, expect):
        assert chromatic_number(g) == expect

    def test_family_identities(self):
        for s in range(2, 9):
            assert chromatic_number(complete_graph(s)) == s
        for k in range(1, 5):
            assert chromatic_number(friendship_graph(k)) == 3
        for s in range(3, 6):
            assert chromatic_number(intersecting_cliques(2, s)) == s

    def test_cap(self):
        with pytest.raises(SizeCapError):
            chromatic_number(empty_graph(13))

    def test_versus_exhaustive_assignments(self):
        rng = random.Random(3)

        def oracle(g):
            if g.n == 0:
                return 0
            if g.m == 0:
                return 1
            for k in range(1, g.n + 1):
                for assign in itertools.product(range(k), repeat=g.n):
                    if all(assign[u] != assign[v] for u, v in g.edges()):
                        return k
            return g.n

        for _ in range(40):
            g = random_graph(rng, rng.randint(1, 6))
            assert chromatic_number(g) == oracle(g)


def test_is_free_matches_contains():
    spec = parse_forbidden("K3")
    assert is_free(cycle_graph(5), spec)
    assert not is_free(complete_graph(3), spec)
