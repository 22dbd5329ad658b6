import random

import pytest
from hypothesis import given, settings

from hamextremal.constructions import K, Kbar, build_g1, build_k_split
from hamextremal.generation import generate_all
from hamextremal.graph import Graph, degree_sequence, join, random_graph, reach
from hamextremal.invariants import (
    bondy_connectivity_condition,
    connectivity,
    independence_number,
    local_connectivity,
    min_degree_sum_independent,
    sigma_s,
)
from oracles import brute_connectivity, brute_independence, brute_sigma
from test_graph import graphs


def disconnects(g: Graph, cut) -> bool:
    rest = [v for v in range(g.n) if v not in cut]
    keep = 0
    for v in rest:
        keep |= 1 << v
    return len(rest) >= 2 and reach(g.adj, rest[0], keep) != keep


class TestConnectivity:
    def test_join_with_independent_side(self):
        for s in range(1, 5):
            for t in range(2, 5):
                assert connectivity(join(K(s), Kbar(t))).kappa == s

    def test_empty_and_complete(self):
        assert connectivity(Kbar(5)).kappa == 0
        assert connectivity(K(6)) == connectivity(K(6)).__class__(5, None)
        assert connectivity(K(1)).kappa == 0

    def test_null_graph_rejected(self):
        with pytest.raises(ValueError):
            connectivity(Graph.empty(0))

    def test_narrow_family_member(self):
        res = connectivity(build_g1(15, 3))
        assert res.kappa == 3 and disconnects(build_g1(15, 3), res.witness_cut)

    def test_agrees_with_brute_force(self):
        rng = random.Random(17)
        for _ in range(300):
            g = random_graph(rng.randint(1, 8), rng.random(), rng)
            res = connectivity(g)
            assert res.kappa == brute_connectivity(g)
            if res.witness_cut is not None:
                assert len(res.witness_cut) == res.kappa
                assert disconnects(g, res.witness_cut)

    def test_local_connectivity(self):
        g = Graph.cycle(6)
        assert local_connectivity(g, 0, 3) == 2
        assert local_connectivity(join(K(3), Kbar(2)), 3, 4) == 3
        with pytest.raises(ValueError):
            local_connectivity(g, 2, 2)
        with pytest.raises(ValueError):
            local_connectivity(g, 0, 1)

    def test_edge_deletion_drops_at_most_one(self):
        for n in range(2, 9):
            for g in generate_all(n):
                kappa = connectivity(g).kappa
                for e in g.edges():
                    assert connectivity(g.remove_edges([e])).kappa >= kappa - 1


class TestIndependence:
    def test_examples(self):
        assert independence_number(K(7)).alpha == 1
        assert independence_number(join(K(4), Kbar(5))).alpha == 5
        assert independence_number(Graph.cycle(5)).alpha == 2
        assert independence_number(Kbar(4)).alpha == 4

    def test_agrees_with_brute_force(self):
        rng = random.Random(23)
        for _ in range(300):
            g = random_graph(rng.randint(0, 9), rng.random(), rng)
            res = independence_number(g)
            assert res.alpha == brute_independence(g)
            s = res.witness_set
            assert len(s) == res.alpha
            assert all(not g.has_edge(u, v) for u in s for v in s)


class TestSigma:
    def test_examples(self):
        assert sigma_s(Kbar(4), 4) == 0
        assert sigma_s(build_k_split(7, 2), 3) == 8 == 7 + 4 - 2 - 1
        assert sigma_s(Graph.cycle(5), 2) == 4

    def test_witness(self):
        g = build_k_split(9, 2)
        total, chosen = min_degree_sum_independent(g, 3)
        assert total == sum(g.degree(v) for v in chosen) and len(chosen) == 3

    def test_errors(self):
        with pytest.raises(ValueError):
            sigma_s(K(4), 2)
        with pytest.raises(ValueError):
            sigma_s(K(4), 0)

    def test_agrees_with_brute_force(self):
        rng = random.Random(29)
        for _ in range(200):
            g = random_graph(rng.randint(1, 8), rng.random(), rng)
            for s in range(1, independence_number(g).alpha + 1):
                assert sigma_s(g, s) == brute_sigma(g, s)

    @given(graphs(max_n=9))
    @settings(max_examples=80, deadline=None)
    def test_monotone_in_s(self, g):
        if g.n == 0:
            return
        values = [sigma_s(g, s) for s in range(1, independence_number(g).alpha + 1)]
        assert values == sorted(values)


class TestBondy:
    def test_examples(self):
        assert bondy_connectivity_condition((3, 3, 3, 3), 2)
        assert bondy_connectivity_condition((1, 1), 0)
        # one edge removed from K4 ∨ K̄3 at an independent vertex
        assert bondy_connectivity_condition((3, 4, 4, 5, 6, 6, 6), 2)

    def test_range_checked(self):
        with pytest.raises(ValueError):
            bondy_connectivity_condition((3, 3, 3, 3), 3)
        with pytest.raises(ValueError):
            bondy_connectivity_condition((3, 3, 3, 3), -1)

    def test_implies_connectivity_exhaustively(self):
        for n in range(2, 9):
            for g in generate_all(n):
                d = degree_sequence(g)
                kappa = None
                for k in range(n - 1):
                    if bondy_connectivity_condition(d, k):
                        kappa = connectivity(g).kappa if kappa is None else kappa
                        assert kappa >= k + 1
