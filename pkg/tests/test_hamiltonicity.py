import random

import pytest

from hamextremal.constructions import K, Kbar, build_bipartite_extremal, build_g2, build_h2, build_k_split, cone
from hamextremal.generation import generate_all
from hamextremal.graph import Graph, degree_sequence, disjoint_union, join, random_graph
from hamextremal.hamiltonicity import (
    ConditionNotApplicable,
    chvatal_condition,
    chvatal_erdos_condition,
    dirac_condition,
    hamiltonian_path_direct,
    is_hamiltonian,
    is_hamiltonian_bipartite,
    is_traceable,
    ota_condition,
    validate_witness,
)
from hamextremal.invariants import connectivity, sigma_s
from oracles import brute_hamiltonian, brute_traceable


def random_bipartite(rng: random.Random, a: int, b: int, p: float) -> Graph:
    return Graph.from_edges(a + b, [(x, a + y) for x in range(a) for y in range(b) if rng.random() < p])


class TestExactSolvers:
    def test_examples(self):
        assert not is_hamiltonian(join(K(1), disjoint_union(K(4), K(1))))
        res = is_hamiltonian(Graph.cycle(6))
        assert res and validate_witness(Graph.cycle(6), res.witness, cycle=True)
        assert not is_hamiltonian(build_g2(10, 3))
        assert is_traceable(Graph.path(5))
        assert not is_traceable(build_h2(8, 2))
        assert not is_traceable(Kbar(2))
        assert is_traceable(K(1)).witness == (0,)

    def test_small_orders(self):
        with pytest.raises(ValueError):
            is_hamiltonian(K(2))
        with pytest.raises(ValueError):
            is_traceable(Graph.empty(0))

    def test_against_permutation_oracle(self):
        rng = random.Random(31)
        for _ in range(250):
            g = random_graph(rng.randint(3, 8), rng.uniform(0.2, 0.9), rng)
            ham = is_hamiltonian(g)
            assert ham.decision == brute_hamiltonian(g)
            if ham:
                assert validate_witness(g, ham.witness, cycle=True)
            tr = is_traceable(g)
            assert tr.decision == brute_traceable(g)
            if tr:
                assert validate_witness(g, tr.witness, cycle=False)

    def test_cone_matches_direct_path_search(self):
        for n in range(1, 8):
            for g in generate_all(n):
                via_cone = is_traceable(g)
                direct = hamiltonian_path_direct(g)
                assert via_cone.decision == direct.decision
                if direct:
                    assert validate_witness(g, direct.witness, cycle=False)

    def test_traceable_iff_cone_hamiltonian(self):
        for n in range(2, 8):
            for g in generate_all(n):
                assert is_traceable(g).decision == is_hamiltonian(cone(g)).decision

    def test_isomorphism_invariance(self):
        rng = random.Random(37)
        for _ in range(40):
            n = rng.randint(3, 10)
            g = random_graph(n, rng.uniform(0.3, 0.7), rng)
            want = is_hamiltonian(g).decision
            for _ in range(20):
                perm = list(range(n))
                rng.shuffle(perm)
                assert is_hamiltonian(g.relabel(perm)).decision == want

    def test_bipartite_solver_agrees_with_generic(self):
        rng = random.Random(41)
        for _ in range(1000):
            a = rng.randint(2, 6)
            b = a if rng.random() < 0.8 else rng.randint(1, 6)
            g = random_bipartite(rng, a, b, rng.uniform(0.3, 0.95))
            if g.n < 3:
                continue
            left = (1 << a) - 1
            fast = is_hamiltonian_bipartite(g, left)
            assert fast.decision == is_hamiltonian(g).decision
            if fast:
                assert validate_witness(g, fast.witness, cycle=True)

    def test_bipartite_solver_rejects_bad_coloring(self):
        with pytest.raises(ValueError):
            is_hamiltonian_bipartite(Graph.cycle(4), 0b0011)

    def test_extremal_bipartite_is_nonhamiltonian(self):
        g = build_bipartite_extremal(5)
        assert not is_hamiltonian(g)
        assert not is_hamiltonian_bipartite(g, (1 << 5) - 1)


class TestSufficientConditions:
    def test_dirac(self):
        assert dirac_condition(K(4))
        assert not dirac_condition(Graph.cycle(6)) and is_hamiltonian(Graph.cycle(6))
        assert not dirac_condition(join(K(4), Kbar(5)))

    def test_chvatal(self):
        assert chvatal_condition((4, 4, 4, 4, 4))
        assert not chvatal_condition(degree_sequence(build_k_split(7, 2)))
        assert chvatal_condition((2, 2, 2, 2))
        with pytest.raises(ValueError):
            chvatal_condition((1, 1))

    def test_chvatal_erdos(self):
        assert chvatal_erdos_condition(K(4))
        assert chvatal_erdos_condition(Graph.cycle(5))
        assert not chvatal_erdos_condition(build_g2(10, 3))

    def test_ota_out_of_range(self):
        with pytest.raises(ConditionNotApplicable):
            ota_condition(join(K(3), Kbar(3)), 3)
        with pytest.raises(ConditionNotApplicable):
            ota_condition(build_k_split(9, 2), 3)  # only 2-connected
        with pytest.raises(ConditionNotApplicable):
            ota_condition(Graph.cycle(8), 1)

    def test_ota_rejects_split_family(self):
        g = build_k_split(9, 2)
        assert sigma_s(g, 3) < 9 + 4 - 2
        assert not ota_condition(g, 2)

    def test_ota_fires_on_complete_bipartite(self):
        g = Graph.complete_bipartite(3, 3)
        assert sigma_s(g, 3) == 9 >= 6 + 4 - 2
        assert ota_condition(g, 2) and is_hamiltonian(g)

    def test_conditions_need_order_three(self):
        for check in (dirac_condition, chvatal_erdos_condition):
            with pytest.raises(ValueError):
                check(K(2))

    def test_conditions_are_sound_up_to_order_seven(self):
        for n in range(3, 8):
            for g in generate_all(n):
                ham = is_hamiltonian(g).decision
                d = degree_sequence(g)
                if dirac_condition(g) or chvatal_condition(d) or chvatal_erdos_condition(g):
                    assert ham
                kappa = connectivity(g).kappa
                try:
                    if ota_condition(g, kappa):
                        assert ham
                except ConditionNotApplicable:
                    pass
