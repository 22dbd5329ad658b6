import json

import pytest

from hamextremal.canon import canonical_form
from hamextremal.constructions import FamilySpec
from hamextremal.generation import GenFilter, ScaleError, count_graphs, generate_all, has_balanced_bipartition
from hamextremal.graph import Graph
from hamextremal.graph6 import encode_graph6
from hamextremal.invariants import connectivity
from hamextremal.verification import (
    ExtremalReport,
    cone_images_match,
    condition_soundness_sweep,
    join_template,
    reverify,
    verify_corollary12,
    verify_lemma5,
    verify_lemma7,
    verify_theorem8,
)
from oracles import labeled_class_count


class TestGeneration:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_counts_match_labeled_oracle(self, n):
        assert count_graphs(n) == labeled_class_count(n)

    def test_order_three_classes(self):
        got = {canonical_form(g) for g in generate_all(3)}
        want = {canonical_form(Graph.from_edges(3, e)) for e in ([], [(0, 1)], [(0, 1), (1, 2)], [(0, 1), (1, 2), (0, 2)])}
        assert got == want

    def test_no_duplicates(self):
        for n in range(1, 8):
            certs = [canonical_form(g) for g in generate_all(n)]
            assert len(certs) == len(set(certs))

    def test_connectivity_filter_matches_oracle(self):
        def connected_with_cut_vertex(edges):
            return connectivity(Graph.from_edges(4, edges)).kappa == 1

        flt = GenFilter(connectivity_exact=1)
        assert sum(1 for _ in generate_all(4, flt)) == labeled_class_count(4, connected_with_cut_vertex)

    def test_size_filters(self):
        for n in range(2, 8):
            for lo, hi in [(None, 3), (5, None), (4, 6)]:
                flt = GenFilter(min_size=lo, max_size=hi)
                want = sum(1 for g in generate_all(n) if (lo is None or g.size >= lo) and (hi is None or g.size <= hi))
                assert sum(1 for _ in generate_all(n, flt)) == want

    def test_worker_count_does_not_change_output(self):
        serial = [encode_graph6(g) for g in generate_all(8, GenFilter(min_size=20))]
        parallel = [encode_graph6(g) for g in generate_all(8, GenFilter(min_size=20), workers=2)]
        assert serial == parallel and serial

    def test_visitor_sees_every_graph(self):
        seen = []
        out = list(generate_all(5, visitor=seen.append))
        assert seen == out and len(out) == 34

    def test_scale_guards(self):
        with pytest.raises(ScaleError):
            next(generate_all(10))
        with pytest.raises(ScaleError):
            next(generate_all(11, GenFilter(min_size=50)))
        with pytest.raises(ScaleError):
            next(generate_all(13, GenFilter(min_size=70), force=True))

    def test_balanced_bipartition(self):
        assert has_balanced_bipartition(Graph.cycle(6), 3)
        assert not has_balanced_bipartition(Graph.cycle(5), 2)
        assert has_balanced_bipartition(Graph.empty(4), 2)
        assert not has_balanced_bipartition(Graph.complete_bipartite(1, 3), 2)


class TestExtremalSearch:
    def test_boundary_case_has_two_extremals(self):
        r = verify_theorem8(7, 2)
        assert r.agrees and r.max_size == 14 and len(r.extremal_graphs) == 2
        assert set(r.extremal_graphs) == {str(canonical_form(FamilySpec(x, 7, 2).build())) for x in ("k_split", "g1")}

    @pytest.mark.parametrize("n,k,size,family", [(9, 4, 26, "g1"), (8, 3, 19, "g2"), (8, 2, 19, "k_split")])
    def test_unique_extremals(self, n, k, size, family):
        r = verify_theorem8(n, k)
        assert r.agrees and r.max_size == size
        assert r.extremal_graphs == [str(canonical_form(FamilySpec(family, n, k).build()))]

    @pytest.mark.parametrize("n,k,size", [(8, 2, 17), (7, 2, 12), (9, 2, 21)])
    def test_nontraceable_extremals(self, n, k, size):
        r = verify_corollary12(n, k)
        assert r.agrees and r.max_size == size

    def test_cone_correspondence(self):
        assert cone_images_match(verify_corollary12(7, 2), verify_theorem8(8, 3))

    def test_reverify_and_json_round_trip(self):
        r = verify_theorem8(7, 3)
        assert reverify(r) == []
        back = ExtremalReport(**json.loads(r.to_json()))
        assert back == r
        assert "AGREES" in r.to_text()

    def test_reverify_flags_tampering(self):
        r = verify_theorem8(7, 2)
        r.extremal_graphs = [encode_graph6(Graph.complete(7)).decode()]
        assert reverify(r)

    def test_domain_and_scale(self):
        with pytest.raises(ValueError):
            verify_theorem8(6, 3)
        with pytest.raises(ScaleError):
            verify_theorem8(12, 4)
        with pytest.raises(ValueError):
            verify_lemma5(6)

    def test_bipartite_small_cases(self):
        for n, size in [(3, 7), (4, 12)]:
            r = verify_lemma5(n)
            assert r.agrees and r.max_size == size and len(r.extremal_graphs) == 1


class TestEdgeDeletion:
    def test_templates(self):
        g, mask = join_template(3, 2, "plain")
        assert (g.n, g.size, mask) == (5, 9, 0b11000)
        g, mask = join_template(2, 3, "plus_k2")
        assert g.n == 7 and mask == 0b1110000
        with pytest.raises(ValueError):
            join_template(2, 2, "other")

    def test_named_instances(self):
        assert verify_lemma7(3, 2, "plain", 2)
        assert verify_lemma7(4, 3, "plus_k2", 3)
        r = verify_lemma7(3, 3, "plain", 0)
        assert r.holds and r.subsets_checked == 1

    def test_exhaustive_small(self):
        for s in range(1, 4):
            for t in (2, 3):
                for template in ("plain", "plus_k2"):
                    for f in range(s + 1):
                        assert verify_lemma7(s, t, template, f).holds


class TestSweep:
    def test_order_six(self):
        r = condition_soundness_sweep(6)
        assert r.ok and r.graphs == 1 + 2 + 4 + 11 + 34 + 156
        assert r.tallies["chvatal"].fired > 0 and r.tallies["ota"].not_applicable > 0
        payload = json.loads(json.dumps(r.to_dict()))
        assert payload["ok"] is True

    def test_scale_guard(self):
        with pytest.raises(ScaleError):
            condition_soundness_sweep(9)
