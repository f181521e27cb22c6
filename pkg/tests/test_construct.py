import random
from math import comb

import pytest

from facevec import (
    Graph,
    all_graphs,
    check_coloring,
    chromatic_number,
    clique_number,
    clique_vector,
    construct_balanced,
    construct_from_vector,
    construct_pair,
    face_vector,
    graph_link,
    is_balanced,
    one_skeleton,
    remove_vertices,
)
from facevec.complexes import vec_entry

from conftest import complete_graph


def assert_pair_contract(g, r, k):
    """Output matches the graph's counts at k and k+1 and is properly colored."""
    cc, trace = construct_pair(g, r, k)
    cv = clique_vector(g)
    out = face_vector(cc.complex)
    assert vec_entry(out, k) == vec_entry(cv, k)
    assert vec_entry(out, k + 1) == vec_entry(cv, k + 1)
    assert check_coloring(cc)
    assert cc.colors <= r or not cc.complex.vertices
    return cc, trace


class TestConstructPairExamples:
    def test_triangle(self):
        g = complete_graph(3)
        cc, _ = construct_pair(g, 3, 1)
        vec = face_vector(cc.complex)
        assert vec_entry(vec, 1) == 3 and vec_entry(vec, 2) == 3

    def test_five_cycle(self, c5):
        cc, _ = construct_pair(c5, 2, 1)
        vec = face_vector(cc.complex)
        assert vec_entry(vec, 1) == 5 and vec_entry(vec, 2) == 5
        assert check_coloring(cc)
        assert chromatic_number(one_skeleton(cc.complex)) == 2

    def test_edgeless_matches_vertices_at_level_one(self):
        g = Graph.from_edges(6, [])
        cc, trace = construct_pair(g, 3, 1)
        assert face_vector(cc.complex) == (1, 6)
        assert trace.kind == "flat"

    def test_edgeless_higher_levels_are_empty(self):
        g = Graph.from_edges(6, [])
        for k in (2, 3):
            cc, _ = construct_pair(g, 3, k)
            vec = face_vector(cc.complex)
            assert vec_entry(vec, k) == 0 and vec_entry(vec, k + 1) == 0

    def test_k_zero_gives_isolated_vertices(self, c5):
        cc, trace = construct_pair(c5, 2, 0)
        assert trace.kind == "vertices"
        assert face_vector(cc.complex) == (1, 5)

    def test_precondition_rejected(self):
        with pytest.raises(ValueError):
            construct_pair(complete_graph(4), 3, 1)

    def test_empty_graph(self):
        g = Graph.from_edges(0, [])
        cc, _ = construct_pair(g, 1, 0)
        assert face_vector(cc.complex) == (1,)


class TestConstructPairTrace:
    def test_five_cycle_trace_shape(self, c5):
        _, trace = construct_pair(c5, 2, 1)
        assert trace.kind == "cone"
        assert trace.pivot == 1
        assert trace.non_neighbors == (3, 4)
        assert [(s.vertex, s.a, s.b) for s in trace.steps] == [(1, 2, 1), (3, 2, 1), (4, 1, 1)]
        assert trace.sub is not None and trace.sub.kind == "flat"

    def test_steps_recomputable_from_the_graph(self, c5, petersen):
        for g, r, k in [(c5, 2, 1), (petersen, 2, 1), (complete_graph(5), 5, 2)]:
            _, trace = construct_pair(g, r, k)
            if trace.kind != "cone":
                continue
            current = g
            for step in trace.steps:
                lv = clique_vector(graph_link(current, step.vertex))
                assert step.a == vec_entry(lv, k)
                assert step.b == vec_entry(lv, k - 1)
                current = remove_vertices(current, [step.vertex])
            # what survives the peeling is exactly the pivot's neighborhood
            assert current.vertex_labels == graph_link(g, trace.pivot).vertex_labels

    def test_feasibility_inequalities(self, c5):
        for g, r in [(c5, 2), (complete_graph(4), 4), (Graph.from_edges(6, [(1, 2), (3, 4), (5, 6)]), 2)]:
            cv = clique_vector(g)
            for k in range(1, len(cv)):
                _, trace = construct_pair(g, r, k)
                if trace.kind != "cone":
                    continue
                base = dict(trace.base_levels)
                for step in trace.steps:
                    assert step.a <= base[k]
                    assert step.b <= vec_entry(cv, k - 1)

    def test_added_vertices_pairwise_non_adjacent(self, c5):
        cc, trace = construct_pair(c5, 2, 1)
        added = {s.added_vertex for s in trace.steps}
        skel = one_skeleton(cc.complex)
        for u, v in skel.edges():
            assert not (u in added and v in added)

    def test_added_vertices_all_wear_the_last_color(self, c5):
        cc, trace = construct_pair(c5, 2, 1)
        for s in trace.steps:
            assert cc.coloring[s.added_vertex] == cc.colors


class TestConstructPairSweeps:
    def test_exhaustive_small(self):
        for n in range(0, 5):
            for g in all_graphs(n):
                r = max(clique_number(g), 1)
                for k in range(0, r + 2):
                    assert_pair_contract(g, r, k)

    def test_budget_above_clique_number_also_works(self):
        for g in all_graphs(4):
            r = clique_number(g) + 1
            for k in range(0, r + 1):
                assert_pair_contract(g, r, k)

    def test_random_medium_graphs(self):
        rng = random.Random(5150)
        for n, trials in [(5, 120), (6, 60), (7, 30)]:
            for _ in range(trials):
                g = Graph.from_edge_mask(n, rng.randrange(1 << comb(n, 2)))
                r = max(clique_number(g), 1)
                for k in range(0, r + 1):
                    assert_pair_contract(g, r, k)


class TestConstructBalanced:
    def test_complete_graph_gives_simplex_counts(self):
        for n in range(1, 6):
            cc, report = construct_balanced(complete_graph(n))
            assert report.colors == n
            assert report.face_vec == tuple(comb(n, i) for i in range(n + 1))
            assert report.face_vec == report.clique_vec

    def test_five_cycle(self, c5):
        cc, report = construct_balanced(c5)
        assert report.colors == 2
        assert report.face_vec == (1, 5, 5)
        assert set(cc.complex.facets) >= {(1, 2), (2, 3), (1, 4), (3, 4), (2, 5)}
        assert is_balanced(cc.complex)

    def test_petersen(self, petersen):
        cc, report = construct_balanced(petersen)
        assert report.colors == 2
        assert report.clique_vec == (1, 10, 15)
        assert report.face_vec == (1, 10, 15)
        assert is_balanced(cc.complex)

    def test_empty_graph(self):
        cc, report = construct_balanced(Graph.from_edges(0, []))
        assert report.colors == 0
        assert report.clique_vec == (1,)
        assert report.face_vec == (1,)
        assert check_coloring(cc)

    def test_edgeless(self):
        cc, report = construct_balanced(Graph.from_edges(4, []))
        assert report.colors == 1
        assert report.face_vec == (1, 4)
        assert is_balanced(cc.complex)

    def test_margins_are_nonnegative_bound_slack(self, c5):
        from facevec import ffk_bound

        _, report = construct_balanced(c5)
        cv = report.clique_vec
        assert report.margins == tuple(
            ffk_bound(cv[i], i, report.colors) - cv[i + 1] for i in range(1, report.colors)
        )
        assert all(m >= 0 for m in report.margins)

    def test_exhaustive_small(self):
        for n in range(0, 5):
            for g in all_graphs(n):
                cc, report = construct_balanced(g)
                assert report.face_vec == report.clique_vec
                assert check_coloring(cc)
                assert is_balanced(cc.complex)

    def test_matches_vector_only_entry_point(self, petersen):
        cc_a, rep_a = construct_balanced(petersen)
        cc_b, rep_b = construct_from_vector(clique_vector(petersen))
        assert cc_a == cc_b
        assert rep_a == rep_b
