"""Exact chromatic/clique solver against an independent brute-force oracle."""

import pytest

from qchrom.errors import ImproperColoringError
from qchrom.exact import chromatic_number, clique_number, proper_coloring_to_certificate
from qchrom.graphs import Graph, generate, make_graph
from oracles import all_labeled_graphs, brute_chromatic, brute_clique, seeded_graphs


def coloring_is_proper(g: Graph, coloring) -> bool:
    return all(coloring[u] != coloring[v] for u, v in g.edges)


class TestKnownValues:
    @pytest.mark.parametrize("spec,chi,omega", [
        ("complete:5", 5, 5),
        ("cycle:6", 2, 2),
        ("cycle:5", 3, 2),
        ("complete_bipartite:3,4", 2, 2),
        ("petersen", 3, 2),
        ("cyclotomic13", 4, 2),
        ("clebsch", 4, 2),
        ("gq24", 6, 3),
    ])
    def test_named_graphs(self, spec, chi, omega):
        g = generate(spec)
        chi_rep = chromatic_number(g)
        om_rep = clique_number(g)
        assert chi_rep.status == "complete" and chi_rep.chromatic == chi
        assert om_rep.status == "complete" and om_rep.clique == omega

    def test_single_vertex(self):
        g = make_graph(1, [])
        assert chromatic_number(g).chromatic == 1
        assert clique_number(g).clique == 1

    def test_edgeless(self):
        g = make_graph(6, [])
        rep = chromatic_number(g)
        assert rep.chromatic == 1
        assert rep.coloring == [0] * 6


class TestOracleCrossCheck:
    def test_exhaustive_n_up_to_4(self):
        for n in (1, 2, 3, 4):
            for g in all_labeled_graphs(n):
                assert chromatic_number(g).chromatic == brute_chromatic(g)
                assert clique_number(g).clique == brute_clique(g)

    def test_random_corpus(self):
        for g in seeded_graphs(120, 2, 8, seed=17):
            chi_rep = chromatic_number(g)
            om_rep = clique_number(g)
            chi, omega = brute_chromatic(g), brute_clique(g)
            assert chi_rep.chromatic == chi, g
            assert om_rep.clique == omega, g
            assert omega <= chi  # sandwich sanity


class TestWitnesses:
    def test_colorings_proper_and_use_chi_colors(self):
        for g in seeded_graphs(40, 2, 9, seed=23):
            rep = chromatic_number(g)
            assert coloring_is_proper(g, rep.coloring)
            assert len(set(rep.coloring)) == rep.chromatic
            # colors are normalized by first appearance: 0, 1, 2, ...
            seen = []
            for c in rep.coloring:
                if c not in seen:
                    assert c == len(seen)
                    seen.append(c)

    def test_clique_witness_is_a_clique(self):
        for g in seeded_graphs(40, 2, 9, seed=29):
            rep = clique_number(g)
            w = rep.clique_witness
            assert len(w) == rep.clique
            assert all(g.has_edge(u, v) for i, u in enumerate(w) for v in w[i + 1:])


class TestDeterminism:
    def test_same_inputs_same_outputs(self):
        g = generate("erdos_renyi:14,0.5", seed=3)
        a, b = chromatic_number(g), chromatic_number(g)
        assert a.chromatic == b.chromatic
        assert a.coloring == b.coloring
        x, y = clique_number(g), clique_number(g)
        assert x.clique == y.clique and x.clique_witness == y.clique_witness


class TestBudget:
    def test_timeout_reports_bracket(self):
        # this instance needs ~60ms of branching; a 50ms budget trips mid-search
        g = generate("erdos_renyi:60,0.5", seed=1)
        rep = chromatic_number(g, budget=0.05)
        assert rep.status == "timed_out"
        assert rep.chromatic is None
        lo, hi = rep.chromatic_bracket
        assert 1 <= lo <= hi <= 60
        assert brute_clique_lower(g) <= hi

    def test_timeout_clique_bracket(self):
        g = generate("erdos_renyi:100,0.8", seed=1)
        rep = clique_number(g, budget=0.01)
        assert rep.status == "timed_out"
        assert rep.clique is None
        lo, hi = rep.clique_bracket
        assert 1 <= lo <= hi <= 100
        assert lo >= 10  # greedy already finds a sizable clique here

    def test_result_inside_budget_is_complete(self):
        g = generate("petersen")
        rep = chromatic_number(g, budget=60)
        assert rep.status == "complete"
        assert rep.elapsed < 60


def brute_clique_lower(g: Graph) -> int:
    # greedy clique: any lower bound works for the bracket sanity check
    best = 0
    for v in range(g.n):
        cur = [v]
        for u in range(g.n):
            if u != v and all(g.has_edge(u, w) for w in cur):
                cur.append(u)
        best = max(best, len(cur))
    return best


class TestColoringToCertificate:
    def test_improper_coloring_named(self):
        g = generate("cycle:5")
        with pytest.raises(ImproperColoringError, match=r"\(0,1\)"):
            proper_coloring_to_certificate(g, [0, 0, 1, 0, 1])

    def test_wrong_length(self):
        g = generate("cycle:5")
        with pytest.raises(ImproperColoringError):
            proper_coloring_to_certificate(g, [0, 1])

    def test_bad_color_value(self):
        g = generate("cycle:5")
        with pytest.raises(ImproperColoringError):
            proper_coloring_to_certificate(g, [0, 1, 0, 1, -2])

    def test_builds_identity_blocks(self):
        g = generate("cycle:4")
        cert = proper_coloring_to_certificate(g, [0, 1, 0, 1], d=3)
        assert (cert.n, cert.c, cert.d) == (4, 2, 3)
        assert cert.projectors[0, 0].trace() == pytest.approx(3.0)
        assert cert.projectors[0, 1].trace() == pytest.approx(0.0)
