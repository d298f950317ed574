"""Bondage search and finiteness criterion against brute-force sweeps.

The finiteness criterion (a bondage set exists iff twice the matching
number exceeds gamma_t) is validated exhaustively on every connected
isolate-free graph with n <= 7 and m <= 12 before anything else trusts
it; the same corpus drives the search cross-check.
"""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_bondage, brute_has_bondage_set, brute_max_matching
from totbond.bondage import (
    DEFAULT_CAP_SLACK,
    INFINITE_CRITERION,
    BondageCertificate,
    bondage,
    bondage_finite,
    colex_subsets,
    max_matching_size,
)
from totbond.families import complete_bipartite, cycle, path, star
from totbond.graphs import Graph, IsolatedVertexError
from totbond.smallgraphs import enumerate_graph_classes


def connected_isolate_free(max_n, max_m=None):
    out = []
    for n in range(2, max_n + 1):
        for g in enumerate_graph_classes(n):
            if not g.is_connected():
                continue
            if max_m is not None and len(g.edges()) > max_m:
                continue
            out.append(g)
    return out


class TestMatching:
    def test_all_classes_n7(self):
        for n in range(1, 8):
            for g in enumerate_graph_classes(n):
                assert max_matching_size(g) == brute_max_matching(g)

    def test_blossom_case(self):
        # two triangles joined by a bridge force an odd-cycle augmentation
        g = Graph.from_edges(
            6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]
        )
        assert max_matching_size(g) == 3

    def test_petersen(self):
        edges = [(i, (i + 1) % 5) for i in range(5)]
        edges += [(i + 5, (i + 2) % 5 + 5) for i in range(5)]
        edges += [(i, i + 5) for i in range(5)]
        assert max_matching_size(Graph.from_edges(10, edges)) == 5


class TestFinitenessCriterion:
    def test_exhaustive_small(self):
        """Criterion == actual existence for every connected graph n<=6."""
        for g in connected_isolate_free(6):
            assert bondage_finite(g) == brute_has_bondage_set(g)

    def test_known_infinite(self):
        assert not bondage_finite(path(2))
        assert not bondage_finite(path(3))
        assert not bondage_finite(cycle(3))
        assert not bondage_finite(star(4))

    def test_known_finite(self):
        assert bondage_finite(path(4))
        assert bondage_finite(cycle(4))
        assert bondage_finite(complete_bipartite(2, 2))


class TestColexSubsets:
    def test_count(self):
        assert sum(1 for _ in colex_subsets(6, 3)) == math.comb(6, 3)

    def test_members_sorted_and_unique(self):
        seen = set()
        for combo in colex_subsets(7, 3):
            assert list(combo) == sorted(set(combo))
            seen.add(combo)
        assert len(seen) == math.comb(7, 3)

    def test_colex_order(self):
        got = list(colex_subsets(4, 2))
        assert got == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]

    def test_zero_size(self):
        assert list(colex_subsets(5, 0)) == [()]


class TestBondageValues:
    @pytest.mark.parametrize(
        "n,want", [(4, 1), (5, 1), (6, 2), (7, 1), (8, 1), (9, 1), (10, 2)]
    )
    def test_paths(self, n, want):
        cert = bondage(path(n))
        assert cert.status == "finite"
        assert cert.b_t == want

    @pytest.mark.parametrize("n,want", [(4, 2), (5, 2), (6, 3), (7, 2), (8, 2)])
    def test_cycles(self, n, want):
        assert bondage(cycle(n)).b_t == want

    def test_short_paths_infinite(self):
        for n in (2, 3):
            cert = bondage(path(n))
            assert cert.status == "infinite"
            assert cert.criterion == INFINITE_CRITERION
            assert cert.value() == float("inf")

    def test_triangle_infinite(self):
        assert bondage(cycle(3)).status == "infinite"

    @pytest.mark.parametrize("m,n", [(2, 2), (2, 3), (3, 3), (2, 4)])
    def test_complete_bipartite(self, m, n):
        assert bondage(complete_bipartite(m, n)).b_t == m

    def test_exhaustive_against_oracle(self):
        """Full agreement with the subset-sweep oracle on small graphs."""
        for g in connected_isolate_free(5):
            want, _ = brute_bondage(g)
            cert = bondage(g)
            if want == float("inf"):
                assert cert.status == "infinite"
            else:
                assert cert.status == "finite"
                assert cert.b_t == want


class TestCertificates:
    def test_witness_replays(self):
        for g in connected_isolate_free(5):
            cert = bondage(g)
            if cert.status != "finite":
                continue
            assert len(cert.witness) == cert.b_t
            h = g.delete_edges(cert.witness)
            assert not h.has_isolated_vertex()
            from oracles import brute_gamma_t

            assert brute_gamma_t(h) > cert.gamma_before
            assert cert.gamma_after == brute_gamma_t(h)

    def test_gamma_fields(self):
        cert = bondage(cycle(4))
        assert cert.gamma_before == 2
        assert cert.gamma_after > 2

    def test_value_raises_when_undecided(self):
        cert = BondageCertificate("unknown-above-cap", None, None, 2, None, cap=3)
        with pytest.raises(ValueError):
            cert.value()


class TestCapAndBudget:
    def test_cap_zero_reports_unknown(self):
        cert = bondage(cycle(4), cap=0)
        assert cert.status == "unknown-above-cap"
        assert cert.cap == 0

    def test_cap_below_answer(self):
        # b_t(C6) = 3; cap 2 must stop short without guessing
        cert = bondage(cycle(6), cap=2)
        assert cert.status == "unknown-above-cap"
        assert cert.cap == 2

    def test_cap_at_answer(self):
        assert bondage(cycle(6), cap=3).b_t == 3

    def test_budget_exhaustion_reports_completed_level(self):
        cert = bondage(cycle(6), work_budget=1)
        assert cert.status == "unknown-above-cap"
        assert cert.cap == 0

    def test_budget_generous_is_harmless(self):
        assert bondage(path(5), work_budget=10**6).b_t == 1

    def test_default_cap_tracks_degree(self):
        g = path(6)
        cert = bondage(g)
        assert cert.status == "finite"
        assert cert.b_t <= g.max_degree() + DEFAULT_CAP_SLACK

    def test_isolates_rejected(self):
        with pytest.raises(IsolatedVertexError):
            bondage(Graph.from_edges(3, [(0, 1)]))
