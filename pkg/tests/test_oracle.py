import random

import pytest

from cubecycle.embedding import ssq_ham_cycle_edge
from cubecycle.errors import TooLarge, TooLargeForExhaustive
from cubecycle.oracle import (
    EXHAUSTIVE_CAP,
    find_cycle_dfs,
    find_ham_path,
    graph_report,
    legal_lengths,
    pancyclicity_sweep,
    two_coloring,
    verify_automorphism,
    verify_cycle,
)
from cubecycle.automorphisms import identity
from cubecycle.tables import SSQ6_TABLE, parse_row
from cubecycle.topology import CubeGraph, Family
from cubecycle.walk import Walk

SSQ6 = CubeGraph(Family.SSQ, 6)
BSQ6 = CubeGraph(Family.BSQ, 6)
SUFFIX_EDGE_CYCLE16 = Walk.from_texts(
    (
        "000000 000001 000101 000100 001000 001001 001101 001100 "
        "110000 110001 110101 110100 111000 111001 111101 111100"
    ).split(),
    6,
)


def b(text):
    return int(text, 2)


class TestVerifyCycle:
    def test_table_triangle(self):
        c3 = Walk.from_texts(parse_row(SSQ6_TABLE[3]), 6)
        assert verify_cycle(SSQ6, c3, anchor=0, expected_len=3).ok

    def test_non_edge(self):
        rep = verify_cycle(SSQ6, Walk((0, b("000011"), b("000010"))))
        assert "NotAdjacent" in rep.kinds()
        assert rep.violations[0].where == (0,)

    def test_two_vertex_walk(self):
        rep = verify_cycle(SSQ6, Walk((0, b("000011"))))
        assert {"NotAdjacent", "WrongLength"} <= rep.kinds()

    def test_subcube_constraint(self):
        assert verify_cycle(SSQ6, SUFFIX_EDGE_CYCLE16, subcube_constraint=1).ok
        assert not verify_cycle(SSQ6, SUFFIX_EDGE_CYCLE16, subcube_constraint=2).ok

    def test_independent_adjacency_agrees(self):
        rep = verify_cycle(SSQ6, SUFFIX_EDGE_CYCLE16, adjacent=SSQ6.recursive_adjacent)
        assert rep.ok

    def test_report_as_dict(self):
        rep = verify_cycle(SSQ6, Walk((0, 1)), expected_len=4)
        d = rep.as_dict()
        assert d["ok"] is False
        assert {v["kind"] for v in d["violations"]} == {"WrongLength"}


class TestNegativeControls:
    """One corrupted cycle per violation kind; each must be flagged with that kind."""

    base = Walk((0, 1, 3, 2))

    def test_not_closed(self):
        assert "NotClosed" in verify_cycle(SSQ6, Walk((0, 1, 3, 2), closed=False)).kinds()

    def test_wrong_length(self):
        assert verify_cycle(SSQ6, self.base, expected_len=6).kinds() == {"WrongLength"}

    def test_invalid_vertex(self):
        bad = Walk((0, 1, b("010001"), b("010000")))
        assert "InvalidVertex" in verify_cycle(SSQ6, bad).kinds()

    def test_not_adjacent(self):
        bad = Walk((0, 1, 2, 3))
        assert verify_cycle(SSQ6, bad).kinds() == {"NotAdjacent"}

    def test_repeat(self):
        bad = Walk((0, 1, 3, 2, 0, 1, 3, 2))
        rep = verify_cycle(SSQ6, bad)
        assert "Repeat" in rep.kinds()
        assert (0, 4) in [v.where for v in rep.violations if v.kind == "Repeat"]

    def test_missing_anchor(self):
        assert verify_cycle(SSQ6, self.base, anchor=b("000100")).kinds() == {"MissingAnchor"}

    def test_subcube_count(self):
        rep = verify_cycle(SSQ6, self.base, subcube_constraint=1)
        assert rep.kinds() == {"SubcubeEdgeCount"}

    def test_swapped_pair_in_transversal(self):
        vs = list(SUFFIX_EDGE_CYCLE16.vertices)
        vs[4], vs[5] = vs[5], vs[4]
        assert "NotAdjacent" in verify_cycle(SSQ6, Walk(tuple(vs))).kinds()


class TestVerifyAutomorphism:
    def test_identity_exhaustive(self):
        assert verify_automorphism(BSQ6, identity(Family.BSQ, 6), mode="exhaustive")

    def test_exhaustive_cap(self):
        g = CubeGraph(Family.BSQ, 14)
        assert g.order > EXHAUSTIVE_CAP
        with pytest.raises(TooLargeForExhaustive):
            verify_automorphism(g, identity(Family.BSQ, 14), mode="exhaustive")


class TestFindCycleDfs:
    def test_triangle(self):
        w = find_cycle_dfs(SSQ6, 0, 3)
        assert verify_cycle(SSQ6, w, anchor=0, expected_len=3).ok

    def test_odd_in_bipartite(self):
        assert find_cycle_dfs(BSQ6, 0, 5) is None

    def test_bsq_48(self):
        w = find_cycle_dfs(BSQ6, 0, 48)
        assert verify_cycle(BSQ6, w, anchor=0, expected_len=48).ok

    @pytest.mark.parametrize("g", [SSQ6, BSQ6])
    def test_every_legal_length(self, g):
        for l in legal_lengths(g):
            w = find_cycle_dfs(g, b("000101"), l)
            assert verify_cycle(g, w, anchor=b("000101"), expected_len=l).ok, l

    def test_deterministic(self):
        assert find_cycle_dfs(BSQ6, 0, 40) == find_cycle_dfs(BSQ6, 0, 40)

    def test_cap(self):
        with pytest.raises(TooLarge):
            find_cycle_dfs(CubeGraph(Family.BSQ, 14), 0, 4)


class TestFindHamPath:
    def test_adjacent_pair(self):
        p = find_ham_path(SSQ6, 0, 1)
        assert p.vertices[0] == 0 and p.vertices[-1] == 1
        assert len(set(p.vertices)) == 32
        assert all(SSQ6.adjacent(x, y) for x, y in p.edges())

    def test_agrees_with_edge_construction(self):
        for x, y in SSQ6.materialize()[:10]:
            assert find_ham_path(SSQ6, x, y) is not None
            assert ssq_ham_cycle_edge(6, (x, y)).length == 32

    def test_random_pairs(self):
        rng = random.Random(2)
        vs = SSQ6.vertices()
        pairs = [tuple(rng.sample(vs, 2)) for _ in range(100)]
        assert any(not SSQ6.adjacent(x, y) for x, y in pairs)
        for x, y in pairs:
            p = find_ham_path(SSQ6, x, y)
            assert p is not None and len(set(p.vertices)) == 32
            assert (p.vertices[0], p.vertices[-1]) == (x, y)

    def test_same_colour_class_in_bsq(self):
        color = two_coloring(BSQ6)
        y = next(v for v in BSQ6.vertices() if v and color[v] == color[0])
        assert find_ham_path(BSQ6, 0, y) is None

    def test_cap(self):
        with pytest.raises(TooLarge):
            find_ham_path(CubeGraph(Family.BSQ, 10), 0, 1)


class TestGraphReport:
    @pytest.mark.parametrize(
        "family, n, expected",
        [
            ("SSQ", 6, (32, 96, 6, False, True, 3)),
            ("BSQ", 6, (64, 192, 6, True, True, 4)),
            ("BSQ", 2, (4, 4, 2, True, True, 4)),
            ("SSQ", 10, (256, 1280, 10, False, True, 3)),
            ("BSQ", 10, (1024, 5120, 10, True, True, 4)),
        ],
    )
    def test_structure(self, family, n, expected):
        r = graph_report(CubeGraph(family, n))
        got = (r.vertex_count, r.edge_count, r.regular_degree, r.bipartite, r.connected, r.girth)
        assert got == expected
        assert r.edge_count * 2 == r.regular_degree * r.vertex_count

    def test_diameters(self):
        assert graph_report(SSQ6).diameter == 4
        assert graph_report(BSQ6).diameter == 6

    def test_counts_only_above_exhaustive_cap(self):
        r = graph_report(CubeGraph(Family.SSQ, 14))
        assert r.vertex_count == 2048 and r.regular_degree == 14
        r = graph_report(CubeGraph(Family.BSQ, 14))
        assert r.girth is None and r.diameter is None and r.regular_degree == 14


class TestSweep:
    def test_ssq6_full(self):
        s = pancyclicity_sweep(SSQ6, vertices="all", cross_check=True, seed=1)
        assert (s["vertices_checked"], s["lengths_checked"]) == (32, 30)
        assert s["constructions"] == s["passed"] == 960
        assert s["failures"] == [] and s["cross_checked"] == 50
        assert s["cross_check_failures"] == []

    def test_summary_shape(self):
        s = pancyclicity_sweep(BSQ6, vertices=4, cross_check=False, seed=1)
        assert {"family", "n", "vertices_checked", "lengths_checked", "failures"} <= set(s)
        assert s["family"] == "BSQ" and s["lengths_checked"] == 31
