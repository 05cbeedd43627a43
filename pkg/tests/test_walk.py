import json

import pytest

from cubecycle.errors import EdgeNotShared, OverlapBeyondEdge
from cubecycle.oracle import verify_cycle
from cubecycle.topology import CubeGraph
from cubecycle.walk import Walk, splice, splice_lists

SUFFIX_EDGE_CYCLE16 = (
    "000000 000001 000101 000100 001000 001001 001101 001100 "
    "110000 110001 110101 110100 111000 111001 111101 111100"
).split()
TABLE1_C4 = "000000 000001 000011 000010".split()


class TestWalk:
    def test_lengths(self):
        assert Walk((0, 1, 3, 2)).length == 4
        assert Walk((0, 1, 3), closed=False).length == 2

    def test_edges_closed_and_open(self):
        assert Walk((0, 1, 3)).edges() == [(0, 1), (1, 3), (3, 0)]
        assert Walk((0, 1, 3), closed=False).edges() == [(0, 1), (1, 3)]

    def test_has_edge_either_direction(self):
        w = Walk((0, 1, 3, 2))
        assert w.has_edge(2, 0) and w.has_edge(0, 2)
        assert not w.has_edge(0, 3)

    def test_rotations(self):
        w = Walk((0, 1, 3, 2))
        assert w.rotated_to(3).vertices == (3, 2, 0, 1)
        assert w.starting_with(0, 2).vertices == (0, 2, 3, 1)
        with pytest.raises(EdgeNotShared):
            w.starting_with(0, 3)

    def test_text_forms(self):
        w = Walk.from_texts(TABLE1_C4, 6)
        assert w.vertices == (0, 1, 3, 2)
        assert w.texts(6) == TABLE1_C4
        assert json.loads(w.to_json(6)) == TABLE1_C4
        assert w.to_lines(6) == "\n".join(TABLE1_C4) + "\n"


class TestSplice:
    def test_two_squares_make_a_hexagon(self):
        across = Walk((0, 1, 0b010001, 0b010000))
        out = splice(Walk((0, 1, 3, 2)), across, (0, 1))
        assert out.length == 6
        assert set(out) == {0, 1, 2, 3, 0b010001, 0b010000}
        assert not out.has_edge(0, 1)
        g = CubeGraph("BSQ", 6)
        assert verify_cycle(g, out).ok

    def test_table_square_with_transversal(self):
        c1 = Walk.from_texts(TABLE1_C4, 6)
        c2 = Walk.from_texts(SUFFIX_EDGE_CYCLE16, 6)
        out = splice(c1, c2, (0, 1))
        g = CubeGraph("SSQ", 6)
        assert verify_cycle(g, out, anchor=0, expected_len=18).ok

    def test_edge_missing_from_first(self):
        with pytest.raises(EdgeNotShared):
            splice(Walk((0, 1, 3, 2)), Walk((0, 2, 6, 4)), (0, 1))

    def test_edge_missing_from_second(self):
        with pytest.raises(EdgeNotShared):
            splice(Walk((0, 1, 5, 4)), Walk((0, 1, 3, 2)), (1, 3))

    def test_overlap_beyond_edge(self):
        with pytest.raises(OverlapBeyondEdge):
            splice(Walk((0, 1, 3, 2)), Walk((0, 1, 3, 7)), (0, 1))

    def test_orientation_does_not_matter(self):
        a = splice(Walk((0, 1, 3, 2)), Walk((1, 0, 4, 5)), (1, 0))
        assert a.length == 6 and set(a) == {0, 1, 2, 3, 4, 5}

    def test_lists_version(self):
        out = splice_lists([0, 1, 3, 2], [0, 1, 5, 4], 0, 1)
        assert len(out) == 6 and set(out) == set(range(6))
        assert Walk(tuple(out)).has_edge(3, 2)
        assert not Walk(tuple(out)).has_edge(0, 1)
