import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubecycle.automorphisms import (
    apply,
    bsq_translation,
    group_swap,
    identity,
    ssq_translation,
    translation,
    xor_mask,
)
from cubecycle.errors import IndexOutOfRange, InvalidLabel, Unverified
from cubecycle.oracle import verify_automorphism, verify_cycle
from cubecycle.topology import CubeGraph, Family
from cubecycle.walk import Walk

SSQ6 = CubeGraph(Family.SSQ, 6)
BSQ6 = CubeGraph(Family.BSQ, 6)
SSQ10 = CubeGraph(Family.SSQ, 10)
BSQ10 = CubeGraph(Family.BSQ, 10)


def b(text):
    return int(text, 2)


class TestSsqTranslation:
    def test_zero_is_identity(self):
        aut = ssq_translation(6, 0)
        assert aut.map_list(SSQ6.vertices()) == SSQ6.vertices()

    def test_mask_example(self):
        aut = ssq_translation(6, b("001100"))
        assert aut.verified
        assert aut(b("001100")) == 0
        assert aut(b("001000")) == b("000100")
        assert SSQ6.adjacent(0, aut(b("001000")))

    def test_rejects_invalid_label(self):
        with pytest.raises(InvalidLabel):
            ssq_translation(6, b("010000"))

    @pytest.mark.parametrize("u", SSQ6.vertices())
    def test_every_vertex_exhaustive(self, u):
        aut = ssq_translation(6, u)
        assert aut(u) == 0
        assert verify_automorphism(SSQ6, aut, mode="exhaustive")


class TestBsqTranslation:
    def test_zero_is_identity(self):
        aut = bsq_translation(6, 0)
        assert aut.map_list(BSQ6.vertices()) == BSQ6.vertices()

    def test_odd_a_reflects_b(self):
        aut = bsq_translation(6, b("010100"))
        assert aut(b("010100")) == 0
        # (a, b) -> (a - 1, 1 - b): group 1000 has a = 2, b = 0 and maps to a = 1, b = 1
        assert aut(b("100000")) == b("010100")
        assert verify_automorphism(BSQ6, aut, mode="exhaustive")

    def test_even_a_shifts(self):
        aut = bsq_translation(6, b("100000"))
        assert aut(b("100000")) == 0
        assert aut(b("110100")) == b("010100")
        assert verify_automorphism(BSQ6, aut, mode="exhaustive")

    @pytest.mark.parametrize("u", BSQ6.vertices())
    def test_every_vertex_exhaustive(self, u):
        aut = bsq_translation(6, u)
        assert aut(u) == 0
        assert verify_automorphism(BSQ6, aut, mode="exhaustive")


class TestGroupSwap:
    def test_same_group_is_identity(self):
        aut = group_swap(10, 2, 2)
        assert aut.map_list(SSQ10.vertices()) == SSQ10.vertices()

    def test_ssq10_swap(self):
        aut = group_swap(10, 1, 2)
        assert aut(b("0011000000")) == b("0000001100")
        assert SSQ10.adjacent(aut(0), aut(b("0011000000")))
        assert verify_automorphism(SSQ10, aut, mode="sampled", count=10_000, seed=3)

    def test_bsq10_swap(self):
        aut = group_swap(10, 1, 2, Family.BSQ)
        assert verify_automorphism(BSQ10, aut, mode="exhaustive")

    def test_index_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            group_swap(6, 1, 2)


class TestApply:
    def test_identity_on_walk(self):
        w = Walk((0, 1, 3, 2))
        aut = ssq_translation(6, 0)
        assert apply(aut, w) == w

    def test_triangle_moves(self):
        c3 = Walk((0, b("001000"), b("000100")))
        img = apply(ssq_translation(6, b("001100")), c3)
        assert verify_cycle(SSQ6, img, anchor=b("001100"), expected_len=3).ok

    def test_unverified_rejected(self):
        with pytest.raises(Unverified):
            apply(xor_mask(Family.SSQ, 6, 0), Walk((0, 1, 3, 2)))
        with pytest.raises(Unverified):
            apply(identity(Family.SSQ, 6), Walk((0, 1, 3, 2)))


class TestNonAutomorphisms:
    def test_flipping_bit_two_breaks_bsq6(self):
        flip = xor_mask(Family.BSQ, 6, 0b000100)
        assert not verify_automorphism(BSQ6, flip, mode="exhaustive")

    def test_flipping_bit_two_breaks_an_edge(self):
        # b = 0 -> 1 needs a even, so the image of this edge steps b the wrong way
        assert BSQ6.adjacent(0, b("010100"))
        assert not BSQ6.adjacent(b("000100"), b("010000"))

    @pytest.mark.parametrize("bit, preserved", [(0, True), (1, True), (2, False), (3, True), (4, False), (5, True)])
    def test_single_bit_flips(self, bit, preserved):
        flip = xor_mask(Family.BSQ, 6, 1 << bit)
        assert verify_automorphism(BSQ6, flip, mode="exhaustive") is preserved

    def test_bit_zero_flip_by_brute_force(self):
        vs = BSQ6.vertices()
        assert all(BSQ6.adjacent(u, v) == BSQ6.adjacent(u ^ 1, v ^ 1) for u in vs for v in vs)

    def test_sampled_mode_catches_it(self):
        flip = xor_mask(Family.BSQ, 10, 0b0000000100)
        assert not verify_automorphism(BSQ10, flip, mode="sampled", count=10_000)

    def test_non_bijection(self):
        aut = xor_mask(Family.SSQ, 6, 0)
        squash = type(aut)(**{**aut.__dict__, "suffix_table": (0, 0, 2, 3)})
        assert not verify_automorphism(SSQ6, squash)


def test_inverse_round_trip():
    rng = np.random.default_rng(5)
    for u in rng.choice(BSQ10.vertices(), size=8, replace=False):
        aut = translation(Family.BSQ, 10, int(u))
        inv = aut.inverse()
        assert inv.map_list(aut.map_list(BSQ10.vertices())) == BSQ10.vertices()


@given(st.integers(0, 1023))
@settings(max_examples=25, deadline=None)
def test_bsq10_translation_sends_vertex_to_zero(u):
    aut = bsq_translation(10, u)
    assert aut(u) == 0
    arr = aut.map_array(np.arange(1024))
    assert sorted(arr.tolist()) == list(range(1024))


def test_sampled_at_n10():
    rng = np.random.default_rng(11)
    for g, make in ((SSQ10, ssq_translation), (BSQ10, bsq_translation)):
        for u in rng.choice(g.vertices(), size=8, replace=False):
            aut = make(10, int(u))
            assert verify_automorphism(g, aut, mode="sampled", count=10_000, seed=int(u))
