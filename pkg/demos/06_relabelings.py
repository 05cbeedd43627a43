"""Relabelings that move any vertex to 000...0, and one that does not work.

Every construction is done at the all-zero vertex and moved with these maps,
so each map is checked against the adjacency rule before it is used.
"""

from cubecycle import CubeGraph, bsq_translation, group_swap, ssq_translation, verify_automorphism
from cubecycle.automorphisms import xor_mask

ssq = CubeGraph("SSQ", 6)
phi = ssq_translation(6, ssq.validate("001100"))
print("SSQ_6 XOR by 001100:", phi.describe(), "001000 ->", ssq.text(phi(0b001000)))

bsq = CubeGraph("BSQ", 6)
psi = bsq_translation(6, bsq.validate("010100"))
print("BSQ_6 translation of 010100:", psi.describe())
print("  exhaustively an automorphism:", verify_automorphism(bsq, psi, mode="exhaustive"))

swap = group_swap(10, 1, 2)
print("SSQ_10 group swap: 0011000000 ->", CubeGraph("SSQ", 10).text(swap(0b0011000000)))

print("\nflipping a single bit of every BSQ_6 label:")
for bit in range(6):
    ok = verify_automorphism(bsq, xor_mask("BSQ", 6, 1 << bit), mode="exhaustive")
    print(f"  bit {bit}: {'automorphism' if ok else 'breaks adjacency'}")
