"""A cycle of every legal length through any vertex.

For n >= 10 a cycle in the home subcube is spliced with a transversal cycle,
and some of the other subcubes are expanded into Hamiltonian detours. The
expansion plan shows how each length is reached.
"""

from cubecycle import CubeGraph, bsq_bipancycle, expansion_plan, ssq_pancycle, verify_cycle

g = CubeGraph("SSQ", 10)
u = "0011000011"
for l in (3, 64, 65, 78, 79, 140, 256):
    w = ssq_pancycle(10, u, l)
    base, t = expansion_plan("SSQ", 10, l)
    where = "inside the home subcube" if t < 0 else f"base {base} + transversal + {t} detours"
    print(f"SSQ_10 l={l:3d}: {where:40s} verified={verify_cycle(g, w, anchor=g.validate(u), expected_len=l).ok}")

g = CubeGraph("BSQ", 10)
u = g.validate("1011011010")
bad = [l for l in range(4, 1025, 2) if not verify_cycle(g, bsq_bipancycle(10, u, l), anchor=u, expected_len=l).ok]
print(f"\nBSQ_10 at {g.text(u)}: all {len(range(4, 1025, 2))} even lengths built, failures: {bad}")

try:
    bsq_bipancycle(10, u, 7)
except ValueError as exc:
    print("odd length:", exc)
