"""Hamiltonian cycles through any given edge, built by induction on n.

The transversal cycle through the edge visits every subcube once; a
Hamiltonian cycle of each subcube is spliced in along its single edge.
"""

import random

from cubecycle import CubeGraph, ham_cycle_edge, verify_cycle

rng = random.Random(0)
for family, n in (("SSQ", 6), ("BSQ", 6), ("SSQ", 10), ("BSQ", 10), ("BSQ", 14)):
    g = CubeGraph(family, n)
    x = rng.choice(g.vertices())
    y = rng.choice(g.neighbors(x))
    w = ham_cycle_edge(family, n, (x, y))
    ok = verify_cycle(g, w, expected_len=g.order).ok and w.has_edge(x, y)
    print(f"{g.name}: edge {g.text(x)}-{g.text(y)} -> cycle on {w.length} vertices, verified={ok}")
