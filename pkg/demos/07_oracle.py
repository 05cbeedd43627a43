"""The brute-force oracle: exhaustive searches that back the constructions.

find_cycle_dfs answers "is there a cycle of length l through u" exactly for
small graphs; find_ham_path checks Hamiltonian paths between arbitrary pairs.
"""

import random

from cubecycle import CubeGraph, find_cycle_dfs, find_ham_path, pancyclicity_sweep, verify_cycle
from cubecycle.walk import Walk

ssq, bsq = CubeGraph("SSQ", 6), CubeGraph("BSQ", 6)
print("triangle in SSQ_6:", " ".join(find_cycle_dfs(ssq, 0, 3).texts(6)))
print("5-cycle in BSQ_6:", find_cycle_dfs(bsq, 0, 5))

rng = random.Random(1)
x, y = rng.sample(ssq.vertices(), 2)
p = find_ham_path(ssq, x, y)
print(f"Hamiltonian path {ssq.text(x)} -> {ssq.text(y)}: {p.length + 1} vertices")

broken = Walk((0, 0b000001, 0b000010, 0b000011))
print("\nrejecting a broken cycle:", verify_cycle(ssq, broken).as_dict())

summary = pancyclicity_sweep(bsq, vertices="all", cross_check=True, seed=3)
print("\nBSQ_6 sweep:", {k: summary[k] for k in ("vertices_checked", "lengths_checked", "passed", "cross_checked")})
