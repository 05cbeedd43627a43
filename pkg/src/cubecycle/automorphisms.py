"""Group-structured relabelings used as vertex-transitivity witnesses.

Every map here acts group by group: target group ``j`` receives
``tables[j-1][group(u, perm[j-1])]`` and the suffix is pushed through
``suffix_table``. That covers the three kinds we need:

* ``xor-mask``: SSQ translation, ``u -> u ^ mask``;
* ``group-affine``: BSQ translation, a per-group map on ``(a, b) mod 4``;
* ``group-permutation``: exchanging two 4-bit groups.

Constructors return maps with ``verified=True`` only after
:func:`cubecycle.oracle.verify_automorphism` has accepted them.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import IndexOutOfRange, InvalidLabel, NotAnAutomorphism, Unverified
from .topology import CubeGraph, Family, check_dimension, group
from .walk import Walk

SAMPLED_EDGES = 10_000

_IDENTITY16 = tuple(range(16))
_IDENTITY4 = tuple(range(4))


@dataclass(frozen=True)
class Automorphism:
    family: Family
    n: int
    kind: str
    params: tuple
    perm: tuple[int, ...]
    tables: tuple[tuple[int, ...], ...]
    suffix_table: tuple[int, ...]
    verified: bool = False

    def __call__(self, u: int) -> int:
        out = self.suffix_table[u & 3]
        for j, (src, table) in enumerate(zip(self.perm, self.tables), start=1):
            out |= table[(u >> (4 * src - 2)) & 0xF] << (4 * j - 2)
        return out

    def map_array(self, labels) -> np.ndarray:
        arr = np.asarray(labels, dtype=np.int64)
        out = np.asarray(self.suffix_table, dtype=np.int64)[arr & 3]
        for j, (src, table) in enumerate(zip(self.perm, self.tables), start=1):
            out |= np.asarray(table, dtype=np.int64)[(arr >> (4 * src - 2)) & 0xF] << (4 * j - 2)
        return out

    def map_list(self, labels) -> list[int]:
        return [self(u) for u in labels]

    def inverse(self) -> Automorphism:
        k = len(self.perm)
        perm = [0] * k
        tables: list[tuple[int, ...]] = [()] * k
        for j, (src, table) in enumerate(zip(self.perm, self.tables), start=1):
            inv = [0] * 16
            for g, h in enumerate(table):
                inv[h] = g
            perm[src - 1] = j
            tables[src - 1] = tuple(inv)
        sinv = [0] * 4
        for g, h in enumerate(self.suffix_table):
            sinv[h] = g
        return dataclasses.replace(
            self,
            kind=self.kind,
            params=("inverse",) + self.params,
            perm=tuple(perm),
            tables=tuple(tables),
            suffix_table=tuple(sinv),
        )

    def describe(self) -> dict:
        return {
            "family": self.family.value,
            "n": self.n,
            "kind": self.kind,
            "params": [list(p) if isinstance(p, tuple) else p for p in self.params],
            "verified": self.verified,
        }


def identity(family: Family | str, n: int) -> Automorphism:
    k = check_dimension(n)
    return Automorphism(
        Family.coerce(family), n, "identity", (),
        tuple(range(1, k + 1)), (_IDENTITY16,) * k, _IDENTITY4,
    )


def _verified(aut: Automorphism) -> Automorphism:
    from .oracle import verify_automorphism

    g = CubeGraph(aut.family, aut.n)
    if g.n <= 6:
        ok = verify_automorphism(g, aut, mode="exhaustive")
    else:
        ok = verify_automorphism(g, aut, mode="sampled", count=SAMPLED_EDGES)
    if not ok:
        raise NotAnAutomorphism(f"{aut.kind} {aut.params} does not preserve adjacency of {g.name}")
    return dataclasses.replace(aut, verified=True)


def xor_mask(family: Family | str, n: int, mask: int) -> Automorphism:
    """Unverified XOR relabeling ``u -> u ^ mask``."""
    k = check_dimension(n)
    tables = tuple(tuple(g ^ group(mask, j) for g in range(16)) for j in range(1, k + 1))
    return Automorphism(
        Family.coerce(family), n, "xor-mask", (mask,),
        tuple(range(1, k + 1)), tables, tuple(s ^ (mask & 3) for s in range(4)),
    )


@lru_cache(maxsize=4096)
def ssq_translation(n: int, u: int) -> Automorphism:
    """Verified map ``v -> v ^ u`` on SSQ_n; sends ``u`` to the all-zero label."""
    g = CubeGraph(Family.SSQ, n)
    if not g.contains(u):
        raise InvalidLabel(f"{u!r} is not a vertex of {g.name}")
    return _verified(xor_mask(Family.SSQ, n, u))


def _affine_table(a_u: int, b_u: int) -> tuple[int, ...]:
    out = []
    for g in range(16):
        a, b = g >> 2, g & 3
        if a_u & 1:
            a2, b2 = (a - a_u) % 4, (b_u - b) % 4
        else:
            a2, b2 = (a - a_u) % 4, (b - b_u) % 4
        out.append((a2 << 2) | b2)
    return tuple(out)


@lru_cache(maxsize=4096)
def bsq_translation(n: int, u: int) -> Automorphism:
    """Verified per-group affine map on BSQ_n sending ``u`` to the all-zero label.

    For each group with values ``(a_u, b_u)`` of ``u``: ``(a, b) -> (a - a_u,
    b - b_u)`` when ``a_u`` is even and ``(a - a_u, b_u - b)`` when it is odd,
    all mod 4. The odd case reflects ``b`` because moving ``a`` by an odd
    amount flips the sign in the ``b`` rule. The suffix is XORed with ``u``'s.
    """
    g = CubeGraph(Family.BSQ, n)
    if not g.contains(u):
        raise InvalidLabel(f"{u!r} is not a vertex of {g.name}")
    params, tables = [], []
    for j in range(1, g.k + 1):
        gu = group(u, j)
        a_u, b_u = gu >> 2, gu & 3
        params.append((a_u, b_u, bool(a_u & 1)))
        tables.append(_affine_table(a_u, b_u))
    aut = Automorphism(
        Family.BSQ, n, "group-affine", tuple(params) + ((u & 3),),
        tuple(range(1, g.k + 1)), tuple(tables), tuple(s ^ (u & 3) for s in range(4)),
    )
    return _verified(aut)


def translation(family: Family | str, n: int, u: int) -> Automorphism:
    if Family.coerce(family) is Family.SSQ:
        return ssq_translation(n, u)
    return bsq_translation(n, u)


@lru_cache(maxsize=256)
def group_swap(n: int, j: int, j2: int, family: Family | str = Family.SSQ) -> Automorphism:
    """Verified relabeling exchanging the bit blocks of groups ``j`` and ``j2``."""
    k = check_dimension(n)
    if not (1 <= j <= k and 1 <= j2 <= k):
        raise IndexOutOfRange(f"group indices must lie in 1..{k}, got {j} and {j2}")
    perm = list(range(1, k + 1))
    perm[j - 1], perm[j2 - 1] = j2, j
    aut = Automorphism(
        Family.coerce(family), n, "group-permutation", (j, j2),
        tuple(perm), (_IDENTITY16,) * k, _IDENTITY4,
    )
    return _verified(aut)


def apply(aut: Automorphism, w: Walk) -> Walk:
    if not aut.verified:
        raise Unverified(f"{aut.kind} {aut.params} has not been verified")
    return Walk(tuple(aut.map_list(w.vertices)), w.closed)
