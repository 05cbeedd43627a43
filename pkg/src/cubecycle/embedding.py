"""Constructive cycle embedding in SSQ_n and BSQ_n.

Every construction first moves the relevant vertex to the all-zero label
with a verified translation, builds the cycle there, and maps it back.

Building blocks, from the bottom up:

* base cycles of every length through 000000 in SSQ_6 / BSQ_6, read from the
  validated asset;
* *transversal* cycles: for an edge ``xy``, a 16-cycle (SSQ) or 32-cycle
  (BSQ) through ``xy`` with exactly one edge inside every subcube. For an
  edge inside a subcube the cycle visits the subcubes along a fixed prefix
  sequence and bounces between the suffixes of ``x`` and ``y``;
* Hamiltonian cycles through a given edge, by induction on ``n``: take the
  transversal cycle and splice in a Hamiltonian cycle of every subcube
  through its one inner edge;
* cycles of any legal length through any vertex: a shorter cycle in the
  home subcube, spliced with a transversal cycle, with ``t`` of the other
  subcubes expanded into Hamiltonian detours. Each expansion adds
  ``|subcube| - 2`` vertices, which makes the reachable lengths contiguous.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Sequence

from .assets import EDGE_CYCLE_KIND, load_assets
from .automorphisms import translation
from .errors import (
    DimensionTooSmall,
    LengthOutOfRange,
    NotAnEdge,
    OddLength,
)
from .topology import GROUP_NEIGHBORS, GROUP_VALUES, CubeGraph, Family, label_text
from .walk import Walk, _orient, splice_lists

log = logging.getLogger(__name__)

# Prefix orders of the transversal cycles, per edge case, read off the
# explicit cycles for an edge at the all-zero vertex.
SSQ_PREFIX_ORDERS = {
    "low": (0b0000, 0b1111, 0b1110, 0b1101, 0b1100, 0b0011, 0b0010, 0b0001),
    "full": (0b0000, 0b0001, 0b0010, 0b0011, 0b1100, 0b1101, 0b1110, 0b1111),
    "suffix": (0b0000, 0b0001, 0b0010, 0b0011, 0b1100, 0b1101, 0b1110, 0b1111),
}
BSQ_PREFIX_ORDERS = {
    "b-fixed": (
        0b0000, 0b1101, 0b1001, 0b0101, 0b0001, 0b1110, 0b1010, 0b0110,
        0b0010, 0b1111, 0b1011, 0b0111, 0b0011, 0b1100, 0b1000, 0b0100,
    ),
    "b-moved": (
        0b0000, 0b0100, 0b1000, 0b1100, 0b1011, 0b1111, 0b0011, 0b0111,
        0b0010, 0b1110, 0b1010, 0b0110, 0b0001, 0b1101, 0b1001, 0b0101,
    ),
    "suffix": (
        0b0000, 0b0100, 0b1000, 0b1100, 0b0011, 0b0111, 0b1011, 0b1111,
        0b0010, 0b0110, 0b1010, 0b1110, 0b0001, 0b0101, 0b1001, 0b1101,
    ),
}


def _graph(family: Family | str, n: int, min_n: int = 2) -> CubeGraph:
    g = CubeGraph(Family.coerce(family), n)
    if n < min_n:
        raise DimensionTooSmall(f"{g.name}: this construction needs n >= {min_n}")
    return g


def _edge(g: CubeGraph, e: Sequence[int | str]) -> tuple[int, int]:
    x, y = (g.validate(t) for t in e)
    if not g._adj(x, y):
        raise NotAnEdge(f"{g.text(x)} and {g.text(y)} are not adjacent in {g.name}")
    return x, y


def _pull_back(g: CubeGraph, anchor: int, cycle: Sequence[int]) -> list[int]:
    """Map a cycle built at the all-zero vertex back to ``anchor``."""
    if anchor == 0:
        return list(cycle)
    return translation(g.family, g.n, anchor).inverse().map_list(cycle)


def _transversal_length(family: Family) -> int:
    return 2 * len(GROUP_VALUES[family])


# -- base cycles ---------------------------------------------------------


def _check_length(g: CubeGraph, l: int) -> None:
    lo = 3 if g.family is Family.SSQ else 4
    if g.family is Family.BSQ and l % 2:
        raise OddLength(f"{g.name} is bipartite; no cycle of odd length {l}")
    if not lo <= l <= g.order:
        raise LengthOutOfRange(f"{g.name}: l must lie in [{lo}, {g.order}], got {l}")


def ssq6_base_cycle(l: int) -> Walk:
    g = CubeGraph(Family.SSQ, 6)
    _check_length(g, l)
    return Walk(load_assets().table_row(Family.SSQ, l), True)


def bsq6_base_cycle(l: int) -> Walk:
    g = CubeGraph(Family.BSQ, 6)
    _check_length(g, l)
    return Walk(load_assets().table_row(Family.BSQ, l), True)


# -- transversal cycles --------------------------------------------------


def _inner_case(family: Family, g: CubeGraph, v: int) -> str:
    """Pick the prefix order for an inner edge ``(0, v)``."""
    if v < 4:
        return "suffix"
    cls = g.classify_edge(0, v)
    if family is Family.SSQ:
        return "full" if cls.delta == 0b1111 else "low"
    return "b-fixed" if cls.delta & 0b11 == 0 else "b-moved"


@lru_cache(maxsize=64)
def _prefix_cycle_through(family: Family, d: int) -> tuple[int, ...]:
    """Hamiltonian cycle of the prefix graph starting ``0000, d`` (deterministic DFS)."""
    verts = GROUP_VALUES[family]
    table = GROUP_NEIGHBORS[family]
    path = [0, d]

    def extend() -> bool:
        if len(path) == len(verts):
            return 0 in table[path[-1]]
        for h in table[path[-1]]:
            if h not in path:
                path.append(h)
                if extend():
                    return True
                path.pop()
        return False

    if not extend():  # pragma: no cover - the prefix graphs are Hamiltonian
        raise RuntimeError(f"no Hamiltonian prefix cycle through 0000-{d:04b}")
    return tuple(path)


def _bounce(g: CubeGraph, prefixes: Sequence[int], s0: int, s1: int) -> list[int]:
    """Visit ``prefixes`` in order, taking the inner edge ``s0 s1`` in each subcube."""
    out = []
    for i, p in enumerate(prefixes):
        a, b = (s0, s1) if i % 2 == 0 else (s1, s0)
        out.append(g.lift(p, a))
        out.append(g.lift(p, b))
    return out


@lru_cache(maxsize=4096)
def _transversal_at_zero(family: Family, n: int, v: int) -> tuple[int, ...]:
    """Transversal cycle through edge ``(0, v)`` starting ``0, v``."""
    g = CubeGraph(family, n)
    m = n - 4
    if v >> m == 0:
        orders = SSQ_PREFIX_ORDERS if family is Family.SSQ else BSQ_PREFIX_ORDERS
        return tuple(_bounce(g, orders[_inner_case(family, g, v)], 0, v))
    if n == 6:
        return load_assets().cycle(family, 6, EDGE_CYCLE_KIND[family], label_text(v, 6))
    # cross edge: run the prefix cycle through (0000, d) and bounce on a fixed inner edge
    w = g.subgraph()._neighbors(0)[0]
    cyc = _bounce(g, _prefix_cycle_through(family, v >> m), w, 0)
    return tuple(_orient(cyc, 0, v))


def _transversal(family: Family, n: int, e: Sequence[int | str]) -> Walk:
    g = _graph(family, n, 6)
    x, y = _edge(g, e)
    phi = translation(family, n, x)
    base = _transversal_at_zero(g.family, n, phi(y))
    return Walk(tuple(_pull_back(g, x, base)), True)


def ssq_edge_cycle16(n: int, e: Sequence[int | str]) -> Walk:
    """16-cycle through edge ``e`` of SSQ_n using exactly one edge of each subcube.

    The cycle starts with ``e``'s endpoints in the given order.
    """
    return _transversal(Family.SSQ, n, e)


def bsq_edge_cycle32(n: int, e: Sequence[int | str]) -> Walk:
    """32-cycle through edge ``e`` of BSQ_n using exactly one edge of each subcube."""
    return _transversal(Family.BSQ, n, e)


def edge_cycle(family: Family | str, n: int, e: Sequence[int | str]) -> Walk:
    return _transversal(Family.coerce(family), n, e)


# -- Hamiltonian cycles through an edge ----------------------------------


def _ssq6_ham_at_zero(v: int) -> tuple[int, ...]:
    """Backtracking: Hamiltonian cycle of SSQ_6 through ``(0, v)``."""
    g = CubeGraph(Family.SSQ, 6)
    adj = g.adjacency_lists()
    total = g.order
    path = [0, v]
    used = {0, v}

    def free(z: int) -> int:
        return sum(1 for t in adj[z] if t not in used)

    def extend() -> bool:
        cur = path[-1]
        if len(path) == total:
            return 0 in adj[cur]
        for t in sorted((t for t in adj[cur] if t not in used), key=free):
            path.append(t)
            used.add(t)
            # every unused vertex still needs two ways in/out
            if all(free(z) + (z in adj[t]) + (z in adj[0]) >= 2 for z in adj if z not in used):
                if extend():
                    return True
            path.pop()
            used.discard(t)
        return False

    if not extend():  # pragma: no cover
        raise RuntimeError(f"no Hamiltonian cycle of SSQ_6 through 000000-{g.text(v)}")
    return tuple(path)


def _inner_edges(g: CubeGraph, cycle: Sequence[int]) -> list[tuple[int, int]]:
    """Edges of ``cycle`` lying inside a subcube, in cycle order."""
    shift = g.n - 4
    m = len(cycle)
    return [(cycle[i], cycle[(i + 1) % m]) for i in range(m) if cycle[i] >> shift == cycle[(i + 1) % m] >> shift]


def _subcube_ham(g: CubeGraph, a: int, b: int) -> list[int]:
    """Hamiltonian cycle of the subcube holding edge ``ab``, starting ``a, b``."""
    m = g.n - 4
    p = a >> m
    mask = (1 << m) - 1
    sub = _ham_cycle(g.family, m, a & mask, b & mask)
    return [g.lift(p, s) for s in sub]


@lru_cache(maxsize=4096)
def _ham_at_zero(family: Family, n: int, v: int) -> tuple[int, ...]:
    """Hamiltonian cycle of family_n through ``(0, v)``, starting ``0, v``."""
    if n == 2:
        return (0, v, 3, 3 ^ v)
    if family is Family.SSQ and n == 6:
        return _ssq6_ham_at_zero(v)
    g = CubeGraph(family, n)
    m = n - 4
    if v >> m == 0:
        # inner edge: Hamiltonian cycle of the home subcube through it,
        # then the transversal cycle of the next edge on that cycle
        home = list(_ham_cycle(family, m, 0, v))
        e0 = (home[1], home[2])
        cycle = list(_transversal(family, n, e0).vertices)
        home_edge = e0
    else:
        home, home_edge = None, None
        cycle = list(_transversal_at_zero(family, n, v))
    for a, b in _inner_edges(g, list(cycle)):
        if home_edge is not None and {a, b} == set(home_edge):
            cycle = splice_lists(cycle, home, a, b)
        else:
            cycle = splice_lists(cycle, _subcube_ham(g, a, b), a, b)
    return tuple(_orient(cycle, 0, v))


def _ham_cycle(family: Family, n: int, x: int, y: int) -> tuple[int, ...]:
    if x == 0:
        return _ham_at_zero(family, n, y)
    phi = translation(family, n, x)
    return tuple(phi.inverse().map_list(_ham_at_zero(family, n, phi(y))))


def ham_cycle_edge(family: Family | str, n: int, e: Sequence[int | str]) -> Walk:
    family = Family.coerce(family)
    g = _graph(family, n, 6 if family is Family.SSQ else 2)
    x, y = _edge(g, e)
    return Walk(_ham_cycle(family, n, x, y), True)


def ssq_ham_cycle_edge(n: int, e: Sequence[int | str]) -> Walk:
    """Hamiltonian cycle of SSQ_n containing edge ``e`` (starts with ``e``)."""
    return ham_cycle_edge(Family.SSQ, n, e)


def bsq_ham_cycle_edge(n: int, e: Sequence[int | str]) -> Walk:
    """Hamiltonian cycle of BSQ_n containing edge ``e`` (starts with ``e``)."""
    return ham_cycle_edge(Family.BSQ, n, e)


# -- cycles of every length through a vertex -----------------------------


def expansion_plan(family: Family | str, n: int, l: int) -> tuple[int, int]:
    """``(base_length, expansions)`` used to reach length ``l`` at n >= 10.

    ``base_length`` is the home-subcube cycle length and ``expansions`` the
    number of non-home subcubes turned into Hamiltonian detours; ``l =
    base_length + (T - 2) + expansions * (N - 2)`` with ``T`` the transversal
    length and ``N`` the subcube order. ``expansions == -1`` means the cycle
    stays inside the home subcube.
    """
    family = Family.coerce(family)
    g = CubeGraph(family, n)
    size = g.subgraph().order
    gain = _transversal_length(family) - 2
    if l <= size:
        return l, -1
    t = 0 if l <= size + gain else -(-(l - size - gain) // (size - 2))
    return l - gain - t * (size - 2), t


@lru_cache(maxsize=8192)
def _pancycle_at_zero(family: Family, n: int, l: int) -> tuple[int, ...]:
    if n == 2:
        return (0, 1, 3, 2)
    if n == 6:
        return load_assets().table_row(family, l)
    g = CubeGraph(family, n)
    base_len, t = expansion_plan(family, n, l)
    lo = 3 if family is Family.SSQ else 4
    if not lo <= base_len <= g.subgraph().order:  # pragma: no cover - plans are contiguous
        raise RuntimeError(f"{g.name}: no case covers l={l}")
    inner = _pancycle_at_zero(family, n - 4, base_len)  # prefix 0000: same integers
    if t < 0:
        return inner
    e0 = (inner[0], inner[1])
    transversal = _transversal(family, n, e0).vertices
    cycle = splice_lists(inner, transversal, *e0)
    shift = n - 4
    home = 0
    detours = [(a, b) for a, b in _inner_edges(g, transversal) if a >> shift != home]
    for a, b in detours[:t]:
        cycle = splice_lists(cycle, _subcube_ham(g, a, b), a, b)
    i = cycle.index(0)
    return tuple(cycle[i:] + cycle[:i])


def pancycle(family: Family | str, n: int, u: int | str, l: int) -> Walk:
    """Cycle of length ``l`` through ``u`` (any legal length of the family)."""
    family = Family.coerce(family)
    g = _graph(family, n, 6 if family is Family.SSQ else 2)
    u = g.validate(u)
    _check_length(g, l)
    return Walk(tuple(_pull_back(g, u, _pancycle_at_zero(family, n, l))), True)


def ssq_pancycle(n: int, u: int | str, l: int) -> Walk:
    return pancycle(Family.SSQ, n, u, l)


def bsq_bipancycle(n: int, u: int | str, l: int) -> Walk:
    return pancycle(Family.BSQ, n, u, l)
