"""Independent checks and brute-force search.

Nothing here trusts the constructions in :mod:`cubecycle.embedding`: walks
are re-checked edge by edge, automorphisms are checked against adjacency
directly, and the searches are exhaustive so a ``None`` answer is a proof of
non-existence at the sizes they accept.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .errors import LengthOutOfRange, TooLarge, TooLargeForExhaustive
from .topology import GROUP_NEIGHBORS, CubeGraph, Family, label_text
from .walk import Walk

#: Largest graph searched or analysed exhaustively.
EXHAUSTIVE_CAP = 1 << 12
#: Largest graph handed to the Hamiltonian path search.
HAM_PATH_CAP = 1 << 6
COUNT_CAP = 1 << 20


# -- cycle verification --------------------------------------------------


@dataclass(frozen=True)
class Violation:
    kind: str
    where: tuple = ()
    detail: str = ""

    def as_dict(self) -> dict:
        return {"kind": self.kind, "where": list(self.where), "detail": self.detail}


@dataclass
class VerificationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}

    def as_dict(self) -> dict:
        return {"ok": self.ok, "violations": [v.as_dict() for v in self.violations]}


def verify_cycle(
    g: CubeGraph,
    w: Walk | Sequence[int],
    anchor: int | None = None,
    expected_len: int | None = None,
    subcube_constraint: int | None = None,
    adjacent: Callable[[int, int], bool] | None = None,
) -> VerificationReport:
    """Check that ``w`` is a cycle of ``g``; failures are reported, never raised.

    ``adjacent`` defaults to the graph's unrolled rule; pass
    ``g.recursive_adjacent`` for a second opinion.
    """
    if not isinstance(w, Walk):
        w = Walk(tuple(w), True)
    vs = w.vertices
    out: list[Violation] = []
    if not w.closed:
        out.append(Violation("NotClosed", (), "walk is open"))
    if len(vs) < 3:
        out.append(Violation("WrongLength", (len(vs),), "a cycle needs at least 3 vertices"))
    bad = [i for i, u in enumerate(vs) if not g.contains(u)]
    for i in bad:
        out.append(Violation("InvalidVertex", (i,), f"{vs[i]!r} is not a vertex of {g.name}"))
    adj = adjacent if adjacent is not None else g._adj
    if not bad:
        m = len(vs)
        pairs = m if w.closed else m - 1
        for i in range(pairs):
            a, b = vs[i], vs[(i + 1) % m]
            if not adj(a, b):
                out.append(Violation("NotAdjacent", (i,), f"{g.text(a)} -/- {g.text(b)}"))
    first: dict[int, int] = {}
    for i, u in enumerate(vs):
        if u in first:
            out.append(Violation("Repeat", (first[u], i), f"{label_text(u, g.n)} repeats"))
        else:
            first[u] = i
    if expected_len is not None and len(vs) != expected_len:
        out.append(Violation("WrongLength", (len(vs),), f"expected {expected_len}"))
    if anchor is not None and anchor not in first:
        out.append(Violation("MissingAnchor", (anchor,), f"{label_text(anchor, g.n)} not on walk"))
    if subcube_constraint is not None and not bad:
        shift = g.n - 4
        counts = {p: 0 for p in g.subcube_ids}
        for a, b in w.edges():
            if a >> shift == b >> shift:
                counts[a >> shift] += 1
        for p, c in counts.items():
            if c != subcube_constraint:
                out.append(Violation("SubcubeEdgeCount", (p, c), f"subcube {p:04b} holds {c} edges"))
    return VerificationReport(out)


# -- automorphisms -------------------------------------------------------


def _group_adjacency(family: Family) -> np.ndarray:
    m = np.zeros((16, 16), dtype=bool)
    for gv, row in enumerate(GROUP_NEIGHBORS[family]):
        for h in row:
            m[gv, h] = True
    return m


def adjacent_array(g: CubeGraph, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Vectorized adjacency test over paired label arrays."""
    u = np.asarray(u, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64)
    d = u ^ v
    out = (d == 1) | (d == 2)
    gadj = _group_adjacency(g.family)
    for j in range(1, g.k + 1):
        shift = 4 * j - 2
        mask = np.int64(0xF << shift)
        only_j = ((d & ~mask) == 0) & ((d & mask) != 0)
        out |= only_j & gadj[(u >> shift) & 0xF, (v >> shift) & 0xF]
    return out


def neighbor_array(g: CubeGraph, labels: np.ndarray, choice: np.ndarray) -> np.ndarray:
    """The ``choice``-th neighbour (in :meth:`CubeGraph.neighbors` order) of each label."""
    labels = np.asarray(labels, dtype=np.int64)
    choice = np.asarray(choice, dtype=np.int64)
    table = np.zeros((16, 4), dtype=np.int64)
    for gv, row in enumerate(GROUP_NEIGHBORS[g.family]):
        if row:
            table[gv] = row
    out = labels ^ np.where(choice == 4 * g.k, 1, 2)
    for pos in range(g.k):
        j = g.k - pos
        shift = 4 * j - 2
        sel = choice // 4 == pos
        sel &= choice < 4 * g.k
        cur = (labels >> shift) & 0xF
        new = table[cur, choice % 4]
        moved = (labels & ~np.int64(0xF << shift)) | (new << shift)
        out = np.where(sel, moved, out)
    return out


def verify_automorphism(
    g: CubeGraph,
    aut,
    mode: str = "exhaustive",
    count: int = 10_000,
    seed: int = 0,
) -> bool:
    """True iff ``aut`` is a bijection of V(g) preserving adjacency on the checked pairs.

    ``exhaustive`` compares the full adjacency matrix with its image;
    ``sampled`` checks ``count`` random edges and ``count`` random pairs.
    """
    verts = np.asarray(g.vertices(), dtype=np.int64)
    images = aut.map_array(verts)
    if len(np.unique(images)) != len(verts):
        return False
    if not np.all(np.isin(images, verts, assume_unique=True)):
        return False
    if mode == "exhaustive":
        if g.order > EXHAUSTIVE_CAP:
            raise TooLargeForExhaustive(f"{g.name} has {g.order} vertices")
        uu, vv = np.meshgrid(verts, verts, indexing="ij")
        iu, iv = np.meshgrid(images, images, indexing="ij")
        return bool(np.array_equal(adjacent_array(g, uu, vv), adjacent_array(g, iu, iv)))
    if mode != "sampled":
        raise ValueError(f"unknown mode {mode!r}")
    rng = np.random.default_rng(seed)
    idx = rng.integers(0, len(verts), size=count)
    nbr_choice = rng.integers(0, g.n, size=count)
    tails = verts[idx]
    heads = neighbor_array(g, tails, nbr_choice)
    if not np.all(adjacent_array(g, aut.map_array(tails), aut.map_array(heads))):
        return False
    a = verts[rng.integers(0, len(verts), size=count)]
    b = verts[rng.integers(0, len(verts), size=count)]
    before = adjacent_array(g, a, b)
    after = adjacent_array(g, aut.map_array(a), aut.map_array(b))
    return bool(np.array_equal(before, after))


# -- exhaustive searches -------------------------------------------------


def _bfs(adj: dict[int, list[int]], src: int) -> dict[int, int]:
    dist = {src: 0}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def two_coloring(g: CubeGraph, adj: dict[int, list[int]] | None = None) -> dict[int, int] | None:
    """A proper 2-colouring of ``g`` or None if it has an odd cycle."""
    adj = adj if adj is not None else g.adjacency_lists()
    color: dict[int, int] = {}
    for s in adj:
        if s in color:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in color:
                    color[y] = color[x] ^ 1
                    queue.append(y)
                elif color[y] == color[x]:
                    return None
    return color


def find_cycle_dfs(g: CubeGraph, u: int, l: int) -> Walk | None:
    """A cycle of length exactly ``l`` through ``u``, or None if none exists.

    Depth-first over simple paths from ``u``, pruned by BFS distance back to
    ``u`` (and parity when ``g`` is bipartite). Successors are tried in
    Warnsdorff order, ties broken by the fixed neighbour order, so the
    answer is deterministic.
    """
    if g.order > EXHAUSTIVE_CAP:
        raise TooLarge(f"{g.name} is too large for exhaustive search")
    u = g.validate(u)
    if not 3 <= l <= g.order:
        raise LengthOutOfRange(f"l must lie in [3, {g.order}], got {l}")
    adj = g.adjacency_lists()
    dist = _bfs(adj, u)
    bipartite = two_coloring(g, adj) is not None
    if bipartite and l % 2:
        return None

    path = [u]
    on_path = {u}

    def free_degree(x: int) -> int:
        return sum(1 for y in adj[x] if y not in on_path)

    def extend() -> bool:
        cur = path[-1]
        if len(path) == l:
            return u in adj[cur]
        remaining = l - len(path) + 1  # edges still to place, closing edge included
        cands = [y for y in adj[cur] if y not in on_path]
        cands.sort(key=free_degree)  # stable: ties keep neighbour order
        for y in cands:
            r = remaining - 1
            if dist[y] > r:
                continue
            if bipartite and (r - dist[y]) % 2:
                continue
            path.append(y)
            on_path.add(y)
            if extend():
                return True
            path.pop()
            on_path.discard(y)
        return False

    return Walk(tuple(path), True) if extend() else None


def find_subcube_cycle(g: CubeGraph, u: int, v: int) -> Walk | None:
    """A cycle starting with edge ``uv`` that has exactly one edge inside each subcube.

    Such a cycle has ``2 * (number of subcubes)`` vertices, every vertex lies
    on one inner edge, and inner and cross edges alternate; the search
    follows that alternation and enters every subcube exactly once.
    """
    if g.order > EXHAUSTIVE_CAP:
        raise TooLarge(f"{g.name} is too large for exhaustive search")
    u, v = g.validate(u), g.validate(v)
    if not g._adj(u, v):
        return None
    shift = g.n - 4
    home = u >> shift
    total = 2 * len(g.subcube_ids)
    adj = g.adjacency_lists()
    first_inner = (v >> shift) == home
    path = [u, v]
    on_path = {u, v}
    seen = {home, v >> shift}

    def extend() -> bool:
        cur = path[-1]
        if len(path) == total:
            # the closing edge is inner iff the first edge was a cross edge
            return u in adj[cur] and ((cur >> shift) == home) != first_inner
        # edge i joins path[i] and path[i + 1]
        want_inner = ((len(path) - 1) % 2 == 0) == first_inner
        for y in adj[cur]:
            if y in on_path:
                continue
            cube = y >> shift
            inner = cube == (cur >> shift)
            if inner != want_inner:
                continue
            if not inner:
                last_cross = len(path) + 1 == total
                if cube == home and not first_inner:
                    if not last_cross:
                        continue
                elif cube in seen:
                    continue
            path.append(y)
            on_path.add(y)
            added = not inner and cube not in seen
            if added:
                seen.add(cube)
            if extend():
                return True
            path.pop()
            on_path.discard(y)
            if added:
                seen.discard(cube)
        return False

    return Walk(tuple(path), True) if extend() else None


def find_ham_path(g: CubeGraph, x: int, y: int) -> Walk | None:
    """A Hamiltonian path from ``x`` to ``y`` by backtracking, or None.

    Prunes on parity (bipartite graphs), on vertices left with too few free
    neighbours, and on the unvisited part becoming disconnected.
    """
    if g.order > HAM_PATH_CAP:
        raise TooLarge(f"{g.name} is too large for Hamiltonian path search")
    x, y = g.validate(x), g.validate(y)
    if x == y:
        return None
    adj = g.adjacency_lists()
    total = g.order
    color = two_coloring(g, adj)
    if color is not None:
        n0 = sum(1 for c in color.values() if c == 0)
        n1 = total - n0
        if color[x] == color[y]:
            if abs(n0 - n1) != 1 or (n0 > n1) != (color[x] == 0):
                return None
        elif n0 != n1:
            return None

    path = [x]
    on_path = {x}

    def free(z: int) -> int:
        return sum(1 for t in adj[z] if t not in on_path)

    def feasible(cur: int) -> bool:
        rest = [z for z in adj if z not in on_path]
        if not rest:
            return True
        for z in rest:
            need = 1 if z == y else 2
            if free(z) + (cur in adj[z]) < need:
                return False
        seen = {rest[0]}
        stack = [rest[0]]
        while stack:
            z = stack.pop()
            for t in adj[z]:
                if t not in on_path and t not in seen:
                    seen.add(t)
                    stack.append(t)
        return len(seen) == len(rest)

    def extend() -> bool:
        cur = path[-1]
        if len(path) == total:
            return cur == y
        cands = [t for t in adj[cur] if t not in on_path]
        cands.sort(key=free)
        for t in cands:
            if t == y and len(path) + 1 < total:
                continue
            path.append(t)
            on_path.add(t)
            if feasible(t) and extend():
                return True
            path.pop()
            on_path.discard(t)
        return False

    return Walk(tuple(path), False) if extend() else None


# -- whole-graph report --------------------------------------------------


@dataclass(frozen=True)
class GraphReport:
    vertex_count: int
    edge_count: int
    regular_degree: int | None
    bipartite: bool
    connected: bool
    girth: int | None = None
    diameter: int | None = None

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def _girth(adj: dict[int, list[int]]) -> int | None:
    best = None
    for root in adj:
        dist = {root: 0}
        parent = {root: None}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if best is not None and 2 * dist[x] + 1 >= best:
                break
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    c = dist[x] + dist[y] + 1
                    if best is None or c < best:
                        best = c
    return best


def _diameter(g: CubeGraph, adj: dict[int, list[int]]) -> int | None:
    index = {u: i for i, u in enumerate(adj)}
    rows, cols = [], []
    for u, nb in adj.items():
        rows.extend([index[u]] * len(nb))
        cols.extend(index[v] for v in nb)
    m = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(len(index),) * 2)
    dist = shortest_path(m, method="D", unweighted=True, directed=False)
    if np.isinf(dist).any():
        return None
    return int(dist.max())


def graph_report(g: CubeGraph) -> GraphReport:
    """Counts, regularity, bipartiteness, connectivity; girth and diameter up to 2^12."""
    if g.order > COUNT_CAP:
        raise TooLarge(f"{g.name} has {g.order} vertices, above the cap of {COUNT_CAP}")
    adj = g.adjacency_lists()
    degrees = {len(set(nb)) for nb in adj.values()}
    edge_count = sum(len(set(nb)) for nb in adj.values()) // 2
    connected = len(_bfs(adj, next(iter(adj)))) == len(adj)
    girth = diameter = None
    if g.order <= EXHAUSTIVE_CAP:
        girth = _girth(adj)
        diameter = _diameter(g, adj)
    return GraphReport(
        vertex_count=len(adj),
        edge_count=edge_count,
        regular_degree=degrees.pop() if len(degrees) == 1 else None,
        bipartite=two_coloring(g, adj) is not None,
        connected=connected,
        girth=girth,
        diameter=diameter,
    )


# -- sweeps --------------------------------------------------------------


def legal_lengths(g: CubeGraph) -> list[int]:
    if g.family is Family.SSQ:
        return list(range(3, g.order + 1))
    return list(range(4, g.order + 1, 2))


def pancyclicity_sweep(
    g: CubeGraph,
    vertices: str | int = "all",
    cross_check: bool = False,
    seed: int = 0,
    cross_check_count: int = 50,
) -> dict:
    """Construct and verify a cycle for every selected vertex and legal length.

    ``vertices`` is ``"all"`` or a sample size. With ``cross_check`` and a
    small enough graph, ``cross_check_count`` random ``(u, l)`` pairs are also
    confirmed by :func:`find_cycle_dfs`.
    """
    from .embedding import pancycle

    rng = random.Random(seed)
    pool = g.vertices()
    chosen = pool if vertices == "all" else sorted(rng.sample(pool, min(int(vertices), len(pool))))
    lengths = legal_lengths(g)
    failures = []
    passed = 0
    for u in chosen:
        for l in lengths:
            w = pancycle(g.family, g.n, u, l)
            rep = verify_cycle(g, w, anchor=u, expected_len=l)
            if rep.ok:
                passed += 1
            else:
                failures.append({"vertex": g.text(u), "length": l, **rep.as_dict()})
    summary = {
        "family": g.family.value,
        "n": g.n,
        "vertices_checked": len(chosen),
        "lengths_checked": len(lengths),
        "constructions": len(chosen) * len(lengths),
        "passed": passed,
        "failures": failures[:1],
        "failure_count": len(failures),
    }
    if cross_check and g.order <= EXHAUSTIVE_CAP:
        pairs = [(rng.choice(pool), rng.choice(lengths)) for _ in range(cross_check_count)]
        missing = []
        for u, l in pairs:
            w = find_cycle_dfs(g, u, l)
            if w is None or not verify_cycle(g, w, anchor=u, expected_len=l).ok:
                missing.append({"vertex": g.text(u), "length": l})
        summary["cross_checked"] = len(pairs)
        summary["cross_check_failures"] = missing
    return summary
