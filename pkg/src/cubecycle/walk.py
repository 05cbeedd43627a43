"""Paths and cycles as vertex sequences, plus the two-cycle splice."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import EdgeNotShared, OverlapBeyondEdge
from .topology import label_text, parse_label


@dataclass(frozen=True)
class Walk:
    """An ordered vertex sequence.

    A closed walk (cycle) does not repeat its first vertex at the end. Its
    length is the number of vertices; an open walk's length is its number
    of edges.
    """

    vertices: tuple[int, ...]
    closed: bool = True

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))

    @property
    def length(self) -> int:
        return len(self.vertices) if self.closed else len(self.vertices) - 1

    def __len__(self) -> int:
        return self.length

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __contains__(self, u: object) -> bool:
        return u in self.vertices

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        out = list(zip(vs, vs[1:]))
        if self.closed and len(vs) > 1:
            out.append((vs[-1], vs[0]))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return _edge_position(self.vertices, u, v) is not None

    def rotated_to(self, u: int) -> Walk:
        """Same cycle, starting at ``u``."""
        i = self.vertices.index(u)
        return Walk(self.vertices[i:] + self.vertices[:i], self.closed)

    def starting_with(self, u: int, v: int) -> Walk:
        """Same cycle, starting with the edge ``u -> v``."""
        return Walk(_orient(self.vertices, u, v), True)

    def texts(self, n: int) -> list[str]:
        return [label_text(u, n) for u in self.vertices]

    def to_json(self, n: int) -> str:
        return json.dumps(self.texts(n))

    def to_lines(self, n: int) -> str:
        return "".join(t + "\n" for t in self.texts(n))

    @classmethod
    def from_texts(cls, texts: Iterable[str], n: int, closed: bool = True) -> Walk:
        return cls(tuple(parse_label(t, n) for t in texts), closed)


def _edge_position(vs: Sequence[int], u: int, v: int) -> int | None:
    """Index ``i`` with ``{vs[i], vs[i+1 mod len]} == {u, v}``, if any."""
    m = len(vs)
    try:
        i = vs.index(u)
    except ValueError:
        return None
    if vs[(i + 1) % m] == v:
        return i
    if vs[i - 1] == v:
        return (i - 1) % m
    return None


def _orient(vs: Sequence[int], u: int, v: int) -> list[int]:
    """Rotate/reverse a cycle so that it reads ``u, v, ...``."""
    i = vs.index(u)
    m = len(vs)
    if vs[(i + 1) % m] == v:
        return list(vs[i:]) + list(vs[:i])
    if vs[i - 1] == v:
        rev = list(vs[i::-1]) + list(vs[:i:-1])
        return rev
    raise EdgeNotShared(f"{u}-{v} is not an edge of the cycle")


def splice_lists(c1: Sequence[int], c2: Sequence[int], u: int, v: int) -> list[int]:
    """``(c1 - uv) + (c2 - uv)`` without checks; c1's orientation is kept."""
    a = _orient(c1, u, v)  # u, v, ..., back to u
    b = _orient(c2, v, u)  # v, u, ..., back to v
    # walk c1 from v round to u, then c2 from u round to v
    return a[1:] + [a[0]] + b[2:]


def splice(c1: Walk, c2: Walk, e: tuple[int, int]) -> Walk:
    """Merge two cycles that share exactly the edge ``e`` into one cycle.

    The result has ``len(c1) + len(c2) - 2`` vertices and no longer uses ``e``.
    """
    u, v = e
    for c, name in ((c1, "c1"), (c2, "c2")):
        if not c.closed or not c.has_edge(u, v):
            raise EdgeNotShared(f"edge {u}-{v} is not on {name}")
    shared = set(c1.vertices) & set(c2.vertices)
    if shared != {u, v}:
        raise OverlapBeyondEdge(f"cycles share {len(shared)} vertices, expected only the edge ends")
    return Walk(tuple(splice_lists(c1.vertices, c2.vertices, u, v)), True)
