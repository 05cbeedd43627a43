"""Simplified (SSQ_n) and balanced (BSQ_n) shuffle-cubes.

Labels are plain ints: bit ``i`` of the integer is ``u_i`` and the text form
is the ``n``-bit binary string written most significant bit first. With
``n = 4k + 2`` a label splits into ``k`` four-bit groups plus a two-bit
suffix::

    group k (prefix) | group k-1 | ... | group 1 | group 0 (suffix)
    u_{n-1}..u_{n-4}                               u_1 u_0

Group ``j >= 1`` occupies bits ``4j+1 .. 4j-2``. Two labels are adjacent iff
they differ in exactly one group and the group values are adjacent under the
family's group rule (``Q_2`` for the suffix). :meth:`CubeGraph.adjacent`
implements that unrolled rule; :meth:`CubeGraph.recursive_adjacent` follows
the subcube recursion literally and is kept independent of it so the two can
be cross-checked.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    DimensionTooSmall,
    InvalidDimension,
    InvalidLabel,
    InvalidSsqGroup,
    NotAnEdge,
    TooLarge,
    WrongLength,
)

#: XOR deltas of an SSQ group edge.
V00 = (0b1111, 0b0001, 0b0010, 0b0011)
SUFFIX_DELTAS = (0b01, 0b10)
MATERIALIZE_CAP = 1 << 20


class Family(str, enum.Enum):
    SSQ = "SSQ"
    BSQ = "BSQ"

    @classmethod
    def coerce(cls, value: Family | str) -> Family:
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).upper())
        except ValueError:
            raise ValueError(f"unknown family {value!r}; expected ssq or bsq") from None


def check_dimension(n: int) -> int:
    """Return ``k = (n - 2) / 4`` or raise if ``n`` is not ``2 mod 4``."""
    if not isinstance(n, int) or n < 2 or n % 4 != 2:
        raise InvalidDimension(f"n must be ≡ 2 (mod 4) and >= 2, got {n!r}")
    return (n - 2) // 4


def group_shift(j: int) -> int:
    return 0 if j == 0 else 4 * j - 2


def group(u: int, j: int) -> int:
    """Value of the j-th group of ``u`` (the 2-bit suffix for ``j = 0``)."""
    if j == 0:
        return u & 0b11
    return (u >> (4 * j - 2)) & 0xF


def set_group(u: int, j: int, value: int) -> int:
    if j == 0:
        return (u & ~0b11) | value
    shift = 4 * j - 2
    return (u & ~(0xF << shift)) | (value << shift)


def suffix(u: int, m: int) -> int:
    """The m-suffix ``u_{m-1} .. u_0``."""
    return u & ((1 << m) - 1)


def prefix4(n: int, u: int) -> int:
    if n < 6:
        raise DimensionTooSmall("prefix4 needs n >= 6")
    return u >> (n - 4)


def subcube_of(n: int, u: int) -> int:
    """Id of the (n-4)-dimensional subcube holding ``u``: its 4-bit prefix."""
    check_dimension(n)
    if n == 2:
        raise DimensionTooSmall("SSQ_2/BSQ_2 has no subcubes")
    return prefix4(n, u)


def groups(n: int, u: int) -> list[int]:
    """Group values from group k down to group 0; concatenating them gives ``u``."""
    k = check_dimension(n)
    return [group(u, j) for j in range(k, -1, -1)]


def label_text(u: int, n: int) -> str:
    return format(u, f"0{n}b")


def parse_label(text: str | int, n: int) -> int:
    if isinstance(text, int):
        if not 0 <= text < (1 << n):
            raise WrongLength(f"label {text} does not fit in {n} bits")
        return text
    text = text.strip()
    if len(text) != n:
        raise WrongLength(f"label {text!r} has length {len(text)}, expected {n}")
    if set(text) - {"0", "1"}:
        raise InvalidLabel(f"label {text!r} is not a binary string")
    return int(text, 2)


def _bsq_group_neighbors(g: int) -> tuple[int, ...]:
    a, b = g >> 2, g & 3
    sign = -1 if a & 1 else 1
    out = []
    for da in (1, -1):
        for db in (0, sign):
            out.append((((a + da) % 4) << 2) | ((b + db) % 4))
    return tuple(out)


def _ssq_group_ok(g: int) -> bool:
    return (g >> 3) == ((g >> 2) & 1)


#: Fixed-order group neighbour tables, indexed by group value.
GROUP_NEIGHBORS: dict[Family, tuple[tuple[int, ...], ...]] = {
    Family.SSQ: tuple(tuple(g ^ d for d in V00) if _ssq_group_ok(g) else () for g in range(16)),
    Family.BSQ: tuple(_bsq_group_neighbors(g) for g in range(16)),
}
_GROUP_NEIGHBOR_SETS = {f: tuple(frozenset(t) for t in tab) for f, tab in GROUP_NEIGHBORS.items()}
GROUP_VALUES: dict[Family, tuple[int, ...]] = {
    Family.SSQ: tuple(g for g in range(16) if _ssq_group_ok(g)),
    Family.BSQ: tuple(range(16)),
}


@dataclass(frozen=True)
class EdgeClass:
    """Where an edge lives: ``group`` is 0 for suffix edges.

    ``delta`` is the XOR of the two group values, so ``set_group(u, group,
    group(u, group) ^ delta) == v``. For BSQ group edges ``step`` records the
    mod-4 moves ``(da, db)`` of the two halves of the group, seen from ``u``.
    """

    group: int
    delta: int
    step: tuple[int, int] | None = None

    @property
    def kind(self) -> str:
        return "suffix" if self.group == 0 else "group"

    def apply(self, u: int) -> int:
        return set_group(u, self.group, group(u, self.group) ^ self.delta)


@dataclass(frozen=True)
class CubeGraph:
    family: Family
    n: int

    def __post_init__(self):
        object.__setattr__(self, "family", Family.coerce(self.family))
        check_dimension(self.n)

    @property
    def k(self) -> int:
        return (self.n - 2) // 4

    @property
    def name(self) -> str:
        return f"{self.family.value}_{self.n}"

    @cached_property
    def order(self) -> int:
        if self.family is Family.SSQ:
            return 1 << ((3 * self.n + 2) // 4)
        return 1 << self.n

    @property
    def subcube_ids(self) -> tuple[int, ...]:
        return GROUP_VALUES[self.family]

    def subgraph(self) -> CubeGraph:
        """The graph every subcube is a copy of."""
        if self.n < 6:
            raise DimensionTooSmall(f"{self.name} has no subcubes")
        return CubeGraph(self.family, self.n - 4)

    def lift(self, prefix: int, s: int) -> int:
        return (prefix << (self.n - 4)) | s

    def text(self, u: int) -> str:
        return label_text(u, self.n)

    # -- labels -----------------------------------------------------------

    def contains(self, u: int) -> bool:
        if not 0 <= u < (1 << self.n):
            return False
        if self.family is Family.SSQ:
            return all(_ssq_group_ok(group(u, j)) for j in range(1, self.k + 1))
        return True

    def validate(self, u: int | str) -> int:
        u = parse_label(u, self.n)
        if self.family is Family.SSQ:
            for j in range(self.k, 0, -1):
                if not _ssq_group_ok(group(u, j)):
                    raise InvalidSsqGroup(j, self.text(u))
        return u

    def vertices(self) -> list[int]:
        per_group = [GROUP_VALUES[self.family]] * self.k + [range(4)]
        out = []
        for gs in itertools.product(*per_group):
            u = 0
            for g in gs[:-1]:
                u = (u << 4) | g
            out.append((u << 2) | gs[-1])
        return out

    # -- adjacency --------------------------------------------------------

    def _adj(self, u: int, v: int) -> bool:
        d = u ^ v
        if d == 0:
            return False
        if d < 4:
            return d != 3
        if d & 3:
            return False
        j = (d.bit_length() + 1) // 4
        shift = 4 * j - 2
        if d & ((1 << shift) - 1):
            return False
        return ((v >> shift) & 0xF) in _GROUP_NEIGHBOR_SETS[self.family][(u >> shift) & 0xF]

    def adjacent(self, u: int, v: int) -> bool:
        return self._adj(self.validate(u), self.validate(v))

    def recursive_adjacent(self, u: int, v: int) -> bool:
        return _recursive_adjacent(self.family, self.n, self.validate(u), self.validate(v))

    def neighbors(self, u: int) -> list[int]:
        u = self.validate(u)
        return self._neighbors(u)

    def _neighbors(self, u: int) -> list[int]:
        table = GROUP_NEIGHBORS[self.family]
        out = []
        for j in range(self.k, 0, -1):
            shift = 4 * j - 2
            g = (u >> shift) & 0xF
            base = u & ~(0xF << shift)
            out.extend(base | (h << shift) for h in table[g])
        out.append(u ^ 0b01)
        out.append(u ^ 0b10)
        return out

    def classify_edge(self, u: int, v: int) -> EdgeClass:
        u, v = self.validate(u), self.validate(v)
        if not self._adj(u, v):
            raise NotAnEdge(f"{self.text(u)} and {self.text(v)} are not adjacent in {self.name}")
        d = u ^ v
        if d < 4:
            return EdgeClass(0, d)
        j = (d.bit_length() + 1) // 4
        g, h = group(u, j), group(v, j)
        step = None
        if self.family is Family.BSQ:
            da = 1 if (h >> 2) == ((g >> 2) + 1) % 4 else -1
            db = {0: 0, 1: 1, 3: -1}[((h & 3) - (g & 3)) % 4]
            step = (da, db)
        return EdgeClass(j, g ^ h, step)

    def subcube_of(self, u: int) -> int:
        return subcube_of(self.n, self.validate(u))

    # -- materialization --------------------------------------------------

    def materialize(self, cap: int = MATERIALIZE_CAP) -> list[tuple[int, int]]:
        if self.order > cap:
            raise TooLarge(f"{self.name} has {self.order} vertices, above the cap of {cap}")
        edges = [(u, v) for u in self.vertices() for v in self._neighbors(u) if u < v]
        edges.sort()
        return edges

    def adjacency_lists(self) -> dict[int, list[int]]:
        return {u: self._neighbors(u) for u in self.vertices()}


def _recursive_adjacent(family: Family, n: int, u: int, v: int) -> bool:
    if n == 2:
        return bin(u ^ v).count("1") == 1
    m = n - 4
    pu, pv = u >> m, v >> m
    su, sv = suffix(u, m), suffix(v, m)
    if pu == pv:
        return _recursive_adjacent(family, m, su, sv)
    if su != sv:
        return False
    if family is Family.SSQ:
        return (pu ^ pv) in V00
    # u_{n-2} is the low bit of the top pair; the pairs are read as integers mod 4
    a_u, b_u, a_v, b_v = pu >> 2, pu & 3, pv >> 2, pv & 3
    if (a_u & 1) == (a_v & 1):
        return False
    if a_v not in ((a_u + 1) % 4, (a_u - 1) % 4):
        return False
    sign = -1 if a_u & 1 else 1
    return b_v == b_u or b_v == (b_u + sign) % 4


def validate_label(family: Family | str, n: int, bits: str | int) -> int:
    return CubeGraph(Family.coerce(family), n).validate(bits)


# -- exports -------------------------------------------------------------


def to_edgelist(g: CubeGraph, cap: int = MATERIALIZE_CAP) -> str:
    return "".join(f"{g.text(u)} {g.text(v)}\n" for u, v in g.materialize(cap))


def to_dot(g: CubeGraph, cap: int = MATERIALIZE_CAP) -> str:
    lines = [f"graph {g.name} {{"]
    lines += [f'  "{g.text(u)}";' for u in g.vertices()]
    lines += [f'  "{g.text(u)}" -- "{g.text(v)}";' for u, v in g.materialize(cap)]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: CubeGraph, cap: int = MATERIALIZE_CAP) -> str:
    doc = {
        "family": g.family.value,
        "n": g.n,
        "vertices": [g.text(u) for u in g.vertices()],
        "edges": [[g.text(u), g.text(v)] for u, v in g.materialize(cap)],
    }
    return json.dumps(doc, indent=1) + "\n"
