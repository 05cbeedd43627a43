"""Base-cycle asset: validated table rows and n = 6 prefix-edge cycles.

The asset is a JSON document::

    {"version": 1,
     "entries": [{"family": "SSQ", "n": 6, "kind": "table", "key": "3",
                  "vertices": ["000000", ...], "repaired": false}, ...]}

``table`` entries hold one cycle through 000000 per length. A printed row
that fails mechanical verification is replaced by a cycle of the same length
found by :func:`cubecycle.oracle.find_cycle_dfs` and flagged ``repaired``.
``cycle16``/``cycle32`` entries hold, for each neighbour ``v`` of 000000
across the prefix group, a cycle starting ``000000, v`` with exactly one edge
inside each subcube (keyed by ``v``).

The checked-in copy lives next to this module; ``CUBECYCLE_ASSETS`` points
the loader somewhere else.
"""

from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .errors import AssetError
from .tables import BSQ6_TABLE, SSQ6_TABLE, parse_row
from .topology import CubeGraph, Family, label_text
from .walk import Walk

log = logging.getLogger(__name__)

ASSET_ENV = "CUBECYCLE_ASSETS"
ASSET_NAME = "base_cycles.json"
FORMAT_VERSION = 1

PRINTED_TABLES = {Family.SSQ: SSQ6_TABLE, Family.BSQ: BSQ6_TABLE}
EDGE_CYCLE_KIND = {Family.SSQ: "cycle16", Family.BSQ: "cycle32"}


@dataclass(frozen=True)
class TableRowCheck:
    family: Family
    length: int
    ok: bool
    violations: tuple[str, ...]


def check_printed_tables() -> list[TableRowCheck]:
    """Verify every printed row as a cycle of its stated length through 000000."""
    from .oracle import verify_cycle

    out = []
    for family, table in PRINTED_TABLES.items():
        g = CubeGraph(family, 6)
        for l, row in table.items():
            w = Walk.from_texts(parse_row(row), 6)
            rep = verify_cycle(g, w, anchor=0, expected_len=l)
            kinds = tuple(f"{v.kind}{list(v.where)}" for v in rep.violations)
            out.append(TableRowCheck(family, l, rep.ok, kinds))
    return out


def prefix_edge_neighbors(family: Family) -> list[int]:
    """Neighbours of 000000 in the prefix group of the n = 6 graph."""
    g = CubeGraph(family, 6)
    return [v for v in g.neighbors(0) if v >> 2]


def build_assets() -> dict:
    """Rebuild the asset document from the printed tables and the oracle.

    Raises :class:`AssetError` if some required cycle cannot be found.
    """
    from . import oracle

    entries = []
    for check in check_printed_tables():
        g = CubeGraph(check.family, 6)
        row = parse_row(PRINTED_TABLES[check.family][check.length])
        if check.ok:
            texts, repaired = row, False
        else:
            found = oracle.find_cycle_dfs(g, 0, check.length)
            if found is None or not oracle.verify_cycle(g, found, 0, check.length).ok:
                raise AssetError(
                    f"no {check.length}-cycle through 000000 in {g.name}: printed row "
                    f"fails ({', '.join(check.violations)}) and search found nothing"
                )
            log.info("repaired %s row C_%d: %s", g.name, check.length, ", ".join(check.violations))
            texts, repaired = found.texts(6), True
        entries.append(_entry(check.family, "table", str(check.length), texts, repaired))
    for family in (Family.SSQ, Family.BSQ):
        g = CubeGraph(family, 6)
        for v in prefix_edge_neighbors(family):
            found = oracle.find_subcube_cycle(g, 0, v)
            if found is None or not oracle.verify_cycle(g, found, subcube_constraint=1).ok:
                raise AssetError(f"no subcube-transversal cycle through 000000-{g.text(v)} in {g.name}")
            entries.append(_entry(family, EDGE_CYCLE_KIND[family], g.text(v), found.texts(6), False))
    return {"version": FORMAT_VERSION, "entries": entries}


def _entry(family: Family, kind: str, key: str, texts: list[str], repaired: bool) -> dict:
    return {
        "family": family.value,
        "n": 6,
        "kind": kind,
        "key": key,
        "vertices": list(texts),
        "repaired": repaired,
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def write_assets(directory: str | Path, doc: dict | None = None) -> Path:
    path = Path(directory) / ASSET_NAME
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(doc if doc is not None else build_assets()))
    return path


def asset_path() -> Path:
    override = os.environ.get(ASSET_ENV)
    if override:
        p = Path(override)
        return p / ASSET_NAME if p.is_dir() else p
    return Path(str(resources.files("cubecycle") / "data" / ASSET_NAME))


class AssetStore:
    """Read-only lookup over a loaded, verified asset document."""

    def __init__(self, doc: dict):
        self.doc = doc
        self._cycles: dict[tuple[Family, int, str, str], tuple[int, ...]] = {}
        self._repaired: dict[tuple[Family, int, str, str], bool] = {}
        for e in doc.get("entries", ()):
            key = (Family.coerce(e["family"]), int(e["n"]), e["kind"], str(e["key"]))
            self._cycles[key] = tuple(int(t, 2) for t in e["vertices"])
            self._repaired[key] = bool(e["repaired"])

    def cycle(self, family: Family, n: int, kind: str, key: str) -> tuple[int, ...]:
        try:
            return self._cycles[(family, n, kind, key)]
        except KeyError:
            raise AssetError(f"asset has no {family.value}_{n} {kind} entry {key!r}") from None

    def table_row(self, family: Family, l: int) -> tuple[int, ...]:
        return self.cycle(family, 6, "table", str(l))

    def repaired_rows(self, family: Family) -> list[int]:
        return sorted(int(k[3]) for k, r in self._repaired.items() if r and k[0] is family and k[2] == "table")

    def verify(self) -> None:
        from .oracle import verify_cycle

        for (family, n, kind, key), vs in self._cycles.items():
            g = CubeGraph(family, n)
            if kind == "table":
                rep = verify_cycle(g, vs, anchor=0, expected_len=int(key))
            else:
                rep = verify_cycle(g, vs, anchor=0, subcube_constraint=1)
                if vs[:2] != (0, int(key, 2)):
                    raise AssetError(f"{kind} entry {key} does not start with its edge")
            if not rep.ok:
                raise AssetError(f"asset entry {family.value}_{n} {kind} {key} fails: {rep.as_dict()}")
        for family, table in PRINTED_TABLES.items():
            for l in table:
                self.table_row(family, l)
        for family, kind in EDGE_CYCLE_KIND.items():
            for v in prefix_edge_neighbors(family):
                self.cycle(family, 6, kind, label_text(v, 6))


@lru_cache(maxsize=4)
def _load(path: str) -> AssetStore:
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, ValueError) as exc:
        raise AssetError(f"cannot read asset {path}: {exc}") from exc
    store = AssetStore(doc)
    store.verify()
    return store


def load_assets() -> AssetStore:
    return _load(str(asset_path()))
