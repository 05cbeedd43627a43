import json

import pytest

from cubecycle import assets
from cubecycle.errors import AssetError
from cubecycle.topology import Family


@pytest.fixture(scope="module")
def built():
    return assets.build_assets()


@pytest.fixture
def fresh_cache():
    assets._load.cache_clear()
    yield
    assets._load.cache_clear()


def test_printed_ssq_table_is_valid():
    rows = [r for r in assets.check_printed_tables() if r.family is Family.SSQ]
    assert len(rows) == 30
    assert all(r.ok for r in rows)


def test_printed_bsq_failures():
    rows = [r for r in assets.check_printed_tables() if r.family is Family.BSQ]
    assert len(rows) == 31
    assert sorted(r.length for r in rows if not r.ok) == [48, 52, 54]


def test_build_is_deterministic(built):
    assert assets.dumps(built) == assets.dumps(assets.build_assets())


def test_checked_in_copy_matches_build(built):
    shipped = assets.asset_path().read_text()
    assert shipped == assets.dumps(built)


def test_entry_counts(built):
    kinds = {}
    for e in built["entries"]:
        kinds[(e["family"], e["kind"])] = kinds.get((e["family"], e["kind"]), 0) + 1
    assert kinds == {
        ("SSQ", "table"): 30,
        ("BSQ", "table"): 31,
        ("SSQ", "cycle16"): 4,
        ("BSQ", "cycle32"): 4,
    }


def test_repaired_rows():
    store = assets.load_assets()
    assert store.repaired_rows(Family.SSQ) == []
    assert store.repaired_rows(Family.BSQ) == [48, 52, 54]


def test_prefix_edge_cycles_start_with_their_edge():
    store = assets.load_assets()
    for family, kind in assets.EDGE_CYCLE_KIND.items():
        for v in assets.prefix_edge_neighbors(family):
            vs = store.cycle(family, 6, kind, format(v, "06b"))
            assert vs[:2] == (0, v)


def test_missing_entry():
    with pytest.raises(AssetError):
        assets.load_assets().table_row(Family.SSQ, 99)


def test_env_override(tmp_path, monkeypatch, built, fresh_cache):
    assets.write_assets(tmp_path, built)
    monkeypatch.setenv(assets.ASSET_ENV, str(tmp_path))
    assert assets.asset_path() == tmp_path / assets.ASSET_NAME
    assert assets.load_assets().repaired_rows(Family.BSQ) == [48, 52, 54]


def test_corrupted_asset_is_rejected(tmp_path, monkeypatch, built, fresh_cache):
    doc = json.loads(assets.dumps(built))
    row = next(e for e in doc["entries"] if e["kind"] == "table" and e["key"] == "6")
    row["vertices"][2], row["vertices"][3] = row["vertices"][3], row["vertices"][2]
    path = tmp_path / "broken.json"
    path.write_text(assets.dumps(doc))
    monkeypatch.setenv(assets.ASSET_ENV, str(path))
    with pytest.raises(AssetError):
        assets.load_assets()


def test_unreadable_asset(tmp_path, monkeypatch, fresh_cache):
    monkeypatch.setenv(assets.ASSET_ENV, str(tmp_path / "nope.json"))
    with pytest.raises(AssetError):
        assets.load_assets()


def test_build_fails_loudly_without_search(monkeypatch):
    monkeypatch.setattr("cubecycle.oracle.find_cycle_dfs", lambda g, u, l: None)
    with pytest.raises(AssetError, match="48"):
        assets.build_assets()
