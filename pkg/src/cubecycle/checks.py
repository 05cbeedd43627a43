"""Named verification suites, shared by the CLI ``check`` command and the tests.

Each suite returns a JSON-ready summary with an ``ok`` flag and, on failure,
the first counterexample. Summaries contain no timings, so equal inputs give
byte-identical output.
"""

from __future__ import annotations

import random
from typing import Callable

from . import embedding, oracle
from .assets import check_printed_tables, load_assets
from .automorphisms import bsq_translation, group_swap, ssq_translation
from .errors import CubeCycleError, InvalidDimension
from .topology import CubeGraph, Family

SUITES: dict[str, Callable[..., dict]] = {}


def suite(name: str):
    def register(fn):
        SUITES[name] = fn
        return fn

    return register


def _summary(name: str, n: int, checks: int, failures: list, **extra) -> dict:
    return {
        "suite": name,
        "n": n,
        "checks": checks,
        "failed": len(failures),
        "first_failure": failures[0] if failures else None,
        "ok": not failures,
        **extra,
    }


def _edges(g: CubeGraph, sample: int | None, rng: random.Random) -> list[tuple[int, int]]:
    edges = g.materialize()
    if sample is None or sample >= len(edges):
        return edges
    return rng.sample(edges, sample)


def _need(n: int, ok: bool, what: str) -> None:
    if not ok:
        raise InvalidDimension(f"suite needs {what}, got n={n}")


@suite("tables")
def tables(n: int = 6, sample: int | None = None, seed: int = 0) -> dict:
    _need(n, n == 6, "n = 6")
    rows = check_printed_tables()
    store = load_assets()
    failures = []
    broken = {(r.family.value, r.length): list(r.violations) for r in rows if not r.ok}
    repaired = {
        (f.value, l) for f in (Family.SSQ, Family.BSQ) for l in store.repaired_rows(f)
    }
    if set(broken) != repaired:
        failures.append({"broken_rows": sorted(broken), "repaired_rows": sorted(repaired)})
    for f in (Family.SSQ, Family.BSQ):
        g = CubeGraph(f, 6)
        for l in oracle.legal_lengths(g):
            base = embedding._pancycle_at_zero(f, 6, l)
            rep = oracle.verify_cycle(g, base, anchor=0, expected_len=l)
            if not rep.ok:
                failures.append({"family": f.value, "length": l, **rep.as_dict()})
    repairs = [
        {"family": f, "length": l, "printed_violations": v} for (f, l), v in sorted(broken.items())
    ]
    return _summary("tables", n, len(rows), failures, repairs=repairs)


def _transversal_suite(name: str, family: Family, n: int, sample: int | None, seed: int) -> dict:
    _need(n, n >= 6, "n >= 6")
    g = CubeGraph(family, n)
    rng = random.Random(seed)
    if sample is None and n > 6:
        sample = 500
    edges = _edges(g, sample, rng)
    size = 2 * len(g.subcube_ids)
    failures = []
    for x, y in edges:
        w = embedding.edge_cycle(family, n, (x, y))
        rep = oracle.verify_cycle(g, w, expected_len=size, subcube_constraint=1)
        if not rep.ok or not w.has_edge(x, y):
            failures.append({"edge": [g.text(x), g.text(y)], **rep.as_dict()})
    return _summary(name, n, len(edges), failures, family=family.value)


@suite("lemma4")
def lemma4(n: int = 6, sample: int | None = None, seed: int = 0) -> dict:
    return _transversal_suite("lemma4", Family.SSQ, n, sample, seed)


@suite("lemma7")
def lemma7(n: int = 6, sample: int | None = None, seed: int = 0) -> dict:
    return _transversal_suite("lemma7", Family.BSQ, n, sample, seed)


@suite("lemma8")
def lemma8(n: int = 6, sample: int | None = None, seed: int = 0) -> dict:
    g = CubeGraph(Family.BSQ, n)
    rng = random.Random(seed)
    if sample is None and n > 6:
        sample = 100
    edges = _edges(g, sample, rng)
    failures = []
    for x, y in edges:
        w = embedding.bsq_ham_cycle_edge(n, (x, y))
        rep = oracle.verify_cycle(g, w, expected_len=g.order)
        if not rep.ok or not w.has_edge(x, y):
            failures.append({"edge": [g.text(x), g.text(y)], **rep.as_dict()})
    return _summary("lemma8", n, len(edges), failures, family="BSQ")


@suite("hamconn")
def hamconn(n: int = 6, sample: int | None = None, seed: int = 0) -> dict:
    _need(n, n == 6, "n = 6")
    g = CubeGraph(Family.SSQ, n)
    rng = random.Random(seed)
    vs = g.vertices()
    pairs = [tuple(rng.sample(vs, 2)) for _ in range(sample or 100)]
    failures = []
    adjacent_pairs = 0
    for x, y in pairs:
        adjacent_pairs += g._adj(x, y)
        p = oracle.find_ham_path(g, x, y)
        ok = (
            p is not None
            and p.vertices[0] == x
            and p.vertices[-1] == y
            and len(set(p.vertices)) == g.order
            and all(g._adj(a, b) for a, b in p.edges())
        )
        if not ok:
            failures.append({"pair": [g.text(x), g.text(y)]})
    return _summary(
        "hamconn", n, len(pairs), failures, family="SSQ", non_adjacent_pairs=len(pairs) - adjacent_pairs
    )


def _sweep_suite(name: str, family: Family, n: int, sample: int | None, seed: int) -> dict:
    g = CubeGraph(family, n)
    small = g.order <= 64
    if sample is None:
        sample = None if small else 16
    summary = oracle.pancyclicity_sweep(
        g, vertices="all" if sample is None else sample, cross_check=small, seed=seed
    )
    failures = list(summary.pop("failures"))
    failures += summary.get("cross_check_failures", [])
    summary.pop("family")
    summary.pop("n")
    return _summary(name, n, summary["constructions"], failures, family=family.value, **summary)


@suite("pancyclic")
def pancyclic(n: int = 6, sample: int | None = None, seed: int = 0) -> dict:
    _need(n, n >= 6, "n >= 6")
    return _sweep_suite("pancyclic", Family.SSQ, n, sample, seed)


@suite("bipancyclic")
def bipancyclic(n: int = 6, sample: int | None = None, seed: int = 0) -> dict:
    return _sweep_suite("bipancyclic", Family.BSQ, n, sample, seed)


@suite("automorphisms")
def automorphisms(n: int = 6, sample: int | None = None, seed: int = 0) -> dict:
    rng = random.Random(seed)
    failures = []
    checks = 0
    for family, make in ((Family.SSQ, ssq_translation), (Family.BSQ, bsq_translation)):
        g = CubeGraph(family, n)
        exhaustive = g.n <= 6
        us = g.vertices() if exhaustive else rng.sample(g.vertices(), sample or 8)
        for u in us:
            checks += 1
            try:
                aut = make(n, u)
            except CubeCycleError as exc:
                failures.append({"family": family.value, "vertex": g.text(u), "error": str(exc)})
                continue
            mode = "exhaustive" if exhaustive else "sampled"
            ok = aut(u) == 0 and oracle.verify_automorphism(g, aut, mode=mode, seed=rng.randrange(2**32))
            if not ok:
                failures.append({"family": family.value, "vertex": g.text(u)})
        k = g.k
        for j in range(1, k + 1):
            for j2 in range(j + 1, k + 1):
                checks += 1
                aut = group_swap(n, j, j2, family)
                mode = "exhaustive" if exhaustive else "sampled"
                if not oracle.verify_automorphism(g, aut, mode=mode, seed=rng.randrange(2**32)):
                    failures.append({"family": family.value, "swap": [j, j2]})
    return _summary("automorphisms", n, checks, failures)


def run_suite(name: str, n: int, sample: int | None = None, seed: int = 0) -> dict:
    return SUITES[name](n=n, sample=sample, seed=seed)
