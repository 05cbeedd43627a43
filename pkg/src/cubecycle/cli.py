"""Command-line front end.

Exit statuses: 0 success, 1 check failure, 2 usage error, 3 resource cap,
4 domain error, 5 internal verification failure. Stdout carries only data
(labels, edge lists) or one JSON document; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import assets, checks, embedding, oracle
from .automorphisms import group_swap, translation
from .errors import (
    AssetError,
    CubeCycleError,
    IndexOutOfRange,
    InvalidDimension,
    InvalidLabel,
    LengthOutOfRange,
    NotAnAutomorphism,
    NotAnEdge,
    OddLength,
    TooLarge,
)
from .topology import MATERIALIZE_CAP, CubeGraph, to_dot, to_edgelist, to_json
from .walk import Walk

EXIT_OK = 0
EXIT_CHECK = 1
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_DOMAIN = 4
EXIT_VERIFY = 5

# First match wins, so subclasses go before their bases.
_EXIT_CODES: list[tuple[type[BaseException], int]] = [
    (TooLarge, EXIT_CAP),
    (InvalidDimension, EXIT_USAGE),
    (InvalidLabel, EXIT_USAGE),
    (IndexOutOfRange, EXIT_USAGE),
    (LengthOutOfRange, EXIT_DOMAIN),
    (OddLength, EXIT_DOMAIN),
    (NotAnEdge, EXIT_DOMAIN),
    (AssetError, EXIT_CHECK),
    (NotAnAutomorphism, EXIT_VERIFY),
    (CubeCycleError, EXIT_VERIFY),
]


class VerificationFailed(Exception):
    pass


def _family(text: str) -> str:
    value = text.strip().upper()
    if value not in ("SSQ", "BSQ"):
        raise argparse.ArgumentTypeError(f"unknown family {text!r} (choose ssq or bsq)")
    return value


def _graph(args) -> CubeGraph:
    return CubeGraph(args.family, args.n)


def _emit_walk(g: CubeGraph, w: Walk, as_json: bool) -> None:
    sys.stdout.write(w.to_json(g.n) + "\n" if as_json else w.to_lines(g.n))


def _check_report(rep: oracle.VerificationReport) -> None:
    if not rep.ok:
        raise VerificationFailed(json.dumps(rep.as_dict()))
    print("verified", file=sys.stderr)


def _edge(g: CubeGraph, labels: list[str]) -> tuple[int, int]:
    return g.validate(labels[0]), g.validate(labels[1])


# -- commands -------------------------------------------------------------


def cmd_gen(args) -> int:
    g = _graph(args)
    writer = {"edgelist": to_edgelist, "dot": to_dot, "json": to_json}[args.format]
    text = writer(g, MATERIALIZE_CAP)
    if args.out:
        Path(args.out).write_text(text)
        print(f"wrote {g.name} to {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_info(args) -> int:
    g = _graph(args)
    doc = {"family": g.family.value, "n": g.n, **oracle.graph_report(g).as_dict()}
    print(json.dumps(doc, indent=1))
    return EXIT_OK


def cmd_cycle(args) -> int:
    g = _graph(args)
    u = g.validate(args.vertex)
    if args.length > MATERIALIZE_CAP:
        raise TooLarge(f"length {args.length} is above the output cap of {MATERIALIZE_CAP}")
    w = embedding.pancycle(g.family, g.n, u, args.length)
    if args.verify:
        _check_report(oracle.verify_cycle(g, w, anchor=u, expected_len=args.length))
    _emit_walk(g, w, args.json)
    return EXIT_OK


def cmd_hamcycle(args) -> int:
    g = _graph(args)
    if g.order > MATERIALIZE_CAP:
        raise TooLarge(f"{g.name} has {g.order} vertices, above the output cap of {MATERIALIZE_CAP}")
    e = _edge(g, args.edge)
    w = embedding.ham_cycle_edge(g.family, g.n, e)
    if args.verify:
        rep = oracle.verify_cycle(g, w, expected_len=g.order)
        if not w.has_edge(*e):
            raise VerificationFailed("cycle does not contain the requested edge")
        _check_report(rep)
    _emit_walk(g, w, args.json)
    return EXIT_OK


def cmd_edgecycle(args) -> int:
    g = _graph(args)
    e = _edge(g, args.edge)
    w = embedding.edge_cycle(g.family, g.n, e)
    if args.verify:
        rep = oracle.verify_cycle(g, w, expected_len=2 * len(g.subcube_ids), subcube_constraint=1)
        if not w.has_edge(*e):
            raise VerificationFailed("cycle does not contain the requested edge")
        _check_report(rep)
    _emit_walk(g, w, args.json)
    return EXIT_OK


def cmd_translate(args) -> int:
    g = _graph(args)
    if args.swap:
        aut = group_swap(g.n, args.swap[0], args.swap[1], g.family)
    else:
        if args.vertex is None:
            raise InvalidLabel("translate needs --vertex or --swap")
        aut = translation(g.family, g.n, g.validate(args.vertex))
    labels = [g.validate(t) for t in (args.apply or [])]
    if args.vertex is not None and not args.apply:
        labels = [g.validate(args.vertex)]
    doc = aut.describe()
    doc["images"] = {g.text(x): g.text(aut(x)) for x in labels}
    print(json.dumps(doc, indent=1))
    return EXIT_OK


def cmd_check(args) -> int:
    summary = checks.run_suite(args.suite, args.n, sample=args.sample, seed=args.seed)
    print(json.dumps(summary, indent=1, sort_keys=True))
    if not summary["ok"]:
        print(f"check failed: {json.dumps(summary['first_failure'])}", file=sys.stderr)
        return EXIT_CHECK
    return EXIT_OK


def cmd_regen_assets(args) -> int:
    out = Path(args.out) if args.out else assets.asset_path().parent
    doc = assets.build_assets()
    path = assets.write_assets(out, doc)
    repaired = [
        {"family": e["family"], "length": int(e["key"])} for e in doc["entries"] if e["repaired"]
    ]
    print(json.dumps({"path": str(path), "entries": len(doc["entries"]), "repaired": repaired}, indent=1))
    return EXIT_OK


# -- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cubecycle", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_flags(sp):
        sp.add_argument("--family", type=_family, default="SSQ", help="ssq (default) or bsq")
        sp.add_argument("--n", type=int, required=True, help="dimension, n = 2 (mod 4)")

    sp = sub.add_parser("gen", help="write the graph as an edge list, DOT or JSON")
    graph_flags(sp)
    sp.add_argument("--format", choices=("edgelist", "dot", "json"), default="edgelist")
    sp.add_argument("--out", help="output file (default: stdout)")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("info", help="structural report as JSON")
    graph_flags(sp)
    sp.set_defaults(func=cmd_info)

    def walk_flags(sp):
        sp.add_argument("--verify", action="store_true", help="check the output with the oracle")
        sp.add_argument("--json", action="store_true", help="print a JSON list instead of lines")

    sp = sub.add_parser("cycle", help="cycle of a given length through a vertex")
    graph_flags(sp)
    sp.add_argument("--vertex", required=True, help="label, most significant bit first")
    sp.add_argument("--length", type=int, required=True)
    walk_flags(sp)
    sp.set_defaults(func=cmd_cycle)

    for name, func, text in (
        ("hamcycle", cmd_hamcycle, "Hamiltonian cycle through an edge"),
        ("edgecycle", cmd_edgecycle, "cycle through an edge with one edge in every subcube"),
    ):
        sp = sub.add_parser(name, help=text)
        graph_flags(sp)
        sp.add_argument("--edge", nargs=2, required=True, metavar=("U", "V"))
        walk_flags(sp)
        sp.set_defaults(func=func)

    sp = sub.add_parser("translate", help="relabeling sending a vertex to the zero label")
    graph_flags(sp)
    sp.add_argument("--vertex", help="vertex sent to the all-zero label")
    sp.add_argument("--swap", nargs=2, type=int, metavar=("J", "J2"),
                    help="exchange two 4-bit groups instead")
    sp.add_argument("--apply", nargs="+", metavar="LABEL", help="labels to map")
    sp.set_defaults(func=cmd_translate)

    sp = sub.add_parser("check", help="run a verification suite and print a JSON summary")
    sp.add_argument("--suite", choices=sorted(checks.SUITES), required=True)
    sp.add_argument("--n", type=int, default=6)
    sp.add_argument("--sample", type=int, help="sample size at larger n")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("regen-assets", help="rebuild the base-cycle asset with the oracle")
    sp.add_argument("--out", help="output directory (default: the packaged data directory)")
    sp.set_defaults(func=cmd_regen_assets)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except VerificationFailed as exc:
        print(f"cubecycle: verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except CubeCycleError as exc:
        code = next(c for t, c in _EXIT_CODES if isinstance(exc, t))
        print(f"cubecycle: error: {exc}", file=sys.stderr)
        return code
    except OSError as exc:
        print(f"cubecycle: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
