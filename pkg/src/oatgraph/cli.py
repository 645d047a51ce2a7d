"""Command-line front end.

Exit codes: 0 = success, 1 = negative domain answer (not a recognisable
graph, invalid sequence), 2 = usage or format error.  Machine-readable
outputs are JSON on stdout and carry "format_version": 1; progress notes
go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .buildtree import canonical_colouring, chi_omega, replay, tree_to_json
from .colouring import Colouring, Palette, colouring_from_json, colouring_to_json
from .errors import GraphFormatError, OatGraphError
from .generators import (
    CLASSIC_FAMILIES,
    FIXTURE_NAMES,
    classic,
    fixture,
    p4_sparse_third_op,
    random_oat,
)
from .graph import Graph, format_graph, parse_graph
from .oracle import build_reconfig, reconfig_stats
from .recognition import recognize
from .recolouring import find_path, sequence_from_json, sequence_to_json, verify_sequence


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc}")


def _read_graph(path: str) -> Graph:
    return parse_graph(_read_text(path))


def _read_colouring(path: str, palette: Palette) -> Colouring:
    loaded = colouring_from_json(json.loads(_read_text(path)))
    # rebind onto the command's working palette; off-palette colours fail here
    return Colouring(loaded.assignment, palette)


def _emit(doc: dict) -> None:
    json.dump({"format_version": 1, **doc}, sys.stdout)
    sys.stdout.write("\n")


def cmd_recognize(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    out = recognize(g)
    if not out.is_oat:
        stuck = out.stuck
        verts = out.stuck_vertices
        if args.json:
            _emit(
                {
                    "oat": False,
                    "stuck_vertices": list(verts),
                    "stuck_edges": [[verts[u], verts[v]] for u, v in stuck.edges()],
                }
            )
        else:
            print(f"not recognised; stuck subgraph on vertices {' '.join(map(str, verts))}")
            for u, v in stuck.edges():
                print(f"{verts[u]} {verts[v]}")
        return 1
    chi, omega = chi_omega(out.tree)
    doc = tree_to_json(out.tree)
    if args.tree_out:
        Path(args.tree_out).write_text(json.dumps(doc, indent=2) + "\n")
    if args.json:
        _emit({"oat": True, "chi": chi, "omega": omega, "tree": doc})
    else:
        print(f"recognised: {g.n} vertices, chi = omega = {chi}")
        if args.tree_out:
            print(f"build tree written to {args.tree_out}")
    return 0


def cmd_recolor(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    out = recognize(g)
    if not out.is_oat:
        print("graph not recognised; cannot recolour", file=sys.stderr)
        return 1
    chi, _ = chi_omega(out.tree)
    k = args.k if args.k is not None else chi
    if k < chi:
        print(f"error: k = {k} is below the chromatic number {chi}", file=sys.stderr)
        return 2
    palette = Palette.default(k + 1)
    alpha = _read_colouring(args.from_file, palette)
    beta = _read_colouring(args.to_file, palette)
    for name, col in (("--from", alpha), ("--to", beta)):
        if col.n != g.n:
            print(f"error: {name} colours {col.n} vertices, graph has {g.n}", file=sys.stderr)
            return 2
        if not col.is_proper(g):
            print(f"error: {name} colouring is not proper", file=sys.stderr)
            return 2
    seq = find_path(out.tree, alpha, beta, palette)
    _emit(sequence_to_json(seq))
    print(f"length {len(seq)} within budget {4 * g.n * g.n} for n = {g.n}", file=sys.stderr)
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    r = build_reconfig(g, Palette.default(args.k))
    stats = reconfig_stats(r)
    if args.frozen:
        _emit({"frozen_count": stats.frozen_count, "frozen": [list(a) for a in stats.frozen]})
    else:
        _emit(stats.to_json())
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    family = args.family
    if family in FIXTURE_NAMES:
        g = fixture(family).graph
    elif family in CLASSIC_FAMILIES:
        if args.param is None:
            print(f"error: {family} needs a size parameter", file=sys.stderr)
            return 2
        g = classic(family, args.param)
    elif family == "random_oat":
        if args.param is None:
            print("error: random_oat needs a vertex count", file=sys.stderr)
            return 2
        tree = random_oat(args.param, args.seed)
        if args.tree_out:
            Path(args.tree_out).write_text(json.dumps(tree_to_json(tree), indent=2) + "\n")
        g = replay(tree)
    elif family == "p4_sparse":
        if args.param is None:
            print("error: p4_sparse needs the size of the edgeless part", file=sys.stderr)
            return 2
        r = _read_graph(args.r_file) if args.r_file else None
        g = p4_sparse_third_op(args.param, r, args.case)
    else:
        known = ", ".join(CLASSIC_FAMILIES + FIXTURE_NAMES + ("random_oat", "p4_sparse"))
        print(f"error: unknown family {family!r}; choose from {known}", file=sys.stderr)
        return 2
    sys.stdout.write(format_graph(g))
    return 0


def cmd_canonical(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    out = recognize(g)
    if not out.is_oat:
        print("graph not recognised; no canonical colouring", file=sys.stderr)
        return 1
    chi, _ = chi_omega(out.tree)
    col = canonical_colouring(out.tree, Palette.default(chi))
    _emit(colouring_to_json(col))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    loaded = json.loads(_read_text(args.sequence))
    if isinstance(loaded, dict):
        version = loaded.pop("format_version", 1)
        if version != 1:
            print(f"error: unsupported format version {version!r}", file=sys.stderr)
            return 2
    seq = sequence_from_json(loaded)
    report = verify_sequence(g, seq)
    doc = {
        "valid": report.valid,
        "length": report.length,
        "max_recolourings": report.max_recolourings,
    }
    if not report.valid:
        doc["first_invalid_step"] = report.first_invalid_step
        doc["reason"] = report.reason
    _emit(doc)
    return 0 if report.valid else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="oatgraph")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="decompose a graph, print its build tree")
    p.add_argument("graph", help="graph file in the 'n m' edge-list format")
    p.add_argument("--tree-out", help="write the build-tree JSON to this file")
    p.add_argument("--json", action="store_true", help="JSON report on stdout")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("recolor", help="find a recolouring sequence between two colourings")
    p.add_argument("graph")
    p.add_argument("--from", dest="from_file", required=True, help="starting colouring JSON")
    p.add_argument("--to", dest="to_file", required=True, help="target colouring JSON")
    p.add_argument("--k", type=int, help="palette is 1..k+1 (default: k = chi)")
    p.set_defaults(func=cmd_recolor)

    p = sub.add_parser("oracle", help="census of the full reconfiguration graph")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True, help="palette is 1..k")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--stats", action="store_true", help="connectivity stats (default)")
    group.add_argument("--frozen", action="store_true", help="list frozen colourings")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="emit a generated graph in the edge-list format")
    p.add_argument("family", help="path/cycle/complete/complete_bipartite_minus_matching, a fixture name, random_oat, or p4_sparse")
    p.add_argument("param", type=int, nargs="?", help="size parameter where the family needs one")
    p.add_argument("--seed", type=int, default=0, help="seed for random_oat")
    p.add_argument("--case", choices=("pendant", "anti"), default="pendant", help="p4_sparse flavour")
    p.add_argument("--r-file", help="graph file for the joined part of p4_sparse")
    p.add_argument("--tree-out", help="for random_oat: also write the build tree JSON")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("canonical", help="canonical chi-colouring of a recognised graph")
    p.add_argument("graph")
    p.set_defaults(func=cmd_canonical)

    p = sub.add_parser("verify", help="check a recolouring sequence against a graph")
    p.add_argument("graph")
    p.add_argument("sequence", help="sequence JSON file")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OatGraphError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
