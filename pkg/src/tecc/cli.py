"""Command-line front end.

Three subcommands: decompose (full report, optionally JSON, certificates,
cacti, and self-verification), gen-random (seeded multigraph generator in
the same file format the parser reads), and oracle (brute-force ground
truth for small graphs, guarded by a size bound).

All vertex and edge ids in the output are 0-based; the input file format is
1-based.  JSON output is key-sorted with a fixed indent, so the same input
always produces the same bytes.

Exit codes: 0 success, 2 parse error, 3 verification failure, 4 oracle size
guard.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from .decomposer import ThreeEccReport, decompose
from .multigraph import Multigraph, ParseError, parse_graph, serialize_graph
from .oracle import bridges_bf, cut_pairs_bf, three_ecc_bf
from .verifier import _oracle_bound, verify_report

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_VERIFY = 3
EXIT_ORACLE_GUARD = 4

ORACLE_GUARD_N = 14


def _read_input(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def report_to_dict(
    report: ThreeEccReport, certify: bool, cactus: bool
) -> dict:
    components = []
    for comp in report.components:
        entry: dict = {
            "members": comp.members,
            "virtual_edge": list(comp.virtual_edge[:2]) if comp.virtual_edge else None,
            "certificate": None,
        }
        if certify and comp.certificate is not None:
            entry["certificate"] = [
                {
                    "vertices": path.vertices,
                    "edges": [{"id": e, "virtual": v} for e, v in path.edges],
                    "tag": path.tag,
                }
                for path in comp.certificate
            ]
        components.append(entry)
    return {
        "components": components,
        "bridges": [[u, v, e] for u, v, e in report.bridges],
        "cacti": [
            {"nodes": c.nodes, "cycles": [list(cy) for cy in c.cycles]}
            for c in report.cacti
        ]
        if cactus
        else [],
        "is_three_edge_connected": report.is_three_edge_connected,
    }


def _print_text(report: ThreeEccReport, certify: bool, cactus: bool, out) -> None:
    print(f"components: {len(report.components)}", file=out)
    for comp in report.components:
        print(f"  {comp.members}", file=out)
        if certify and comp.certificate is not None:
            for path in comp.certificate:
                ids = [e for e, _ in path.edges]
                print(f"    {path.tag}: vertices {path.vertices} edges {ids}", file=out)
    print(f"bridges: {len(report.bridges)}", file=out)
    for u, v, e in report.bridges:
        print(f"  {u} {v} id={e}", file=out)
    if cactus:
        print(f"cacti: {len(report.cacti)}", file=out)
        for c in report.cacti:
            print(f"  nodes {c.nodes} cycles {c.cycles}", file=out)
    print(f"is_three_edge_connected: {str(report.is_three_edge_connected).lower()}", file=out)


def cmd_decompose(args: argparse.Namespace) -> int:
    try:
        text = _read_input(args.file)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        g, log = parse_graph(text)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if log.removed_self_loops:
        print(f"note: removed {log.removed_self_loops} self-loop(s)", file=sys.stderr)

    report = decompose(g)
    if args.json:
        payload = report_to_dict(report, args.certify, args.cactus)
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        _print_text(report, args.certify, args.cactus, sys.stdout)

    if args.verify:
        bound = _oracle_bound()
        verdict = verify_report(g, report, oracle_bound=bound)
        for name, ok, detail in verdict.checks:
            line = f"verify: {'pass' if ok else 'FAIL'}: {name}"
            if detail:
                line += f" ({detail})"
            print(line, file=sys.stderr)
        if not verdict.ok:
            return EXIT_VERIFY
    return EXIT_OK


def generate_random(n: int, m: int, seed: int) -> Multigraph:
    """Seeded random multigraph without self-loops; endpoints are drawn
    uniformly and self-loops are redrawn."""
    if n < 2 and m > 0:
        raise ValueError("need at least 2 vertices to place an edge")
    rng = random.Random(seed)
    pairs = []
    for _ in range(m):
        while True:
            u = rng.randrange(n)
            v = rng.randrange(n)
            if u != v:
                break
        pairs.append((u, v))
    return Multigraph(n, pairs)


def cmd_gen_random(args: argparse.Namespace) -> int:
    try:
        g = generate_random(args.n, args.m, args.seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    sys.stdout.write(serialize_graph(g))
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    try:
        text = _read_input(args.file)
        g, _ = parse_graph(text)
    except (OSError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    guard = ORACLE_GUARD_N
    env = os.environ.get("TECC_ORACLE_MAX_N")
    if env is not None:
        try:
            guard = int(env)
        except ValueError:
            pass
    if g.vertex_count > guard:
        print(
            f"error: {g.vertex_count} vertices exceeds the oracle bound {guard}",
            file=sys.stderr,
        )
        return EXIT_ORACLE_GUARD
    payload = {
        "bridges": sorted(bridges_bf(g)),
        "cut_pairs": [list(p) for p in sorted(cut_pairs_bf(g))],
        "three_ecc": three_ecc_bf(g),
    }
    print(json.dumps(payload, indent=2, sort_keys=True))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tecc",
        description="3-edge-connected components with certificates",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_dec = sub.add_parser("decompose", help="decompose a graph file (default: stdin)")
    p_dec.add_argument("file", nargs="?", default=None, help="input file, - for stdin")
    p_dec.add_argument("--json", action="store_true", help="emit the JSON report")
    p_dec.add_argument("--certify", action="store_true", help="include construction sequences")
    p_dec.add_argument("--cactus", action="store_true", help="include per-block cacti")
    p_dec.add_argument(
        "--verify",
        action="store_true",
        help="re-check the report (brute force joins in for small graphs)",
    )
    p_dec.set_defaults(func=cmd_decompose)

    p_gen = sub.add_parser("gen-random", help="print a seeded random multigraph")
    p_gen.add_argument("n", type=int)
    p_gen.add_argument("m", type=int)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.set_defaults(func=cmd_gen_random)

    p_or = sub.add_parser("oracle", help="brute-force ground truth for a small graph")
    p_or.add_argument("file", nargs="?", default=None, help="input file, - for stdin")
    p_or.set_defaults(func=cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
