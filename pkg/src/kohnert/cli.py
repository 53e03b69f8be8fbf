"""Command-line front door.

Subcommands: compute (both closed-form counts and the per-column table),
solve (produce witness chains), enumerate (full reachability graph, DOT
export), verify (closed forms against the brute-force oracle on a random
corpus), random (emit a seeded diagram), serve (start the puzzle service).

Exit codes: 0 success, 1 verification failure, 2 parse or usage error,
3 vacuous verification (nothing checked), 4 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .diagram import (
    Diagram,
    ParseError,
    apply_chain,
    column_weight,
    empty_positions,
    is_minimal,
    parse_diagram,
    random_diagram,
    render_cells,
    render_grid,
    row_weight,
)
from .formulas import column_profiles, max_min_empty, max_moves, min_moves
from .poset import (
    LimitExceeded,
    enumerate_poset,
    export_dot,
    longest_chain,
    max_empty_over_minimal,
    shortest_to_minimal,
)
from .solvers import solve_max, solve_min

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_VACUOUS = 3
EXIT_LIMIT = 4


def _read_diagram(path: str) -> Diagram:
    if path == "-":
        return parse_diagram(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_diagram(fh.read())


def _cells_json(diagram: Diagram) -> list[list[int]]:
    return [[r, c] for r, c in diagram.cells]


def cmd_compute(args: argparse.Namespace) -> int:
    d = _read_diagram(args.input)
    profiles = column_profiles(d)
    if args.format == "json":
        payload = {
            "cells": _cells_json(d),
            "num_cells": len(d),
            "num_empty": len(empty_positions(d)),
            "rwt": list(row_weight(d)),
            "cwt": list(column_weight(d)),
            "max_moves": max_moves(d),
            "min_moves": min_moves(d),
            "max_min_empty": max_min_empty(d),
            "columns": [
                {
                    "col": p.col,
                    "count": p.count,
                    "top_row": p.top_row,
                    "right_max": p.right_max,
                    "h": p.h,
                }
                for p in profiles
            ],
        }
        print(json.dumps(payload, indent=2))
        return EXIT_OK
    print(f"cells {len(d)}")
    print(f"empty {len(empty_positions(d))}")
    print("rwt", *row_weight(d))
    print("cwt", *column_weight(d))
    print(f"max_moves {max_moves(d)}")
    print(f"min_moves {min_moves(d)}")
    print(f"max_min_empty {max_min_empty(d)}")
    if profiles:
        print("col count top right_max h")
        for p in profiles:
            print(p.col, p.count, p.top_row, p.right_max, p.h if p.h is not None else "-")
    return EXIT_OK


def _solve_one(d: Diagram, mode: str) -> dict:
    report = solve_max(d) if mode == "max" else solve_min(d)
    # independent replay of the emitted rows
    replay = apply_chain(d, report.chain.rows)
    assert replay.end == report.chain.end
    return {
        "mode": mode,
        "rows": list(report.chain.rows),
        "achieved": report.achieved,
        "predicted": report.predicted,
        "final_cells": _cells_json(report.chain.end),
        "final_minimal": is_minimal(report.chain.end),
    }


def cmd_solve(args: argparse.Namespace) -> int:
    d = _read_diagram(args.input)
    modes = ["max", "min"] if args.mode == "both" else [args.mode]
    results = [_solve_one(d, mode) for mode in modes]
    if args.format == "json":
        payload = results[0] if len(results) == 1 else {r["mode"]: r for r in results}
        print(json.dumps(payload, indent=2))
        return EXIT_OK
    for i, result in enumerate(results):
        if i:
            print()
        print(f"mode {result['mode']}")
        print("rows", *result["rows"])
        print(f"achieved {result['achieved']}")
        print(f"predicted {result['predicted']}")
        grid = render_grid(Diagram(result["final_cells"]))
        print("final")
        print(grid, end="")
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    d = _read_diagram(args.input)
    graph = enumerate_poset(d, node_limit=args.limit)
    if args.format == "dot":
        print(export_dot(graph), end="")
        return EXIT_OK
    longest, _ = longest_chain(graph)
    shortest, _ = shortest_to_minimal(graph)
    if args.format == "json":
        payload = {
            "nodes": len(graph.nodes),
            "edges": len(graph.edges),
            "minimal": sorted(graph.minimal),
            "longest": longest,
            "shortest": shortest,
        }
        print(json.dumps(payload, indent=2))
        return EXIT_OK
    print(f"nodes={len(graph.nodes)} edges={len(graph.edges)} minimal={len(graph.minimal)}")
    print(f"longest={longest} shortest={shortest}")
    return EXIT_OK


def cmd_random(args: argparse.Namespace) -> int:
    d = random_diagram(args.rows, args.cols, args.density, args.seed)
    print(render_cells(d), end="")
    return EXIT_OK


def _verify_instance(d: Diagram, node_limit: int) -> list[str]:
    """All oracle-equality checks for one diagram; returns failure messages."""
    failures = []
    graph = enumerate_poset(d, node_limit=node_limit)
    longest, long_chain = longest_chain(graph)
    shortest, short_chain = shortest_to_minimal(graph)
    checks = [
        ("max_moves", max_moves(d), longest),
        ("min_moves", min_moves(d), shortest),
        ("max_min_empty", max_min_empty(d), max_empty_over_minimal(graph)),
        ("solve_max", solve_max(d).achieved, longest),
        ("solve_min", solve_min(d).achieved, shortest),
    ]
    for name, formula, oracle in checks:
        if formula != oracle:
            failures.append(f"{name} formula {formula} != oracle {oracle}")
    if not is_minimal(long_chain.end) or not is_minimal(short_chain.end):
        failures.append("witness chain does not end minimal")
    minimal_nodes = [graph.nodes[i] for i in graph.minimal]
    for p in column_profiles(d):
        if p.count:
            ceiling = max(node.top_of_column(p.col) for node in minimal_nodes)
            if p.h != ceiling:
                failures.append(f"h({p.col}) = {p.h} but minimal nodes reach {ceiling}")
    counts = column_weight(d)
    for j in range(1, d.max_col + 1):
        bound = max(counts[j - 1 :], default=0)
        for node in minimal_nodes:
            if any(r > bound for r, c in node if c >= j):
                failures.append(f"minimal node has a cell above row {bound} in columns >= {j}")
                break
    return failures


def cmd_verify(args: argparse.Namespace) -> int:
    failed = 0
    skipped = 0
    checked = 0
    for i in range(args.count):
        seed = args.seed + i
        d = random_diagram(args.rows, args.cols, args.density, seed)
        try:
            failures = _verify_instance(d, args.limit)
        except LimitExceeded:
            skipped += 1
            print(f"instance {i} (seed {seed}) skipped: over {args.limit} nodes")
            continue
        checked += 1
        if failures:
            failed += 1
            print(f"instance {i} (seed {seed}) FAILED: {'; '.join(failures)}")
            print("counterexample:")
            print(render_cells(d), end="")
    print(f"verified {checked - failed}/{checked} instances ({skipped} skipped)")
    if failed:
        return EXIT_VERIFY_FAILED
    if checked == 0:
        return EXIT_VACUOUS
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kohnert",
        description="Kohnert diagrams: closed-form move counts, solvers, and puzzles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("--input", required=True, help="cell-list file, or - for stdin")

    def add_corpus(p):
        p.add_argument("--count", type=int, default=100, help="number of random diagrams")
        p.add_argument("--rows", type=int, default=5)
        p.add_argument("--cols", type=int, default=5)
        p.add_argument("--density", type=float, default=0.3)
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("compute", help="closed-form counts and the per-column table")
    add_input(p)
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("solve", help="witness chains realizing the counts")
    add_input(p)
    p.add_argument("--mode", choices=["max", "min", "both"], default="both")
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("enumerate", help="breadth-first reachability graph")
    add_input(p)
    p.add_argument("--limit", type=int, default=1_000_000, help="node cap")
    p.add_argument("--format", choices=["plain", "json", "dot"], default="plain")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="closed forms against brute-force enumeration")
    add_corpus(p)
    p.add_argument("--limit", type=int, default=1_000_000, help="node cap per instance")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("random", help="emit a seeded random diagram as a cell list")
    p.add_argument("--rows", type=int, default=5)
    p.add_argument("--cols", type=int, default=5)
    p.add_argument("--density", type=float, default=0.3)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("serve", help="start the puzzle service")
    p.add_argument("--port", type=int, default=8071)
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except LimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (ParseError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
