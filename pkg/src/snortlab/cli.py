"""Command-line interface: solve boards, tabulate sweeps, verify strategies, serve.

Exit codes: 0 success, 2 usage, 3 resource budget exceeded, 4 verification
failure.  ``table --out-dir`` is the report path: it writes the delimited
outcome table plus one rendered board figure per cell.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from pathlib import Path

from .graphs import Family, GraphSizeError, build_family, export_dot
from .position import Outcome, Player, initial_position
from .solver import (
    DEFAULT_NODE_CAP,
    ResourceBudgetError,
    Solver,
    brute_force_wins,
)
from .strategy import NoStrategyError, has_strategy, prescribed_move, verify_copycat

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_VERIFY_FAIL = 4

# Cells the summary results cover: every family except paths, and only even
# n for the minus-only right end.  A non-N outcome in any of these is a bug
# in either the engine or the tables and gets flagged loudly.
def _covered(family: Family, n: int) -> bool:
    if family is Family.PATH:
        return False
    if family is Family.RIGHTMINUSONLY3:
        return n % 2 == 0
    return True


def _parse_family(value: str) -> Family:
    try:
        return Family(value.lower())
    except ValueError:
        names = ", ".join(f.value for f in Family)
        raise argparse.ArgumentTypeError(f"unknown family {value!r} (choose from {names})")


def _positive_int(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return n


def _solve_payload(family: Family, n: int, args) -> dict:
    graph = build_family(family, n)
    start = initial_position(graph)
    if getattr(args, "no_memo", False):
        wl = brute_force_wins(start, Player.LEFT)
        wr = brute_force_wins(start, Player.RIGHT)
        if wl and wr:
            result = Outcome.N
        elif not wl and not wr:
            result = Outcome.P
        else:
            result = Outcome.L if wl else Outcome.R
        best = {}
        for player in Player:
            moves = []
            for v in start.legal_moves(player):
                child = start.apply_move(player, v)
                if not brute_force_wins(child, player.opponent()):
                    moves.append(v)
            best[player.value] = [str(graph.label_of(v)) for v in moves]
        stats = {"nodes_expanded": None, "memo_hits": None, "elapsed_s": None,
                 "mode": "brute-force"}
    else:
        solver = Solver(graph, order=args.order, node_cap=args.node_cap)
        result = solver.outcome(start)
        best = {
            player.value: [
                str(graph.label_of(v)) for v in solver.best_moves(start, player)
            ]
            for player in Player
        }
        stats = solver.stats.to_json()
    return {
        "family": family.value,
        "n": n,
        "outcome": result.value,
        "best_first_moves": best,
        "stats": stats,
    }


def cmd_solve(args) -> int:
    payload = _solve_payload(args.family, args.n, args)
    if args.table:
        print(f"family   : {payload['family']}")
        print(f"n        : {payload['n']}")
        print(f"outcome  : {payload['outcome']}")
        for side in ("Left", "Right"):
            print(f"best {side:<5}: {' '.join(payload['best_first_moves'][side]) or '-'}")
        stats = payload["stats"]
        if stats.get("nodes_expanded") is not None:
            print(f"nodes    : {stats['nodes_expanded']}  memo hits: {stats['memo_hits']}"
                  f"  elapsed: {stats['elapsed_s']}s")
    else:
        print(json.dumps(payload, indent=2))
    return EXIT_OK


def cmd_table(args) -> int:
    families = list(Family) if args.families == ["all"] else [
        _parse_family(f) for f in args.families
    ]
    rows = []
    mismatches = 0
    for family in families:
        for n in range(args.n_min, args.n_max + 1):
            payload = _solve_payload(family, n, args)
            flagged = _covered(family, n) and payload["outcome"] != "N"
            if flagged:
                mismatches += 1
                print(
                    f"UNEXPECTED OUTCOME: {family.value} n={n} solved to "
                    f"{payload['outcome']} where the verified result is N",
                    file=sys.stderr,
                )
            rows.append((family, n, payload, flagged))

    if args.json:
        print(json.dumps([
            {**p, "flag": "UNEXPECTED" if f else ""} for _, _, p, f in rows
        ], indent=2))
    else:
        header = (f"{'family':<18}{'n':>3}  {'outcome':<8}{'best first (Left)':<30}"
                  f"{'nodes':>9}{'time':>9}  flag")
        print(header)
        print("-" * len(header))
        for family, n, payload, flagged in rows:
            best = " ".join(payload["best_first_moves"]["Left"]) or "-"
            if len(best) > 28:
                best = best[:25] + "..."
            stats = payload["stats"]
            nodes = stats.get("nodes_expanded")
            took = stats.get("elapsed_s")
            print(f"{family.value:<18}{n:>3}  {payload['outcome']:<8}{best:<30}"
                  f"{nodes if nodes is not None else '-':>9}"
                  f"{f'{took:.2f}s' if took is not None else '-':>9}"
                  f"  {'UNEXPECTED' if flagged else ''}")

    if args.out_dir:
        _write_report(Path(args.out_dir), rows)
    return EXIT_OK


def _write_report(out_dir: Path, rows) -> None:
    from .figures import render_strategy_figure, save_figure

    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / "outcomes.csv"
    with open(csv_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow([
            "family", "n", "outcome", "flag", "best_first_left", "best_first_right",
            "nodes_expanded", "memo_hits", "elapsed_s",
        ])
        for family, n, payload, flagged in rows:
            stats = payload["stats"]
            writer.writerow([
                family.value, n, payload["outcome"],
                "UNEXPECTED" if flagged else "",
                " ".join(payload["best_first_moves"]["Left"]),
                " ".join(payload["best_first_moves"]["Right"]),
                stats.get("nodes_expanded"), stats.get("memo_hits"),
                stats.get("elapsed_s"),
            ])
    for family, n, _, _ in rows:
        fig = render_strategy_figure(family, n)
        save_figure(fig, out_dir / f"board_{family.value}_n{n}.png")
    print(f"report written to {out_dir} ({csv_path.name} + {len(rows)} figures)")


def cmd_verify(args) -> int:
    try:
        report = verify_copycat(args.family, args.n)
    except NoStrategyError as exc:
        if args.json:
            print(json.dumps({
                "family": args.family.value, "n": args.n,
                "verdict": "no-strategy", "detail": str(exc),
            }, indent=2))
        else:
            print(f"no strategy: {exc}")
        return EXIT_OK
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(f"family  : {report.family.value}")
        print(f"n       : {report.n}")
        print(f"method  : {report.method}")
        print(f"verdict : {report.verdict}")
        print(f"lines   : {report.lines_explored}  max depth: {report.max_depth}")
        if report.failure_trace:
            print("failure : " + " ".join(report.failure_trace))
    return EXIT_OK if report.verdict == "win" else EXIT_VERIFY_FAIL


def cmd_dot(args) -> int:
    graph = build_family(args.family, args.n)
    text = export_dot(graph)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(Path(args.session_log) if args.session_log else None)
    host = "0.0.0.0" if args.open else args.host
    uvicorn.run(app, host=host, port=args.port, log_level="warning")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="snortlab",
        description="Snort engine on triangular grid boards: solve, verify, play.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_solver_flags(p):
        p.add_argument("--order", choices=("index", "greedy"), default="index",
                       help="move ordering inside the search (results are identical)")
        p.add_argument("--node-cap", type=int, default=DEFAULT_NODE_CAP,
                       help="abort after this many search nodes")
        p.add_argument("--no-memo", action="store_true",
                       help="oracle mode: plain brute-force recursion, no table")

    p = sub.add_parser("solve", help="outcome class and best openings for one board")
    p.add_argument("--family", type=_parse_family, required=True)
    p.add_argument("--n", type=_positive_int, required=True)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", default=True)
    fmt.add_argument("--table", action="store_true")
    add_solver_flags(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("table", help="outcome sweep over families and sizes")
    p.add_argument("--families", nargs="*", default=["all"],
                   help="family names, or 'all'; empty means no rows")
    p.add_argument("--n-min", type=_positive_int, default=1)
    p.add_argument("--n-max", type=_positive_int, default=6)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out-dir", default=None,
                   help="write outcomes.csv plus one board figure per cell")
    add_solver_flags(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="replay the split strategy against every reply")
    p.add_argument("--family", type=_parse_family, required=True)
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dot", help="Graphviz text for a board")
    p.add_argument("--family", type=_parse_family, required=True)
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("serve", help="run the HTTP analysis service (loopback only)")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int,
                   default=int(os.environ.get("SNORTLAB_PORT", "8151")))
    p.add_argument("--open", action="store_true",
                   help="bind all interfaces instead of loopback")
    p.add_argument("--session-log", default=None,
                   help="append one JSON line per session event to this file")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphSizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceBudgetError as exc:
        print(f"resource budget exceeded: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
