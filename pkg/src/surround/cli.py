"""Command-line interface: ``surround number|check|bounds|sweep|play|gen``.

Exit codes: 0 success (for ``check``: the cops win), 1 the robber wins at
the given ``k`` (``check``) or a table comparison found mismatches
(``sweep --compare``), 2 bad input, 3 budget exceeded, 4 disconnected
input graph.
"""
from __future__ import annotations

import argparse
import csv
import logging
import sys
import time
from dataclasses import asdict
from pathlib import Path
from typing import Sequence, TextIO

from .bounds import bound_report
from .designs import DesignError, block_intersection_graph, builtin_design, incidence_graph, parse_design
from .errors import BudgetExceeded
from .families import PRODUCTS, FamilySpec, line_graph, make_family, product
from .graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    parse_edge_list,
    parse_graph6,
    require_connected,
    write_edge_list,
    write_graph6,
)
from .oracle import naive_game_number, naive_robber_wins
from .records import dumps, graph_descriptor, result_record
from .solver.configs import DEFAULT_CONFIG_BUDGET, CopConfig, Variant, canonical, config_successors
from .solver.psi import MODES, init_psi, refine_to_fixpoint
from .solver.search import GameResult, KVerdict, game_number, robber_wins
from .strategy import (
    DEFAULT_STATE_BUDGET,
    RobberPolicy,
    is_cop_win,
    legal_placements,
    legal_robber_moves,
    simulate,
    solve_positions,
)
from .sweep import compare, format_rows, load_rows, run_sweep

EXIT_OK, EXIT_ROBBER, EXIT_INPUT, EXIT_BUDGET, EXIT_DISCONNECTED = 0, 1, 2, 3, 4

log = logging.getLogger("surround")


class InputEnded(Exception):
    pass


# ------------------------------------------------------------ graph input

def _add_source(p: argparse.ArgumentParser, designs: bool = True) -> None:
    src = p.add_argument_group("graph source (exactly one)")
    src.add_argument("--family", nargs="+", metavar="TOKEN",
                     help="family spec, e.g. 'gp 7 2', 'wheel 6', 'builtin figure1'")
    src.add_argument("--graph6", metavar="G6|PATH", help="graph6 string, or a file whose first line is one")
    src.add_argument("--edges", metavar="PATH", help="edge-list file")
    if designs:
        src.add_argument("--design", metavar="NAME|PATH", help="block design: fano, ag23, or a design file")
        kind = src.add_mutually_exclusive_group()
        kind.add_argument("--incidence", action="store_true", help="use the design's incidence graph (default)")
        kind.add_argument("--big", action="store_true", help="use the design's block intersection graph")
    p.add_argument("--product", choices=PRODUCTS, help="take the product of the source with --factor")
    p.add_argument("--factor", nargs="+", metavar="TOKEN", help="family spec of the second product factor")
    p.add_argument("--line-graph", action="store_true", help="replace the graph by its line graph")


def load_graph(args: argparse.Namespace) -> tuple[Graph, dict]:
    chosen = [name for name in ("family", "graph6", "edges", "design") if getattr(args, name, None)]
    if len(chosen) != 1:
        raise GraphError("give exactly one of --family, --graph6, --edges, --design")
    source = chosen[0]
    if source == "family":
        spec = FamilySpec.parse(args.family)
        g, value = make_family(spec), str(spec)
    elif source == "graph6":
        text = args.graph6
        path = Path(text)
        if path.is_file():
            text = path.read_text().splitlines()[0]
        g, value = parse_graph6(text), args.graph6
    elif source == "edges":
        g, value = parse_edge_list(Path(args.edges).read_text()), args.edges
    else:
        name = args.design
        if Path(name).is_file():
            design = parse_design(Path(name).read_text())
        else:
            design = builtin_design(name)
        g = block_intersection_graph(design) if args.big else incidence_graph(design)
        value = f"{name} {'big' if args.big else 'incidence'}"
    if args.product:
        if not args.factor:
            raise GraphError("--product needs --factor")
        h = make_family(FamilySpec.parse(args.factor))
        g = product(g, h, args.product)
        value = f"({value}) {args.product} ({' '.join(args.factor)})"
    elif args.factor:
        raise GraphError("--factor needs --product")
    if args.line_graph:
        g = line_graph(g)
        value = f"line graph of ({value})"
    return g, graph_descriptor(g, source, value)


def _add_game(p: argparse.ArgumentParser) -> None:
    p.add_argument("--game", choices=[v.value for v in Variant], default="surround")
    p.add_argument("--mode", choices=MODES, default="worklist", help="fixed-point schedule")
    p.add_argument("--budget", type=int, default=DEFAULT_CONFIG_BUDGET, help="maximum cop configurations")
    p.add_argument("--oracle", action="store_true", help=argparse.SUPPRESS)


def _fmt_config(g: Graph, t: CopConfig) -> str:
    return "[" + " ".join(g.label(c) for c in t) + "]"


# --------------------------------------------------------------- commands

def cmd_number(args: argparse.Namespace, out: TextIO) -> int:
    g, desc = load_graph(args)
    t0 = time.perf_counter()
    if args.oracle:
        require_connected(g)
        rep = bound_report(g)
        n = naive_game_number(g, args.game)
        result = GameResult(n, Variant(args.game), rep.lo, rep.hi, False, "oracle")
    else:
        result = game_number(g, args.game, args.mode, args.budget)
    secs = time.perf_counter() - t0
    record = result_record(desc, result, secs)
    if args.json:
        print(dumps(record), file=out)
    elif args.csv:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["graph", "variant", "number", "lo", "hi", "pinned_by_bounds", "mode", "seconds"])
        w.writerow([desc["value"], result.variant.value, result.number, result.lo, result.hi,
                    result.pinned_by_bounds, result.mode, f"{secs:.3f}"])
    else:
        print(result.number, file=out)
    return EXIT_OK


def cmd_check(args: argparse.Namespace, out: TextIO) -> int:
    g, desc = load_graph(args)
    t0 = time.perf_counter()
    if args.oracle:
        wins = naive_robber_wins(g, args.cops, args.game)
    else:
        wins = robber_wins(g, args.cops, args.game, args.mode, args.budget)
    secs = time.perf_counter() - t0
    if args.json:
        print(dumps({"graph": desc, "variant": args.game, "mode": "oracle" if args.oracle else args.mode,
                     "k_tested": [asdict(KVerdict(args.cops, wins, round(secs, 6)))]}), file=out)
    else:
        print(f"{'the robber wins' if wins else 'the cops win'} against {args.cops} cop(s)", file=out)
    return EXIT_ROBBER if wins else EXIT_OK


def cmd_bounds(args: argparse.Namespace, out: TextIO) -> int:
    g, desc = load_graph(args)
    rep = bound_report(g, args.node_budget)
    if args.json:
        print(dumps({"graph": desc, **rep.as_dict()}), file=out)
        return EXIT_OK
    for key, val in rep.as_dict().items():
        if key == "warnings":
            for w in val:
                print(f"warning: {w}", file=out)
        else:
            print(f"{key}={'absent' if val is None else val}", file=out)
    print(f"bracket=[{rep.lo}, {rep.hi}]", file=out)
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace, out: TextIO) -> int:
    existing = load_rows(args.out) if args.out else []
    rows = run_sweep(args.nmax, args.game, kmax=args.kmax, nmin=args.nmin, workers=args.workers,
                     mode=args.mode, budget=args.budget, existing=existing)
    text = format_rows(rows, timings=not args.no_times)
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)
    if args.compare:
        bad = compare(rows, args.game)
        for n, k, got, want in bad:
            print(f"mismatch GP({n},{k}): got {got}, table {want}", file=sys.stderr)
        print(f"{len(bad)} mismatches", file=sys.stderr)
        return EXIT_ROBBER if bad else EXIT_OK
    return EXIT_OK


def cmd_gen(args: argparse.Namespace, out: TextIO) -> int:
    g, _ = load_graph(args)
    text = write_graph6(g) + "\n" if args.format == "graph6" else write_edge_list(g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)
    return EXIT_OK


# ------------------------------------------------------------------ play

def _vertex(g: Graph, token: str) -> int:
    labels = g.labels
    if labels is not None and token in labels:
        return labels.index(token)
    try:
        v = int(token)
    except ValueError:
        raise ValueError(f"unknown vertex {token!r}") from None
    if not 0 <= v < g.order:
        raise ValueError(f"vertex {v} out of range")
    return v


class HumanRobber:
    """Reads robber moves from a stream, re-prompting on illegal input."""

    def __init__(self, g: Graph, stdin: TextIO, out: TextIO) -> None:
        self.g, self.stdin, self.out = g, stdin, out

    def _ask(self, prompt: str, legal: list[int], stay: int | None) -> int:
        names = " ".join(self.g.label(v) for v in legal)
        while True:
            print(f"{prompt} (legal: {names}{' or pass' if stay in legal else ''})", file=self.out)
            line = self.stdin.readline()
            if not line:
                raise InputEnded
            token = line.strip()
            try:
                v = stay if token == "pass" and stay is not None else _vertex(self.g, token)
            except ValueError as exc:
                print(f"  {exc}", file=self.out)
                continue
            if v in legal:
                return v
            print(f"  illegal move {token!r}", file=self.out)

    def place(self, config: CopConfig) -> int:
        print(f"cops start on {_fmt_config(self.g, config)}", file=self.out)
        return self._ask("place the robber", legal_placements(self.g, config), None)

    def respond(self, config: CopConfig, robber: int) -> int:
        print(f"cops move to {_fmt_config(self.g, config)}; robber on {self.g.label(robber)}", file=self.out)
        return self._ask("robber move", legal_robber_moves(self.g, config, robber), robber)


def _read_cops(g: Graph, k: int, prompt: str, allowed: set[CopConfig] | None,
               stdin: TextIO, out: TextIO) -> CopConfig:
    while True:
        print(prompt, file=out)
        line = stdin.readline()
        if not line:
            raise InputEnded
        try:
            t = canonical(_vertex(g, tok) for tok in line.split())
        except ValueError as exc:
            print(f"  {exc}", file=out)
            continue
        if len(t) != k:
            print(f"  need exactly {k} positions", file=out)
        elif allowed is not None and t not in allowed:
            print("  not reachable in one round: each cop moves along at most one edge", file=out)
        else:
            return t


def cmd_play(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> int:
    g, _ = load_graph(args)
    variant = Variant(args.game)
    table = solve_positions(g, args.cops, variant, args.state_budget)
    try:
        if table is not None:
            return _play_as_robber(g, table, stdin, out)
        return _play_as_cops(g, args.cops, variant, args.rounds, args.budget, stdin, out)
    except InputEnded:
        print("input ended; session aborted", file=out)
        return EXIT_INPUT


def _play_as_robber(g: Graph, table, stdin: TextIO, out: TextIO) -> int:
    print(f"the cops win with {table.k}; they need at most {table.initial_rank} round(s). You are the robber.",
          file=out)
    if not legal_placements(g, table.initial):
        print(f"cops cover every vertex from {_fmt_config(g, table.initial)}: no legal robber placement, "
              "cops win immediately", file=out)
        return EXIT_OK
    tr = simulate(g, table, HumanRobber(g, stdin, out))
    last = tr.rounds[-1]
    print(f"cops on {_fmt_config(g, last.cops)}, robber on {g.label(last.robber)}: "
          f"{tr.outcome} after {tr.cop_rounds} round(s) (bound {table.initial_rank})", file=out)
    return EXIT_OK


def _play_as_cops(g: Graph, k: int, variant: Variant, rounds: int, budget: int,
                  stdin: TextIO, out: TextIO) -> int:
    psi = refine_to_fixpoint(g, init_psi(g, k, variant, budget))
    policy = RobberPolicy(psi)
    print(f"the robber evades {k} cop(s); you play the cops for up to {rounds} round(s)", file=out)
    t = _read_cops(g, k, f"enter {k} starting cop position(s)", None, stdin, out)
    r = policy.place(t)
    print(f"robber placed on {g.label(r)}", file=out)
    for rnd in range(1, rounds + 1):
        t = _read_cops(g, k, f"round {rnd}: cops {_fmt_config(g, t)}, robber {g.label(r)}; enter new cop positions",
                       config_successors(g, t), stdin, out)
        if is_cop_win(g, variant, t, r):
            print("robber caught: evasion policy failed", file=out)
            return EXIT_ROBBER
        r = policy.respond(t, r)
        print(f"robber moves to {g.label(r)}", file=out)
    print(f"robber survived {rounds} round(s)", file=out)
    return EXIT_OK


# ------------------------------------------------------------------ main

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="surround", description="Surrounding Cops and Robbers solver")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("number", help="compute the surrounding cop number (or cop number)")
    _add_source(p)
    _add_game(p)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")

    p = sub.add_parser("check", help="decide the game for a fixed number of cops")
    _add_source(p)
    _add_game(p)
    p.add_argument("--cops", type=int, required=True, metavar="K")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("bounds", help="print lower and upper bounds")
    _add_source(p)
    p.add_argument("--node-budget", type=int, default=10**7, help="clique search node budget")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("sweep", help="solve all GP(n,k) up to --nmax")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--nmin", type=int, default=3)
    p.add_argument("--kmax", type=int)
    _add_game(p)
    p.add_argument("--out", help="CSV file; rows already in it are kept and skipped")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--no-times", action="store_true", help="leave the seconds column empty")
    p.add_argument("--compare", action="store_true", help="diff against the bundled tables")

    p = sub.add_parser("play", help="play the robber against the cop strategy (or the cops against the robber)")
    _add_source(p)
    p.add_argument("--cops", type=int, required=True, metavar="K")
    p.add_argument("--game", choices=[v.value for v in Variant], default="surround")
    p.add_argument("--rounds", type=int, default=100, help="round limit when you play the cops")
    p.add_argument("--budget", type=int, default=DEFAULT_CONFIG_BUDGET)
    p.add_argument("--state-budget", type=int, default=DEFAULT_STATE_BUDGET)

    p = sub.add_parser("gen", help="write a graph")
    _add_source(p)
    p.add_argument("--format", choices=("graph6", "edges"), default="edges")
    p.add_argument("--out")
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, stdin: TextIO | None = None) -> int:
    out = out or sys.stdout
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2), format="%(levelname)s %(message)s")
    commands = {"number": cmd_number, "check": cmd_check, "bounds": cmd_bounds,
                "sweep": cmd_sweep, "gen": cmd_gen}
    try:
        if args.command == "play":
            return cmd_play(args, out, stdin)
        return commands[args.command](args, out)
    except DisconnectedGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (GraphError, DesignError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
