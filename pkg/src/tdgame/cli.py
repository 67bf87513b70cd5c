"""Command-line entry point: ``tdgame {solve,play,verify,classify,enumerate}``."""

from __future__ import annotations

import argparse
import contextlib
import sys
from collections import Counter
from pathlib import Path
from typing import Callable, Sequence, TextIO

from .enumeration import MAX_ENUMERATION_N, connected_graphs_up_to
from .game import (
    GameError,
    Phase,
    Player,
    classify_phase2,
    new_game,
    phase_of,
    predicted_remaining_moves,
)
from .graph import (
    Graph,
    check_condition_a,
    check_condition_b,
    graph_key,
    parse_family,
    parse_graph,
    read_graph_list,
    render_graph,
    to_graph6,
)
from .overlay import OverlayState, process_move
from .solver import DEFAULT_LIMIT, Solver, SolverLimitError
from .strategies import Strategy, StrategyContext, make_strategy, run_game
from .transcript import header_line, move_line, parse_transcript, phase2_line, summary_line
from .verify import CHECKS, exhaustive_corpus, format_report, random_corpus, verify_corpus


class HumanAbort(Exception):
    pass


class HumanStrategy:
    """Reads moves from a text stream; illegal or garbled input is re-prompted."""

    def __init__(self, stdin: TextIO | None = None, stdout: TextIO | None = None):
        self.stdin = stdin or sys.stdin
        self.stdout = stdout or sys.stderr

    def __call__(self, ctx: StrategyContext) -> tuple[int, str]:
        state = ctx.state
        legal = state.legal_moves()
        listing = " ".join(f"{v}({state.move_value(v)})" for v in legal)
        print(f"{state.turn.value} to move; legal (value): {listing}", file=self.stdout)
        while True:
            print("vertex> ", end="", file=self.stdout, flush=True)
            line = self.stdin.readline()
            if not line:
                raise HumanAbort("end of input")
            try:
                v = int(line.strip())
            except ValueError:
                print(f"not a vertex id: {line.strip()!r}", file=self.stdout)
                continue
            if v not in legal:
                print(f"illegal move {v}", file=self.stdout)
                continue
            return v, "human"


def _load_graph(args: argparse.Namespace) -> Graph:
    if getattr(args, "family", None):
        return parse_family(args.family)
    if getattr(args, "graph", None):
        text = sys.stdin.read() if args.graph == "-" else Path(args.graph).read_text()
        return parse_graph(text)
    raise ValueError("give --graph FILE or --family SPEC")


def _emit(lines, out: TextIO) -> None:
    for line in lines:
        print(line, file=out)


def cmd_solve(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    result = Solver(g, args.max_n).solve()
    out = args.stream
    print(f"gamma_tg={result.gamma_tg} gamma_tg'={result.gamma_tg_prime}", file=out)
    print(
        "openings dominator=" + ",".join(map(str, result.dominator_openings))
        + " staller=" + ",".join(map(str, result.staller_openings)),
        file=out,
    )
    print(f"n={g.n} states={result.states_explored} bound_3n_4={3 * g.n // 4}", file=out)
    return 0


def _strategy(name: str, seed: int, opponent: Strategy | None = None) -> Strategy:
    if name == "human":
        return HumanStrategy()
    return make_strategy(name, seed, opponent)


def cmd_play(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    dom = _strategy(args.dom, args.seed)
    stall = _strategy(args.stall, args.seed, opponent=dom)
    first = Player.parse(args.first)
    out = args.stream

    def stream(event) -> None:
        rec = event.record
        if rec.patterns is not None:
            print(phase2_line(rec), file=out, flush=True)
        print(move_line(rec), file=out, flush=True)

    print(header_line(g, first), file=out, flush=True)
    try:
        transcript = run_game(g, dom, stall, first, observers=[stream])
    except HumanAbort as exc:
        print(f"aborted: {exc}", file=sys.stderr)
        return 3
    print(summary_line(transcript), file=out, flush=True)
    return 0


def _parse_moves(text: str) -> list[int]:
    return [int(x) for x in text.replace(",", " ").split()]


def cmd_classify(args: argparse.Namespace) -> int:
    if args.transcript:
        parsed = parse_transcript(Path(args.transcript).read_text())
        g, first, moves = parsed.graph, parsed.first, parsed.vertices
    else:
        g = _load_graph(args)
        first = Player.parse(args.first)
        moves = _parse_moves(args.moves or "")
    if args.upto is not None:
        moves = moves[: args.upto]
    out = args.stream
    print(header_line(g, first), file=out)
    state = OverlayState(new_game(g, first))
    states = [state]
    for v in moves:
        state, _ = process_move(state, v)
        states.append(state)
    for idx, s in enumerate(states):
        final = idx == len(states) - 1
        if s.is_game_over():
            print(f"turn\t{idx}\tover", file=out)
            break
        if s.turn is not Player.DOMINATOR and not final:
            continue
        phase = phase_of(s)
        fields = ["turn", str(idx), s.turn.value, phase.value]
        if phase is Phase.PHASE2:
            labels = classify_phase2(s)
            counts = Counter(p.value for _, p in labels)
            fields.append(",".join(f"{k}:{v}" for k, v in sorted(counts.items())))
            fields.append(f"t={counts.get('A', 0)}")
            fields.append(f"s={sum(c for k, c in counts.items() if k != 'A')}")
            fields.append(f"remaining={predicted_remaining_moves(labels)}")
        print("\t".join(fields), file=out)
    return 0


def _graph_filter(name: str | None) -> Callable[[Graph], bool] | None:
    if not name:
        return None
    filters = {
        "ab": lambda g: check_condition_a(g) and check_condition_b(g),
        "mindeg2": lambda g: g.min_degree >= 2,
        "isolate-free": lambda g: not g.isolated_vertices(),
    }
    if name not in filters:
        raise ValueError(f"unknown filter {name!r}; expected one of {', '.join(filters)}")
    return filters[name]


def _parse_range(text: str) -> tuple[int, int]:
    if "-" in text:
        lo, hi = text.split("-", 1)
        return int(lo), int(hi)
    return int(text), int(text)


def cmd_verify(args: argparse.Namespace) -> int:
    checks = tuple(c.strip() for c in args.checks.split(",") if c.strip())
    bad = set(checks) - set(CHECKS)
    if bad:
        raise ValueError(f"unknown checks {sorted(bad)}; expected a subset of {','.join(CHECKS)}")
    predicate = _graph_filter(args.filter)
    sources = [bool(args.exhaustive), bool(args.random), bool(args.graph_list)]
    if sum(sources) != 1:
        raise ValueError("choose exactly one corpus: --exhaustive N, --random COUNT or --graph-list FILE")
    if args.exhaustive:
        if args.exhaustive > MAX_ENUMERATION_N:
            raise ValueError(f"exhaustive corpora are limited to n <= {MAX_ENUMERATION_N}")
        graphs = list(exhaustive_corpus(args.exhaustive, args.min_n, predicate))
    elif args.random:
        graphs = random_corpus(
            args.random, _parse_range(args.n), args.model, args.p, args.seed, predicate
        )
    else:
        graphs = []
        for path in args.graph_list:
            graphs.extend(read_graph_list(Path(path).read_text()))
        if predicate:
            graphs = [g for g in graphs if predicate(g)]
    report = verify_corpus(
        graphs,
        checks,
        solver_limit=args.max_n,
        random_stallers=args.random_stallers,
        seed=args.seed,
        jobs=args.jobs,
    )
    out = args.stream
    _emit(format_report(report, verbose=args.verbose), out)
    return 0 if report.ok else 1


def cmd_enumerate(args: argparse.Namespace) -> int:
    predicate = _graph_filter(args.filter)
    out = args.stream
    count = 0
    for g in connected_graphs_up_to(args.max_n, args.min_n):
        if predicate and not predicate(g):
            continue
        count += 1
        if args.count:
            continue
        if args.format == "g6":
            print(to_graph6(g), file=out)
        elif args.format == "line":
            print(graph_key(g), file=out)
        else:
            print(render_graph(g), file=out)
    if args.count:
        print(count, file=out)
    return 0


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("--graph", metavar="FILE", help="edge-list file ('-' for stdin)")
    src.add_argument("--family", metavar="SPEC", help="e.g. path:4, cycle:5, star:3, spider:2,2, random:10,0.3,7")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tdgame", description="Play, solve and verify total domination games")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="exact game total domination numbers")
    _add_graph_args(p)
    p.add_argument("--max-n", type=int, default=DEFAULT_LIMIT)
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("play", help="play one game and print its transcript")
    _add_graph_args(p)
    p.add_argument("--dom", default="dom-r1r4", help="dom-greedy | dom-r1r4 | dom-opt | human")
    p.add_argument("--stall", default="stall-opt",
                   help="stall-min | stall-opt | stall-rand(SEED) | stall-adv | human")
    p.add_argument("--first", default="d", help="d or s")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_play)

    p = sub.add_parser("verify", help="check bounds and proof invariants over a corpus")
    p.add_argument("--exhaustive", type=int, metavar="N", help="all connected graphs with up to N vertices")
    p.add_argument("--min-n", type=int, default=3)
    p.add_argument("--random", type=int, metavar="COUNT", help="COUNT random graphs")
    p.add_argument("--n", default="10", help="order or range LO-HI for random graphs")
    p.add_argument("--model", default="gnp", choices=["gnp", "mindeg2", "tree"])
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--graph-list", nargs="+", metavar="FILE", help="graph6 or blank-line separated edge lists")
    p.add_argument("--filter", choices=["ab", "mindeg2", "isolate-free"])
    p.add_argument("--checks", default=",".join(CHECKS))
    p.add_argument("--random-stallers", type=int, default=0, help="extra seeded random Staller games per graph")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, default=DEFAULT_LIMIT, help="solver vertex limit")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--verbose", action="store_true", help="print a record for every graph")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="phase and phase-2 component patterns along a move sequence")
    _add_graph_args(p)
    p.add_argument("--transcript", metavar="FILE")
    p.add_argument("--moves", help="comma separated vertices")
    p.add_argument("--upto", type=int, help="use only the first K moves")
    p.add_argument("--first", default="d")
    p.add_argument("--out")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("enumerate", help="list connected graphs up to isomorphism")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--filter", choices=["ab", "mindeg2", "isolate-free"])
    p.add_argument("--format", choices=["edges", "g6", "line"], default="g6")
    p.add_argument("--count", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with contextlib.ExitStack() as stack:
            args.stream = stack.enter_context(open(args.out, "w")) if args.out else sys.stdout
            return args.func(args)
    except (ValueError, GameError, SolverLimitError, OSError) as exc:
        print(f"tdgame {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
