"""Dominator and Staller strategies and the game runner.

A strategy is any callable ``strategy(ctx) -> (vertex, tag)``.  Every built-in
breaks ties by the smallest vertex id so that games are reproducible.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Protocol

from .game import (
    GameOverError,
    IllegalMoveError,
    Pattern,
    Phase,
    Player,
    classify_phase2,
    new_game,
    phase_of,
)
from .graph import Graph
from .overlay import Ledger, LedgerEntry, OverlayState, process_move, targeted_supports
from .solver import DEFAULT_LIMIT, solver_for

__all__ = [
    "StrategyContext",
    "Strategy",
    "MoveRecord",
    "Transcript",
    "greedy_dominator",
    "r1r4_dominator",
    "exact_dominator",
    "staller_min_greedy",
    "staller_optimal",
    "RandomStaller",
    "AdversarialStaller",
    "make_strategy",
    "STRATEGY_NAMES",
    "StepEvent",
    "run_game",
    "replay",
]


@dataclass(frozen=True)
class StrategyContext:
    """What a strategy sees: the position, the one before the opponent's
    last move, that move, and the ledger so far."""

    state: OverlayState
    previous: OverlayState | None = None
    last_move: int | None = None
    ledger: Ledger = field(default_factory=Ledger)

    @property
    def last_entry(self) -> LedgerEntry | None:
        return self.ledger.last


class Strategy(Protocol):
    def __call__(self, ctx: StrategyContext) -> tuple[int, str]: ...


def _require_moves(state: OverlayState) -> list[int]:
    if state.is_game_over():
        raise GameOverError("game is over")
    return state.legal_moves()


def _as_context(arg: StrategyContext | OverlayState) -> StrategyContext:
    return arg if isinstance(arg, StrategyContext) else StrategyContext(arg)


def _greedy_choice(state: OverlayState) -> int:
    moves = _require_moves(state)
    values = {v: state.move_value(v) for v in moves}
    best = max(values.values())
    return min(v for v in moves if values[v] == best)


def greedy_dominator(arg: StrategyContext | OverlayState) -> tuple[int, str]:
    """Largest overlay-weight decrease."""
    return _greedy_choice(_as_context(arg).state), "greedy"


def r1r4_dominator(arg: StrategyContext | OverlayState) -> tuple[int, str]:
    """First applicable of R1 (answer a leaf move next to a targeted support),
    R2 (answer a value-3 problematic move), R3 (best targeted support),
    R4 (greedy)."""
    ctx = _as_context(arg)
    state = ctx.state
    _require_moves(state)

    if ctx.previous is not None and ctx.last_move is not None:
        before = ctx.previous.residual_view()
        z = ctx.last_move
        if before.is_leaf(z) and before.colors[z].whiteish:
            (y,) = before.neighbors(z)
            if y in targeted_supports(before) and state.is_legal(y):
                return y, "R1"
        entry = ctx.last_entry
        if entry is not None and entry.vertex == z and entry.r2_support is not None:
            if state.is_legal(entry.r2_support):
                return entry.r2_support, "R2"

    targeted = targeted_supports(state.residual_view())
    if targeted:
        values = {w: state.move_value(w) for w in targeted}
        best = max(values.values())
        return min(w for w in targeted if values[w] == best), "R3"
    return _greedy_choice(state), "R4"


def staller_min_greedy(arg: StrategyContext | OverlayState) -> tuple[int, str]:
    """Smallest overlay-weight decrease."""
    state = _as_context(arg).state
    moves = _require_moves(state)
    values = {v: state.move_value(v) for v in moves}
    low = min(values.values())
    return min(v for v in moves if values[v] == low), "staller-min"


def _exact(state: OverlayState, limit: int) -> int:
    _require_moves(state)
    return solver_for(state.graph, limit).best_move(state.game)


def staller_optimal(arg: StrategyContext | OverlayState, limit: int = DEFAULT_LIMIT) -> tuple[int, str]:
    """Move maximising the minimax length of the whole game."""
    return _exact(_as_context(arg).state, limit), "staller-opt"


def exact_dominator(arg: StrategyContext | OverlayState, limit: int = DEFAULT_LIMIT) -> tuple[int, str]:
    return _exact(_as_context(arg).state, limit), "dom-opt"


class RandomStaller:
    """Uniformly random legal move from a seeded generator."""

    def __init__(self, seed: int = 0):
        self.seed = seed
        self._rng = random.Random(seed)

    def __call__(self, arg: StrategyContext | OverlayState) -> tuple[int, str]:
        moves = _require_moves(_as_context(arg).state)
        return self._rng.choice(moves), "staller-rand"


class AdversarialStaller:
    """Staller that maximises game length against one fixed Dominator strategy.

    Exhaustive search over Staller's replies, memoised on the overlay state
    at Staller's turns.  That is sound for Dominator strategies that read
    only the current state, the state before Staller's move, that move, and
    the last ledger entry, which covers every built-in Dominator.
    Exponential; meant for graphs of ten or so vertices.
    """

    def __init__(self, dominator: Strategy):
        self.dominator = dominator
        self._memo: dict[tuple, int] = {}

    @staticmethod
    def _key(state: OverlayState) -> tuple:
        g = state.game
        return (g.graph, g.played, g.dominated, state.purple, state.indigo)

    def remaining(self, state: OverlayState) -> int:
        """Moves left from a Staller-to-move state under worst-case play."""
        if state.is_game_over():
            return 0
        key = self._key(state)
        cached = self._memo.get(key)
        if cached is None:
            cached = max(self._after(state, v) for v in state.legal_moves())
            self._memo[key] = cached
        return cached

    def _after(self, state: OverlayState, v: int) -> int:
        mid, entry = process_move(state, v)
        if mid.is_game_over():
            return 1
        d, _ = self.dominator(StrategyContext(mid, state, v, Ledger([entry])))
        nxt, _ = process_move(mid, d)
        return 2 + self.remaining(nxt)

    def __call__(self, arg: StrategyContext | OverlayState) -> tuple[int, str]:
        state = _as_context(arg).state
        moves = _require_moves(state)
        scores = {v: self._after(state, v) for v in moves}
        best = max(scores.values())
        return min(v for v in moves if scores[v] == best), "staller-adv"


STRATEGY_NAMES = ("dom-greedy", "dom-r1r4", "dom-opt", "stall-min", "stall-opt", "stall-rand", "stall-adv")

_RAND = re.compile(r"^stall-rand(?:\((\d+)\)|[:=](\d+))?$")


def make_strategy(name: str, seed: int = 0, opponent: Strategy | None = None) -> Strategy:
    """Strategy by name; ``stall-rand(7)`` or ``stall-rand:7`` fixes the seed.

    ``stall-adv`` needs the Dominator strategy it plays against as ``opponent``.
    """
    key = name.strip().lower()
    if key == "stall-adv":
        if opponent is None:
            raise ValueError("stall-adv needs the opposing Dominator strategy")
        return AdversarialStaller(opponent)
    fixed = {
        "dom-greedy": greedy_dominator,
        "dom-r1r4": r1r4_dominator,
        "dom-opt": exact_dominator,
        "stall-min": staller_min_greedy,
        "stall-opt": staller_optimal,
    }
    if key in fixed:
        return fixed[key]
    match = _RAND.match(key)
    if match:
        given = match.group(1) or match.group(2)
        return RandomStaller(int(given) if given is not None else seed)
    raise ValueError(f"unknown strategy {name!r}; expected one of {', '.join(STRATEGY_NAMES)}")


# ---------------------------------------------------------------------------
# Runner


@dataclass(frozen=True)
class MoveRecord:
    index: int
    player: Player
    vertex: int
    rule: str
    raw_value: int
    adjusted_value: int
    phase: Phase | None = None
    patterns: tuple[Pattern, ...] | None = None


@dataclass
class Transcript:
    graph: Graph
    first: Player
    records: list[MoveRecord] = field(default_factory=list)
    ledger: Ledger = field(default_factory=Ledger)

    @property
    def length(self) -> int:
        return len(self.records)

    @property
    def moves(self) -> list[int]:
        return [r.vertex for r in self.records]

    @property
    def total_raw(self) -> int:
        return sum(r.raw_value for r in self.records)

    @property
    def total_adjusted(self) -> int:
        return sum(r.adjusted_value for r in self.records)

    def four_target_met(self) -> bool:
        return self.total_adjusted >= 4 * self.length


@dataclass(frozen=True)
class StepEvent:
    """Passed to runner observers after every move."""

    before: OverlayState
    after: OverlayState
    record: MoveRecord
    entry: LedgerEntry
    context: StrategyContext
    transcript: Transcript


Observer = Callable[[StepEvent], None]


def run_game(
    g: Graph,
    dominator: Strategy,
    staller: Strategy,
    first: Player = Player.DOMINATOR,
    observers: Iterable[Observer] = (),
) -> Transcript:
    """Alternate the two strategies from ``first`` until the game ends.

    Phase and, in phase 2, the residual component patterns are recorded at
    every Dominator turn.
    """
    observers = list(observers)
    state = OverlayState(new_game(g, first))
    transcript = Transcript(g, first)
    previous: OverlayState | None = None
    last_move: int | None = None
    while not state.is_game_over():
        ctx = StrategyContext(state, previous, last_move, transcript.ledger)
        phase = patterns = None
        if state.turn is Player.DOMINATOR:
            phase = phase_of(state)
            if phase is Phase.PHASE2:
                patterns = tuple(p for _, p in classify_phase2(state))
            v, tag = dominator(ctx)
        else:
            v, tag = staller(ctx)
        if not state.is_legal(v):
            raise IllegalMoveError(v, f"strategy {tag} chose an illegal vertex")
        after, entry = process_move(state, v)
        record = MoveRecord(
            entry.index, entry.player, v, tag, entry.raw_value, entry.adjusted_value, phase, patterns
        )
        transcript.records.append(record)
        transcript.ledger.append(entry)
        for observer in observers:
            observer(StepEvent(state, after, record, entry, ctx, transcript))
        previous, last_move, state = state, v, after
    return transcript


def replay(g: Graph, moves: Iterable[int], first: Player = Player.DOMINATOR) -> Transcript:
    """Re-run a fixed move sequence through the engine, recomputing every value."""
    transcript = Transcript(g, first)
    state = OverlayState(new_game(g, first))
    for v in moves:
        if state.is_game_over():
            raise IllegalMoveError(v, "game already over")
        phase = patterns = None
        if state.turn is Player.DOMINATOR:
            phase = phase_of(state)
            if phase is Phase.PHASE2:
                patterns = tuple(p for _, p in classify_phase2(state))
        after, entry = process_move(state, v)
        transcript.records.append(
            MoveRecord(entry.index, entry.player, v, "replay", entry.raw_value,
                       entry.adjusted_value, phase, patterns)
        )
        transcript.ledger.append(entry)
        state = after
    return transcript
