"""Exact game values by memoised minimax.

The remaining length of a game depends only on the dominated set ``T`` and
whose turn it is: legality of ``v`` is ``N(v) ⊄ T`` and playing ``v`` adds
exactly ``N(v)`` to ``T``.  The memo is therefore keyed on ``(T, turn)``.
:func:`solve_naive` walks the full game tree through the engine instead,
carrying the played set, and serves as the independent check.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from functools import lru_cache

from .game import GameOverError, GameState, IsolatedVertexError, Player, new_game
from .graph import Graph

__all__ = [
    "DEFAULT_LIMIT",
    "NAIVE_LIMIT",
    "SolveResult",
    "Solver",
    "SolverLimitError",
    "solve",
    "solve_naive",
    "best_move",
    "solver_for",
]

DEFAULT_LIMIT = 20
NAIVE_LIMIT = 8


class SolverLimitError(ValueError):
    pass


@dataclass(frozen=True)
class SolveResult:
    gamma_tg: int
    gamma_tg_prime: int
    states_explored: int
    dominator_openings: tuple[int, ...]
    staller_openings: tuple[int, ...]


class Solver:
    """Memoised game values for one graph."""

    def __init__(self, g: Graph, limit: int = DEFAULT_LIMIT):
        if g.n > limit:
            raise SolverLimitError(f"n={g.n} exceeds the solver limit {limit}")
        if g.isolated_vertices():
            raise IsolatedVertexError(f"graph has isolated vertices {g.isolated_vertices()}")
        self.graph = g
        self._full = g.full_mask
        # several vertices often share a neighbourhood; dedupe once
        self._moves = sorted(set(g.adj))
        self._memo: tuple[dict[int, int], dict[int, int]] = ({}, {})
        if sys.getrecursionlimit() < 4 * g.n + 100:
            sys.setrecursionlimit(4 * g.n + 100)

    @property
    def states_explored(self) -> int:
        return len(self._memo[0]) + len(self._memo[1])

    def value(self, dominated: int, turn: Player) -> int:
        """Moves still to be played from ``(T, turn)`` under optimal play."""
        return self._value(dominated, turn is Player.DOMINATOR)

    def _value(self, dominated: int, dominator: bool) -> int:
        if dominated == self._full:
            return 0
        memo = self._memo[dominator]
        cached = memo.get(dominated)
        if cached is not None:
            return cached
        children = {dominated | m for m in self._moves if m & ~dominated}
        if dominator:
            best = min(self._value(c, False) for c in children)
        else:
            best = max(self._value(c, True) for c in children)
        memo[dominated] = best + 1
        return best + 1

    def move_scores(self, state: GameState) -> dict[int, int]:
        """Total game length (moves so far included) after each legal move."""
        nxt = state.turn.other
        return {
            v: state.moves_made + 1 + self.value(state.dominated | self.graph.adj[v], nxt)
            for v in state.legal_moves()
        }

    def best_move(self, state: GameState) -> int:
        if state.is_game_over():
            raise GameOverError("game is over")
        scores = self.move_scores(state)
        pick = min if state.turn is Player.DOMINATOR else max
        target = pick(scores.values())
        return min(v for v, s in scores.items() if s == target)

    def optimal_openings(self, first: Player) -> tuple[int, ...]:
        state = new_game(self.graph, first)
        scores = self.move_scores(state)
        pick = min if first is Player.DOMINATOR else max
        target = pick(scores.values())
        return tuple(v for v, s in sorted(scores.items()) if s == target)

    def solve(self) -> SolveResult:
        g_tg = self.value(0, Player.DOMINATOR)
        g_tg_prime = self.value(0, Player.STALLER)
        return SolveResult(
            g_tg,
            g_tg_prime,
            self.states_explored,
            self.optimal_openings(Player.DOMINATOR),
            self.optimal_openings(Player.STALLER),
        )


@lru_cache(maxsize=256)
def solver_for(g: Graph, limit: int = DEFAULT_LIMIT) -> Solver:
    """Shared solver per graph so repeated games reuse one memo table."""
    return Solver(g, limit)


def solve(g: Graph, limit: int = DEFAULT_LIMIT) -> SolveResult:
    """``γ_tg`` and ``γ_tg'`` of ``g`` with optimal openings for both starts."""
    return Solver(g, limit).solve()


def best_move(g: Graph, state: GameState, limit: int = DEFAULT_LIMIT) -> int:
    """A legal move achieving the minimax value for the player to move; ties to the smallest id."""
    return solver_for(g, limit).best_move(state)


def _naive_value(state: GameState, counter: list[int]) -> int:
    counter[0] += 1
    if state.is_game_over():
        return 0
    values = [_naive_value(state.play(v), counter) for v in state.legal_moves()]
    return 1 + (min(values) if state.turn is Player.DOMINATOR else max(values))


def solve_naive(g: Graph, limit: int = NAIVE_LIMIT) -> SolveResult:
    """Unmemoised full game-tree search through the engine; exponential, test use only."""
    if g.n > limit:
        raise SolverLimitError(f"n={g.n} exceeds the naive solver limit {limit}")
    counter = [0]
    results = {}
    openings = {}
    for first in Player:
        root = new_game(g, first)
        scores = {v: 1 + _naive_value(root.play(v), counter) for v in root.legal_moves()}
        pick = min if first is Player.DOMINATOR else max
        results[first] = pick(scores.values())
        openings[first] = tuple(v for v, s in sorted(scores.items()) if s == results[first])
    return SolveResult(
        results[Player.DOMINATOR],
        results[Player.STALLER],
        counter[0],
        openings[Player.DOMINATOR],
        openings[Player.STALLER],
    )
