"""The total domination game as an immutable state machine.

A :class:`GameState` records the played set ``D`` and the totally dominated
set ``T`` as bitmasks.  Colours, weights and move values are derived from
them on demand:

======  ====================================  ======
colour  meaning                               weight
======  ====================================  ======
white   not dominated, not played             3
green   not dominated, played                 2
blue    dominated, some neighbour undominated 1
red     dominated, every neighbour dominated  0
======  ====================================  ======

The overlay colours ``purple`` and ``indigo`` live in :mod:`tdgame.overlay`;
they are declared here so that residual views and phase-2 classification
work on either kind of state.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, replace
from typing import Protocol, Sequence

from .graph import Graph, _bits

__all__ = [
    "Color",
    "Player",
    "Phase",
    "Pattern",
    "GameState",
    "ResidualView",
    "GameError",
    "IllegalMoveError",
    "GameOverError",
    "IsolatedVertexError",
    "PhaseError",
    "new_game",
    "color_masks",
    "phase_of",
    "classify_phase2",
    "PATTERN_MOVES",
    "PATTERN_WEIGHT",
    "pattern_counts",
    "predicted_remaining_moves",
]


class Color(enum.Enum):
    WHITE = "white"
    GREEN = "green"
    BLUE = "blue"
    RED = "red"
    PURPLE = "purple"
    INDIGO = "indigo"

    @property
    def weight(self) -> int:
        return _WEIGHT[self]

    @property
    def whiteish(self) -> bool:
        """White for game purposes (purple behaves exactly like white)."""
        return self is Color.WHITE or self is Color.PURPLE

    @property
    def blueish(self) -> bool:
        return self is Color.BLUE or self is Color.INDIGO


_WEIGHT = {
    Color.WHITE: 3,
    Color.GREEN: 2,
    Color.BLUE: 1,
    Color.RED: 0,
    Color.PURPLE: 4,
    Color.INDIGO: 2,
}


class Player(enum.Enum):
    DOMINATOR = "dominator"
    STALLER = "staller"

    @property
    def other(self) -> Player:
        return Player.STALLER if self is Player.DOMINATOR else Player.DOMINATOR

    @classmethod
    def parse(cls, text: str) -> Player:
        key = text.strip().lower()
        if key in ("d", "dom", "dominator"):
            return cls.DOMINATOR
        if key in ("s", "stall", "staller"):
            return cls.STALLER
        raise ValueError(f"unknown player {text!r}")


class Phase(enum.Enum):
    PHASE1 = "phase1"
    PHASE2 = "phase2"


class Pattern(enum.Enum):
    """Residual components allowed once every legal move is worth at most 4."""

    A = "A"  # P4 blue-white-white-blue
    B = "B"  # P3 blue-green-blue
    C = "C"  # P2 blue-green
    D = "D"  # P2 blue-white
    E = "E"  # P2 indigo-green
    OTHER = "OTHER"


#: moves needed to finish a component of each pattern
PATTERN_MOVES = {Pattern.A: 2, Pattern.B: 1, Pattern.C: 1, Pattern.D: 1, Pattern.E: 1}
#: weight of a component of each pattern
PATTERN_WEIGHT = {Pattern.A: 8, Pattern.B: 4, Pattern.C: 4, Pattern.D: 4, Pattern.E: 4}


class GameError(Exception):
    pass


class IllegalMoveError(GameError, ValueError):
    def __init__(self, vertex: int, reason: str = "no undominated neighbour"):
        super().__init__(f"illegal move {vertex}: {reason}")
        self.vertex = vertex


class GameOverError(GameError):
    pass


class IsolatedVertexError(GameError, ValueError):
    pass


class PhaseError(GameError):
    pass


def color_masks(g: Graph, played: int, dominated: int) -> tuple[int, int, int, int]:
    """Bitmasks ``(white, green, blue, red)`` for the given ``D`` and ``T``."""
    undominated = g.full_mask & ~dominated
    white = undominated & ~played
    green = undominated & played
    blue = 0
    for v in _bits(dominated):
        if g.adj[v] & undominated:
            blue |= 1 << v
    red = dominated & ~blue
    return white, green, blue, red


def _raw_weight(g: Graph, played: int, dominated: int) -> int:
    white, green, blue, _ = color_masks(g, played, dominated)
    return 3 * white.bit_count() + 2 * green.bit_count() + blue.bit_count()


@dataclass(frozen=True)
class GameState:
    """Immutable game position.

    ``played`` and ``dominated`` are bitmasks over the vertices of ``graph``.
    """

    graph: Graph
    played: int = 0
    dominated: int = 0
    turn: Player = Player.DOMINATOR
    moves_made: int = 0

    @property
    def played_set(self) -> frozenset[int]:
        return frozenset(_bits(self.played))

    @property
    def dominated_set(self) -> frozenset[int]:
        return frozenset(_bits(self.dominated))

    def is_legal(self, v: int) -> bool:
        return 0 <= v < self.graph.n and bool(self.graph.adj[v] & ~self.dominated)

    def legal_moves(self) -> list[int]:
        """Vertices with at least one undominated neighbour, ascending."""
        undominated = ~self.dominated
        return [v for v, nbrs in enumerate(self.graph.adj) if nbrs & undominated]

    def is_game_over(self) -> bool:
        return self.dominated == self.graph.full_mask

    def play(self, v: int) -> GameState:
        if self.is_game_over():
            raise GameOverError("game is over")
        if not self.is_legal(v):
            raise IllegalMoveError(v)
        return replace(
            self,
            played=self.played | 1 << v,
            dominated=self.dominated | self.graph.adj[v],
            turn=self.turn.other,
            moves_made=self.moves_made + 1,
        )

    def color_masks(self) -> tuple[int, int, int, int]:
        return color_masks(self.graph, self.played, self.dominated)

    def colors(self) -> list[Color]:
        white, green, blue, _ = self.color_masks()
        out = []
        for v in range(self.graph.n):
            bit = 1 << v
            if white & bit:
                out.append(Color.WHITE)
            elif green & bit:
                out.append(Color.GREEN)
            elif blue & bit:
                out.append(Color.BLUE)
            else:
                out.append(Color.RED)
        return out

    def color(self, v: int) -> Color:
        return self.colors()[v]

    def weight(self) -> int:
        return _raw_weight(self.graph, self.played, self.dominated)

    def move_value(self, v: int) -> int:
        """Weight decrease caused by playing ``v``."""
        if not self.is_legal(v):
            raise IllegalMoveError(v)
        after = _raw_weight(self.graph, self.played | 1 << v, self.dominated | self.graph.adj[v])
        return self.weight() - after

    def residual_view(self) -> ResidualView:
        return ResidualView.build(self.graph, self.colors())

    def fingerprint(self) -> str:
        return f"D={self.played:#x},T={self.dominated:#x},turn={self.turn.value}"


def new_game(g: Graph, first: Player = Player.DOMINATOR) -> GameState:
    """Fresh game: every vertex white, total weight ``3n``."""
    isolated = g.isolated_vertices()
    if isolated:
        raise IsolatedVertexError(f"graph has isolated vertices {isolated}")
    return GameState(g, turn=first)


@dataclass(frozen=True)
class ResidualView:
    """Non-red vertices with blue-blue edges removed.

    ``adj`` masks are restricted to the view; red vertices get mask 0 and are
    absent from ``vertices``.  Indigo counts as blue when dropping edges.
    """

    graph: Graph
    colors: tuple[Color, ...]
    vertices: int
    adj: tuple[int, ...]

    @classmethod
    def build(cls, g: Graph, colors: Sequence[Color]) -> ResidualView:
        keep = 0
        blue = 0
        for v, c in enumerate(colors):
            if c is not Color.RED:
                keep |= 1 << v
            if c.blueish:
                blue |= 1 << v
        adj = []
        for v in range(g.n):
            if not keep >> v & 1:
                adj.append(0)
                continue
            mask = g.adj[v] & keep
            if blue >> v & 1:
                mask &= ~blue
            adj.append(mask)
        return cls(g, tuple(colors), keep, tuple(adj))

    def __contains__(self, v: int) -> bool:
        return bool(self.vertices >> v & 1)

    def vertex_list(self) -> list[int]:
        return list(_bits(self.vertices))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(v, u) for v in _bits(self.vertices) for u in _bits(self.adj[v]) if v < u]

    def is_leaf(self, v: int) -> bool:
        return v in self and self.degree(v) == 1

    def is_empty(self) -> bool:
        return self.vertices == 0

    def components(self) -> list[list[int]]:
        remaining = self.vertices
        comps = []
        while remaining:
            low = remaining & -remaining
            comp = frontier = low
            while frontier:
                nxt = 0
                for u in _bits(frontier):
                    nxt |= self.adj[u]
                frontier = nxt & ~comp
                comp |= nxt
            remaining &= ~comp
            comps.append(list(_bits(comp)))
        return comps

    def path_order(self, comp: Sequence[int]) -> list[int] | None:
        """Vertices of ``comp`` in path order if the component is a path."""
        if len(comp) == 1:
            return list(comp)
        ends = [v for v in comp if self.degree(v) == 1]
        if len(ends) != 2 or any(self.degree(v) > 2 for v in comp):
            return None
        if sum(self.degree(v) for v in comp) != 2 * (len(comp) - 1):
            return None
        start = min(ends)
        order = [start]
        prev, cur = -1, start
        while len(order) < len(comp):
            (nxt,) = [u for u in self.neighbors(cur) if u != prev]
            order.append(nxt)
            prev, cur = cur, nxt
        return order

    def classify_component(self, comp: Sequence[int]) -> Pattern:
        order = self.path_order(comp)
        if order is None:
            return Pattern.OTHER
        seq = [self.colors[v] for v in order]
        if seq[0] is not Color.BLUE and seq[-1] is Color.BLUE:
            seq.reverse()
        W, G, B, I = Color.WHITE, Color.GREEN, Color.BLUE, Color.INDIGO
        if seq == [B, W, W, B]:
            return Pattern.A
        if seq == [B, G, B]:
            return Pattern.B
        if seq == [B, G]:
            return Pattern.C
        if seq == [B, W]:
            return Pattern.D
        if seq in ([I, G], [G, I]):
            return Pattern.E
        return Pattern.OTHER


class _Position(Protocol):
    def legal_moves(self) -> list[int]: ...

    def move_value(self, v: int) -> int: ...

    def is_game_over(self) -> bool: ...

    def residual_view(self) -> ResidualView: ...


def phase_of(s: _Position) -> Phase:
    """Phase 1 iff some legal move is worth at least 5.

    Works on plain states (colour weights 3/2/1/0) and on overlay states, whose
    move values include banked surplus.
    """
    if s.is_game_over():
        raise PhaseError("game is already over")
    if any(s.move_value(v) >= 5 for v in s.legal_moves()):
        return Phase.PHASE1
    return Phase.PHASE2


def classify_phase2(s: _Position) -> list[tuple[list[int], Pattern]]:
    """Label each residual component with its phase-2 pattern.

    Unexpected shapes come back as ``Pattern.OTHER`` instead of raising, so
    callers can report them.
    """
    if phase_of(s) is not Phase.PHASE2:
        raise PhaseError("classification is only defined in phase 2")
    view = s.residual_view()
    return [(comp, view.classify_component(comp)) for comp in view.components()]


def pattern_counts(classification: Sequence[tuple[list[int], Pattern]]) -> Counter:
    return Counter(p for _, p in classification)


def predicted_remaining_moves(classification: Sequence[tuple[list[int], Pattern]]) -> int:
    """Moves left once phase 2 starts: two per P4 component, one per other component."""
    return sum(PATTERN_MOVES.get(p, 0) for _, p in classification)
