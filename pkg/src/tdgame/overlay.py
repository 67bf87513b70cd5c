"""Surplus bookkeeping on top of the plain game: purple and indigo vertices.

Purple is a white vertex carrying one banked unit (weight 4), indigo a blue
vertex carrying one banked unit (weight 2).  Units are banked only on
Staller's moves, by deducting them from that move's weight decrease, and are
withdrawn automatically when the carrier changes colour: a purple vertex
that gets dominated or played, or an indigo vertex that turns red, loses its
overlay and the extra unit shows up in that move's value.

Per Staller move the decision table is

(i)   white leaf next to a purple support ``x``: bank 1 on ``x`` (now indigo);
(ii)  problematic vertex with ``k >= 2`` supports, or ``k = 1`` and value
      ``>= 4``: bank 1 on every associated support (now purple);
(iii) problematic vertex with ``k = 1`` and value exactly 3: nothing banked,
      but Dominator owes an immediate reply on the associated support;
(iv)  anything else: nothing banked.

Case (i) wins when a move qualifies for both (i) and (ii).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterator, Union

from .game import Color, GameState, IllegalMoveError, Player, ResidualView, color_masks
from .graph import Graph, _bits

__all__ = [
    "OverlayState",
    "LedgerEntry",
    "Ledger",
    "ProblematicPath",
    "ProblematicReport",
    "detect_problematic",
    "problematic_paths",
    "targeted_supports",
    "process_staller_move",
    "process_dominator_move",
    "process_move",
]


@dataclass(frozen=True)
class OverlayState:
    """A :class:`GameState` plus purple/indigo bitmasks.

    The masks are normalised on construction: purple survives only on white
    vertices and indigo only on blue ones.
    """

    game: GameState
    purple: int = 0
    indigo: int = 0

    def __post_init__(self) -> None:
        white, _, blue, _ = self.game.color_masks()
        object.__setattr__(self, "purple", self.purple & white)
        object.__setattr__(self, "indigo", self.indigo & blue)

    @classmethod
    def fresh(cls, game: GameState) -> OverlayState:
        return cls(game)

    @property
    def graph(self) -> Graph:
        return self.game.graph

    @property
    def turn(self) -> Player:
        return self.game.turn

    @property
    def moves_made(self) -> int:
        return self.game.moves_made

    def is_legal(self, v: int) -> bool:
        return self.game.is_legal(v)

    def legal_moves(self) -> list[int]:
        return self.game.legal_moves()

    def is_game_over(self) -> bool:
        return self.game.is_game_over()

    def colors(self) -> list[Color]:
        out = self.game.colors()
        for v in _bits(self.purple):
            out[v] = Color.PURPLE
        for v in _bits(self.indigo):
            out[v] = Color.INDIGO
        return out

    def weight(self) -> int:
        return self.game.weight() + self.purple.bit_count() + self.indigo.bit_count()

    def play(self, v: int) -> OverlayState:
        """Play ``v`` without any banking; surplus on recoloured carriers is released."""
        return OverlayState(self.game.play(v), self.purple, self.indigo)

    def move_value(self, v: int) -> int:
        """Overlay-weight decrease of playing ``v`` before any banking."""
        if not self.is_legal(v):
            raise IllegalMoveError(v)
        g = self.graph
        played = self.game.played | 1 << v
        dominated = self.game.dominated | g.adj[v]
        white, green, blue, _ = color_masks(g, played, dominated)
        after = (
            3 * white.bit_count()
            + 2 * green.bit_count()
            + blue.bit_count()
            + (self.purple & white).bit_count()
            + (self.indigo & blue).bit_count()
        )
        return self.weight() - after

    def residual_view(self) -> ResidualView:
        return ResidualView.build(self.graph, self.colors())

    def with_purple(self, *vertices: int) -> OverlayState:
        mask = self.purple
        for v in vertices:
            mask |= 1 << v
        return replace(self, purple=mask)

    def with_indigo(self, *vertices: int) -> OverlayState:
        mask = self.indigo
        for v in vertices:
            mask |= 1 << v
        return replace(self, indigo=mask)

    def fingerprint(self) -> str:
        return f"{self.game.fingerprint()},P={self.purple:#x},I={self.indigo:#x}"


Position = Union[GameState, OverlayState]


# ---------------------------------------------------------------------------
# Structural predicates on residual views


@dataclass(frozen=True)
class ProblematicPath:
    u: int
    v: int
    w: int
    x: int

    def __iter__(self) -> Iterator[int]:
        return iter((self.u, self.v, self.w, self.x))


@dataclass(frozen=True)
class ProblematicReport:
    vertex: int
    paths: tuple[ProblematicPath, ...]
    supports: tuple[int, ...]
    value: int | None = None

    @property
    def k(self) -> int:
        return len(self.supports)


def _whiteish_leaf(view: ResidualView, v: int) -> bool:
    return v in view and view.colors[v].whiteish and view.degree(v) == 1


def problematic_paths(view: ResidualView) -> dict[int, list[ProblematicPath]]:
    """Induced paths ``uvwx`` with ``v, w, x`` white (or purple) and ``x`` a leaf.

    Keyed by the head ``u``, which must itself be white/purple or blue/indigo.
    """
    colors = view.colors
    found: dict[int, list[ProblematicPath]] = {}
    for x in view.vertex_list():
        if not _whiteish_leaf(view, x):
            continue
        (w,) = view.neighbors(x)
        if not colors[w].whiteish:
            continue
        for v in view.neighbors(w):
            if v == x or not colors[v].whiteish:
                continue
            for u in view.neighbors(v):
                if u == w or view.adj[u] >> w & 1 or view.adj[u] >> x & 1:
                    continue
                if not (colors[u].whiteish or colors[u].blueish):
                    continue
                found.setdefault(u, []).append(ProblematicPath(u, v, w, x))
    for paths in found.values():
        paths.sort(key=lambda p: (p.v, p.w, p.x))
    return dict(sorted(found.items()))


def detect_problematic(position: Position | ResidualView) -> list[ProblematicReport]:
    """Every problematic vertex with its paths and associated supports.

    Given a state rather than a bare view, each report also carries the
    vertex's current value (overlay value for overlay states).
    """
    if isinstance(position, ResidualView):
        view, valuer = position, None
    else:
        view, valuer = position.residual_view(), position
    reports = []
    for u, paths in problematic_paths(view).items():
        supports = tuple(sorted({p.w for p in paths}))
        value = valuer.move_value(u) if valuer is not None else None
        reports.append(ProblematicReport(u, tuple(paths), supports, value))
    return reports


def targeted_supports(view: ResidualView) -> list[int]:
    """White or purple vertices with a white or purple leaf neighbour in the view."""
    out = []
    for w in view.vertex_list():
        if view.colors[w].whiteish and any(_whiteish_leaf(view, x) for x in view.neighbors(w)):
            out.append(w)
    return out


# ---------------------------------------------------------------------------
# Ledger


@dataclass(frozen=True)
class LedgerEntry:
    """One move's accounting.

    ``raw_value`` uses the plain colour weights, ``overlay_value`` the overlay
    weights before banking, and ``adjusted_value`` is what the move is
    credited with after banking ``discharge`` units.
    """

    index: int
    player: Player
    vertex: int
    raw_value: int
    overlay_value: int
    discharge: int
    adjusted_value: int
    case: str
    purpled: tuple[int, ...] = ()
    indigoed: tuple[int, ...] = ()
    r2_support: int | None = None
    problematic: ProblematicReport | None = None


@dataclass
class Ledger:
    entries: list[LedgerEntry] = field(default_factory=list)

    def append(self, entry: LedgerEntry) -> None:
        self.entries.append(entry)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[LedgerEntry]:
        return iter(self.entries)

    @property
    def k(self) -> int:
        return len(self.entries)

    @property
    def total_adjusted(self) -> int:
        return sum(e.adjusted_value for e in self.entries)

    @property
    def total_raw(self) -> int:
        return sum(e.raw_value for e in self.entries)

    def four_target_met(self) -> bool:
        return self.total_adjusted >= 4 * self.k

    @property
    def last(self) -> LedgerEntry | None:
        return self.entries[-1] if self.entries else None


# ---------------------------------------------------------------------------
# Move processing


def process_dominator_move(state: OverlayState, v: int) -> tuple[OverlayState, LedgerEntry]:
    """Play a Dominator move; Dominator's moves never bank surplus."""
    raw = state.game.move_value(v)
    value = state.move_value(v)
    after = state.play(v)
    entry = LedgerEntry(
        index=state.moves_made + 1,
        player=state.turn,
        vertex=v,
        raw_value=raw,
        overlay_value=value,
        discharge=0,
        adjusted_value=value,
        case="dominator",
    )
    return after, entry


def process_staller_move(state: OverlayState, v: int) -> tuple[OverlayState, LedgerEntry]:
    """Play a Staller move and apply the banking decision table."""
    raw = state.game.move_value(v)
    value = state.move_value(v)
    view = state.residual_view()
    after = state.play(v)
    index = state.moves_made + 1

    if _whiteish_leaf(view, v):
        (x,) = view.neighbors(v)
        if view.colors[x] is Color.PURPLE:
            after = after.with_indigo(x)
            return after, LedgerEntry(
                index, state.turn, v, raw, value, 1, value - 1, "i", indigoed=(x,)
            )

    report = next((r for r in detect_problematic(view) if r.vertex == v), None)
    if report is not None:
        report = replace(report, value=value)
        if report.k >= 2 or value >= 4:
            fresh = tuple(w for w in report.supports if not state.purple >> w & 1)
            after = after.with_purple(*fresh)
            return after, LedgerEntry(
                index,
                state.turn,
                v,
                raw,
                value,
                len(fresh),
                value - len(fresh),
                "ii",
                purpled=fresh,
                problematic=report,
            )
        return after, LedgerEntry(
            index,
            state.turn,
            v,
            raw,
            value,
            0,
            value,
            "iii",
            r2_support=report.supports[0],
            problematic=report,
        )

    return after, LedgerEntry(index, state.turn, v, raw, value, 0, value, "iv")


def process_move(state: OverlayState, v: int) -> tuple[OverlayState, LedgerEntry]:
    if not state.is_legal(v):
        raise IllegalMoveError(v)
    if state.turn is Player.STALLER:
        return process_staller_move(state, v)
    return process_dominator_move(state, v)
