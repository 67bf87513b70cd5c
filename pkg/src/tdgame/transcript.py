"""Line-delimited transcript text.

::

    graph   6 5;0 1;1 2;2 3;3 4;4 5   first=dominator
    move    1   dominator   1   R3   5   5   phase1
    move    2   staller     0   staller-min   3   3   -
    phase2  3   A:1   remaining=2
    ...
    summary length=4   sum_w=18   four_k=16   four_target=1   bound=4   within_bound=1

Fields are tab-separated.  ``move`` records always carry index, player,
vertex, rule tag, raw value, adjusted value and phase, in that order; the
phase is ``-`` on Staller turns.  A ``phase2`` record precedes each
Dominator move made in phase 2 and lists the residual component patterns.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .game import Phase, Player
from .graph import Graph, graph_key, parse_graph
from .strategies import MoveRecord, Transcript

__all__ = ["format_transcript", "parse_transcript", "ParsedTranscript", "TranscriptFormatError", "move_line"]


class TranscriptFormatError(ValueError):
    pass


def move_line(rec: MoveRecord) -> str:
    phase = rec.phase.value if rec.phase is not None else "-"
    return "\t".join(
        [
            "move",
            str(rec.index),
            rec.player.value,
            str(rec.vertex),
            rec.rule,
            str(rec.raw_value),
            str(rec.adjusted_value),
            phase,
        ]
    )


def phase2_line(rec: MoveRecord) -> str:
    counts = Counter(p.value for p in rec.patterns or ())
    remaining = 2 * counts.get("A", 0) + sum(c for k, c in counts.items() if k not in ("A", "OTHER"))
    tallies = ",".join(f"{k}:{v}" for k, v in sorted(counts.items())) or "-"
    return "\t".join(["phase2", str(rec.index), tallies, f"remaining={remaining}"])


def summary_line(t: Transcript) -> str:
    bound = 3 * t.graph.n // 4
    return "\t".join(
        [
            "summary",
            f"length={t.length}",
            f"sum_w={t.total_adjusted}",
            f"four_k={4 * t.length}",
            f"four_target={int(t.four_target_met())}",
            f"bound={bound}",
            f"within_bound={int(t.length <= bound)}",
        ]
    )


def header_line(g: Graph, first: Player) -> str:
    return f"graph\t{graph_key(g)}\tfirst={first.value}"


def format_transcript(t: Transcript) -> str:
    lines = [header_line(t.graph, t.first)]
    for rec in t.records:
        if rec.patterns is not None:
            lines.append(phase2_line(rec))
        lines.append(move_line(rec))
    lines.append(summary_line(t))
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ParsedMove:
    index: int
    player: Player
    vertex: int
    rule: str
    raw_value: int
    adjusted_value: int
    phase: Phase | None


@dataclass(frozen=True)
class ParsedTranscript:
    graph: Graph
    first: Player
    moves: tuple[ParsedMove, ...]

    @property
    def vertices(self) -> list[int]:
        return [m.vertex for m in self.moves]


def parse_transcript(text: str) -> ParsedTranscript:
    graph: Graph | None = None
    first = Player.DOMINATOR
    moves = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        kind = fields[0]
        try:
            if kind == "graph":
                graph = parse_graph(fields[1].replace(";", "\n"))
                for extra in fields[2:]:
                    if extra.startswith("first="):
                        first = Player.parse(extra.split("=", 1)[1])
            elif kind == "move":
                _, index, player, vertex, rule, raw, adjusted, phase = fields[:8]
                moves.append(
                    ParsedMove(
                        int(index),
                        Player(player),
                        int(vertex),
                        rule,
                        int(raw),
                        int(adjusted),
                        None if phase == "-" else Phase(phase),
                    )
                )
            elif kind in ("phase2", "summary"):
                continue
            else:
                raise TranscriptFormatError(f"line {lineno}: unknown record type {kind!r}")
        except (ValueError, IndexError) as exc:
            if isinstance(exc, TranscriptFormatError):
                raise
            raise TranscriptFormatError(f"line {lineno}: {exc}") from exc
    if graph is None:
        raise TranscriptFormatError("transcript has no graph header")
    return ParsedTranscript(graph, first, tuple(moves))
