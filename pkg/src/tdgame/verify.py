"""Corpus verification of the length bounds and per-move invariants.

``verify_graph`` runs the solver and the relevant strategy pairings on one
graph and collects every failed assertion as a :class:`Violation` that
carries the move sequence needed to replay it.  ``verify_corpus`` maps that
over many graphs, optionally in a process pool, and returns results sorted
by canonical form so the output does not depend on scheduling.

Check names:

``thm2``          r1r4 Dominator within ``⌊3n/4⌋`` (and ``γ_tg`` too) on graphs
                  meeting both structural conditions
``thm1``          ``γ_tg <= ⌊4n/5⌋`` when every component has >= 3 vertices
``cor1``          greedy Dominator within ``⌊3n/4⌋`` with the 4-target met, δ >= 2
``claims``        per-move invariants of the potential argument during play
``continuation``  ``|γ_tg - γ_tg'| <= 1``
"""

from __future__ import annotations

import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from .enumeration import canonical_form, connected_graphs_up_to
from .game import Color, Pattern, Player
from .graph import (
    Graph,
    _bits,
    check_condition_a,
    check_condition_b,
    component_profile,
    random_graph,
    random_tree_with_attachments,
    graph_key,
)
from .overlay import OverlayState, targeted_supports
from .solver import DEFAULT_LIMIT, Solver
from .strategies import (
    RandomStaller,
    StepEvent,
    Transcript,
    greedy_dominator,
    r1r4_dominator,
    run_game,
    staller_min_greedy,
    staller_optimal,
)

__all__ = [
    "CHECKS",
    "Violation",
    "GraphReport",
    "VerificationReport",
    "ClaimMonitor",
    "verify_graph",
    "verify_corpus",
    "exhaustive_corpus",
    "random_corpus",
    "graph_key",
    "format_report",
]

CHECKS = ("thm2", "thm1", "cor1", "claims", "continuation")


@dataclass(frozen=True)
class Violation:
    claim: str
    graph: str
    pairing: str
    moves: tuple[int, ...]
    fingerprint: str = ""
    detail: str = ""

    @property
    def offending_move(self) -> int | None:
        return self.moves[-1] if self.moves else None


# ---------------------------------------------------------------------------
# Per-move invariants


class ClaimMonitor:
    """Runner observer asserting the per-move claims of the potential argument.

    ``mode`` is ``"r1r4"`` (graphs meeting both conditions, rule-based
    Dominator) or ``"greedy"`` (minimum degree >= 2, greedy Dominator), which
    narrows the allowed phase-2 patterns to A and B.
    """

    def __init__(self, g: Graph, pairing: str, mode: str, leaf_condition: bool = True):
        self.graph = g
        self.key = graph_key(g)
        self.pairing = pairing
        self.mode = mode
        self.leaf_condition = leaf_condition
        self.violations: list[Violation] = []
        self._saw_r4 = False

    def _flag(self, claim: str, event: StepEvent, detail: str) -> None:
        self.violations.append(
            Violation(
                claim,
                self.key,
                self.pairing,
                tuple(event.transcript.moves),
                event.before.fingerprint(),
                detail,
            )
        )

    def __call__(self, event: StepEvent) -> None:
        before, after, rec, entry = event.before, event.after, event.record, event.entry

        for v in before.legal_moves():
            value = before.game.move_value(v)
            if value < 3:
                self._flag("claim1", event, f"legal move {v} has value {value}")

        if before.weight() - after.weight() != entry.adjusted_value:
            self._flag("conservation", event, "overlay weight change differs from adjusted value")

        if entry.player is Player.STALLER:
            if entry.adjusted_value < 3:
                claim = {"i": "claim5", "ii": "claim4"}.get(entry.case, "claim1")
                self._flag(claim, event, f"staller adjusted value {entry.adjusted_value}")
            report = entry.problematic
            if entry.case == "ii" and report is not None and report.k >= 2:
                if entry.overlay_value < 2 * report.k + 1:
                    self._flag("claim4", event, f"k={report.k} but value {entry.overlay_value}")
                if self.leaf_condition and len({p.v for p in report.paths}) < report.k:
                    self._flag("claim4", event, "problematic paths share their second vertex")
            if entry.purpled:
                view = after.residual_view()
                for w in entry.purpled:
                    if not any(view.is_leaf(x) and view.colors[x].whiteish for x in view.neighbors(w)):
                        self._flag("purple", event, f"purple vertex {w} has no white leaf")

        if rec.patterns is not None:
            allowed = {Pattern.A, Pattern.B} if self.mode == "greedy" else set(Pattern) - {Pattern.OTHER}
            bad = [p.value for p in rec.patterns if p not in allowed]
            if bad:
                claim = "claim3" if self.mode == "greedy" and Pattern.OTHER not in rec.patterns else "claim2/6"
                self._flag(claim, event, f"phase-2 patterns {bad}")

        if self.mode == "r1r4" and entry.player is Player.DOMINATOR:
            if rec.rule in ("R1", "R2", "R3"):
                if self._saw_r4:
                    self._flag("monotone", event, f"{rec.rule} after greedy play began")
                if rec.adjusted_value < 5:
                    self._flag("claim7c", event, f"{rec.rule} move worth {rec.adjusted_value}")
                self._check_claim7_after(event, after)
            elif rec.rule == "R4":
                self._saw_r4 = True

        if after.is_game_over():
            n = self.graph.n
            transcript = event.transcript
            if transcript.total_raw != 3 * n or transcript.total_adjusted != 3 * n or after.weight():
                self._flag(
                    "conservation",
                    event,
                    f"raw sum {transcript.total_raw}, adjusted sum {transcript.total_adjusted}, 3n={3 * n}",
                )

    def _check_claim7_after(self, event: StepEvent, after: OverlayState) -> None:
        view = after.residual_view()
        colors = view.colors
        for w in targeted_supports(view):
            whites = sum(1 for u in _bits(self.graph.adj[w]) if colors[u].whiteish)
            if whites < 3:
                self._flag("claim7a", event, f"targeted support {w} has {whites} white neighbours")
        for v in range(self.graph.n):
            if colors[v] is Color.GREEN and self.graph.degree(v) == 1:
                (u,) = self.graph.neighbors(v)
                if colors[u].blueish:
                    self._flag("claim7b", event, f"green leaf {v} next to blue {u}")


# ---------------------------------------------------------------------------
# Reports


@dataclass
class GraphReport:
    graph: str
    n: int
    condition_a: bool
    condition_b: bool
    components_ok: bool
    min_degree: int
    gamma_tg: int | None = None
    gamma_tg_prime: int | None = None
    games: dict[str, int] = field(default_factory=dict)
    four_target: dict[str, bool] = field(default_factory=dict)
    phase2_counts: dict[str, dict[str, int]] = field(default_factory=dict)
    checked: list[str] = field(default_factory=list)
    violations: list[Violation] = field(default_factory=list)
    sort_key: tuple[int, int] = (0, 0)

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def extremal(self) -> bool:
        return self.gamma_tg is not None and self.gamma_tg == 3 * self.n // 4


@dataclass
class VerificationReport:
    graphs: list[GraphReport]
    checks: tuple[str, ...]

    @property
    def violations(self) -> list[Violation]:
        return [v for r in self.graphs for v in r.violations]

    @property
    def failures(self) -> int:
        return len(self.violations)

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def counts(self) -> Counter:
        return Counter(v.claim for v in self.violations)

    def extremal_instances(self) -> list[GraphReport]:
        return [r for r in self.graphs if r.extremal]

    def games_played(self) -> int:
        return sum(len(r.games) for r in self.graphs)

    def checked_count(self, check: str) -> int:
        return sum(1 for r in self.graphs if check in r.checked)


def _game_with_monitor(
    g: Graph,
    dominator: Callable,
    staller: Callable,
    pairing: str,
    mode: str,
    monitor_claims: bool,
) -> tuple[Transcript, list[Violation]]:
    monitor = ClaimMonitor(g, pairing, mode) if monitor_claims else None
    transcript = run_game(g, dominator, staller, observers=[monitor] if monitor else [])
    return transcript, (monitor.violations if monitor else [])


def _phase2_entry_counts(transcript: Transcript) -> dict[str, int]:
    """Pattern tallies at the first Dominator turn in phase 2 (``t`` and ``s``)."""
    for rec in transcript.records:
        if rec.patterns is not None:
            return dict(sorted(Counter(p.value for p in rec.patterns).items()))
    return {}


def verify_graph(
    g: Graph,
    checks: Sequence[str] = CHECKS,
    solver_limit: int = DEFAULT_LIMIT,
    random_stallers: int = 0,
    seed: int = 0,
) -> GraphReport:
    unknown = set(checks) - set(CHECKS)
    if unknown:
        raise ValueError(f"unknown checks {sorted(unknown)}")
    key = graph_key(g)
    profile = component_profile(g)
    cond_a, cond_b = check_condition_a(g), check_condition_b(g)
    report = GraphReport(
        key,
        g.n,
        cond_a,
        cond_b,
        profile.every_component_at_least_3,
        g.min_degree,
        sort_key=canonical_form(g) if g.n <= 12 else (g.n, hash(key)),
    )
    if g.isolated_vertices():
        return report

    checks = set(checks)
    solvable = g.n <= solver_limit
    theorem_class = cond_a and cond_b and profile.every_component_at_least_3
    min_deg2 = g.min_degree >= 2
    bound34 = 3 * g.n // 4
    bound45 = 4 * g.n // 5
    claims = "claims" in checks

    def fail(claim: str, pairing: str = "", moves: Sequence[int] = (), detail: str = "") -> None:
        report.violations.append(Violation(claim, key, pairing, tuple(moves), "", detail))

    need_solver = solvable and (
        checks & {"thm1", "continuation"}
        or (theorem_class and checks & {"thm2", "claims"})
        or (min_deg2 and checks & {"cor1", "claims"})
    )
    if need_solver:
        result = Solver(g, solver_limit).solve()
        report.gamma_tg, report.gamma_tg_prime = result.gamma_tg, result.gamma_tg_prime

    if "continuation" in checks and report.gamma_tg is not None:
        report.checked.append("continuation")
        if abs(report.gamma_tg - report.gamma_tg_prime) > 1:
            fail("continuation", detail=f"γ_tg={report.gamma_tg}, γ_tg'={report.gamma_tg_prime}")

    if "thm1" in checks and profile.every_component_at_least_3 and report.gamma_tg is not None:
        report.checked.append("thm1")
        if report.gamma_tg > bound45:
            fail("thm1", detail=f"γ_tg={report.gamma_tg} > ⌊4n/5⌋={bound45}")

    stallers: list[tuple[str, Callable]] = []
    if solvable:
        stallers.append(("stall-opt", staller_optimal))
    stallers.append(("stall-min", staller_min_greedy))
    rng = random.Random(seed)
    for _ in range(random_stallers):
        s = rng.randrange(2**31)
        stallers.append((f"stall-rand({s})", RandomStaller(s)))

    families = []
    if theorem_class and checks & {"thm2", "claims"}:
        families.append(("dom-r1r4", r1r4_dominator, "r1r4", "thm2"))
    if min_deg2 and checks & {"cor1", "claims"}:
        families.append(("dom-greedy", greedy_dominator, "greedy", "cor1"))

    for dom_name, dom, mode, bound_check in families:
        if bound_check in checks:
            report.checked.append(bound_check)
        if bound_check == "thm2" and "thm2" in checks and report.gamma_tg is not None:
            if report.gamma_tg > bound34:
                fail("thm2", detail=f"γ_tg={report.gamma_tg} > ⌊3n/4⌋={bound34}")
        for stall_name, stall in stallers:
            pairing = f"{dom_name}/{stall_name}"
            transcript, found = _game_with_monitor(g, dom, stall, pairing, mode, claims)
            report.violations.extend(found)
            report.games[pairing] = transcript.length
            report.four_target[pairing] = transcript.four_target_met()
            counts = _phase2_entry_counts(transcript)
            if counts:
                report.phase2_counts[pairing] = counts
            if bound_check in checks:
                if transcript.length > bound34:
                    fail(bound_check, pairing, transcript.moves,
                         f"length {transcript.length} > ⌊3n/4⌋={bound34}")
                if not transcript.four_target_met():
                    fail(bound_check, pairing, transcript.moves,
                         f"Σw={transcript.total_adjusted} < 4k={4 * transcript.length}")
    if claims:
        report.checked.append("claims")
    return report


# ---------------------------------------------------------------------------
# Corpora


def exhaustive_corpus(
    max_n: int, min_n: int = 1, predicate: Callable[[Graph], bool] | None = None
) -> Iterator[Graph]:
    """Connected graphs up to isomorphism on ``min_n..max_n`` vertices."""
    if max_n > 9:
        raise ValueError("exhaustive corpora are limited to n <= 9")
    for g in connected_graphs_up_to(max_n, max(min_n, 1)):
        if predicate is None or predicate(g):
            yield g


def random_corpus(
    count: int,
    n: int | tuple[int, int],
    model: str = "gnp",
    p: float = 0.3,
    seed: int = 0,
    predicate: Callable[[Graph], bool] | None = None,
    max_tries: int = 1000,
) -> list[Graph]:
    """Seeded random graphs.

    Models: ``gnp`` (G(n, p), redrawn until isolate-free), ``mindeg2``
    (G(n, p) redrawn until δ >= 2), ``tree`` (random trees with attachments
    meeting both structural conditions).  ``n`` may be a ``(lo, hi)`` range.
    """
    rng = random.Random(seed)
    lo, hi = (n, n) if isinstance(n, int) else n
    out: list[Graph] = []
    for _ in range(count):
        for _ in range(max_tries):
            size = rng.randint(lo, hi)
            sub = rng.randrange(2**31)
            if model == "tree":
                try:
                    g = random_tree_with_attachments(size, sub, attempts=200)
                except RuntimeError:
                    continue
            elif model in ("gnp", "mindeg2"):
                g = random_graph(size, p, sub)
                if g.isolated_vertices() or (model == "mindeg2" and g.min_degree < 2):
                    continue
            else:
                raise ValueError(f"unknown random model {model!r}")
            if predicate is None or predicate(g):
                out.append(g)
                break
        else:
            raise RuntimeError(f"could not draw a {model} graph after {max_tries} tries")
    return out


def _verify_task(args: tuple) -> GraphReport:
    g, checks, limit, random_stallers, seed = args
    return verify_graph(g, checks, limit, random_stallers, seed)


def verify_corpus(
    graphs: Iterable[Graph],
    checks: Sequence[str] = CHECKS,
    solver_limit: int = DEFAULT_LIMIT,
    random_stallers: int = 0,
    seed: int = 0,
    jobs: int = 1,
) -> VerificationReport:
    tasks = [(g, tuple(checks), solver_limit, random_stallers, seed + i) for i, g in enumerate(graphs)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_verify_task, tasks, chunksize=max(1, len(tasks) // (8 * jobs))))
    else:
        reports = [_verify_task(t) for t in tasks]
    reports.sort(key=lambda r: (r.sort_key, r.graph))
    return VerificationReport(reports, tuple(checks))


# ---------------------------------------------------------------------------
# Text output


def _fmt_dict(d: dict) -> str:
    return ",".join(f"{k}:{v}" for k, v in d.items()) or "-"


def format_report(report: VerificationReport, verbose: bool = False) -> Iterator[str]:
    """Line-delimited tab-separated records: ``graph``, ``violation``, ``summary``."""
    for r in report.graphs:
        if verbose or r.violations:
            yield "\t".join(
                [
                    "graph",
                    r.graph,
                    f"n={r.n}",
                    f"a={int(r.condition_a)}",
                    f"b={int(r.condition_b)}",
                    f"comp3={int(r.components_ok)}",
                    f"delta={r.min_degree}",
                    f"gamma_tg={r.gamma_tg if r.gamma_tg is not None else '-'}",
                    f"gamma_tg'={r.gamma_tg_prime if r.gamma_tg_prime is not None else '-'}",
                    f"games={_fmt_dict(r.games)}",
                    f"phase2={_fmt_dict({k: _fmt_dict(v) for k, v in r.phase2_counts.items()})}",
                    f"checked={','.join(r.checked) or '-'}",
                    f"pass={int(r.passed)}",
                ]
            )
        for v in r.violations:
            yield "\t".join(
                [
                    "violation",
                    v.claim,
                    v.graph,
                    v.pairing or "-",
                    "moves=" + (",".join(map(str, v.moves)) or "-"),
                    f"state={v.fingerprint or '-'}",
                    v.detail,
                ]
            )
    counts = report.counts()
    yield "\t".join(
        [
            "summary",
            f"graphs={len(report.graphs)}",
            f"games={report.games_played()}",
            *(f"{c}={report.checked_count(c)}" for c in report.checks),
            f"extremal={len(report.extremal_instances())}",
            f"failures={report.failures}",
            f"by_claim={_fmt_dict(dict(sorted(counts.items())))}",
        ]
    )
