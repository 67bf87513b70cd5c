"""Acceptance suite: one test per criterion, each logging a PASS/FAIL line.

Checks here are written directly against transcripts and post-move states
rather than through the verifier's claim monitor, so the two act as
independent implementations of the same invariants.
"""

import random
import time
from dataclasses import dataclass, field

import pytest

from tdgame.enumeration import connected_graphs_up_to
from tdgame.game import Color, Pattern, Player, new_game
from tdgame.graph import (
    Graph,
    check_condition_a,
    check_condition_b,
    component_profile,
    cycle_graph,
    path_graph,
    random_graph,
    random_tree_with_attachments,
    spider_graph,
)
from tdgame.overlay import OverlayState, process_move, targeted_supports
from tdgame.solver import solve, solve_naive
from tdgame.strategies import greedy_dominator, r1r4_dominator, run_game, staller_min_greedy, staller_optimal
from tdgame.verify import random_corpus

MAX_N = 8
TREE_COUNT = 500
PLAYOUTS = 10_000


@dataclass
class Game:
    graph: Graph
    pairing: str
    transcript: object
    # (rule, state after the move) for every Dominator move tagged R1-R3
    rule_moves: list = field(default_factory=list)


def play(g, dominator, staller, pairing):
    game = Game(g, pairing, None)

    def watch(event):
        if event.record.rule in ("R1", "R2", "R3"):
            game.rule_moves.append((event.record, event.after))

    game.transcript = run_game(g, dominator, staller, observers=[watch])
    return game


@pytest.fixture(scope="session")
def corpus():
    graphs = [g for g in connected_graphs_up_to(MAX_N, 3)]
    solved = {g: solve(g) for g in graphs}
    theorem = [g for g in graphs if check_condition_a(g) and check_condition_b(g)
               and component_profile(g).every_component_at_least_3]
    mindeg2 = [g for g in graphs if g.min_degree >= 2]
    return graphs, solved, theorem, mindeg2


@pytest.fixture(scope="session")
def r1r4_games(corpus):
    _, _, theorem, _ = corpus
    return [play(g, r1r4_dominator, staller_optimal, "r1r4/opt") for g in theorem]


@pytest.fixture(scope="session")
def greedy_games(corpus):
    _, _, _, mindeg2 = corpus
    return [play(g, greedy_dominator, staller_optimal, "greedy/opt") for g in mindeg2]


@pytest.fixture(scope="session")
def tree_games():
    trees = random_corpus(TREE_COUNT, (10, 20), "tree", seed=2024)
    games = []
    for g in trees:
        games.append(play(g, r1r4_dominator, staller_optimal, "r1r4/opt"))
        games.append(play(g, r1r4_dominator, staller_min_greedy, "r1r4/min"))
    return games


def _random_family_graph(rng):
    n = rng.randint(3, 15)
    family = rng.choice(["gnp", "mindeg2", "tree", "path", "cycle", "spider"])
    if family == "gnp":
        g = random_graph(n, rng.uniform(0.15, 0.6), rng.randrange(2**31))
        return None if g.isolated_vertices() else g
    if family == "mindeg2":
        g = random_graph(n, rng.uniform(0.3, 0.7), rng.randrange(2**31))
        return g if g.min_degree >= 2 else None
    if family == "tree":
        return random_tree_with_attachments(n, rng.randrange(2**31)) if n >= 6 else None
    if family == "path":
        return path_graph(n)
    if family == "cycle":
        return cycle_graph(n)
    legs = [rng.randint(1, 3) for _ in range(rng.randint(2, 4))]
    return spider_graph(legs) if 1 + sum(legs) <= 15 else None


@pytest.fixture(scope="session")
def playouts():
    """Uniformly random games; records the smallest legal raw value seen and per-game sums."""
    rng = random.Random(5)
    done = 0
    low = None
    sums = []
    while done < PLAYOUTS:
        g = _random_family_graph(rng)
        if g is None:
            continue
        s = OverlayState(new_game(g, rng.choice(list(Player))))
        raw = adjusted = 0
        while not s.is_game_over():
            smallest = min(s.game.move_value(v) for v in s.legal_moves())
            low = smallest if low is None else min(low, smallest)
            s, entry = process_move(s, rng.choice(s.legal_moves()))
            raw += entry.raw_value
            adjusted += entry.adjusted_value
        sums.append((g.n, raw, adjusted))
        done += 1
    return low, sums


def test_criterion_01_exact_values(acceptance_log):
    start = time.perf_counter()
    values = {name: solve(g).gamma_tg for name, g in
              [("P3", path_graph(3)), ("C4", cycle_graph(4)), ("P4", path_graph(4))]}
    naive = {name: solve_naive(g).gamma_tg for name, g in
             [("P3", path_graph(3)), ("C4", cycle_graph(4)), ("P4", path_graph(4))]}
    mismatches = []
    count = 0
    for g in connected_graphs_up_to(6, 2):
        a, b = solve(g), solve_naive(g)
        count += 1
        if (a.gamma_tg, a.gamma_tg_prime) != (b.gamma_tg, b.gamma_tg_prime):
            mismatches.append(g)
    elapsed = time.perf_counter() - start
    ok = values == naive == {"P3": 2, "C4": 2, "P4": 3} and not mismatches and elapsed < 60
    acceptance_log(1, ok, f"P3={values['P3']} C4={values['C4']} P4={values['P4']}; "
                          f"solve == solve_naive on {count} graphs (n<=6), {len(mismatches)} mismatches, {elapsed:.1f}s")
    assert ok


def test_criterion_02_three_quarter_bound(acceptance_log, corpus, r1r4_games):
    _, solved, theorem, _ = corpus
    bad_value = [g for g in theorem if solved[g].gamma_tg > 3 * g.n // 4]
    bad_game = [gm for gm in r1r4_games if gm.transcript.length > 3 * gm.graph.n // 4]
    ok = not bad_value and not bad_game
    acceptance_log(2, ok, f"{len(theorem)} graphs meeting (a),(b), components>=3, n<=8; "
                          f"{len(bad_value)} value failures, {len(bad_game)} r1r4-vs-opt game failures")
    assert ok


def test_criterion_03_greedy_min_degree_two(acceptance_log, greedy_games):
    bad = [gm for gm in greedy_games
           if gm.transcript.length > 3 * gm.graph.n // 4
           or gm.transcript.total_adjusted < 4 * gm.transcript.length]
    acceptance_log(3, not bad, f"{len(greedy_games)} greedy-vs-opt games on delta>=2 graphs; {len(bad)} failures")
    assert not bad


def test_criterion_04_four_fifths(acceptance_log, corpus):
    graphs, solved, _, _ = corpus
    checked = [g for g in graphs if component_profile(g).every_component_at_least_3]
    bad = [g for g in checked if solved[g].gamma_tg > 4 * g.n // 5]
    acceptance_log(4, not bad, f"{len(checked)} graphs; {len(bad)} exceed floor(4n/5)")
    assert not bad


def test_criterion_05_legal_moves_worth_three(acceptance_log, playouts):
    low, sums = playouts
    ok = low >= 3 and len(sums) == PLAYOUTS
    acceptance_log(5, ok, f"{len(sums)} random playouts, n<=15; smallest legal raw value {low}")
    assert ok


def _staller_values(games):
    return [rec.adjusted_value for gm in games for rec in gm.transcript.records if rec.player is Player.STALLER]


def test_criterion_06_staller_adjusted_values(acceptance_log, r1r4_games, tree_games):
    values = _staller_values(r1r4_games) + _staller_values(tree_games)
    bad = [v for v in values if v < 3]
    acceptance_log(6, not bad, f"{len(values)} Staller moves in {len(r1r4_games) + len(tree_games)} r1r4 games; "
                               f"{len(bad)} below 3")
    assert not bad


def test_criterion_07_phase2_patterns(acceptance_log, r1r4_games, greedy_games):
    allowed_r1r4 = set(Pattern) - {Pattern.OTHER}
    allowed_greedy = {Pattern.A, Pattern.B}
    seen = bad = 0
    for games, allowed in ((r1r4_games, allowed_r1r4), (greedy_games, allowed_greedy)):
        for gm in games:
            for rec in gm.transcript.records:
                if rec.patterns is None:
                    continue
                seen += 1
                bad += any(p not in allowed for p in rec.patterns)
    acceptance_log(7, bad == 0, f"{seen} phase-2 classifications; {bad} with a disallowed pattern")
    assert bad == 0


def _claim7_failures(rec, after):
    out = []
    if rec.adjusted_value < 5:
        out.append("value")
    g = after.graph
    colors = after.colors()
    for w in targeted_supports(after.residual_view()):
        whites = sum(1 for u in g.neighbors(w) if colors[u] in (Color.WHITE, Color.PURPLE))
        if whites < 3:
            out.append("support")
    for v in g.leaves():
        (u,) = g.neighbors(v)
        if colors[v] is Color.GREEN and colors[u] in (Color.BLUE, Color.INDIGO):
            out.append("green leaf")
    return out


def test_criterion_08_rule_moves(acceptance_log, r1r4_games):
    checked = 0
    failures = []
    for gm in r1r4_games:
        for rec, after in gm.rule_moves:
            checked += 1
            failures.extend(_claim7_failures(rec, after))
    acceptance_log(8, not failures, f"{checked} R1/R2/R3 moves; {len(failures)} failures")
    assert not failures


def test_criterion_09_continuation(acceptance_log, corpus):
    _, solved, _, _ = corpus
    bad = [g for g, r in solved.items() if abs(r.gamma_tg - r.gamma_tg_prime) > 1]
    acceptance_log(9, not bad, f"{len(solved)} solved graphs; {len(bad)} with |gamma_tg - gamma_tg'| > 1")
    assert not bad


def test_criterion_10_conservation(acceptance_log, r1r4_games, greedy_games, tree_games, playouts):
    _, sums = playouts
    totals = [(gm.graph.n, gm.transcript.total_raw, gm.transcript.total_adjusted)
              for gm in r1r4_games + greedy_games + tree_games] + sums
    bad = [t for t in totals if not t[1] == t[2] == 3 * t[0]]
    acceptance_log(10, not bad, f"{len(totals)} completed games; {len(bad)} with raw or adjusted sum != 3n")
    assert not bad


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
