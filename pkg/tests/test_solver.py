import random
import time

import pytest

from tdgame.enumeration import connected_graphs, connected_graphs_up_to
from tdgame.game import IsolatedVertexError, Player, new_game
from tdgame.graph import Graph, cycle_graph, path_graph, random_graph, star_graph
from tdgame.solver import Solver, SolverLimitError, best_move, solve, solve_naive
from tdgame.strategies import exact_dominator, run_game, staller_optimal


@pytest.mark.parametrize("g, d, s", [
    (path_graph(3), 2, 2),
    (path_graph(4), 3, 3),
    (cycle_graph(4), 2, 2),
    (path_graph(6), 4, 4),
    (star_graph(3), 2, 2),
])
def test_exact_values(g, d, s):
    r = solve(g)
    assert (r.gamma_tg, r.gamma_tg_prime) == (d, s)


def test_p4_openings():
    assert solve(path_graph(4)).dominator_openings == (1, 2)


@pytest.mark.parametrize("g", [path_graph(3), path_graph(4), cycle_graph(4)])
def test_naive_agrees_on_examples(g):
    a, b = solve(g), solve_naive(g)
    assert (a.gamma_tg, a.gamma_tg_prime, a.dominator_openings, a.staller_openings) == (
        b.gamma_tg, b.gamma_tg_prime, b.dominator_openings, b.staller_openings)


def test_naive_agrees_on_all_small_graphs():
    for g in connected_graphs_up_to(6, 2):
        a, b = solve(g), solve_naive(g)
        assert (a.gamma_tg, a.gamma_tg_prime) == (b.gamma_tg, b.gamma_tg_prime), g


def test_naive_agrees_on_random_graphs():
    rng = random.Random(11)
    checked = 0
    start = time.perf_counter()
    while checked < 200:
        g = random_graph(rng.randint(3, 8), rng.uniform(0.3, 0.8), rng.randrange(10**6))
        if g.isolated_vertices():
            continue
        a, b = solve(g), solve_naive(g)
        assert (a.gamma_tg, a.gamma_tg_prime) == (b.gamma_tg, b.gamma_tg_prime)
        checked += 1
    assert time.perf_counter() - start < 60


def test_best_move_examples():
    p4 = path_graph(4)
    assert best_move(p4, new_game(p4)) == 1
    assert best_move(p4, new_game(p4).play(1)) == 0
    p3 = path_graph(3)
    assert best_move(p3, new_game(p3)) == 0


def test_value_depends_only_on_dominated_set_and_turn():
    g = cycle_graph(6)
    a = new_game(g).play(0).play(3)
    b = new_game(g).play(3).play(0)
    solver = Solver(g)
    assert a.dominated == b.dominated
    assert solver.value(a.dominated, a.turn) == solver.value(b.dominated, b.turn)


@pytest.mark.parametrize("n", range(3, 7))
def test_continuation_principle(n):
    for g in connected_graphs(n):
        r = solve(g)
        assert abs(r.gamma_tg - r.gamma_tg_prime) <= 1


def test_continuation_on_partial_states():
    rng = random.Random(5)
    for _ in range(40):
        g = random_graph(9, 0.35, rng.randrange(10**6))
        if g.isolated_vertices():
            continue
        solver = Solver(g)
        s = new_game(g)
        while not s.is_game_over():
            assert abs(solver.value(s.dominated, Player.DOMINATOR) - solver.value(s.dominated, Player.STALLER)) <= 1
            s = s.play(rng.choice(s.legal_moves()))


def test_optimal_play_realises_value():
    for g in connected_graphs(6):
        t = run_game(g, exact_dominator, staller_optimal)
        assert t.length == solve(g).gamma_tg


def test_limits_and_isolates():
    with pytest.raises(SolverLimitError):
        solve(path_graph(25))
    with pytest.raises(SolverLimitError):
        solve_naive(path_graph(12))
    with pytest.raises(IsolatedVertexError):
        solve(Graph.from_edges(3, [(0, 1)]))
