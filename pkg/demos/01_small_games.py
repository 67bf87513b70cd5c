"""Exact game values on a few small graphs, and one game played out move by move.

Run: python3 demos/01_small_games.py
"""

from tdgame import check_condition_a, check_condition_b, cycle_graph, path_graph, random_tree_with_attachments
from tdgame import solve, spider_graph, star_graph
from tdgame.strategies import r1r4_dominator, run_game, staller_optimal
from tdgame.transcript import format_transcript

graphs = {
    "P3": path_graph(3),
    "P4": path_graph(4),
    "C4": cycle_graph(4),
    "P6": path_graph(6),
    "K1,3": star_graph(3),
    "spider(3,3,3)": spider_graph([3, 3, 3]),
}

print(f"{'graph':<15}{'n':>3}{'γ_tg':>6}{'γ_tg′':>7}{'⌊3n/4⌋':>8}  Dominator openings")
for name, g in graphs.items():
    r = solve(g)
    print(f"{name:<15}{g.n:>3}{r.gamma_tg:>6}{r.gamma_tg_prime:>7}{3 * g.n // 4:>8}  {list(r.dominator_openings)}")

# The spider fails the degree-sum condition on its leaf edges, so the rule-based
# Dominator carries no guarantee there.  This tree meets both conditions.
tree = random_tree_with_attachments(12, seed=3)
print(f"\nTree with conditions a={check_condition_a(tree)} b={check_condition_b(tree)}, "
      f"γ_tg={solve(tree).gamma_tg}, rule-based Dominator against an optimal Staller:\n")
# Both players' choices are deterministic, so this transcript never changes.
print(format_transcript(run_game(tree, r1r4_dominator, staller_optimal)))
