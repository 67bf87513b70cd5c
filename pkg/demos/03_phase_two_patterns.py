"""Phase 2 residual shapes and the number of moves they still force.

Once no legal move is worth 5 or more, every component of the residual graph
has one of a handful of shapes.  Each P4 of type A needs two more moves and
every other shape needs one.

Run: python3 demos/03_phase_two_patterns.py
"""

from tdgame import Player, classify_phase2, cycle_graph, new_game, path_graph, phase_of, spider_graph
from tdgame.game import predicted_remaining_moves
from tdgame.solver import Solver

cases = [
    ("C6 after 0,1", cycle_graph(6), [0, 1], Player.DOMINATOR),
    ("P3 after 1 (Staller first)", path_graph(3), [1], Player.STALLER),
    ("P4 after 0,3", path_graph(4), [0, 3], Player.DOMINATOR),
    ("spider(2,2) after 1,4", spider_graph([2, 2]), [1, 4], Player.DOMINATOR),
]

for label, g, moves, first in cases:
    s = new_game(g, first)
    for v in moves:
        s = s.play(v)
    print(f"{label}: {phase_of(s).value}")
    labels = classify_phase2(s)
    for comp, pattern in labels:
        colors = "-".join(s.color(v).value[0].upper() for v in comp)
        print(f"    component {comp} colours {colors} -> pattern {pattern.value}")
    exact = Solver(g).value(s.dominated, s.turn)
    print(f"    predicted remaining {predicted_remaining_moves(labels)}, exact optimal remaining {exact}\n")
