"""A targeted support left with only two white neighbours.

Read literally, the invariant says that after every R1-R3 Dominator move each
targeted support has at least three white or purple neighbours.  In a
12-vertex tree meeting both structural conditions it fails.  Staller plays a
problematic vertex whose path runs through support 5.  That support turns
purple and its neighbour on the path turns blue, so only two white neighbours
remain.  The value invariants and the 3n/4 length bound still hold in this game.

Run: python3 demos/05_purple_support_gap.py
"""

from tdgame import parse_graph
from tdgame.graph import check_condition_a, check_condition_b
from tdgame.strategies import r1r4_dominator, run_game, staller_optimal
from tdgame.transcript import format_transcript
from tdgame.verify import ClaimMonitor

g = parse_graph("12 11\n0 1\n0 4\n1 5\n1 6\n2 5\n3 4\n4 9\n5 10\n6 7\n7 8\n7 11\n")
print(f"conditions: a={check_condition_a(g)} b={check_condition_b(g)}; bound ⌊3n/4⌋ = {3 * g.n // 4}\n")

monitor = ClaimMonitor(g, "dom-r1r4/stall-opt", "r1r4")
transcript = run_game(g, r1r4_dominator, staller_optimal, observers=[monitor])
print(format_transcript(transcript))

for v in monitor.violations:
    print(f"{v.claim}: after moves {list(v.moves)}: {v.detail}")
print(f"\nStaller's problematic move: {next(e for e in transcript.ledger if e.purpled)}")
