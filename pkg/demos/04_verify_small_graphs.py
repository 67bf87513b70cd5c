"""Check the length bounds and the per-move invariants on every connected graph
with at most seven vertices.

The library equivalent of ``tdgame verify --exhaustive 7``.  Graphs meeting
both structural conditions are played with the rule-based Dominator, and graphs
of minimum degree two with the greedy one, each against an optimal and a
minimum-value Staller.

Run: python3 demos/04_verify_small_graphs.py
"""

import time

from tdgame.verify import CHECKS, exhaustive_corpus, verify_corpus

start = time.perf_counter()
report = verify_corpus(exhaustive_corpus(7, 3), CHECKS)
elapsed = time.perf_counter() - start

print(f"graphs: {len(report.graphs)}   games: {report.games_played()}   time: {elapsed:.1f}s")
for check in CHECKS:
    print(f"  {check:<13} applied to {report.checked_count(check)} graphs")
print(f"failures: {report.failures}")

print("\ngraphs meeting both conditions whose value equals ⌊3n/4⌋:")
for r in report.extremal_instances():
    if r.condition_a and r.condition_b:
        print(f"  n={r.n}  γ_tg={r.gamma_tg}  {r.graph}")
