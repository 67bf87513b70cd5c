"""Worst-case Staller against a fixed Dominator strategy.

An optimal Staller assumes an optimal Dominator.  The adversary here searches
every line of play against the rule-based Dominator itself.  It therefore
gives the longest game that strategy can be forced into, which must still be
at most ⌊3n/4⌋.

Run: python3 demos/06_adversarial_staller.py
"""

from tdgame import solve
from tdgame.strategies import AdversarialStaller, r1r4_dominator, run_game, staller_optimal
from tdgame.verify import random_corpus

print(f"{'n':>3}{'γ_tg':>6}{'vs opt':>8}{'vs adv':>8}{'⌊3n/4⌋':>8}")
for g in random_corpus(12, (10, 13), "tree", seed=11):
    adversary = AdversarialStaller(r1r4_dominator)
    worst = run_game(g, r1r4_dominator, adversary).length
    vs_opt = run_game(g, r1r4_dominator, staller_optimal).length
    print(f"{g.n:>3}{solve(g).gamma_tg:>6}{vs_opt:>8}{worst:>8}{3 * g.n // 4:>8}")
