from tdgame.graph import cycle_graph, parse_graph, path_graph, random_tree_with_attachments, spider_graph
from tdgame.strategies import replay
from tdgame.verify import (
    CHECKS,
    exhaustive_corpus,
    format_report,
    random_corpus,
    verify_corpus,
    verify_graph,
)

# purple support left with two white neighbours after an R3 reply
CLAIM7A_GRAPH = "12 11\n0 1\n0 4\n1 5\n1 6\n2 5\n3 4\n4 9\n5 10\n6 7\n7 8\n7 11"


def test_single_graph_report():
    r = verify_graph(cycle_graph(4))
    assert r.gamma_tg == 2 and r.gamma_tg_prime == 2
    assert r.passed and r.condition_a and r.min_degree == 2
    assert "cor1" in r.checked and "thm1" in r.checked
    assert r.games["dom-greedy/stall-opt"] == 2


def test_thm2_requires_both_conditions():
    p5 = verify_graph(path_graph(5))
    assert "thm2" not in p5.checked
    tree = verify_graph(random_tree_with_attachments(10, 0))
    assert "thm2" in tree.checked and tree.passed


def test_small_corpus_clean():
    report = verify_corpus(exhaustive_corpus(6, 3), CHECKS)
    assert report.ok and report.failures == 0
    assert len(report.graphs) == 2 + 6 + 21 + 112
    assert all(r.gamma_tg <= 3 * r.n // 4 for r in report.extremal_instances())


def test_parallel_matches_serial():
    graphs = random_corpus(12, (8, 10), "mindeg2", 0.35, seed=3)
    a = list(format_report(verify_corpus(graphs, jobs=1), verbose=True))
    b = list(format_report(verify_corpus(reversed(graphs), jobs=2), verbose=True))
    assert a == b


def test_claim7a_finding_is_reported_and_replayable():
    g = parse_graph(CLAIM7A_GRAPH)
    r = verify_graph(g, ("thm2", "claims"))
    claims = {v.claim for v in r.violations}
    assert claims == {"claim7a"}
    v = r.violations[0]
    t = replay(g, v.moves)
    assert t.moves == list(v.moves)
    # the length bound itself still holds
    assert max(r.games.values()) <= 3 * g.n // 4


def test_report_lines():
    report = verify_corpus([spider_graph([3, 3, 3])], ("thm1", "continuation"))
    lines = list(format_report(report, verbose=True))
    assert lines[0].startswith("graph\t") and lines[-1].startswith("summary\t")
    assert "failures=0" in lines[-1]


def test_random_models():
    for model in ("gnp", "mindeg2", "tree"):
        gs = random_corpus(5, (10, 12), model, 0.3, seed=1)
        assert len(gs) == 5 and all(10 <= g.n <= 12 for g in gs)
        assert gs == random_corpus(5, (10, 12), model, 0.3, seed=1)
    assert all(g.min_degree >= 2 for g in random_corpus(5, 10, "mindeg2", 0.4))
