import io

import pytest

from tdgame.cli import main
from tdgame.enumeration import canonical_form
from tdgame.graph import cycle_graph, from_graph6, render_graph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestSolve:
    def test_path4(self, capsys):
        code, out, _ = run(capsys, "solve", "--family", "path:4")
        assert code == 0
        assert out.splitlines()[0] == "gamma_tg=3 gamma_tg'=3"
        assert "dominator=1,2" in out

    def test_cycle4(self, capsys):
        assert "gamma_tg=2 " in run(capsys, "solve", "--family", "cycle:4")[1]

    def test_path3_from_file(self, capsys, tmp_path):
        f = tmp_path / "p3.txt"
        f.write_text("3 2\n0 1\n1 2\n")
        assert run(capsys, "solve", "--graph", str(f))[1].startswith("gamma_tg=2 gamma_tg'=2")

    def test_parse_error(self, capsys, tmp_path):
        f = tmp_path / "bad.txt"
        f.write_text("3 1\n0 5\n")
        code, _, err = run(capsys, "solve", "--graph", str(f))
        assert code != 0 and "out of range" in err

    def test_limit(self, capsys):
        code, _, err = run(capsys, "solve", "--family", "path:12", "--max-n", "10")
        assert code != 0 and "limit" in err


class TestPlay:
    def test_c4(self, capsys):
        code, out, _ = run(capsys, "play", "--family", "cycle:4", "--dom", "dom-greedy", "--stall", "stall-min")
        assert code == 0
        moves = [ln for ln in out.splitlines() if ln.startswith("move")]
        assert len(moves) == 2
        assert "sum_w=12\tfour_k=8" in out.splitlines()[-1]

    def test_p6_rules(self, capsys):
        _, out, _ = run(capsys, "play", "--family", "path:6", "--dom", "dom-r1r4", "--stall", "stall-min")
        dom = [ln.split("\t") for ln in out.splitlines() if ln.startswith("move") and "\tdominator\t" in ln]
        assert dom and all(f[4] in {"R1", "R2", "R3", "R4"} for f in dom)

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "t.txt"
        run(capsys, "play", "--family", "path:5", "--stall", "stall-rand(3)", "--first", "s", "--out", str(target))
        assert target.read_text().startswith("graph\t5 4;")

    def test_human_reprompt(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("9\n1\n"))
        code, out, err = run(capsys, "play", "--family", "path:3", "--dom", "human", "--stall", "stall-min")
        assert code == 0
        assert "illegal move 9" in err
        assert [ln.split("\t")[3] for ln in out.splitlines() if ln.startswith("move")] == ["1", "0"]

    def test_human_eof(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("x\n"))
        code, _, err = run(capsys, "play", "--family", "path:3", "--dom", "dom-greedy", "--stall", "human", "--first", "s")
        assert code != 0 and "aborted" in err

    def test_unknown_strategy(self, capsys):
        assert run(capsys, "play", "--family", "path:3", "--dom", "dom-magic")[0] != 0


class TestClassify:
    def test_pattern_a(self, capsys):
        _, out, _ = run(capsys, "classify", "--family", "cycle:6", "--moves", "0,1")
        last = out.splitlines()[-1].split("\t")
        assert last[3:] == ["phase2", "A:1", "t=1", "s=0", "remaining=2"]

    def test_pattern_b(self, capsys):
        _, out, _ = run(capsys, "classify", "--family", "path:3", "--moves", "1", "--first", "s")
        assert out.splitlines()[-1].split("\t")[3:] == ["phase2", "B:1", "t=0", "s=1", "remaining=1"]

    def test_fresh_c4(self, capsys):
        _, out, _ = run(capsys, "classify", "--family", "cycle:4")
        assert out.splitlines()[-1].split("\t") == ["turn", "0", "dominator", "phase1"]

    def test_from_transcript(self, capsys, tmp_path):
        t = tmp_path / "t.txt"
        run(capsys, "play", "--family", "cycle:6", "--dom", "dom-greedy", "--stall", "stall-min", "--out", str(t))
        code, out, _ = run(capsys, "classify", "--transcript", str(t), "--upto", "2")
        assert code == 0 and out.splitlines()[-1].split("\t")[:2] == ["turn", "2"]

    def test_illegal_replay(self, capsys):
        assert run(capsys, "classify", "--family", "path:3", "--moves", "1,1")[0] != 0


class TestVerify:
    def test_exhaustive_clean(self, capsys):
        code, out, _ = run(capsys, "verify", "--exhaustive", "6", "--checks", "thm1,continuation")
        assert code == 0 and "failures=0" in out.splitlines()[-1]

    def test_graph_list_with_failure(self, capsys, tmp_path):
        f = tmp_path / "graphs.txt"
        f.write_text("12 11\n0 1\n0 4\n1 5\n1 6\n2 5\n3 4\n4 9\n5 10\n6 7\n7 8\n7 11\n\n"
                     + render_graph(cycle_graph(5)))
        code, out, _ = run(capsys, "verify", "--graph-list", str(f), "--checks", "claims")
        assert code == 1
        assert any(ln.startswith("violation\tclaim7a") for ln in out.splitlines())

    def test_random(self, capsys):
        code, out, _ = run(capsys, "verify", "--random", "5", "--n", "9-10", "--model", "mindeg2", "--checks", "cor1",
                           "--jobs", "2")
        assert code == 0 and "graphs=5" in out

    def test_too_large(self, capsys):
        assert run(capsys, "verify", "--exhaustive", "10")[0] == 2

    def test_bad_checks(self, capsys):
        assert run(capsys, "verify", "--exhaustive", "4", "--checks", "thm9")[0] == 2


class TestEnumerate:
    def test_count(self, capsys):
        assert run(capsys, "enumerate", "--max-n", "6", "--min-n", "6", "--count")[1].strip() == "112"

    def test_filter_g6(self, capsys):
        out = run(capsys, "enumerate", "--max-n", "4", "--filter", "mindeg2")[1].split()
        # triangle, C4, diamond, K4
        assert len(out) == 4
        assert canonical_form(cycle_graph(4)) in {canonical_form(from_graph6(x)) for x in out}

    def test_edges_format(self, capsys):
        out = run(capsys, "enumerate", "--max-n", "3", "--min-n", "3", "--format", "edges")[1]
        assert out.split("\n\n")[0].startswith("3 2")


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run([sys.executable, "-m", "tdgame", "solve", "--family", "path:3"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.startswith("gamma_tg=2 gamma_tg'=2")
