import io
import json

import pytest

from marklab import harness
from marklab.cli import main
from marklab.harness import Report, Violation


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSolve:
    def test_family_expression(self, capsys):
        code, out, _ = run(capsys, "solve", "join(K3,E2)")
        assert code == 0
        assert out == (
            "gcol = 5\nbest first move: 0\nnodes: 64\nmemo entries: 30\n"
        )

    def test_quiet(self, capsys):
        code, out, _ = run(capsys, "solve", "join(K3,E2)", "--quiet")
        assert code == 0
        assert out == "gcol = 5\n"

    def test_edge_list_matches_family(self, capsys):
        _, by_family, _ = run(capsys, "solve", "C4", "--quiet")
        _, by_edges, _ = run(capsys, "solve", "4;0 1;0 3;1 2;2 3", "--quiet")
        assert by_family == by_edges

    def test_preorder_and_first(self, capsys):
        code, out, _ = run(
            capsys, "solve", "C5", "--preorder", "0", "--first", "alice", "--quiet"
        )
        assert code == 0
        assert out == "sigma-gcol_A = 3\n"

    def test_passes(self, capsys):
        code, out, _ = run(
            capsys, "solve", "C5", "--alice-passes", "1", "--quiet"
        )
        assert code == 0
        assert out == "value = 3\n"

    def test_stdin_graph(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("5\n0 1\n1 2\n2 3\n3 4\n0 4\n"))
        code, out, _ = run(capsys, "solve", "-", "--quiet")
        assert code == 0 and out == "gcol = 3\n"

    def test_file_graph(self, capsys, tmp_path):
        p = tmp_path / "g.edges"
        p.write_text("3\n0 1\n1 2\n")
        code, out, _ = run(capsys, "solve", str(p), "--quiet")
        assert code == 0 and out == "gcol = 2\n"
        code2, out2, _ = run(capsys, "solve", str(p), "--format", "path", "--quiet")
        assert code2 == 0 and out2 == out

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "result.txt"
        code, out, _ = run(
            capsys, "solve", "K3", "--quiet", "--output", str(target)
        )
        assert code == 0
        assert out == ""
        assert target.read_text() == "gcol = 3\n"


class TestInputErrors:
    def test_undetectable_graph(self, capsys):
        code, _, err = run(capsys, "solve", "nonsense")
        assert code == 2
        assert "cannot interpret" in err

    def test_bad_preorder_text(self, capsys):
        code, _, err = run(capsys, "solve", "K3", "--preorder", "0,x")
        assert code == 2
        assert "comma-separated" in err

    def test_server_side_rejection(self, capsys):
        code, _, err = run(capsys, "solve", "K3", "--preorder", "0,0")
        assert code == 2
        assert "repeats" in err

    def test_parse_error_position_forwarded(self, capsys):
        code, _, err = run(capsys, "solve", "3;0 9")
        assert code == 2
        assert "line 1, col 5" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "solve", "no/such/file", "--format", "path")
        assert code == 2
        assert "cannot read" in err

    def test_unreachable_server(self, capsys):
        code, _, err = run(
            capsys, "solve", "K3", "--server", "http://127.0.0.1:1"
        )
        assert code == 2
        assert "cannot reach server" in err


class TestCol:
    def test_basic(self, capsys):
        code, out, _ = run(capsys, "col", "C5")
        assert code == 0 and out == "col = 3\n"


class TestInfo:
    def test_basic(self, capsys):
        code, out, _ = run(capsys, "info", "P3")
        assert code == 0
        assert out == (
            "vertices: 3\nedges: (0,1) (1,2)\nmax degree: 2\ncoloring number: 2\n"
        )


class TestVerify:
    def test_construction_text(self, capsys):
        code, out, err = run(capsys, "verify", "construction", "--max-n", "4")
        assert code == 0
        assert out == (
            "suite: construction\n"
            "param max_n: 4\n"
            "param seed: 0\n"
            "cases: 3\n"
            "violations: 0\n"
            "result: PASS\n"
        )
        assert "construction:" in err  # timing goes to stderr

    def test_quiet_silences_timings(self, capsys):
        _, _, err = run(capsys, "verify", "construction", "--max-n", "4", "--quiet")
        assert err == ""

    def test_text_is_deterministic(self, capsys):
        _, a, _ = run(capsys, "verify", "skipping", "--max-n", "3", "--seed", "5")
        _, b, _ = run(capsys, "verify", "skipping", "--max-n", "3", "--seed", "5")
        assert a == b

    def test_jobs_flag_keeps_bytes(self, capsys):
        _, a, _ = run(capsys, "verify", "monotonicity", "--max-n", "3")
        _, b, _ = run(capsys, "verify", "monotonicity", "--max-n", "3", "--jobs", "2")
        assert a == b

    def test_json_output(self, capsys):
        code, out, _ = run(
            capsys, "verify", "construction", "--max-n", "4", "--json"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["passed"] is True
        (rep,) = doc["reports"]
        assert rep["result"] == "pass"
        assert "elapsed_s" not in rep
        # canonical form: compact separators, sorted keys
        assert out == json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"

    def test_timings_flag_adds_elapsed(self, capsys):
        _, out, _ = run(
            capsys, "verify", "construction", "--max-n", "4", "--json", "--timings"
        )
        assert "elapsed_s" in json.loads(out)["reports"][0]

    def test_failures_exit_nonzero(self, capsys, monkeypatch):
        def fake(max_n=5, seed=0, jobs=1):
            return Report("construction", {"max_n": max_n, "seed": seed}, 1,
                          [Violation("join(K3,E2)", "value 4, expected 5")])

        monkeypatch.setattr(harness, "verify_construction", fake)
        code, out, _ = run(capsys, "verify", "construction")
        assert code == 1
        assert 'violation: graph="join(K3,E2)"' in out
        assert "result: FAIL" in out

    def test_bad_max_n_is_input_error(self, capsys):
        code, _, err = run(capsys, "verify", "construction", "--max-n", "1")
        assert code == 2
        assert "max_n" in err


class TestTransfer:
    def test_optimal(self, capsys):
        code, out, _ = run(capsys, "transfer", "join(K3,E2)", "--remove", "0")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "removed vertex: 0"
        assert lines[1] == "bound (companion value): 5"
        assert lines[2] == "score: 3"
        assert lines[3] == "within bound: yes"
        assert any(line.startswith("turn 1:") for line in lines)

    def test_exhaustive(self, capsys):
        code, out, _ = run(
            capsys,
            "transfer", "join(K3,E2)", "--remove", "0",
            "--adversary", "exhaustive", "--quiet",
        )
        assert code == 0
        assert "worst score: 3 over 3 adversary lines" in out
        assert "invariant failures: 0" in out
        assert "turn" not in out  # quiet drops the trace

    def test_bad_removal(self, capsys):
        code, _, err = run(capsys, "transfer", "C5", "--remove", "7")
        assert code == 2
        assert "out of range" in err


class TestPlay:
    def test_scripted_game(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("9\n0\n3\n"))
        code, out, _ = run(capsys, "play", "join(K2,E2)")
        assert code == 0
        assert "illegal move: 9" in out
        assert "engine plays" in out
        assert "final score: 3" in out

    def test_eof_aborts(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO(""))
        code, out, _ = run(capsys, "play", "K3")
        assert code == 0
        assert "aborted" in out

    def test_play_as_bob(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("1\n3\n"))
        code, out, _ = run(capsys, "play", "P4", "--as", "bob")
        assert code == 0
        assert "final score:" in out


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert "marklab" in capsys.readouterr().out
