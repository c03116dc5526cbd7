import json
import subprocess
import sys

import pytest

from wellcov.cli import main
from wellcov.formats import from_graph6, parse_graph
from wellcov.generate import FAMILIES

C5 = "n 5\n0 1\n1 2\n2 3\n3 4\n4 0\n"
C4 = "0 1\n1 2\n2 3\n3 0\n"
C7 = "".join(f"{i} {(i + 1) % 7}\n" for i in range(7))


@pytest.fixture
def write(tmp_path):
    def _write(text, name="g.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_recognize_c5_w2(capsys, write):
    code, out, _ = run(capsys, "recognize", write(C5), "--property", "w2", "--json")
    report = json.loads(out)
    assert code == 0
    assert report["verdict"] is True and report["algorithm"] == "girth5"
    assert set(report) >= {"command", "format", "n", "m", "property", "algorithm", "verdict", "certificate", "elapsed_ms"}
    assert report["elapsed_ms"] is None


def test_recognize_c4_shed(capsys, write):
    code, out, _ = run(capsys, "recognize", write(C4), "--property", "shed", "--vertex", "0", "--algorithm", "c5free", "--json")
    assert code == 1
    assert json.loads(out)["certificate"] == {"type": "witness_set", "set": [2]}


def test_recognize_c7_girth5(capsys, write):
    code, out, _ = run(capsys, "recognize", write(C7), "--property", "w2", "--algorithm", "girth5")
    assert code == 1 and out.startswith("w2: no [girth5]")


def test_gate_refusal_names_condition(capsys, write):
    code, _, err = run(capsys, "recognize", write(C4), "--property", "w2", "--algorithm", "girth5")
    assert code == 2 and "girth >= 5" in err


def test_parse_error_exit(capsys, write):
    code, _, err = run(capsys, "recognize", write("0 1\n1 1\n"), "--property", "wc")
    assert code == 3 and "line 2" in err


def test_labels_and_relating(capsys, write):
    path = write("a b\nb c\nc d\nd e\ne f\n")
    code, out, _ = run(capsys, "recognize", path, "--property", "relating", "--edge", "c", "d", "--json")
    report = json.loads(out)
    assert code == 0 and report["algorithm"] == "c46free" and report["edge"] == [2, 3]
    assert report["labels"] == ["a", "b", "c", "d", "e", "f"]


def test_algorithm_property_mismatch(capsys, write):
    code, _, err = run(capsys, "recognize", write(C5), "--property", "wc", "--algorithm", "girth5")
    assert code == 2 and "does not decide" in err


def test_formats_and_quiet(capsys, write):
    path = write("Dhc\n", "c5.g6")
    code, out, _ = run(capsys, "recognize", path, "--format", "graph6", "--property", "wc", "--quiet")
    assert code == 0 and out == ""


def test_same_verdict_same_schema(capsys, write):
    path = write(C5)
    keys = set()
    for algorithm in ("auto", "oracle", "girth5", "bounded-alpha", "vertex-deletion", "shedding-all"):
        code, out, _ = run(capsys, "recognize", path, "--property", "w2", "--algorithm", algorithm, "--json")
        assert code == 0
        keys.add(tuple(json.loads(out)))
    assert len(keys) == 1


def test_reduce_example(capsys, tmp_path, write):
    cnf = write("p cnf 4 4\n1 -2 3 0\n2 4 0\n-1 -3 -4 0\n1 -2 -3 -4 0\n", "ex.cnf")
    out_path = tmp_path / "gadget.txt"
    assert main(["reduce", cnf, "-o", str(out_path)]) == 0
    G = parse_graph(out_path.read_text()).graph
    roles = json.loads((tmp_path / "gadget.txt.roles.json").read_text())
    assert (G.n, G.m) == (17, 24) and roles["v"] == 0 and len(roles["literals"]) == 12


def test_reduce_errors_and_path(capsys, write):
    code, _, err = run(capsys, "reduce", write("p cnf 1 1\n0\n", "bad.cnf"))
    assert code == 3 and "empty clause" in err
    code, out, _ = run(capsys, "reduce", write("p cnf 1 1\n1 0\n", "one.cnf"), "--format", "graph6")
    assert code == 0 and from_graph6(out).m == 2


def test_generate(capsys):
    code, out, _ = run(capsys, "generate", "--family", "girth5", "--n", "9", "--count", "5", "--seed", "3")
    lines = out.split()
    assert code == 0 and len(lines) == 5
    assert all(FAMILIES["girth5"].admits(from_graph6(s)) for s in lines)
    _, again, _ = run(capsys, "generate", "--family", "girth5", "--n", "9", "--count", "5", "--seed", "3")
    assert again == out


def test_generate_c46free_batch(capsys, tmp_path):
    assert main(["generate", "--family", "c46free", "--n", "10", "--count", "50", "--output-dir", str(tmp_path)]) == 0
    files = sorted(tmp_path.glob("*.g6"))
    assert len(files) == 50
    assert all(FAMILIES["c46free"].admits(from_graph6(f.read_text())) for f in files)


def test_generate_exhaustive(capsys):
    code, out, _ = run(capsys, "generate", "--n", "4", "--exhaustive")
    graphs = [from_graph6(s) for s in out.split()]
    assert code == 0 and len(graphs) == 6
    assert all(G.n == 4 and G.is_connected() for G in graphs)


def test_crossvalidate(capsys):
    code, out, _ = run(capsys, "crossvalidate", "--family", "clawfree", "--n-max", "6", "--json")
    report = json.loads(out)
    assert code == 0 and report["mismatch_count"] == 0 and report["complete"]
    assert report["recognizers"]["shed_clawfree"]["checks"] > 0


def test_crossvalidate_incomplete(capsys):
    code, out, _ = run(capsys, "crossvalidate", "--n-max", "6", "--max-graphs", "10", "--json")
    report = json.loads(out)
    assert report["graphs"] == 10 and report["complete"] is False


def test_crossvalidate_refuses_large_exhaustive(capsys):
    code, _, err = run(capsys, "crossvalidate", "--n-max", "11")
    assert code == 2 and "--sample" in err


def test_crossvalidate_sampling(capsys):
    code, out, _ = run(capsys, "crossvalidate", "--family", "c46free", "--n-max", "12", "--sample", "10", "--seed", "1", "--property", "shed", "--json")
    report = json.loads(out)
    assert code == 0 and report["mode"] == "sample" and report["graphs"] == 10


def test_conjecture(capsys):
    code, out, _ = run(capsys, "conjecture", "--n-max", "5", "--json")
    report = json.loads(out)
    assert code == 0 and report["graphs"] == 31 and report["well_covered_disagreements"] == []


def test_workers_env(capsys, monkeypatch):
    monkeypatch.setenv("WELLCOV_WORKERS", "2")
    code, out, _ = run(capsys, "crossvalidate", "--n-max", "5", "--json")
    parallel = json.loads(out)
    monkeypatch.setenv("WELLCOV_WORKERS", "1")
    _, out, _ = run(capsys, "crossvalidate", "--n-max", "5", "--json")
    assert json.loads(out) == parallel


def test_console_entry_point(write):
    proc = subprocess.run(
        [sys.executable, "-m", "wellcov", "recognize", write(C5), "--property", "wc"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout.startswith("wc: yes")
