import csv
import json
import subprocess
import sys

import pytest

from moqc.cli import main

C4 = "1 2\n2 3\n3 4\n4 1\n"


@pytest.fixture
def c4(tmp_path):
    p = tmp_path / "c4.txt"
    p.write_text(C4)
    return p


def run(argv, capsys):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_c4(c4, tmp_path, capsys):
    out, rep = tmp_path / "f.json", tmp_path / "r.csv"
    code, _, _ = run(["solve", c4, "--strategy", "three-phase", "--out", out, "--report", rep], capsys)
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["status"] == "ok"
    assert [(p["edges"], p["vertices"]) for p in doc["mos"]] == [(1, 2), (2, 3), (4, 4)]
    assert [(p["density"], p["vertices"]) for p in doc["moqc"]] == [("1/1", 2), ("2/3", 4)]
    assert doc["moqc"][1]["density_decimal"] == pytest.approx(2 / 3, abs=1e-6)
    assert sorted(doc["mos"][2]["witness"]) == [1, 2, 3, 4]
    rows = list(csv.DictReader(rep.open()))
    assert rows[0]["z_hat"] == "3" and rows[0]["z_g"] == "2"
    pct = sum(float(rows[0][c]) for c in ("pct_ds", "pct_mind", "pct_maxd", "pct_eps"))
    assert abs(pct - 100) <= 0.1


def test_solve_k4_baseline(tmp_path, capsys):
    p = tmp_path / "k4.col"
    p.write_text("p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n")
    code, out, _ = run(["solve", p, "--strategy", "baseline"], capsys)
    assert code == 0
    assert [(q["density"], q["vertices"]) for q in json.loads(out)["moqc"]] == [("1/1", 4)]


def test_solve_keeps_original_labels(tmp_path, capsys):
    p = tmp_path / "g.txt"
    p.write_text("10 20\n20 30\n30 10\n30 40\n")
    code, out, _ = run(["solve", p], capsys)
    doc = json.loads(out)
    assert code == 0 and sorted(doc["moqc"][0]["witness"]) == [10, 20, 30]


@pytest.mark.parametrize("text,fmt,code", [
    ("p edge 3 0\n", "dimacs", 3),
    ("1 2\n3\n", "edge-list", 2),
])
def test_solve_error_codes(tmp_path, capsys, text, fmt, code):
    p = tmp_path / "g.txt"
    p.write_text(text)
    assert run(["solve", p, "--format", fmt], capsys)[0] == code


def test_solve_missing_file(tmp_path, capsys):
    assert run(["solve", tmp_path / "nope.txt"], capsys)[0] == 2


def test_solve_timeout_writes_partial(tmp_path, capsys):
    import random
    rng = random.Random(0)
    lines = [f"{i} {j}" for i in range(70) for j in range(i + 1, 70) if rng.random() < 0.3]
    p = tmp_path / "big.txt"
    p.write_text("\n".join(lines))
    out = tmp_path / "f.json"
    code, _, err = run(["solve", p, "--strategy", "baseline", "--time-limit", "1e-6",
                        "--out", out, "--report", tmp_path / "r.csv"], capsys)
    assert code == 4 and "timeout" in err
    doc = json.loads(out.read_text())
    assert doc["status"] == "timeout" and doc["report"]["status"] == "timeout"
    assert doc["mos"]


def test_verify(c4, capsys):
    code, out, _ = run(["verify", c4], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines and all(line.startswith("PASS") for line in lines)


def test_verify_random_graph(tmp_path, capsys):
    import random
    rng = random.Random(7)
    lines = [f"{i} {j}" for i in range(12) for j in range(i + 1, 12) if rng.random() < 0.4]
    p = tmp_path / "g.txt"
    p.write_text("\n".join(lines))
    assert run(["verify", p], capsys)[0] == 0


def test_verify_refuses_large(tmp_path, capsys):
    p = tmp_path / "g.txt"
    p.write_text("\n".join(f"{i} {i + 1}" for i in range(29)))
    code, _, err = run(["verify", p], capsys)
    assert code == 1 and "refused" in err
    assert run(["verify", c4_path(tmp_path), "--max-n", "3"], capsys)[0] == 1


def c4_path(tmp_path):
    p = tmp_path / "c4b.txt"
    p.write_text(C4)
    return p


def test_plotdata_round_trip(c4, tmp_path, capsys):
    out = tmp_path / "f.json"
    run(["solve", c4, "--out", out], capsys)
    code, tsv, _ = run(["plotdata", out], capsys)
    assert code == 0
    rows = list(csv.reader(tsv.strip().splitlines(), delimiter="\t"))
    assert rows[0] == ["edges", "vertices", "density", "provenance", "certificate"]
    doc = json.loads(out.read_text())
    assert sorted((int(r[0]), int(r[1])) for r in rows[1:]) == \
        sorted((p["edges"], p["vertices"]) for p in doc["mos"])
    assert [r[3] for r in rows[1:]] == ["minD", "minD", "DS"]


def test_plotdata_two_phase_tags(c4, tmp_path, capsys):
    out = tmp_path / "f.json"
    run(["solve", c4, "--strategy", "two-phase", "--out", out], capsys)
    _, tsv, _ = run(["plotdata", out], capsys)
    tags = {line.split("\t")[3] for line in tsv.strip().splitlines()[1:]}
    assert tags <= {"DS", "EPS"}


def test_solve_plot_option(c4, tmp_path, capsys):
    plot = tmp_path / "p.tsv"
    run(["solve", c4, "--plot", plot], capsys)
    assert plot.read_text().count("\n") == 4


@pytest.mark.parametrize("content", ["", "{not json", json.dumps({"mos": []}), json.dumps({"x": 1}),
                                     json.dumps({"mos": [{"edges": 1}]})])
def test_plotdata_errors(tmp_path, capsys, content):
    p = tmp_path / "f.json"
    p.write_text(content)
    assert run(["plotdata", p], capsys)[0] == 2


def test_module_entry_point(c4):
    res = subprocess.run([sys.executable, "-m", "moqc", "verify", str(c4)],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "PASS" in res.stdout
