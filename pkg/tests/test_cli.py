import io
import json
from pathlib import Path

import pytest

from hopftutte.cli import main

DATA = Path(__file__).resolve().parent.parent / "data"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue().splitlines()


def test_compute_tutte_triangle():
    code, lines = run("compute", "--object", str(DATA / "triangle.json"), "--polynomial", "tutte")
    assert code == 0
    assert lines[0] == "x^2 + x + y"
    record = json.loads(lines[-1])
    assert record["terms"][0] == {"coefficient": 1, "exponents": {"x": 4}}


def test_compute_penrose_theta_at_three():
    code, lines = run("compute", "--object", str(DATA / "theta.json"), "--polynomial", "penrose",
                      "--lambda", "3")
    assert (code, lines[0]) == (0, "6")


def test_compute_br2_prints_unshifted_form():
    code, lines = run("compute", "--object", str(DATA / "theta.json"), "--polynomial", "br2")
    assert code == 0
    assert lines[0] == "Y^2 + X + 3*Y + 3"
    assert lines[1] == "in x, y: y^2 + x + y"


def test_compute_alpha_engines_agree():
    outs = set()
    for engine in ("bruteforce", "statesum", "delcon"):
        code, lines = run("compute", "--object", str(DATA / "triangle.json"), "--polynomial", "alpha",
                          "--engine", engine)
        assert code == 0
        outs.add(lines[0])
    assert outs == {"x1^2*x2 + 3*x1^2*y2 + 3*x1*y1*y2 + y1^2*y2"}


def test_parse_error_exit(capsys):
    code, _ = run("compute", "--object", str(DATA / "bad.json"), "--polynomial", "tutte")
    assert code == 2
    assert "edges[1]" in capsys.readouterr().err


def test_cap_exceeded_exit(tmp_path, capsys):
    f = tmp_path / "big.json"
    f.write_text(json.dumps({"type": "uniform", "k": 3, "n": 7}))
    code, _ = run("compute", "--object", str(f), "--polynomial", "alpha", "--engine", "bruteforce")
    assert code == 2
    assert "7 elements" in capsys.readouterr().err


def test_unsupported_pairing(capsys):
    code, _ = run("compute", "--object", str(DATA / "twisted_pair.json"), "--polynomial", "krushkal")
    assert code == 2


def test_bad_lambda(capsys):
    code, _ = run("compute", "--object", str(DATA / "theta.json"), "--polynomial", "penrose",
                  "--lambda", "three")
    assert code == 2


def test_unknown_suite_rejected():
    with pytest.raises(SystemExit):
        run("verify", "--suite", "nope")


def test_verify_json_report(tmp_path):
    report = tmp_path / "r.json"
    code, lines = run("verify", "--suite", "recursion", "--max-elements", "2", "--json-report", str(report))
    assert code == 0
    assert lines[0].startswith("PASS recursion")
    data = json.loads(report.read_text())
    assert data["passed"] and data["failures"] == []


def test_verify_all_max_three():
    code, lines = run("verify", "--suite", "all", "--max-elements", "3")
    assert code == 0, lines
