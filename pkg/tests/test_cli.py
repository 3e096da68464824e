import json
import subprocess
import sys

import pytest
from hypothesis import given

from glsdim.cli import WeightSyntaxError, format_weight, main, parse_weight
from glsdim.weights import SuperWeight

from conftest import dominant_weights

FIVE_CASES = [
    ("0,0,0|0", "1"),
    ("1,0,0|0", "2"),
    ("1,0|0", "1"),
    ("1,0|0,1", "2"),
    ("1,0,0|0,1", "0"),
]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_weight():
    assert parse_weight("1,0,0|0,1") == SuperWeight((1, 0, 0), (0, 1))
    assert parse_weight(" ( 2, -1 | -3 ) ") == SuperWeight((2, -1), (-3,))
    assert parse_weight("4,2|") == SuperWeight((4, 2), ())
    for bad in ("1,0,0", "|1", "1,,0|0", "a|b", ""):
        with pytest.raises(WeightSyntaxError):
            parse_weight(bad)


@given(dominant_weights(max_m=6, lo=-50, hi=50))
def test_round_trip(w):
    assert parse_weight(format_weight(w)) == w


def test_analyze_text(capsys):
    code, out, _ = run(capsys, "analyze", "0,0,0|0")
    assert code == 0
    assert "|sdim|        1" in out
    assert "maximal" in out
    assert "x1" in out


@pytest.mark.parametrize("weight, r, maximal, s, sdim", [
    ("0,0,0|0", "1", True, "1", "1"),
    ("1,0|0,1", "2", True, "2", "2"),
    ("1,0,0|0,1", "1", False, "1", "0"),
])
def test_analyze_json(capsys, weight, r, maximal, s, sdim):
    code, out, _ = run(capsys, "analyze", weight, "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert list(d) == ["weight", "rho_shifted", "diagram", "gamma", "atypicality", "maximal",
                       "s_lambda", "m_lambda_positive", "glambda_dim", "sdim_abs"]
    assert (d["atypicality"], d["maximal"], d["s_lambda"], d["sdim_abs"]) == (r, maximal, s, sdim)
    assert d["weight"] == weight


@pytest.mark.parametrize("weight, expected", [("1,0,0,0|1", "8"), ("1,0,0|0", "2"), ("1,0|0", "1")])
def test_sdim(capsys, weight, expected):
    code, out, _ = run(capsys, "sdim", weight)
    assert (code, out.strip()) == (0, expected)
    _, js, _ = run(capsys, "analyze", weight, "--format", "json")
    assert json.loads(js)["sdim_abs"] == expected


def test_negative_entries(capsys):
    code, out, _ = run(capsys, "sdim", "-1,-1|-1")
    assert (code, out.strip()) == (0, "1")
    code, out, _ = run(capsys, "analyze", "-1,-2|-3", "--format", "json")
    assert code == 0 and json.loads(out)["weight"] == "-1,-2|-3"


def test_error_codes(capsys):
    code, _, err = run(capsys, "sdim", "0,1|0")
    assert code == 3 and "c1=0 < c2=1" in err
    code, _, err = run(capsys, "sdim", "0|0,0")
    assert code == 3
    code, _, err = run(capsys, "sdim", "1,0")
    assert code == 2 and "cannot parse" in err
    code, _, _ = run(capsys, "frobnicate")
    assert code == 2


def test_lemma2(capsys):
    code, out, _ = run(capsys, "lemma2", "--r", "7")
    assert (code, out.strip()) == (0, "1")


def test_verify_lemma2(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "lemma2", "--max-r", "10")
    assert code == 0
    assert out.count("PASS") == 10
    assert "10 passed, 0 failed" in out


def test_verify_engine_with_dump(capsys, tmp_path):
    dump = tmp_path / "sch.jsonl"
    code, out, _ = run(capsys, "verify", "--suite", "engine", "--max-m", "2", "--max-n", "2",
                       "--entry-bound", "1", "--dump", str(dump), "-q")
    assert code == 0
    assert "0 failed" in out and "PASS" not in out
    records = [json.loads(line) for line in dump.read_text().splitlines()]
    assert records and all(r["kind"] == "sch" for r in records)
    assert records[0]["terms"][0]["coeff"] == "1"


def test_verify_tableaux(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "tableaux", "--max-m", "2", "--max-n", "1",
                       "--max-cells", "5", "-q")
    assert code == 0 and "0 failed" in out


def test_batch_json(capsys, tmp_path):
    path = tmp_path / "weights.txt"
    path.write_text("# the five worked cases\n" + "\n".join(w for w, _ in FIVE_CASES) + "\n\n")
    code, out, err = run(capsys, "batch", "--file", str(path))
    assert code == 0 and err == ""
    records = [json.loads(line) for line in out.splitlines()]
    assert [r["sdim_abs"] for r in records] == [s for _, s in FIVE_CASES]
    assert [r["weight"] for r in records] == [w for w, _ in FIVE_CASES]


def test_batch_tsv(capsys, tmp_path):
    path = tmp_path / "weights.txt"
    path.write_text("1,0|0,1\n")
    code, out, _ = run(capsys, "batch", "--file", str(path), "--format", "tsv")
    assert code == 0
    assert out == "1,0|0,1\t2\ttrue\t2\t2\n"


def test_batch_errors(capsys, tmp_path):
    empty = tmp_path / "empty.txt"
    empty.write_text("")
    assert run(capsys, "batch", "--file", str(empty)) == (0, "", "")
    mixed = tmp_path / "mixed.txt"
    mixed.write_text("0,0|0\nnot a weight\n0,1|0\n1,0|0\n")
    code, out, err = run(capsys, "batch", "--file", str(mixed))
    assert code == 4
    assert len(out.splitlines()) == 2
    assert "line 2" in err and "line 3" in err
    code, _, err = run(capsys, "batch", "--file", str(tmp_path / "missing.txt"))
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "glsdim", "sdim", "1,0,0|0"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "2"
