import json

import pytest

from mathieu.cli import main
from mathieu.reproduce import load_corpus

G168_FILE = """degree 7
shift: (0,1,2,3,4,5,6)
companion: (2,4)(6,5)
"""


def test_apply_prints_cycles(capsys):
    assert main(["apply", "affine 2 0 @ GF(23)"]) == 0
    out = capsys.readouterr().out.strip()
    assert out == "(1,2,4,8,16,9,18,13,3,6,12)(5,10,20,17,11,22,21,19,15,7,14)"


def test_apply_identity(capsys):
    assert main(["apply", "affine 1 0 @ GF(7)"]) == 0
    assert capsys.readouterr().out.strip() == "()"


def test_apply_point(capsys):
    assert main(["apply", "poly -3*z^15 + 4*z^4 @ GF(23)", "--point", "5"]) == 0
    assert capsys.readouterr().out.strip() == "5"


def test_apply_parse_error(capsys):
    assert main(["apply", "garbage formula"]) == 2
    assert "error" in capsys.readouterr().err


def test_group_text_block(tmp_path, capsys):
    path = tmp_path / "g168.gens"
    path.write_text(G168_FILE)
    assert main(["group", str(path), "--base", "0,1"]) == 0
    out = capsys.readouterr().out
    assert "order        168" in out
    assert "transitivity 2" in out
    assert "values       30" in out
    assert "min support  4" in out
    assert "stabilizer of [0, 1]: order 4" in out


def test_group_json(tmp_path, capsys):
    path = tmp_path / "g168.gens"
    path.write_text(G168_FILE)
    assert main(["group", str(path), "--json"]) == 0
    body = json.loads(capsys.readouterr().out)
    assert body["order"] == "168"


def test_group_missing_file(capsys):
    assert main(["group", "/nonexistent/file"]) == 2
    assert "error" in capsys.readouterr().err


def test_group_bad_content(tmp_path, capsys):
    path = tmp_path / "bad.gens"
    path.write_text("degree 7\nbroken\n")
    assert main(["group", str(path)]) == 2


def test_classify_table(capsys):
    assert main(["classify", "7"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("case p=7")
    assert out.count("\n") == 2 + 3
    assert "168" in out and "2520" in out


def test_classify_usage_error(capsys):
    assert main(["classify", "5"]) == 2


def test_minsupport(tmp_path, capsys):
    path = tmp_path / "g168.gens"
    path.write_text(G168_FILE)
    assert main(["minsupport", str(path)]) == 0
    assert capsys.readouterr().out.strip() == "4"
    assert main(["minsupport", str(path), "--budget", "10"]) == 1
    assert "budget" in capsys.readouterr().out


def test_reproduce_ok(capsys):
    assert main(["reproduce"]) == 0
    out = capsys.readouterr().out
    assert "checks matched" in out
    assert "FAIL" not in out


def test_reproduce_mismatch_exits_one(tmp_path, capsys):
    corpus = load_corpus()
    for row in corpus["expectations"]:
        if row["id"] == "m23.min_support":
            row["expected"] = "15"
    path = tmp_path / "corrupt.json"
    path.write_text(json.dumps(corpus))
    assert main(["reproduce", "--corpus", str(path)]) == 1
    out = capsys.readouterr().out
    assert "FAIL  m23.min_support" in out


def test_reproduce_bad_corpus_file(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    assert main(["reproduce", "--corpus", str(path)]) == 2


def test_unreachable_service(capsys):
    assert main(["--url", "http://127.0.0.1:1", "apply", "affine 1 0 @ GF(7)"]) == 2
    assert "unreachable" in capsys.readouterr().err
