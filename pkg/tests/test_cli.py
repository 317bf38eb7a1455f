import json

import pytest

from tropgreen.cli import main


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return _write


X1 = "n 3 bool\n1 1 0\n0 1 1\n0 0 1\n"
WITNESS = "n 4 maxplus\n0 1 0 2\n-inf 0 1 1\n-inf -inf 0 0\n-inf -inf -inf 0\n"


def test_plus(write, capsys):
    assert main(["plus", write("a.txt", X1)]) == 0
    out = capsys.readouterr().out.split("\n")
    assert out[1:4] == ["1 0 0", "0 1 1", "0 0 1"]


def test_star_json(write, capsys):
    assert main(["star", "--format", "json", write("a.txt", X1)]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["rows"] == [["1", "1", "0"], ["0", "1", "0"], ["0", "0", "1"]]


def test_factor(write, capsys):
    assert main(["factor", write("a.txt", X1)]) == 0
    out = capsys.readouterr().out
    assert "# 2 factors" in out and out.count("# idempotent: true") == 2


def test_regular(write, capsys):
    assert main(["regular", write("a.txt", "n 2 maxplus\n1 2\n-inf 3\n")]) == 0
    assert "regular: true" in capsys.readouterr().out
    g = "n 3 maxplus\n0 1 1\n-inf 0 1\n-inf -inf 0\n"
    assert main(["regular", write("g.txt", g)]) == 0
    assert "regular: false" in capsys.readouterr().out


def test_deficiency(write, capsys):
    assert main(["deficiency", write("a.txt", WITNESS), "--path", "1->2->4"]) == 0
    assert "Def(1->2->4) = 0" in capsys.readouterr().out
    plus = WITNESS.replace("0 1 0 2", "0 -1 0 2")
    assert main(["deficiency", write("p.txt", plus), "--path", "1->2->4"]) == 0
    assert "Def(1->2->4) = 2" in capsys.readouterr().out


def test_deficiency_compare(write, capsys):
    p = write("p.txt", "n 4 maxplus\n0 -1 0 2\n-inf 0 1 1\n-inf -inf 0 0\n-inf -inf -inf 0\n")
    s = write("s.txt", "n 4 maxplus\n0 1 0 2\n-inf 0 -1 1\n-inf -inf 0 0\n-inf -inf -inf 0\n")
    assert main(["deficiency", p, "--compare", s]) == 0
    assert "D-related: false" in capsys.readouterr().out


def test_tightness_and_htclass(write, capsys):
    E = write("e.txt", "n 4 maxplus\n0 1 2 3\n-inf 0 1 2\n-inf -inf 0 1\n-inf -inf -inf 0\n")
    assert main(["tightness", E]) == 0
    assert "loose: none" in capsys.readouterr().out
    assert main(["htclass", E, "--member", E, "--closure", "--samples", "20"]) == 0
    out = capsys.readouterr().out
    assert "case: n4-case7" in out and "member: true" in out and "product law: true" in out


def test_classify(capsys):
    assert main(["classify", "--family", "UpperBool", "--n", "3"]) == 0
    out = capsys.readouterr().out
    assert "regular: false" in out and "fountain: true" in out and "idempotents: 41" in out


def test_greens(capsys):
    assert main(["greens", "--family", "UniBool", "--n", "3", "--relation", "Rtilde"]) == 0
    assert "0 without idempotents" in capsys.readouterr().out


def test_verify(tmp_path, capsys):
    assert main(["verify", "--suite", "prop-ht", "--witness-dir", str(tmp_path)]) == 0
    assert "PASS prop-ht" in capsys.readouterr().out
    assert not list(tmp_path.iterdir())


@pytest.mark.parametrize("argv", [
    ["classify", "--family", "FullBool", "--n", "4"],
    ["verify", "--suite", "nope"],
    ["classify", "--family", "Nope", "--n", "2"],
])
def test_usage_errors(argv, capsys):
    assert main(argv) == 2
    assert "error:" in capsys.readouterr().err


def test_bad_matrix_position(write, capsys):
    assert main(["plus", write("bad.txt", "n 2 maxplus\n0 x\n-inf 0\n")]) == 2
    assert "line 2, column 3" in capsys.readouterr().err


def test_shape_errors(write, capsys):
    lower = write("l.txt", "n 2 maxplus\n0 -inf\n1 0\n")
    assert main(["star", lower]) == 2
    assert main(["factor", lower]) == 2
    assert main(["deficiency", write("z.txt", "n 2 maxplus\n0 -inf\n-inf 0\n")]) == 2


def test_json_input(write, capsys):
    path = write("a.json", json.dumps({"n": 2, "kind": "maxplus", "rows": [["0", "1"], ["-inf", "0"]]}))
    assert main(["idem", path]) == 0
    assert "idempotent: true" in capsys.readouterr().out
