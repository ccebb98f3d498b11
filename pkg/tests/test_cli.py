import json

import pytest

from quiverhh.cli import main

KRONECKER = """\
field Q
vertex 1 2
arrow a 1 2
arrow b 1 2
"""


@pytest.fixture
def kronecker_file(tmp_path):
    f = tmp_path / "kronecker.dsl"
    f.write_text(KRONECKER)
    return str(f)


def test_analyze_text(kronecker_file, capsys):
    assert main(["analyze", kronecker_file]) == 0
    out = capsys.readouterr().out
    assert "dim A: 4" in out
    assert "m = 1" in out


def test_analyze_json(kronecker_file, capsys):
    assert main(["analyze", kronecker_file, "--json", "--oracle"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["hh1"]["dim"] == 3
    assert data["m"] == 1
    assert data["oracle"]["matches_hh1"]


def test_subcommands(kronecker_file, capsys):
    assert main(["hh1", kronecker_file, "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["hh1"]["dim"] == 3

    assert main(["chains", kronecker_file, "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["m"] == 1

    assert main(["septype", kronecker_file, "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["verdict"] == "Tame"

    assert main(["oracle", kronecker_file, "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["bar_hh1_dim"] == 3


def test_field_override(kronecker_file, capsys):
    assert main(["analyze", kronecker_file, "--field", "fp:5", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["algebra"]["field"] == "fp:5"


def test_parse_error_exit_code(tmp_path, capsys):
    f = tmp_path / "bad.dsl"
    f.write_text("field Q\nvertex 1\narrow a 1 1\nrelation a*zzz\n")
    assert main(["analyze", str(f)]) == 2
    assert "error" in capsys.readouterr().err


def test_not_admissible_exit_code(tmp_path, capsys):
    f = tmp_path / "bad.dsl"
    # a bare arrow in a relation violates admissibility
    f.write_text("field Q\nvertex 1 2\narrow a 1 2\narrow b 1 2\nrelation a - b\n")
    assert main(["analyze", str(f)]) == 2


def test_infinite_dimensional_exit_code(tmp_path):
    f = tmp_path / "free.dsl"
    f.write_text("field Q\nvertex 1\narrow x 1 1\n")
    assert main(["analyze", str(f), "--max-length", "10"]) == 2


def test_char2_decompose_refused(tmp_path, capsys):
    f = tmp_path / "k.dsl"
    f.write_text(KRONECKER)
    assert main(["analyze", str(f), "--field", "fp:2", "--decompose"]) == 3
    assert "refused" in capsys.readouterr().err


def test_char2_without_decompose_skips_chains(tmp_path, capsys):
    f = tmp_path / "k.dsl"
    f.write_text(KRONECKER)
    assert main(["analyze", str(f), "--field", "fp:2", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["m"] is None
    assert data["chains"]["skipped"] == "characteristic 2"
    assert data["flags"]["char_ne_2"] is False


def test_missing_file_exit_code(capsys):
    assert main(["analyze", "/nonexistent/file.dsl"]) == 2
