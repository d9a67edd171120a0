import json

import pytest

from rootpoly.main import main

F1_EDGES = [[0, 1], [0, 2], [1, 2]]


@pytest.fixture(autouse=True)
def no_config(monkeypatch):
    for name in ("ROOTPOLY_CONFIG_FILE", "ROOTPOLY_LOG_LEVEL", "ROOTPOLY_USE_CACHED_DATA"):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def f1_file(write_digraph):
    return write_digraph("f1.json", 3, F1_EDGES)


def test_hstar(f1_file, capsys):
    assert main(["hstar", f1_file]) == 0
    assert capsys.readouterr().out.strip() == "h* = 1 + x"


def test_hstar_with_order_and_oracle(f1_file, capsys):
    assert main(["hstar", f1_file, "--order", "3,1,2", "--oracle"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out == ["h* = 1 + x", "oracle h* = 1 + x", "MATCH"]


def test_hstar_trees(f1_file, capsys):
    assert main(["hstar", f1_file, "--trees"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out == ["h* = 1 + x", "tree [0, 1]: 0 semi-passive", "tree [1, 2]: 1 semi-passive"]


def test_hstar_json(f1_file, capsys):
    assert main(["hstar", f1_file, "--json", "--oracle"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["hstar"] == [1, 1]
    assert data["oracle"] == [1, 1]
    assert data["match"] is True
    assert data["ordering"] == [0, 1, 2]


def test_hstar_disconnected(write_digraph, capsys):
    path = write_digraph("split.json", 4, [[0, 1], [2, 3]])
    assert main(["hstar", path]) == 2
    assert main(["hstar", path, "--components"]) == 0
    assert capsys.readouterr().out.strip() == "h* = 1"


def test_bad_input(tmp_path, f1_file, write_digraph):
    assert main(["hstar", str(tmp_path / "missing.json")]) == 2
    assert main(["hstar", f1_file, "--order", "1,2"]) == 2
    assert main(["hstar", f1_file, "--order", "a,b,c"]) == 2
    assert main(["hstar", write_digraph("bad.json", 2, [[0, 5]])]) == 2
    assert main(["hstar"]) == 2
    assert main(["nonsense"]) == 2


def test_report(f1_file, capsys):
    assert main(["report", f1_file]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["ok"] is True
    assert data["hstar"] == [1, 1]
    assert [e["contract_equal"] for e in data["edges"]] == [False, True, False]
    assert all(e["delete"] == [1] for e in data["edges"])


def test_facets(f1_file, capsys):
    assert main(["facets", f1_file]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "dimension 2, 4 facets"
    assert sum("cut" in line for line in out) == 2
    assert sum("layering" in line for line in out) == 2


def test_facets_json(f1_file, capsys):
    assert main(["facets", f1_file, "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data["facets"]) == 4
    assert sorted(layer["layering"] for layer in data["layerings"]) == [[0, 0, 1], [0, 1, 1]]


def test_ehrhart(f1_file, capsys):
    assert main(["ehrhart", f1_file, "-k", "2"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out == ["L(0..2) = 1, 4, 9", "h* = 1 + x"]


def test_ehrhart_below_dimension(f1_file, capsys):
    assert main(["ehrhart", f1_file, "-k", "1", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data == {"dimension": 2, "counts": [1, 4], "hstar": None}


def test_verify(capsys):
    assert main(["verify", "--max-vertices", "2", "--max-edges", "2", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["ok"] is True
    assert data["graphs"] > 0


def test_verify_text_with_tutte(capsys):
    code = main(
        ["--log-level", "warning", "verify", "--max-vertices", "2", "--max-edges", "1", "--tutte",
         "--max-base-vertices", "3", "--max-base-edges", "2"]
    )
    assert code == 0
    out = capsys.readouterr().out
    assert "tutte base graphs checked: 6" in out
    assert out.strip().endswith("ALL CHECKS PASSED")


def test_configuration_error(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("ROOTPOLY_CONFIG_FILE", str(tmp_path / "missing.yml"))
    assert main(["verify"]) == 2
    assert "Configuration error" in capsys.readouterr().err
