import json
import subprocess
import sys

import pytest

from singres.cli import main
from singres.graph import DualGraph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_cf(capsys):
    assert run_json(capsys, "cf", "7/5") == {"chain": [2, 2, 3], "det": 7}


@pytest.mark.parametrize("argv,code", [
    (["cf", "6/4"], 2),
    (["cf", "5/5"], 2),
    (["cf", "seven"], 2),
    (["resolve-curve", "y^2 - "], 2),
    (["resolve-curve", "(y - x)^2"], 2),
    (["resolve-curve", "x^3 + y^3"], 3),
    (["jung", "2", "x + 1"], 2),
    (["hj", "1/2"], 2),
    (["frobnicate"], 2),
    ([], 2),
])
def test_exit_codes(capsys, argv, code):
    got, out, err = run(capsys, *argv)
    assert got == code
    assert err and not out


def test_truncation_exit_code(capsys):
    code, _, err = run(capsys, "delta", "(y^2 - x^2 - x^3)*(y^2 - x^2 - x^3 + x^50)",
                       "--max-order", "40")
    assert code == 3 and "TruncationInsufficient" in err


def test_max_order_environment(capsys, monkeypatch):
    monkeypatch.setenv("SINGRES_MAX_ORDER", "40")
    code, _, _ = run(capsys, "delta", "(y^2 - x^2 - x^3)*(y^2 - x^2 - x^3 + x^50)")
    assert code == 3
    monkeypatch.delenv("SINGRES_MAX_ORDER")
    data = run_json(capsys, "delta", "(y^2 - x^2 - x^3)*(y^2 - x^2 - x^3 + x^50)")
    assert data["delta"] == 102


def test_puiseux(capsys):
    data = run_json(capsys, "puiseux", "y^2 - x^3")
    assert data["branches"] == [{"m": 2, "coeffs": {"3": "1"}, "trunc": 4, "exact": True}]


def test_resolve_curve_encoding_c(capsys):
    data = run_json(capsys, "resolve-curve", "y^2 - x^3", "--encoding=c")
    g = DualGraph.from_json(data["graph"])
    assert {v.id: v.self_int for v in g.vertices.values()} == {"E1": -3, "E2": -2, "E3": -1}
    assert [a.at for a in g.arrows] == ["E3"]


@pytest.mark.parametrize("enc", ["a", "b", "c", "d"])
def test_resolve_curve_encodings(capsys, enc):
    assert run_json(capsys, "resolve-curve", "y^2 - x^3", "--encoding", enc)["encoding"] == enc


def test_resolve_curve_full(capsys):
    data = run_json(capsys, "resolve-curve", "y^2 - x^2 - x^3")
    assert data["n_branches"] == 2 and len(data["tree"]) == 1


def test_dot(capsys):
    code, out, _ = run(capsys, "resolve-curve", "y^2 - x^3", "--format", "dot")
    assert code == 0 and out.startswith("graph ") and "--" in out
    code, out, _ = run(capsys, "jung", "2", "x^3 + y^3", "--format=dot")
    assert code == 0 and out.count(" -- ") >= 3


def test_delta_and_genus(capsys):
    assert run_json(capsys, "delta", "y^2 - x^5")["delta"] == 2
    assert run_json(capsys, "genus", "3", "y^2 - x^3")["genus"] == 0
    assert run_json(capsys, "genus", "5")["genus"] == 6
    code, _, _ = run(capsys, "genus", "2", "y^2 - x^3")
    assert code == 2


def test_hj(capsys):
    data = run_json(capsys, "hj", "--cyclic", "7", "5")
    assert data["chain"] == [2, 2, 3] and data["det"] == 7
    assert [v["self_int"] for v in data["graph"]["vertices"]] == [-2, -2, -3]
    data = run_json(capsys, "hj", "1/3", "2/3")
    assert (data["lemma"]["q1p"], data["lemma"]["k1p"]) == (3, 1)
    data = run_json(capsys, "hj", "2", "3")
    assert data["lemma"]["reduced"] is None and data["graph"]["vertices"] == []


def test_jung(capsys):
    data = run_json(capsys, "jung", "2", "x*y")
    assert [v["self_int"] for v in data["vertices"]] == [-2]
    data = run_json(capsys, "jung", "5", "y^2 - x^3", "--minimize")
    assert [v["self_int"] for v in data["vertices"]] == [-2] * 8


def test_graph_check_roundtrip(capsys, tmp_path):
    code, out, _ = run(capsys, "jung", "2", "x^3 + y^5")
    path = tmp_path / "e8.json"
    path.write_text(out)
    report = run_json(capsys, "graph-check", str(path))
    assert report["negative_definite"] and report["determinant"] == 1
    assert report["balance"] == {"f_mult": True}
    assert report["vertices"] == 8 and report["minimal"]
    # nothing is lost on the way through the file
    assert DualGraph.from_json(json.loads(path.read_text())) == DualGraph.from_json(json.loads(out))


def test_graph_check_resolution_output(capsys, tmp_path):
    code, out, _ = run(capsys, "resolve-curve", "y^2 - x^3")
    path = tmp_path / "cusp.json"
    path.write_text(out)
    report = run_json(capsys, "graph-check", str(path))
    assert report["balance"]["f_mult"] and report["determinant"] == -1
    assert report["first_kind"] == ["E3"] and not report["minimal"]


def test_graph_check_errors(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "graph-check", str(bad))[0] == 2
    assert run(capsys, "graph-check", str(tmp_path / "missing.json"))[0] == 2
    dangling = tmp_path / "dangling.json"
    dangling.write_text(json.dumps({"vertices": [{"id": "A", "self_int": -2}],
                                "edges": [["A", "B", 1]], "arrows": []}))
    assert run(capsys, "graph-check", str(dangling))[0] == 2


def test_deterministic_subprocess():
    argv = [sys.executable, "-m", "singres", "jung", "3", "y^2 - x^3"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and json.loads(first)["vertices"]
