import json

import pytest

from reciprocity import cli
from reciprocity.cli import EXIT_CHECK, EXIT_INPUT, EXIT_OK, RunReport, main


@pytest.fixture
def files(tmp_path):
    data = {
        "braid3": "3\n1 -1 0 0\n1 0 -1 0\n0 1 -1 0\n",
        "empty": "d=2\n",
        "tri": "2\n0 0\n1 0\n0 1\n",
        "seg": "1\n-1\n2\n",
        "square": "2\n0 0\n1 0\n0 1\n1 1\n",
        "half": "1\n0\n1/2\n",
        "k3": "3\n1 2\n1 3\n2 3\n",
        "k2": "2\n1 2\n",
        "lambda": "3\n1 3\n2 3\n",
        "vee": "3\n3 1\n2 1\n",
        "cycle": "3\n1 2\n2 3\n3 1\n",
        "bad": "2\n1 0\n",
    }
    out = {}
    for name, text in data.items():
        path = tmp_path / f"{name}.txt"
        path.write_text(text)
        out[name] = str(path)
    return out


def run_json(capsys, argv):
    code = main([*argv, "--json"])
    return code, json.loads(capsys.readouterr().out)


def test_arrangement(capsys, files):
    code, rep = run_json(capsys, ["arrangement", files["braid3"]])
    assert code == EXIT_OK
    assert rep["outputs"]["characteristic_polynomial"]["coeffs"] == ["0/1", "2/1", "-3/1", "1/1"]
    assert rep["outputs"]["regions_zaslavsky"] == rep["outputs"]["regions_deletion_restriction"] == 6
    code, rep = run_json(capsys, ["arrangement", files["empty"]])
    assert code == EXIT_OK and rep["outputs"]["regions_zaslavsky"] == 1


def test_ehrhart(capsys, files):
    code, rep = run_json(capsys, ["ehrhart", files["tri"], "--reciprocity", "--series", "--triangulate"])
    assert code == EXIT_OK and all(c["passed"] for c in rep["checks"])
    assert rep["outputs"]["counts"]["3"] == 10
    code, rep = run_json(capsys, ["ehrhart", files["seg"], "--series"])
    assert rep["outputs"]["series"]["text"] == "(2*z + 1) / ((1 - z)^2)"
    code, rep = run_json(capsys, ["ehrhart", files["square"], "--triangulate"])
    assert code == EXIT_OK and len(rep["outputs"]["triangulation"]["simplices"]) == 2


def test_rational_polytope(capsys, files):
    code, rep = run_json(capsys, ["ehrhart", files["half"], "--reciprocity"])
    assert code == EXIT_OK and rep["outputs"]["ehrhart"]["period"] == 2
    assert main(["ehrhart", files["half"], "--series"]) == EXIT_INPUT
    assert "lattice polytope" in capsys.readouterr().err


def test_chromatic(capsys, files):
    code, rep = run_json(capsys, ["chromatic", files["k3"], "--pairs", "1", "--pairs", "2", "--iop", "--horizon", "3"])
    assert code == EXIT_OK
    assert rep["outputs"]["acyclic_orientations"] == 6
    assert rep["outputs"]["compatible_pairs"] == {"1": 6, "2": 24}
    # interior dilation 7 of the square carries the 6-colorings of K2
    code, rep = run_json(capsys, ["chromatic", files["k2"], "--iop", "--horizon", "7"])
    assert code == EXIT_OK and rep["outputs"]["inside_out"]["7"]["I_interior"] == 30


def test_ppartition(capsys, files):
    code, rep = run_json(capsys, ["ppartition", files["lambda"], "--strict", "--reciprocity"])
    assert code == EXIT_OK
    assert rep["outputs"]["counts"]["strict"][2] == 1
    code, rep = run_json(capsys, ["ppartition", files["vee"]])
    assert code == EXIT_OK and rep["outputs"]["relabeling"] == [2, 3, 1]
    assert {tuple(r["sigma"]) for r in rep["outputs"]["linear_extensions"]} == {(3, 2, 1), (2, 3, 1)}


def test_verify(capsys):
    code, rep = run_json(capsys, ["verify", "all", "--seed", "7", "--size", "tiny"])
    assert code == EXIT_OK and rep["ok"] and len(rep["checks"]) >= 5


def test_input_errors(capsys, files, tmp_path):
    assert main(["ppartition", files["cycle"]]) == EXIT_INPUT
    assert "antisymmetry" in capsys.readouterr().err
    assert main(["arrangement", files["bad"]]) == EXIT_INPUT
    assert "line 2:" in capsys.readouterr().err
    assert main(["arrangement", str(tmp_path / "missing.txt")]) == EXIT_INPUT
    assert main(["chromatic", files["k3"], "--pairs", "-1"]) == EXIT_INPUT
    assert main(["verify", "nope"]) == EXIT_INPUT
    assert main([]) == EXIT_INPUT


def test_failed_check_exits_one(capsys, files, monkeypatch):
    # a broken deletion-restriction count must surface as a failed check with a witness
    monkeypatch.setattr(cli, "regions_deletion_restriction", lambda a: 5)
    code, rep = run_json(capsys, ["arrangement", files["braid3"]])
    assert code == EXIT_CHECK and not rep["ok"]
    assert rep["checks"][0]["witness"] == {"zaslavsky": 6, "deletion_restriction": 5}
    assert main(["arrangement", files["braid3"]]) == EXIT_CHECK
    assert "[FAIL]" in capsys.readouterr().out


def test_report_roundtrip_and_digest(capsys, files):
    _, data = run_json(capsys, ["ppartition", files["lambda"]])
    rep = RunReport.from_json(data)
    assert rep.to_json() == data
    data["outputs"]["size"] = 4
    with pytest.raises(ValueError, match="digest"):
        RunReport.from_json(data)


def test_inputs_digest_tracks_file_bytes(capsys, files):
    _, a = run_json(capsys, ["chromatic", files["k3"]])
    _, b = run_json(capsys, ["chromatic", files["k2"]])
    assert a["inputs_digest"] != b["inputs_digest"]


def test_thread_cap_does_not_change_results(capsys, monkeypatch):
    outs = []
    for threads in ("1", "4"):
        monkeypatch.setenv("RECIPROCITY_THREADS", threads)
        code, rep = run_json(capsys, ["verify", "all", "--seed", "3", "--size", "tiny"])
        assert code == EXIT_OK
        outs.append(rep)
    outs[0].pop("command"), outs[1].pop("command")
    assert outs[0] == outs[1]
