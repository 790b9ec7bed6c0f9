import json
import subprocess
import sys

import pytest

from tamv.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_elements(capsys):
    assert run(capsys, "elements", "EN") == (0, "EN\nNE\n", "")
    code, out, _ = run(capsys, "elements", "NENENE", "--json")
    data = json.loads(out)
    # bottom-up: cover distance from v, then lexicographic
    assert data["elements"] == ["NENENE", "NNEENE", "NENNEE", "NNNEEE", "NNENEE"]


def test_covers(capsys):
    assert run(capsys, "covers", "NENE", "NENE")[1] == "NNEE\n"
    code, _, err = run(capsys, "covers", "NNEE", "NENE")
    assert code == 2 and "NNEE NENE" in err


def test_hasse(capsys):
    code, out, _ = run(capsys, "hasse", "NENENE", "--dot")
    assert code == 0 and out.startswith("digraph tam {") and out.count("->") == 5
    code, out, _ = run(capsys, "hasse", "NENENE", "--json")
    assert len(json.loads(out)["elements"]) == 5
    with pytest.raises(SystemExit) as exc:
        main(["hasse", "NENE"])
    assert exc.value.code == 2


def test_meet_join(capsys):
    assert run(capsys, "join", "NENENE", "NNEENE", "NENNEE")[1] == "NNNEEE\n"
    assert run(capsys, "meet", "NENENE", "NNEENE", "NENNEE")[1] == "NENENE\n"
    code, _, err = run(capsys, "meet", "NENENE", "EEENNN", "NENENE")
    assert code == 2 and "EEENNN" in err


def test_check(capsys):
    assert run(capsys, "check", "partition", "4") == (0, "pass partition n=4 classes=8\n", "")
    code, out, _ = run(capsys, "check", "lattice", "4", "--json")
    data = json.loads(out)
    assert code == 0 and data["pass"] is True and data["check"] == "lattice"
    assert run(capsys, "check", "m-equiv", "2", "3")[0] == 0
    assert run(capsys, "check", "duality", "--max-size", "3")[1].startswith("pass duality max_len=3")
    with pytest.raises(SystemExit):
        main(["check", "partition", "12"])
    with pytest.raises(SystemExit):
        main(["check", "m-equiv", "2"])


def test_check_failure_exit_status(capsys, monkeypatch):
    from tamv import harness

    monkeypatch.setattr(harness, "slope_cover", lambda u, m: [])
    code, out, _ = run(capsys, "check", "m-equiv", "1", "2")
    assert code == 1 and out.startswith("FAIL m-equiv") and "witness=u=NENE" in out


def test_intervals(capsys):
    assert run(capsys, "intervals", "NENENE")[1] == "13\n"
    code, out, _ = run(capsys, "intervals-all", "2")
    assert out.splitlines() == ["NN 1", "NE 1", "EN 3", "EE 1", "total 6"]
    code, out, _ = run(capsys, "intervals-all", "3", "--json", "--workers", "2")
    assert json.loads(out)["total"] == 22


def test_count(capsys):
    assert run(capsys, "count", "--tamari", "4")[1] == "pass tamari n=4 brute=68 formula=68\n"
    code, out, _ = run(capsys, "count", "--labelled", "2", "3", "--json")
    assert json.loads(out)["brute"] == 189
    assert run(capsys, "count", "--m-tamari", "2", "2")[0] == 0
    assert run(capsys, "count", "--total", "3")[0] == 0
    with pytest.raises(SystemExit):
        main(["count", "--tamari", "3", "--total", "3"])


def test_biject(capsys):
    assert run(capsys, "biject", "tree-to-pair", "(·)(((·)(·))(·))")[1] == "NE\nEN\n"
    assert run(capsys, "biject", "pair-to-tree", "NE", "EN")[1] == "(·)(((·)(·))(·))\n"
    assert run(capsys, "biject", "ballot", "((·)(·))(·)")[1] == "NENE\n"
    assert run(capsys, "biject", "class", "NENENE")[1] == "NN\nNN\n"
    code, _, err = run(capsys, "biject", "pair-to-tree", "EN", "NE")
    assert code == 2 and "EN NE" in err
    code, _, err = run(capsys, "biject", "class", "NXE")
    assert code == 2
    with pytest.raises(SystemExit):
        main(["biject", "class", "NE", "NE"])


def test_canopy_rational_dualize(capsys):
    assert run(capsys, "canopy", "((·)(·))((·)(·))")[1] == "NE\n"
    assert run(capsys, "rational", "3", "5")[1] == "NENEENEE\n"
    code, _, err = run(capsys, "rational", "2", "4")
    assert code == 2 and "rational 2 4" in err
    assert run(capsys, "dualize", "EN", "EN")[1] == "NE\n"
    assert run(capsys, "canopy", "·")[0] == 2


def test_usage_errors():
    for argv in ([], ["frobnicate"], ["elements", "NXE"], ["elements", "EN", "--bogus"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tamv", "elements", "EN"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "EN\nNE\n"


def test_hasse_dot_parses(capsys):
    pydot = pytest.importorskip("pydot")
    code, out, _ = run(capsys, "hasse", "ENEEN", "--dot")
    (graph,) = pydot.graph_from_dot_data(out)
    labels = {n.get_label().strip('"') for n in graph.get_nodes() if n.get_name() != "node"}
    code, js, _ = run(capsys, "hasse", "ENEEN", "--json")
    data = json.loads(js)
    assert labels == set(data["elements"])
    assert len(graph.get_edges()) == len(data["covers"])
