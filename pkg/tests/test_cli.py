import json

import pytest

from holeforge.cli import main
from holeforge.io import parse_edges, parse_td, read_edges
from holeforge.treewidth import validate_tree_decomposition


def run(capsys, *argv):
    code = main(list(map(str, argv)))
    return code, capsys.readouterr().out


@pytest.fixture
def files(tmp_path, capsys):
    def make(family, *params, name=None):
        path = tmp_path / (name or f"{family}.edges")
        code, _ = run(capsys, "generate", family, *params, "--out", path)
        assert code == 0
        return path

    return make


def test_generate_edges_and_dot(capsys):
    code, out = run(capsys, "generate", "theta", 2, 2, 2)
    assert code == 0
    g = parse_edges(out)
    assert (g.n, g.m) == (5, 6)
    code, out = run(capsys, "generate", "cube", "--dot")
    assert out.startswith("graph G {") and out.count("--") == 12


def test_generate_bad_params(capsys):
    with pytest.raises(SystemExit):
        main(["generate", "theta", "2", "2"])


def test_detect_exit_codes(files, capsys):
    theta = files("theta", 2, 3, 3)
    code, out = run(capsys, "detect", "theta", theta)
    assert code == 0 and out.startswith("found theta")
    code, out = run(capsys, "detect", "prism", theta)
    assert code == 1 and out.strip() == "none"
    code, out = run(capsys, "detect", "even-hole", files("elementary-wall", 6, 6), "--budget", 0)
    assert code in (0, 2)


def test_detect_json_report(files, capsys):
    prism = files("prism", 1, 1, 1)
    code, out = run(capsys, "detect", "prism", prism, "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["schema"] == "holeforge.run-report/1"
    assert rep["status"] == "found" and rep["timing"] is None
    assert rep["result"]["witness"]["kind"] == "prism"


def test_separate(files, capsys, tmp_path):
    code, out = run(capsys, "separate", "clique", files("cycle", 5))
    assert code == 1
    bowtie = tmp_path / "bowtie.edges"
    bowtie.write_text("5 6\n0 1\n0 2\n1 2\n2 3\n2 4\n3 4\n")
    code, out = run(capsys, "separate", "clique", bowtie, "--max-size", 1)
    assert code == 0 and "clique: 2" in out
    code, out = run(capsys, "separate", "2join", files("cycle", 7))
    assert code == 1


def test_decompose_outputs(files, capsys, tmp_path):
    cube = files("cube")
    td_path, tree_path = tmp_path / "cube.td", tmp_path / "tree.json"
    code, out = run(capsys, "decompose", cube, "--td-out", td_path, "--tree-out", tree_path)
    assert code == 0 and "tree-width <= 3" in out
    td, n = parse_td(td_path.read_text())
    chk = validate_tree_decomposition(read_edges(cube), td)
    assert chk.valid and chk.width == 3 and n == 8
    assert json.loads(tree_path.read_text())["basic"] == "cube"


def test_decompose_archives_violation(files, capsys, tmp_path):
    theta = files("theta", 2, 3, 3)
    code, out = run(capsys, "decompose", theta, "--archive", tmp_path / "bad")
    assert code == 1 and "archived" in out
    assert len(list((tmp_path / "bad").glob("*.edges"))) == 1


def test_tw_and_minor(files, capsys):
    code, out = run(capsys, "tw", files("grid", 4, 4))
    assert code == 0 and out.strip() == "4"
    code, out = run(capsys, "tw", files("grid", 5, 5))
    assert code == 2
    code, _ = run(capsys, "minor", "--l", 6, files("cube"))
    assert code == 1
    code, out = run(capsys, "minor", "--l", 6, files("complete", 6))
    assert code == 0 and out.count("B") == 6


def test_extract_wall(files, capsys, tmp_path):
    phi = tmp_path / "phi.map"
    g = tmp_path / "g.edges"
    run(capsys, "generate", "uncontraction", 28, 2, "--phi-out", phi, "--out", g, "--seed", 4)
    code, out = run(capsys, "extract-wall", g, "--witness", phi, "--h", 3)
    assert code == 0 and out.startswith("induced stone wall 4x2")
    code, out = run(capsys, "extract-wall", g, "--witness", phi, "--h", 4)
    assert code == 1


def test_reports_are_deterministic(capsys, tmp_path, monkeypatch):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        code, _ = run(capsys, "verify-corpus", "--count", 5, "--depth", 2, "--rings", 2, "--seed", 7, "--report", path, "--archive", tmp_path / "arch")
        assert code == 0
    assert a.read_bytes() == b.read_bytes()
    assert json.loads(a.read_text())["seed"] == 7


def test_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("HOLEFORGE_SEED", "11")
    code, out = run(capsys, "generate", "ring", "--format", "json")
    assert json.loads(out)["seed"] == 11
