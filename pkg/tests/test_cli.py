import json

import pytest

from chordpoly.cli import main
from chordpoly.diagram import canonical_cycle
from chordpoly.graph import cycle_graph, path_graph, subdivided_claw


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, g in [("p4", path_graph(4)), ("c5", cycle_graph(5)), ("claw", subdivided_claw())]:
        paths[name] = tmp_path / f"{name}.graph"
        paths[name].write_text(g.to_text())
    paths["cycle5"] = tmp_path / "cycle5.word"
    paths["cycle5"].write_text(canonical_cycle(5).to_text() + "\n")
    return paths


def test_psi_rep(capsys, files):
    code, out, _ = run(capsys, "psi-rep", str(files["cycle5"]))
    assert code == 0 and out.startswith("k=3 corners=[")
    code, out, _ = run(capsys, "psi-rep", "--inline", "0 1 0 1")
    assert code == 0 and out.startswith("k=2")


def test_psi_rep_json(capsys):
    code, out, _ = run(capsys, "psi-rep", "--inline", "0 0 1 1 2 2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["k"] == 3
    assert set(data) == {"k", "corner_gaps", "peripheral", "checks"}
    assert all(data["checks"].values())


def test_psi_rep_bad_input(capsys, tmp_path):
    code, _, err = run(capsys, "psi-rep", "--inline", "0 q 0")
    assert code == 2 and "odd" in err
    code, _, err = run(capsys, "psi-rep", "--inline", "0 q 0 1")
    assert code == 2 and "'q'" in err
    code, _, _ = run(capsys, "psi-rep", str(tmp_path / "missing"))
    assert code == 2


def test_analyze(capsys, files):
    code, out, _ = run(capsys, "analyze", str(files["claw"]))
    assert code == 0 and out.splitlines()[0] == "psi=3 an=3 permutation=false"
    code, out, _ = run(capsys, "analyze", str(files["p4"]))
    assert code == 0 and out.splitlines()[0] == "psi=2 an=2 permutation=true"
    code, _, err = run(capsys, "analyze", str(files["c5"]))
    assert code == 3 and "not distance hereditary" in err
    code, _, _ = run(capsys, "analyze", "--inline", "3 1\n0 7\n")
    assert code == 2


def test_analyze_json(capsys, files):
    code, out, _ = run(capsys, "analyze", str(files["claw"]), "--format", "json")
    data = json.loads(out)
    assert data["psi"] == 3 and len(data["witness"]["corner_gaps"]) == 3


def test_split_tree(capsys, files):
    code, out, _ = run(capsys, "split-tree", str(files["p4"]))
    assert code == 0 and out.count("star") == 2 and out.count(" -- ") == 1
    code, out, _ = run(capsys, "split-tree", "--inline", "4 3\n0 1\n0 2\n0 3\n")
    assert out.count("star") == 1 and " -- " not in out
    code, out, _ = run(capsys, "split-tree", "--inline", "3 3\n0 1\n1 2\n0 2\n")
    assert out.count("clique") == 1
    code, out, _ = run(capsys, "split-tree", str(files["claw"]), "--pruned")
    assert code == 0 and out.startswith("graph pruned_split_tree")
    code, _, _ = run(capsys, "split-tree", str(files["c5"]))
    assert code == 3


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "psi-eq-kappa", "--n", "7", "--count", "300")
    assert code == 0 and out.strip() == "300/300 ok"
    code, out, _ = run(capsys, "verify", "--suite", "dh-identity", "--n", "10", "--count", "100")
    assert code == 0 and out.strip() == "100/100 ok"
    code, out, _ = run(capsys, "verify", "--suite", "all", "--count", "0")
    assert code == 0 and out.strip() == "0 cases, ok"


def test_verify_cap(capsys):
    code, _, err = run(capsys, "verify", "--suite", "dh-identity", "--n", "20")
    assert code == 2 and "cap" in err
    code, _, _ = run(capsys, "verify", "--suite", "dh-identity", "--n", "12", "--cap", "12", "--count", "3")
    assert code == 0


def test_usage_error(capsys):
    assert main(["nonsense"]) == 2
