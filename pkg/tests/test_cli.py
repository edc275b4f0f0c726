import json

import pytest

from degseq.cli import main
from degseq.serialize import instance_from_dict, instance_to_dict, load_instance

EXAMPLE1 = {
    "n": 3,
    "edges": [[1, 2], [2, 3], [1, 3]],
    "functions": [[1, 0, 1], [4, 1, 0], [1, 0, 1]],
}

EXAMPLE2 = {
    "n": 4,
    "edges": [[1, 3], [2, 3], [2, 4]],
    "functions": [[1, 0], [1, 0, 1], [1, 0, 1], [1, 0]],
    "partition": {"left": [1, 2], "right": [3, 4]},
    "fixed_set": [1, 2, 3],
}


@pytest.fixture
def example1_file(tmp_path):
    path = tmp_path / "ex1.json"
    path.write_text(json.dumps(EXAMPLE1))
    return str(path)


@pytest.fixture
def example2_file(tmp_path):
    path = tmp_path / "ex2.json"
    path.write_text(json.dumps(EXAMPLE2))
    return str(path)


def test_solve_auto_example1(example1_file, tmp_path, capsys):
    out = tmp_path / "sol.json"
    assert main(["solve", example1_file, "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["value"] == 0
    assert doc["edges"] == [[1, 2], [2, 3]]
    assert doc["method"] == "convex"


def test_solve_bipartite_example2(example2_file, capsys):
    assert main(["solve", example2_file, "--method", "bipartite"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["value"] == 0
    assert doc["edges"] == [[1, 3], [2, 4]]


def test_cross_method_agreement(example2_file, capsys):
    values = []
    for method in ("convex", "bipartite", "monotone", "brute"):
        assert main(["solve", example2_file, "--method", method]) == 0
        values.append(json.loads(capsys.readouterr().out)["value"])
    assert values == [0, 0, 0, 0]


def test_classify_example1(example1_file, capsys):
    assert main(["classify", example1_file]) == 0
    out = capsys.readouterr().out
    methods = {line.split(":")[0] for line in out.strip().splitlines()}
    assert methods == {"convex", "brute"}


def test_classify_example2(example2_file, capsys):
    assert main(["classify", example2_file]) == 0
    out = capsys.readouterr().out
    methods = {line.split(":")[0] for line in out.strip().splitlines()}
    assert methods == {"convex", "bipartite", "monotone", "brute"}


def test_method_inapplicable_exit_code(example1_file, capsys):
    assert main(["solve", example1_file, "--method", "bipartite"]) == 1


def test_input_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["solve", str(bad)]) == 2
    assert main(["solve", str(tmp_path / "missing.json")]) == 2


def test_roundtrip(example2_file):
    loaded = load_instance(example2_file)
    again = instance_from_dict(instance_to_dict(loaded))
    assert again == loaded


def test_reduce_lu(tmp_path, capsys):
    spec = tmp_path / "lu.json"
    spec.write_text(
        json.dumps({"n": 2, "edges": [[1, 2]], "lower": [1, 1], "upper": [1, 1]})
    )
    out = tmp_path / "inst.json"
    assert main(["reduce", "lu", str(spec), "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["functions"] == [[1, 0], [1, 0]]
    capsys.readouterr()
    assert main(["solve", str(out)]) == 0
    assert json.loads(capsys.readouterr().out)["value"] == 0


def test_reduce_exact_matching(tmp_path, capsys):
    spec = tmp_path / "em.json"
    spec.write_text(
        json.dumps({"n": 2, "r": 1, "target": [2], "coloring": [[1, 1], [1, 1]]})
    )
    out = tmp_path / "inst.json"
    assert main(["reduce", "exact-matching", str(spec), "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["n"] == 9
    assert len(doc["edges"]) == 12
    sidecar = json.loads((tmp_path / "inst.json.decode.json").read_text())
    assert sidecar["kind"] == "exact-matching"
    capsys.readouterr()
    assert main(["solve", str(out), "--method", "brute"]) == 0
    assert json.loads(capsys.readouterr().out)["value"] == 0


def test_reduce_factor_cubic(tmp_path, capsys):
    spec = tmp_path / "factor.json"
    k4_edges = [[i, j] for i in range(1, 5) for j in range(i + 1, 5)]
    spec.write_text(
        json.dumps({"n": 4, "edges": k4_edges, "allowed": [[0, 3]] * 4})
    )
    out = tmp_path / "inst.json"
    assert main(["reduce", "factor", str(spec), "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["functions"] == [[0, 1, 1, 0]] * 4


def test_export_dot_aux(example1_file, tmp_path, capsys):
    out = tmp_path / "aux.dot"
    assert main(["export-dot", example1_file, "--target", "aux", "--out", str(out)]) == 0
    text = out.read_text()
    assert text.count("n") > 24
    assert text.count(" -- ") == 36


def test_export_dot_dp(example2_file, tmp_path, capsys):
    out = tmp_path / "dp.dot"
    assert main(["export-dot", example2_file, "--target", "dp", "--out", str(out)]) == 0
    assert out.read_text().startswith("digraph dp {")


def test_export_dot_dp_inapplicable(example1_file, tmp_path, capsys):
    out = tmp_path / "dp.dot"
    assert main(["export-dot", example1_file, "--target", "dp", "--out", str(out)]) == 1


def test_env_overrides(example1_file, monkeypatch, capsys):
    monkeypatch.setenv("DEGSEQ_ORACLE_LIMIT", "0")
    assert main(["solve", example1_file, "--method", "brute"]) == 1
    monkeypatch.delenv("DEGSEQ_ORACLE_LIMIT")
    assert main(["solve", example1_file, "--method", "brute"]) == 0
    capsys.readouterr()
