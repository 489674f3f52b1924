import json
import subprocess
import sys

import pytest

from diagcoset.characters import clear_memo
from diagcoset.cli import run


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("DIAGCOSET_CACHE_DIR", str(tmp_path / "cache"))
    clear_memo()
    yield
    clear_memo()


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_roots(capsys):
    code, out, _ = call(capsys, "roots", "--algebra", "E8", "--format", "json")
    assert code == 0
    row = json.loads(out)["rows"][0]
    assert (row["rank"], row["dual_coxeter"], row["dim_g"]) == (8, 30, 248)
    assert row["fundamental_group_order"] == 1
    assert row["marks"] == "[2,3,4,6,5,4,3,2]"
    assert row["simple_currents"] == "[0]"


def test_weights(capsys):
    code, out, _ = call(capsys, "weights", "--algebra", "A1", "--level", "2", "--format", "json")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert [r["weight"] for r in rows] == ["[0]", "[1]", "[2]"]
    assert [r["h"] for r in rows] == ["0", "3/16", "1/2"]
    assert [r["qdim"] for r in rows] == [1.0, 1.41421356237, 1.0]


def test_srow(capsys):
    code, out, _ = call(capsys, "srow", "--algebra", "E8", "--level", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["parameters"]["passed"] is True
    assert doc["parameters"]["residual"] < 1e-9
    assert len(doc["rows"]) == 3


def test_srow_failing_tolerance(capsys):
    # a negative tolerance can never be met, so the report fails
    code, _, _ = call(capsys, "srow", "--algebra", "A2", "--level", "5", "--tol", "-1")
    assert code == 1


def test_qdim(capsys):
    code, out, _ = call(capsys, "qdim", "--algebra", "E8", "--level", "2",
                        "--weight", "0,0,0,0,0,0,0,1", "--format", "tsv")
    assert code == 0
    assert out.splitlines()[1].split("\t")[-1] == "1.41421356237"


def test_coset_verify_e8(capsys):
    code, out, _ = call(capsys, "coset", "verify", "--algebra", "E8", "--k", "1", "--l", "2",
                        "--format", "json")
    assert code == 0
    p = json.loads(out)["parameters"]
    assert p["passed"] is True
    assert abs(p["sum_sq_candidates"] - p["glob"]) <= 1e-8 * p["glob"]


def test_coset_verify_all_triples_fails_for_a1(capsys):
    code, out, _ = call(capsys, "coset", "verify", "--algebra", "A1", "--k", "1", "--l", "1",
                        "--all", "--format", "json")
    assert code == 1
    assert json.loads(out)["parameters"]["ratio_all"] == 2.0


def test_coset_classify_dedup(capsys):
    code, out, _ = call(capsys, "coset", "classify", "--algebra", "A1", "--k", "1", "--l", "1",
                        "--dedup", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["rows"]) == 3
    assert doc["parameters"]["sum_sq_candidates"] == 4.0
    code, out, _ = call(capsys, "coset", "classify", "--algebra", "A1", "--k", "1", "--l", "1",
                        "--format", "json")
    assert len(json.loads(out)["rows"]) == 6


def test_branch_ising(capsys):
    code, out, _ = call(capsys, "--no-cache", "branch", "--algebra", "A1", "--k", "1", "--l", "1",
                        "--top", "0", "--mid", "0", "--depth", "6", "--format", "json")
    assert code == 0
    rows = {r["bot"]: r for r in json.loads(out)["rows"]}
    nonzero = {b for b, r in rows.items() if any(r["coeffs"])}
    assert nonzero == {"[0]", "[2]"}
    assert rows["[0]"]["coeffs"] == [1, 0, 1, 1, 2, 2, 3]
    assert rows["[2]"]["lowest"] == "1/2"


def test_branch_normalize(capsys):
    code, out, _ = call(capsys, "--no-cache", "branch", "--algebra", "A1", "--k", "1", "--l", "1",
                        "--top", "0", "--mid", "1", "--depth", "3", "--normalize", "c24",
                        "--format", "json")
    assert code == 0
    rows = {r["bot"]: r for r in json.loads(out)["rows"]}
    assert rows["[1]"]["offset"] == "1/24"   # 1/16 - 1/48


def test_branch_cold_and_warm_cache_identical(capsys, tmp_path):
    argv = ["--cache-dir", str(tmp_path / "c"), "branch", "--algebra", "A2", "--k", "1",
            "--l", "1", "--top", "1,0", "--mid", "0,1", "--depth", "3", "--format", "json"]
    code, cold, _ = call(capsys, *argv)
    assert code == 0
    assert any((tmp_path / "c").iterdir())
    clear_memo()
    code, warm, _ = call(capsys, *argv)
    assert code == 0 and warm == cold


def test_minimal(capsys):
    code, out, _ = call(capsys, "minimal", "--p", "3", "--q", "4", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["parameters"]["central_charge"] == "1/2"
    assert {r["h"] for r in doc["rows"]} == {"0", "1/2", "1/16"}


def test_selfcheck_subset(capsys):
    code, out, _ = call(capsys, "selfcheck", "--only", "S-row sum rules",
                        "--only", "Ising reproduction", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert [r["check"] for r in doc["rows"]] == ["S-row sum rules", "Ising reproduction"]


@pytest.mark.parametrize("argv", [
    [],
    ["roots"],
    ["weights", "--algebra", "A1"],
    ["weights", "--algebra", "A1", "--level", "0"],
    ["qdim", "--algebra", "A1", "--level", "1", "--weight", "x"],
    ["branch", "--algebra", "A1", "--k", "1", "--l", "1", "--top", "0", "--mid", "0",
     "--depth", "-1"],
    ["coset"],
    ["minimal", "--p", "3"],
    ["roots", "--algebra", "E8", "--format", "xml"],
])
def test_usage_errors(capsys, argv):
    assert call(capsys, *argv)[0] == 2


@pytest.mark.parametrize("argv", [
    ["roots", "--algebra", "B1"],
    ["qdim", "--algebra", "A1", "--level", "1", "--weight", "2"],
    ["qdim", "--algebra", "A2", "--level", "1", "--weight", "1,0,0"],
    ["minimal", "--p", "2", "--q", "4"],
])
def test_domain_errors_are_usage_errors(capsys, argv):
    code, out, err = call(capsys, *argv)
    assert code == 2
    assert out == ""
    assert json.loads(err)["error"] == "usage"


def test_resource_error(capsys):
    code, out, err = call(capsys, "--no-cache", "branch", "--algebra", "E8", "--k", "1",
                          "--l", "1", "--top", "0", "--mid", "0", "--depth", "3",
                          "--max-weights", "5")
    assert code == 1
    doc = json.loads(err)
    assert doc["error"] == "resource_limit"
    assert isinstance(doc["grade"], int)
    assert doc["reason"]


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "diagcoset.cli", "minimal", "--p", "3",
                           "--q", "4", "--format", "tsv"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == ["r\ts\th", "1\t1\t0", "2\t2\t1/16", "3\t1\t1/2"]
