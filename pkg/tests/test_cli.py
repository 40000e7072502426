import json
import subprocess
import sys

import pytest

from symeichler import make_lattice
from symeichler.cli import run
from symeichler.discriminant import DiscGroup
from symeichler.serialize import (element_from_json, matrix_from_json,
                                  vector_from_json, witness_from_json)


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    doc = json.loads(out)
    assert doc["schema_version"] == "1"
    return code, doc


def test_classify(capsys):
    code, doc = call(capsys, "classify", "--type", "1,1,2", "--vector", "2,0,0,0,1,0")
    assert code == 0
    assert doc["div"] == "2"
    assert element_from_json(doc["class"]).residues == ((0, 0), (0, 0), (1, 0))
    assert doc["splitting"] is True


def test_classify_non_primitive(capsys):
    code, doc = call(capsys, "classify", "--type", "1,1,2", "--vector", "2,0,0,0,2,0")
    assert code == 0 and doc["primitive"] is False and "div" not in doc


def test_witness(capsys):
    code, doc = call(capsys, "witness", "--type", "1,1,2", "--v", "0,0,0,0,1,0",
                     "--w", "2,0,0,0,1,0")
    assert code == 0 and doc["equivalent"] is True
    W = witness_from_json(make_lattice((1, 1, 2)), doc["witness"])
    assert W((0, 0, 0, 0, 1, 0)) == (2, 0, 0, 0, 1, 0)


def test_witness_not_equivalent_is_success(capsys):
    code, doc = call(capsys, "witness", "--type", "1,1,2", "--v", "1,0,0,0,0,0",
                     "--w", "0,0,0,0,1,0")
    assert code == 0 and doc["equivalent"] is False


def test_witness_bfs(capsys, tmp_path, monkeypatch):
    budget = tmp_path / "budget.json"
    budget.write_text(json.dumps({"bound": 3, "max_depth": 8}))
    monkeypatch.setenv("SYMEICHLER_BUDGET", str(budget))
    code, doc = call(capsys, "witness", "--type", "1,2,2", "--v", "1,0,0,0,0,0",
                     "--w", "0,1,0,0,0,0", "--method", "bfs",
                     "--budget", '{"gen_bound": 1}')
    assert code == 0 and doc["status"] == "connected"
    assert doc["budget"] == {"bound": "3", "gen_bound": "1",
                             "max_states": "200000", "max_depth": "8"}


def test_witness_bfs_budget_exhausted(capsys):
    # exhaustion is an inconclusive answer, not an error
    code, doc = call(capsys, "witness", "--type", "1,1,2", "--v", "1,0,0,0,0,0",
                     "--w", "1,1,1,1,0,1", "--method", "bfs",
                     "--budget", '{"max_states": 3}')
    assert code == 0 and doc["status"] == "inconclusive"
    assert doc["reason"] == "budget exhausted" and doc["equivalent"] is None


def test_normalize(capsys):
    code, doc = call(capsys, "normalize", "--gram", "[[0,2],[-2,0]]")
    assert code == 0
    assert vector_from_json(doc["type"]) == (2,)
    assert matrix_from_json(doc["basis_change"]) == ((1, 0), (0, 1))


def test_split(capsys):
    code, doc = call(capsys, "split", "--type", "1,1,2", "--vector", "0,0,0,0,1,0")
    assert code == 0 and doc["splitting"] is True
    assert vector_from_json(doc["complement_type"]) == (1, 1)
    code, doc = call(capsys, "split", "--type", "1,1,4", "--vector", "2,0,0,0,1,0")
    assert code == 0 and doc["splitting"] is False
    assert doc["failing_primes"] == ["2"]


def test_verify(capsys):
    code, doc = call(capsys, "verify", "--type", "1,2",
                     "--matrix", "[[1,0,0,0],[0,1,0,0],[0,0,1,1],[0,0,0,1]]")
    assert code == 0 and doc["symplectic"] and not doc["in_gamma"]


def test_input_file(capsys, tmp_path):
    f = tmp_path / "in.json"
    f.write_text(json.dumps({"type": {"type": ["1", "1", "2"]},
                             "vector": ["2", "0", "0", "0", "1", "0"]}))
    code, doc = call(capsys, "classify", "--input", str(f))
    assert code == 0 and doc["div"] == "2"


def test_coverage(capsys):
    code, doc = call(capsys, "coverage", "--type", "1,1,2", "--bound", "2")
    assert code == 0 and doc["complete"] is True and len(doc["counts"]) == 4
    D = DiscGroup((1, 1, 2))
    assert {element_from_json(c["class"]) for c in doc["counts"]} == set(D.elements())


@pytest.mark.parametrize("argv,code_name", [
    (["classify", "--type", "2,1", "--vector", "1,0,0,0"], "divisor_chain"),
    (["classify", "--type", "1,1", "--vector", "1,0"], "dimension_mismatch"),
    (["classify", "--type", "1,x", "--vector", "1,0"], "malformed_input"),
    (["normalize", "--gram", "[[0,2],"], "malformed_input"),
    (["witness", "--type", "1,1,2", "--v", "1,0,0,0,0,0"], "usage"),
    (["nonsense"], "usage"),
    ([], "usage"),
    (["classify", "--input", "/nonexistent.json"], "malformed_input"),
])
def test_input_errors(capsys, argv, code_name):
    code, doc = call(capsys, *argv)
    assert code == 1
    assert doc["error"]["code"] == code_name


def test_selftest_subset(capsys):
    code, doc = call(capsys, "selftest", "--criteria", "1,8")
    assert code == 0 and doc["passed"] is True
    assert [c["number"] for c in doc["criteria"]] == [1, 8]


def test_selftest_failure_exit_code(capsys, monkeypatch):
    from symeichler import acceptance

    def broken():
        r = acceptance.CriterionResult(1, "forced failure")
        r.fail("forced")
        return r

    monkeypatch.setitem(acceptance.CRITERIA, 1, broken)
    code, doc = call(capsys, "selftest", "--criteria", "1")
    assert code == 2 and doc["passed"] is False


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "symeichler", "classify",
                           "--type", "1,1,2", "--vector", "0,0,0,0,1,0"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["div"] == "2"
    assert proc.stderr == ""


def test_verification_failure_exit_code(capsys, monkeypatch):
    from symeichler import cli
    from symeichler.errors import VerificationError

    def broken(*args):
        raise VerificationError("forced")

    monkeypatch.setattr(cli, "equivalence_witness", broken)
    code, doc = call(capsys, "witness", "--type", "1,1,2", "--v", "0,0,0,0,1,0",
                     "--w", "2,0,0,0,1,0")
    assert code == 2 and doc["error"]["code"] == "verification_failure"
