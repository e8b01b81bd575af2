import json
import subprocess
import sys

import pytest

from delta_springer.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out), err


def test_hilb_all_methods(capsys):
    code, data, _ = run_json(capsys, "hilb", "--n", "4", "--lambda", "2,1", "--s", "3", "--method", "all")
    assert code == 0
    assert data["schema"] == "1"
    assert data["agree"]
    assert set(data["methods"]) == {"groebner", "recursive", "paving", "prd"}
    assert data["total"] == 22


def test_hilb_empty(capsys):
    code, data, _ = run_json(capsys, "hilb", "--n", "0", "--lambda", "", "--s", "1")
    assert code == 0
    assert data["methods"]["recursive"]["text"] == "1"


def test_algebraic_grading(capsys):
    _, coh, _ = run_json(capsys, "hilb", "--n", "3", "--lambda", "2,1", "--s", "2")
    _, alg, _ = run_json(capsys, "hilb", "--n", "3", "--lambda", "2,1", "--s", "2", "--algebraic-grading")
    assert coh["methods"]["recursive"]["series"] == {"0": 1, "2": 2}
    assert alg["methods"]["recursive"]["series"] == {"0": 1, "1": 2}


def test_deterministic_output(capsys):
    args = ("cells", "--n", "5", "--lambda", "2,1", "--s", "3")
    _, one, _ = run(capsys, *args, "--threads", "1")
    _, many, _ = run(capsys, *args, "--threads", "4")
    _, again, _ = run(capsys, *args, "--threads", "4")
    assert one == many == again


def test_usage_errors(capsys):
    code, _, err = run(capsys, "hilb", "--n", "3", "--lambda", "2,2", "--s", "2")
    assert code == 2 and "--lambda" in err
    code, _, err = run(capsys, "hilb", "--n", "3", "--lambda", "1,1", "--s", "1")
    assert code == 2 and "--s" in err
    code, _, err = run(capsys, "hilb", "--lambda", "1")
    assert code == 2 and "--n" in err
    with pytest.raises(SystemExit) as info:
        main(["nonsense"])
    assert info.value.code == 2


def test_guard_message(capsys):
    code, _, err = run(capsys, "hilb", "--n", "7", "--method", "groebner")
    assert code == 2
    assert "guard" in err and "--unsafe-size" in err
    code, _, err = run(capsys, "cells", "--n", "8")
    assert code == 2 and "--unsafe-size" in err


def test_frob_latex(capsys):
    code, out, _ = run(capsys, "frob", "--n", "2", "--lambda", "1,1", "--s", "2", "--latex")
    assert code == 0
    assert out.strip() == "s_{2} + q^{2}s_{1,1}"


def test_components(capsys):
    code, data, _ = run_json(capsys, "components", "--n", "4", "--lambda", "2,1", "--s", "3")
    assert code == 0
    assert data["count"] == 8 == data["expected_count"]
    assert sum(c["cell_count"] for c in data["classes"]) == 22


def test_basis(capsys):
    code, data, _ = run_json(capsys, "basis", "--n", "3", "--lambda", "1", "--s", "2")
    assert code == 0
    assert data["verification"]["status"] == "pass"
    assert len(data["basis"]) == data["verification"]["size"]


def test_stable_and_hall_littlewood(capsys):
    code, data, _ = run_json(capsys, "stable", "--n", "2", "--lambda", "1,1", "--max-degree", "6")
    assert code == 0
    assert data["frobenius"] == {"0": {"2": 1}, "2": {"1,1": 1}}
    code, hl, _ = run_json(capsys, "hall-littlewood", "--lambda", "1,1")
    assert code == 0
    assert hl["frobenius"] == data["frobenius"]


def test_verify_single(capsys):
    code, data, err = run_json(capsys, "verify", "--n", "4", "--lambda", "2,1", "--s", "3")
    assert code == 0
    assert data["status"] == "pass"
    assert "check" in err


def test_verify_matrix_small(capsys):
    code, data, err = run_json(capsys, "verify", "--all", "--max-n", "3", "--max-s", "3")
    assert code == 0
    assert data["non_palindromic_witness"]["k"] >= 1
    assert all(v["fail"] == 0 for v in data["summary"].values())
    assert "pass" in err.splitlines()[0]


def test_cache(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("DELTA_SPRINGER_CACHE_DIR", str(tmp_path))
    args = ("hilb", "--n", "3", "--lambda", "1", "--s", "2")
    _, first, _ = run(capsys, *args)
    files = list(tmp_path.glob("*.json"))
    assert len(files) == 1
    _, second, _ = run(capsys, *args)
    assert first == second
    assert json.loads(files[0].read_text())["schema"] == "1"


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "delta_springer.cli", "hilb", "--n", "1", "--s", "3"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["methods"]["recursive"]["text"] == "1 + q^2 + q^4"


def test_verify_matrix_full(capsys):
    code, data, err = run_json(capsys, "verify", "--all", "--max-n", "6")
    assert code == 0
    assert data["status"] == "pass"
    assert len(data["matrix"]) == 213
    assert len(err.splitlines()) == len(data["summary"]) + 1
