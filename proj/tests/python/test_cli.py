"""End-to-end CLI tests against the built binary (CELLCI_BIN)."""

import json
import os
import subprocess

import pytest

BIN = os.environ.get("CELLCI_BIN", os.path.join("build", "cellci"))

DOMINO = "0 0\n1 0\n"
DIAGONAL = "0 0\n1 1\n"


def run(*args, expect=0):
    proc = subprocess.run([BIN, *args], capture_output=True, text=True)
    assert proc.returncode == expect, proc.stderr or proc.stdout
    return proc


@pytest.fixture
def domino(tmp_path):
    path = tmp_path / "domino.cells"
    path.write_text(DOMINO)
    return str(path)


@pytest.fixture
def diagonal(tmp_path):
    path = tmp_path / "diagonal.cells"
    path.write_text(DIAGONAL)
    return str(path)


def test_decide_negative(domino):
    out = run("decide", domino).stdout
    assert "NOT a complete intersection" in out
    assert "mu:           3" in out


def test_decide_positive(diagonal):
    out = run("decide", diagonal).stdout
    assert "verdict: complete intersection" in out


def test_decide_missing_file():
    run("decide", "missing.cells", expect=2)


def test_decide_malformed(tmp_path):
    path = tmp_path / "bad.cells"
    path.write_text("0 zero\n")
    proc = subprocess.run([BIN, "decide", str(path)], capture_output=True, text=True)
    assert proc.returncode == 2
    assert "line 1" in proc.stderr


def test_usage_error():
    run("decide", expect=2)
    run("frobnicate", expect=2)


def test_json_report_determinism(domino):
    first = run("decide", domino, "--json").stdout
    second = run("decide", domino, "--json").stdout
    assert first == second
    report = json.loads(first)
    assert report["mu"] == 3
    assert report["height"] == 2
    assert report["is_ci"] is False
    assert report["engine"]["order"] == "snake"


def test_mu_and_height(domino):
    assert run("mu", domino).stdout.strip() == "3"
    assert run("height", domino).stdout.strip() == "2"
    assert run("height", domino, "--order", "rowmajor").stdout.strip() == "2"


def test_generators_dump(domino):
    assert run("generators", domino).stdout == (
        "x_0_0*x_1_1 - x_0_1*x_1_0\n"
        "x_0_0*x_2_1 - x_0_1*x_2_0\n"
        "x_1_0*x_2_1 - x_1_1*x_2_0\n"
    )


def test_groebner_dump(domino):
    assert run("groebner", domino).stdout == (
        "x_1_1*x_2_0 - x_1_0*x_2_1\n"
        "x_0_1*x_1_0 - x_0_0*x_1_1\n"
        "x_0_1*x_2_0 - x_0_0*x_2_1\n"
    )
    with_initial = run("groebner", domino, "--initial").stdout
    assert "# initial ideal" in with_initial
    assert "x_0_1*x_1_0\n" in with_initial


def test_budget_exhaustion_exit_code(domino):
    run("height", domino, "--budget", "0", expect=3)


def test_enumerate():
    out = run("enumerate", "--max-rank", "2").stdout.splitlines()
    assert len(out) == 5
    assert out[0] == "0 0"
    assert "0 0  1 1" in out


def test_enumerate_counts():
    out = run("enumerate", "--max-rank", "3", "--counts").stdout
    assert "rank 3: 20" in out
    d4 = run("enumerate", "--max-rank", "3", "--counts", "--d4").stdout
    assert "rank 3: 5" in d4


def test_enumerate_check_theorem():
    out = run("enumerate", "--max-rank", "3", "--check-theorem").stdout
    assert "0 violations" in out
    summary = json.loads(
        run("enumerate", "--max-rank", "2", "--check-theorem", "--json").stdout
    )
    assert summary["violations"] == 0
    assert summary["instances"] == 5


def test_render(diagonal, tmp_path):
    assert run("render", diagonal, "--ascii").stdout == ".#\n#.\n"
    empty = tmp_path / "empty.cells"
    empty.write_text("# nothing\n")
    assert run("render", str(empty)).stdout == ""


def test_decide_empty(tmp_path):
    path = tmp_path / "empty.cells"
    path.write_text("")
    out = run("decide", str(path)).stdout
    assert "verdict: complete intersection" in out
    assert "empty collection" in out
