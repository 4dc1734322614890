from __future__ import annotations

import json
from pathlib import Path

import pytest
from typer.testing import CliRunner

from src.cli.commands import ExitCode, default_bounds
from src.main import app
from src.structured.displacement import generators_of
from src.utils.formats import TextCodec

runner = CliRunner()

P = "2147483647"

def write(tmp_path: Path, name: str, text: str) -> Path:
    path = tmp_path / name
    path.write_text(text)
    return path

@pytest.fixture
def small_matrix(tmp_path: Path) -> Path:
    return write(tmp_path, "m.txt", "2 2\n1\n0 -1\n1\n0 -2\n")

@pytest.fixture
def xy_basis(tmp_path: Path) -> Path:
    return write(tmp_path, "gb.txt", f"{P} 2\n1\n0 1\n2\n0\n1\n")

def test_hnf_submatrix_small_example(small_matrix: Path, tmp_path: Path) -> None:
    out = tmp_path / "b.txt"
    report = tmp_path / "report.json"
    result = runner.invoke(app, [
        "hnf-submatrix", str(small_matrix), "-p", P, "--sample-size", "1000000",
        "--verify", "--out", str(out), "--json", str(report)
    ])
    assert result.exit_code == ExitCode.OK
    assert "status: Success" in result.output
    assert "basis[0]: 1" in result.output
    assert "verify: PASS" in result.output
    assert out.read_text() == "1 1\n1\n"
    data = json.loads(report.read_text())
    assert data["cert"] == "True"
    assert data["det_bound"] == 2 and data["adj_bound"] == 1

def test_hnf_submatrix_with_explicit_tuple(small_matrix: Path) -> None:
    result = runner.invoke(app, [
        "hnf-submatrix", str(small_matrix), "-p", P, "--indices", "0,1",
        "--det-bound", "1", "--adj-bound", "1", "--exact-det", "--sample-size", "1000000", "--verify"
    ])
    assert result.exit_code == ExitCode.OK
    assert "indices: 0 1" in result.output
    assert "verify: PASS" in result.output

def test_default_bounds(f101) -> None:
    gen = generators_of(TextCodec(f101).parse_matrix("2 2\n1\n0 0 1\n1\n0 1\n"))
    assert default_bounds(gen) == (4, 2)

def test_singular_input_exits_with_two(tmp_path: Path) -> None:
    path = write(tmp_path, "s.txt", "2 2\n0 1\n0 1\n1\n1\n")
    result = runner.invoke(app, ["hnf-submatrix", str(path), "-p", "101"])
    assert result.exit_code == ExitCode.SINGULAR
    assert "status: Singular" in result.output

def test_sample_set_above_field_exits_with_three(small_matrix: Path) -> None:
    result = runner.invoke(app, ["hnf-submatrix", str(small_matrix), "-p", "7", "--sample-size", "100"])
    assert result.exit_code == ExitCode.FAIL
    assert "status: Fail" in result.output

@pytest.mark.parametrize("args", [
    ["-p", "8"],
    ["--m", "1", "--indices", "0"],
    ["--indices", "1"],
    ["--m", "3"],
    ["--det-bound", "-1"],
])
def test_bad_options_exit_with_one(small_matrix: Path, args: list[str]) -> None:
    result = runner.invoke(app, ["hnf-submatrix", str(small_matrix), *args])
    assert result.exit_code == ExitCode.ERROR

def test_missing_and_malformed_input(tmp_path: Path) -> None:
    assert runner.invoke(app, ["hnf-submatrix", str(tmp_path / "none.txt")]).exit_code == ExitCode.ERROR
    bad = write(tmp_path, "bad.txt", "2 2\n1\n")
    result = runner.invoke(app, ["hnf-submatrix", str(bad)])
    assert result.exit_code == ExitCode.ERROR
    assert "PARSE_ERROR" in result.output

def test_change_order(xy_basis: Path, tmp_path: Path) -> None:
    out = tmp_path / "lex.txt"
    result = runner.invoke(app, [
        "change-order", str(xy_basis), "--sample-size", "1000000", "--out", str(out)
    ])
    assert result.exit_code == ExitCode.OK
    assert "staircase: 1 1" in result.output
    assert "D: 1" in result.output
    assert "lex[0]: 0 1" in result.output
    assert "lex[1]: 0 | 1" in result.output
    assert "shape_position: True" in result.output
    assert out.read_text() == f"{P} 2\n1\n0 1\n2\n0\n1\n"

def test_change_order_rejects_non_staircase(tmp_path: Path) -> None:
    path = write(tmp_path, "gb.txt", "101 2\n1\n0 1\n1\n0 1\n")
    assert runner.invoke(app, ["change-order", str(path)]).exit_code == ExitCode.ERROR

def test_bench_plain(tmp_path: Path) -> None:
    report = tmp_path / "bench.json"
    result = runner.invoke(app, [
        "bench", "--sizes", "2,3", "--alphas", "1", "--degrees", "1", "--repeats", "1",
        "--plain", "--json", str(report)
    ])
    assert result.exit_code == ExitCode.OK
    rows = json.loads(report.read_text())
    assert [row["n"] for row in rows] == [2, 3]
    assert "status: " in result.output

def test_bench_table() -> None:
    result = runner.invoke(app, ["bench", "--sizes", "2", "--alphas", "1", "--degrees", "1", "--repeats", "1"])
    assert result.exit_code == ExitCode.OK
    assert "bench" in result.output

def test_version() -> None:
    result = runner.invoke(app, ["--version"])
    assert result.exit_code == ExitCode.OK
    assert result.output.startswith("hnfsub ")
