"""Test suite for the blockweyl command line.

Each subcommand is run in-process through main(); exit codes follow the
error kinds: 2 for bad input, 3 for unsupported computations and 4 for
failed invariants.
"""
from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Any, Callable, Dict, Tuple

import pytest

from blockweyl.const import (
    ENV_DATA_PATH,
    EXIT_INVARIANT_FAILURE,
    EXIT_OK,
    EXIT_PARSE_ERROR,
    EXIT_UNSUPPORTED,
)

CliRunner = Callable[..., Tuple[int, str]]


@pytest.fixture(autouse=True)
def no_data_directory(monkeypatch: pytest.MonkeyPatch) -> None:
    """Keep BLOCKWEYL_DATA from leaking into the runs."""
    monkeypatch.delenv(ENV_DATA_PATH, raising=False)


def test_c_table_json(run_cli: CliRunner) -> None:
    """Test the c-table of affine G2 with weights (3,3,1) as JSON."""
    code, out = run_cli("c-table", "~G2", "--weights", "3,3,1", "--format", "json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["nu"] == 12
    assert sorted(data["c"]) == [0, 1, 3, 4, 9, 12]
    assert data["group"]["weights"] == [3, 3, 1]


def test_c_table_pretty_and_csv(run_cli: CliRunner) -> None:
    """Test the pretty table and the CSV rows."""
    code, out = run_cli("c-table", "~C2", "--weights", "2,1,2")
    assert code == EXIT_OK
    assert out.startswith("~C2(2,1,2)  nu=6")
    code, out = run_cli("c-table", "~C2", "--weights", "2,1,2", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 5
    assert set(rows[0]) == {"E", "c", "secondRow"}


def test_sharp_list(run_cli: CliRunner, golden: Dict[str, Any]) -> None:
    """Test that sharp-list reproduces the packaged table."""
    code, out = run_cli("sharp-list", "--max-t", "13", "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out) == golden["sharpList"]


def test_blocks_type_a(run_cli: CliRunner) -> None:
    """Test the blocks of affine A5 for omega of order 2."""
    code, out = run_cli("blocks", "~A5", "--omega", "k=2", "--format", "json")
    assert code == EXIT_OK
    (row,) = json.loads(out)
    assert row["group"] == "~A2(2,2,2)"
    assert row["aValue"] == 0
    assert row["nu"] == 6


def test_blocks_pretty(run_cli: CliRunner) -> None:
    """Test the text listing of the blocks of affine C4."""
    code, out = run_cli("blocks", "~C4")
    assert code == EXIT_OK
    assert "J=0,1,3,4 t=3 s=3 delta=9 r=0 a=2 W={1}" in out


def test_weighted_group_e6(run_cli: CliRunner) -> None:
    """Test the weighted group of the empty block of affine E6 for omega != 1."""
    code, out = run_cli(
        "weighted-group", "~E6", "--omega", "nontrivial", "--J", "empty", "--format", "json"
    )
    assert code == EXIT_OK
    reports = json.loads(out)
    assert len(reports) == 2
    for report in reports:
        assert report["group"]["type"] == "~G2"
        assert sorted(report["group"]["weights"]) == [1, 3, 3]
        assert max(report["c"]) == 12


def test_weighted_group_unknown_block(run_cli: CliRunner) -> None:
    """Test that a J outside C_omega(W) exits with the input error code."""
    code, _ = run_cli("weighted-group", "~C4", "--J", "0,1")
    assert code == EXIT_PARSE_ERROR


def test_green_csv(run_cli: CliRunner) -> None:
    """Test the green subcommand specialized at q = 2."""
    code, out = run_cli("green", "~A1", "--weights", "1,3", "--q", "2", "--format", "csv")
    assert code == EXIT_OK
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][:2] == ["matrix", "row"]
    assert rows[1][2:] == ["1", "4"]


def test_green_pretty(run_cli: CliRunner) -> None:
    """Test the text output and verification line of the green subcommand."""
    code, out = run_cli("green", "~A1", "--weights", "2,2")
    assert code == EXIT_OK
    assert out.rstrip().endswith("verified")


def test_input_errors(run_cli: CliRunner) -> None:
    """Test that malformed input exits with code 2."""
    assert run_cli("blocks", "~X9")[0] == EXIT_PARSE_ERROR
    assert run_cli("blocks", "C4")[0] == EXIT_PARSE_ERROR
    assert run_cli("c-table", "~A2", "--weights", "1,2,1")[0] != EXIT_OK
    assert run_cli("blocks", "~A5", "--omega", "k=4")[0] == EXIT_PARSE_ERROR
    with pytest.raises(SystemExit):
        run_cli("blocks", "~C4", "--format", "xml")


def test_unsupported_exit_code(run_cli: CliRunner) -> None:
    """Test that an unsupported computation exits with code 3."""
    assert run_cli("springer-index", "~B5")[0] == EXIT_UNSUPPORTED


def test_verify(run_cli: CliRunner, tmp_path: Path) -> None:
    """Test the verify subcommand on passing and failing checks."""
    code, out = run_cli("verify", "--check", "nu")
    assert code == EXIT_OK
    assert "nu: 25 checked, ok" in out
    missing = str(tmp_path / "missing.json")
    code, _ = run_cli("verify", "--check", "golden", "--golden-file", missing)
    assert code == EXIT_INVARIANT_FAILURE


def test_out_file(run_cli: CliRunner, tmp_path: Path) -> None:
    """Test that --out writes the rendering to a file instead of stdout."""
    target = tmp_path / "sharp.json"
    code, out = run_cli("sharp-list", "--max-t", "5", "--format", "json", "--out", str(target))
    assert code == EXIT_OK
    assert out == ""
    assert json.loads(target.read_text(encoding="utf-8"))[0]["aValue"] == 0


def test_weighted_f4_data_option(
    run_cli: CliRunner, weighted_f4_file: Callable[..., Path]
) -> None:
    """Test that --data registers weighted F4 rows before the command runs."""
    directory = weighted_f4_file([{"label": "phi1,0", "weights": [2, 2, 1, 1], "a": 0}])
    code, _ = run_cli("--data", str(directory), "sharp-list", "--max-t", "3")
    assert code == EXIT_OK
