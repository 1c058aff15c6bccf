"""Test suite for blockweyl settings and request validation.

This module covers the voluptuous schemas behind the command line, the
environment override of the data directory and the weighted F4 data file.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

import pytest

from blockweyl.config import build_request, load_settings, load_weighted_f4
from blockweyl.const import (
    DEFAULT_G2_TABLE,
    DEFAULT_OMEGA,
    DEFAULT_OUTPUT_FORMAT,
    DEFAULT_Q_VALUE,
    DEFAULT_SYM_BOUND,
    ENV_DATA_PATH,
)
from blockweyl.exceptions import DescriptorError


def test_settings_defaults(monkeypatch: pytest.MonkeyPatch) -> None:
    """Test that empty overrides give the documented defaults."""
    monkeypatch.delenv(ENV_DATA_PATH, raising=False)
    settings = load_settings()
    assert settings.sym_bound == DEFAULT_SYM_BOUND
    assert settings.data_path is None
    assert settings.output_format == DEFAULT_OUTPUT_FORMAT
    assert settings.q_value == DEFAULT_Q_VALUE
    assert settings.g2_table == DEFAULT_G2_TABLE


def test_settings_environment(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    """Test that BLOCKWEYL_DATA sets the data path and overrides win over it."""
    monkeypatch.setenv(ENV_DATA_PATH, str(tmp_path))
    assert load_settings().data_path == str(tmp_path)
    assert load_settings({"data_path": "/elsewhere"}).data_path == "/elsewhere"


def test_settings_validation() -> None:
    """Test that invalid settings raise DescriptorError.

    Verifies rejection of:
    1. An unknown output format
    2. A q that is not rational
    3. A symmetric-power bound out of range
    4. An unknown G2 table variant
    """
    test_cases: List[Dict[str, Any]] = [
        {"output_format": "xml"},
        {"q_value": "two"},
        {"sym_bound": 0},
        {"g2_table": "other"},
    ]
    for overrides in test_cases:
        with pytest.raises(DescriptorError):
            load_settings(overrides)


def test_settings_ignore_none() -> None:
    """Test that None overrides keep the defaults."""
    settings = load_settings({"q_value": None, "sym_bound": None})
    assert settings.q_value == DEFAULT_Q_VALUE
    assert load_settings({"q_value": "3/2"}).q_value == "3/2"


def test_request_coercion() -> None:
    """Test that weights and node lists are coerced from command-line strings."""
    test_cases: List[Tuple[Dict[str, Any], Optional[Tuple[int, ...]], Optional[Tuple[int, ...]]]] = [
        ({"weights": "3,3,1"}, (3, 3, 1), None),
        ({"weights": [2, 1, 2]}, (2, 1, 2), None),
        ({"J": "empty"}, None, ()),
        ({"J": "3,1,2"}, None, (1, 2, 3)),
        ({"J": [0]}, None, (0,)),
    ]
    for extra, weights, nodes in test_cases:
        request = build_request({"subcommand": "c-table", "descriptor": "~G2", **extra})
        assert request.weights == weights
        assert request.J == nodes
        assert request.omega == DEFAULT_OMEGA


def test_request_validation() -> None:
    """Test that malformed requests raise DescriptorError."""
    test_cases: List[Dict[str, Any]] = [
        {"subcommand": "plot"},
        {"subcommand": "c-table", "weights": "3,x"},
        {"subcommand": "c-table", "weights": "3,0,1"},
        {"subcommand": "weighted-group", "J": "a,b"},
        {"subcommand": "blocks", "output_format": "yaml"},
    ]
    for raw in test_cases:
        with pytest.raises(DescriptorError):
            build_request(raw)


def test_weighted_f4_missing(tmp_path: Path) -> None:
    """Test that an absent data file yields no rows."""
    assert load_weighted_f4(None) == {}
    assert load_weighted_f4(str(tmp_path / "absent.json")) == {}


def test_weighted_f4_rows(weighted_f4_file: Callable[..., Path]) -> None:
    """Test that valid rows are keyed by (label, weights)."""
    directory = weighted_f4_file([{"label": "phi1,0", "weights": [2, 2, 1, 1], "a": 0}])
    rows = load_weighted_f4(str(directory / "weighted_a_F4.json"))
    assert rows == {("phi1,0", (2, 2, 1, 1)): 0}


def test_weighted_f4_invalid(tmp_path: Path) -> None:
    """Test that malformed rows raise DescriptorError."""
    test_cases: List[str] = [
        "not json",
        json.dumps([{"label": "phi1,0", "weights": [1, 1], "a": 0}]),
        json.dumps([{"label": "phi1,0", "weights": [1, 1, 1, 1], "a": -1}]),
    ]
    for text in test_cases:
        path = tmp_path / "weighted_a_F4.json"
        path.write_text(text, encoding="utf-8")
        with pytest.raises(DescriptorError):
            load_weighted_f4(str(path))
