"""Test fixtures for blockweyl tests."""
from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

import pytest

from blockweyl.checks import load_golden
from blockweyl.cli import main
from blockweyl.const import DEFAULT_G2_TABLE
from blockweyl.coxeter_core import CoxeterDescriptor, affine_type, finite_type
from blockweyl.weighted_affine import WeightedAffineGroup

_LOGGER = logging.getLogger(__name__)

CliResult = Tuple[int, str]


@pytest.fixture
def enable_debug_logging(caplog: pytest.LogCaptureFixture) -> None:
    """Enable debug logging for tests."""
    caplog.set_level(logging.DEBUG, logger="blockweyl")


@pytest.fixture
def g2_table() -> str:
    """Provide the default G2 table variant."""
    return DEFAULT_G2_TABLE


@pytest.fixture(scope="session")
def golden() -> Dict[str, Any]:
    """Provide the packaged golden tables.

    Returns:
        Dict[str, Any]: Sections sharpList, blocks, weightedGroups and cTables
    """
    return load_golden()


@pytest.fixture
def small_finite_types() -> List[CoxeterDescriptor]:
    """Provide finite types whose groups are cheap to enumerate."""
    return [
        finite_type("A", 1),
        finite_type("A", 2),
        finite_type("A", 3),
        finite_type("B", 2),
        finite_type("B", 3),
        finite_type("D", 4),
        finite_type("G2", 2),
    ]


@pytest.fixture
def g2_weighted() -> WeightedAffineGroup:
    """Provide affine G2 with weights (3, 3, 1)."""
    return WeightedAffineGroup.from_weights(affine_type("G2", 2), (3, 3, 1))


@pytest.fixture
def run_cli(capsys: pytest.CaptureFixture) -> Callable[..., CliResult]:
    """Run the command line and capture standard output.

    Returns:
        Callable[..., CliResult]: Runner returning (exit code, stdout)
    """

    def _run(*argv: str) -> CliResult:
        code = main(list(argv))
        out = capsys.readouterr().out
        _LOGGER.debug("blockweyl %s -> %d", " ".join(argv), code)
        return code, out

    return _run


@pytest.fixture
def weighted_f4_file(tmp_path: Path) -> Callable[[Optional[List[Dict[str, Any]]]], Path]:
    """Write a weighted F4 data file into a temporary data directory.

    Returns:
        Callable: Writer taking the rows and returning the directory
    """

    def _write(rows: Optional[List[Dict[str, Any]]] = None) -> Path:
        path = tmp_path / "weighted_a_F4.json"
        path.write_text(json.dumps(rows or []), encoding="utf-8")
        return tmp_path

    return _write
