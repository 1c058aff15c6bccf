"""Test configuration for blockweyl tests."""
from __future__ import annotations

import logging
from typing import Iterator

import pytest

from blockweyl import hecke_invariants

from .test_fixtures import (
    enable_debug_logging,
    g2_table,
    g2_weighted,
    golden,
    run_cli,
    small_finite_types,
    weighted_f4_file,
)

_LOGGER = logging.getLogger(__name__)

__all__ = [
    "enable_debug_logging",
    "g2_table",
    "g2_weighted",
    "golden",
    "run_cli",
    "small_finite_types",
    "weighted_f4_file",
]


@pytest.fixture(autouse=True)
def clear_weighted_f4() -> Iterator[None]:
    """Forget weighted F4 rows registered during a test."""
    yield
    hecke_invariants._WEIGHTED_F4.clear()
