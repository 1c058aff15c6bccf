"""Test suite for the cross-check suite and the golden tables."""
from __future__ import annotations

import copy
from pathlib import Path
from typing import Any, Dict

import pytest

from blockweyl import weighted_affine
from blockweyl.checks import (
    CHECKS,
    FROBENIUS_SAMPLES,
    CheckResult,
    SuiteOptions,
    check_d4_split_classes,
    check_enumeration,
    check_frobenius,
    check_printed_lists,
    check_route_consistency,
    check_weighted_groups,
    diff_golden,
    frobenius_samples,
    load_golden,
    run_suite,
    write_golden,
)
from blockweyl.config import load_settings
from blockweyl.exceptions import DescriptorError, UnsupportedComputationError


def test_cheap_checks_pass() -> None:
    """Test that the quick checks pass at a small rank bound."""
    results = run_suite(SuiteOptions(max_rank=3), ["nu", "matrices", "weighted-groups"])
    assert [result.name for result in results] == ["nu", "matrices", "weighted-groups"]
    for result in results:
        assert result.passed, result.failures
        assert result.checked > 0
    assert results[0].checked == 25


def test_unknown_check() -> None:
    """Test that an unknown check name is refused before anything runs."""
    with pytest.raises(DescriptorError):
        run_suite(SuiteOptions(), ["nu", "everything"])


def test_raised_error_counts_as_failure(tmp_path: Path) -> None:
    """Test that an engine error inside a check becomes a failed result."""
    options = SuiteOptions(golden_path=str(tmp_path / "missing.json"))
    (result,) = run_suite(options, ["golden"])
    assert not result.passed
    assert result.failures[0].startswith("DescriptorError")
    assert result.to_json()["passed"] is False


def test_suite_options_from_settings() -> None:
    """Test that suite options take the G2 table of the settings."""
    settings = load_settings({"g2_table": "printed"})
    options = SuiteOptions.from_settings(settings, max_rank=4)
    assert options.g2_table == "printed"
    assert options.max_rank == 4
    assert set(CHECKS) >= {"golden", "green", "frobenius"}


def test_check_result_json() -> None:
    """Test the JSON form of a check result."""
    result = CheckResult("nu", 3, ("bad",))
    assert result.to_json() == {
        "name": "nu",
        "checked": 3,
        "passed": False,
        "failures": ["bad"],
        "skipped": [],
    }


def test_diff_golden(golden: Dict[str, Any]) -> None:
    """Test that row and section differences are reported."""
    assert diff_golden(golden, golden) == []
    changed = copy.deepcopy(golden)
    changed["cTables"][0]["pairs"][0] = [1, 1]
    problems = diff_golden(golden, changed)
    assert len(problems) == 1
    assert problems[0].startswith("cTables[0]")
    del changed["sharpList"]
    assert "sharpList: section missing" in diff_golden(golden, changed)


def test_load_golden_sections(golden: Dict[str, Any]) -> None:
    """Test the packaged golden file."""
    assert set(golden) == {"sharpList", "blocks", "weightedGroups", "cTables"}
    with pytest.raises(DescriptorError):
        load_golden("/nonexistent/golden.json")


@pytest.mark.slow
def test_write_golden_round_trip(tmp_path: Path, golden: Dict[str, Any]) -> None:
    """Test that regenerated golden tables equal the packaged ones."""
    path = write_golden(str(tmp_path / "out"))
    assert path.exists()
    assert diff_golden(golden, load_golden(str(path))) == []


@pytest.mark.slow
def test_full_suite_small_rank() -> None:
    """Test every check at rank bound 4."""
    for result in run_suite(SuiteOptions(max_rank=4, green_rank=2, table_rank=4)):
        assert result.passed, (result.name, result.failures)


def test_verify_default_bounds() -> None:
    """Test the default sweep bounds of the suite.

    Verifies that:
    1. Blocks are enumerated up to affine rank 9
    2. P and Lambda' are solved up to quotient rank 4
    3. Every added check is registered
    """
    options = SuiteOptions()
    assert options.max_rank == 9
    assert options.green_rank == 4
    assert options.table_rank == 6
    assert {
        "printed-lists",
        "d4-split-classes",
        "j-induction-specials",
        "route-consistency",
        "char-poly-classes",
    } <= set(CHECKS)


def test_enumeration_covers_a_and_exceptional() -> None:
    """Test that the predicate scan agrees with enumeration on A and exceptional types."""
    result = check_enumeration(SuiteOptions(max_rank=3))
    assert result.passed, result.failures
    # ~A1..~A3 contribute 2 + 3 + 4 omegas; the exceptional types 3 + 2 + 1 + 1 + 1
    assert result.checked >= 9 + 8


def test_tabulated_weights_are_skipped(monkeypatch: pytest.MonkeyPatch) -> None:
    """Test that groups whose weights come from the case tables are not counted."""
    original = weighted_affine.orbit_weight

    def without_exceptional(  # type: ignore[no-untyped-def]
        affine, omega, nodes, orbit, g2_table="printed"
    ):
        if affine.family in ("E6", "E7"):
            raise UnsupportedComputationError("no induction route", "weighted-group")
        return original(affine, omega, nodes, orbit, g2_table)

    monkeypatch.setattr(weighted_affine, "orbit_weight", without_exceptional)
    result = check_weighted_groups(SuiteOptions(max_rank=2))
    assert result.passed, result.failures
    assert result.skipped
    assert {row.split()[0] for row in result.skipped} == {"~E6", "~E7"}
    assert all(row.endswith("weights tabulated") for row in result.skipped)
    assert result.to_json()["skipped"] == list(result.skipped)


def test_printed_lists_check() -> None:
    """Test the closed-form a-list check under the default G2 table."""
    result = check_printed_lists(SuiteOptions())
    assert result.passed, result.failures
    assert result.checked == 125


def test_printed_lists_check_flags_corrected_g2() -> None:
    """Test that the corrected G2 table leaves the printed list."""
    result = check_printed_lists(SuiteOptions(g2_table="corrected"))
    assert not result.passed
    assert all(failure.startswith("G2(") for failure in result.failures)


def test_d4_split_classes() -> None:
    """Test the D4 classes against brute-force conjugation orbits."""
    result = check_d4_split_classes(SuiteOptions())
    assert result.passed, result.failures
    assert result.checked == 192


def test_route_consistency() -> None:
    """Test that the B2 and B3 tables agree with the symbols on {1..5}^2."""
    result = check_route_consistency(SuiteOptions())
    assert result.passed, result.failures
    assert result.checked == 25 * (5 + 10)


def test_frobenius_samples_are_seeded() -> None:
    """Test that the Frobenius samples are reproducible and well formed."""
    first = frobenius_samples(10, seed=3)
    second = frobenius_samples(10, seed=3)
    assert [(e.big, nodes, a, b) for e, nodes, a, b in first] == [
        (e.big, nodes, a, b) for e, nodes, a, b in second
    ]
    for embedding, nodes, _, _ in first:
        assert 0 < len(nodes) < embedding.big.size
    assert len(frobenius_samples()) == FROBENIUS_SAMPLES


def test_frobenius_small_sample() -> None:
    """Test the elementwise Frobenius check on a few samples."""
    result = check_frobenius(SuiteOptions(), count=8, seed=5)
    assert result.passed, result.failures
    assert result.checked == 8


@pytest.mark.slow
def test_heavy_checks_pass() -> None:
    """Test the sampled and exhaustive checks at their default sizes."""
    names = ["frobenius", "j-induction-specials", "char-poly-classes"]
    for result in run_suite(SuiteOptions(max_rank=4), names):
        assert result.passed, (result.name, result.failures)
        assert result.checked > 0
