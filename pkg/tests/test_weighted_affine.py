"""Test suite for weighted affine Weyl groups and the c-function.

This module covers the weighted group attached to a block, the tabulated
group it is compared with, the invariant nu, the c-function with its
second row and witnesses, and the relations built from a c-function table.
"""
from __future__ import annotations

from typing import Any, Dict, List, Tuple

import pytest

from blockweyl.affine_blocks import enumerate_blocks
from blockweyl.const import G2_TABLE_CORRECTED
from blockweyl.coxeter_core import (
    affine_type,
    omega_group,
    parse_descriptor,
    select_omegas,
)
from blockweyl.exceptions import DescriptorError, InvariantViolationError
from blockweyl.weighted_affine import (
    CFunctionTable,
    WeightedAffineGroup,
    block_report,
    build_weighted_group,
    c_function,
    c_table_discrepancies,
    expected_weighted_group,
    nu,
    order_relations,
    printed_c_table,
)


def _pairs(table: CFunctionTable) -> List[List[int]]:
    return sorted([table.values[label], table.second_row[label]] for label in table.labels)


def _golden_rows(golden: Dict[str, Any], descriptor: str) -> List[Dict[str, Any]]:
    return [row for row in golden["cTables"] if row["descriptor"] == descriptor]


def test_from_weights_validation() -> None:
    """Test construction of weighted groups from explicit weights."""
    group = WeightedAffineGroup.from_weights(affine_type("G2", 2), (3, 3, 1))
    assert str(group) == "~G2(3,3,1)"
    assert WeightedAffineGroup.from_weights(affine_type("C", 2)).weights == (1, 1, 1)
    assert str(WeightedAffineGroup.degenerate()) == "{1}"
    with pytest.raises(DescriptorError):
        WeightedAffineGroup.from_weights(parse_descriptor("C2"), (1, 1))
    with pytest.raises(DescriptorError):
        WeightedAffineGroup.from_weights(affine_type("C", 2), (1, 1))
    with pytest.raises(InvariantViolationError):
        WeightedAffineGroup.from_weights(affine_type("A", 2), (1, 2, 1))


def test_same_type_up_to_automorphism() -> None:
    """Test that weights related by a diagram automorphism give the same type."""
    c2 = affine_type("C", 2)
    first = WeightedAffineGroup.from_weights(c2, (2, 1, 3))
    second = WeightedAffineGroup.from_weights(c2, (3, 1, 2))
    third = WeightedAffineGroup.from_weights(c2, (3, 2, 1))
    assert first.same_type(second)
    assert first.canonical_weights == (2, 1, 3)
    assert not first.same_type(third)


def test_nu() -> None:
    """Test nu as the largest weighted w0 length over special-node deletions."""
    test_cases: List[Tuple[str, Tuple[int, ...], int]] = [
        ("~A1", (3, 5), 5),
        ("~A2", (2, 2, 2), 6),
        ("~C2", (2, 1, 1), 6),
        ("~C2", (1, 1, 1), 4),
        ("~G2", (3, 3, 1), 12),
    ]
    for text, weights, value in test_cases:
        group = WeightedAffineGroup.from_weights(parse_descriptor(text), weights)
        assert nu(group) == value
    with pytest.raises(DescriptorError):
        nu(WeightedAffineGroup.degenerate())


def test_weighted_groups_type_a(golden: Dict[str, Any]) -> None:
    """Test the weighted groups of affine A5 for omega of order 2, 3 and 6."""
    a5 = affine_type("A", 5)
    expected = {
        2: WeightedAffineGroup.from_weights(affine_type("A", 2), (2, 2, 2)),
        3: WeightedAffineGroup.from_weights(affine_type("A", 1), (3, 3)),
    }
    for k in (2, 3, 6):
        for omega in select_omegas(a5, f"k={k}"):
            group = build_weighted_group(a5, omega, ())
            if k == 6:
                assert group.is_degenerate
            else:
                assert group.same_type(expected[k])
    rows = [row for row in golden["weightedGroups"] if row["descriptor"] == "~A5"]
    assert {row["type"] for row in rows} == {"~A2", "~A1", "{1}"}


def test_weighted_groups_exceptional() -> None:
    """Test the weighted groups of affine E6 and E7 for omega != 1."""
    e6 = affine_type("E6", 6)
    target = WeightedAffineGroup.from_weights(affine_type("G2", 2), (3, 3, 1))
    for omega in select_omegas(e6, "nontrivial"):
        group = build_weighted_group(e6, omega, ())
        assert group.same_type(target)
        assert len(group.orbits) == 3
        assert build_weighted_group(e6, omega, (2, 3, 4, 5)).is_degenerate
    e7 = affine_type("E7", 7)
    omega = select_omegas(e7, "nontrivial")[0]
    group = build_weighted_group(e7, omega, ())
    assert group.same_type(
        WeightedAffineGroup.from_weights(affine_type("F4", 4), (2, 2, 2, 1, 1))
    )


def test_weighted_group_requires_block() -> None:
    """Test that a subset outside C_omega(W) is refused."""
    c4 = affine_type("C", 4)
    with pytest.raises(DescriptorError):
        build_weighted_group(c4, omega_group(c4).elements[0], (0, 1))


def test_expected_groups_affine_c4() -> None:
    """Test the tabulated weighted groups of the blocks of affine C4."""
    c4 = affine_type("C", 4)
    identity, flip = omega_group(c4).elements
    trivial, full = enumerate_blocks(c4, identity)
    assert expected_weighted_group(trivial).same_type(
        WeightedAffineGroup.from_weights(c4)
    )
    assert expected_weighted_group(full).is_degenerate
    (twisted,) = enumerate_blocks(c4, flip)
    assert expected_weighted_group(twisted).same_type(
        WeightedAffineGroup.from_weights(affine_type("C", 2), (2, 2, 1))
    )


def test_expected_groups_affine_c2() -> None:
    """Test that the flip of affine C2 yields the weighted group ~A1(2,1)."""
    c2 = affine_type("C", 2)
    identity, flip = omega_group(c2).elements
    (twisted,) = enumerate_blocks(c2, flip)
    assert twisted.ts == (2, 1)
    assert twisted.delta_r == (1, 1)
    assert twisted.omega_class == "doubleprime"
    expected = expected_weighted_group(twisted)
    assert str(expected) == "~A1(2,1)"
    report = block_report(c2, flip, twisted, with_table=False)
    assert report.matches_expected
    assert [b.ts for b in enumerate_blocks(c2, identity)] == [(1, 1)]


def test_block_reports_match_tables() -> None:
    """Test that built and tabulated weighted groups agree on small diagrams."""
    for text in ("~C4", "~B3", "~A3"):
        affine = parse_descriptor(text)
        for omega in omega_group(affine).elements:
            for block in enumerate_blocks(affine, omega):
                report = block_report(affine, omega, block, with_table=False)
                assert report.matches_expected
                assert report.table is None
                data = report.to_json()
                assert data["aBlock"] == block.a_value


def test_block_report_rejects_foreign_block() -> None:
    """Test that a block of another omega is refused."""
    b3 = affine_type("B", 3)
    identity, swap = omega_group(b3).elements
    block = enumerate_blocks(b3, swap)[1]
    with pytest.raises(DescriptorError):
        block_report(b3, identity, block)


def test_c_function_affine_a1() -> None:
    """Test c on affine A1: 0 on the trivial and max(t, s) on the sign."""
    group = WeightedAffineGroup.from_weights(affine_type("A", 1), (2, 5))
    table = c_function(group)
    assert sorted(table.row) == [0, 5]
    assert table.reference_node == 0
    for label in table.labels:
        assert table.extra_witnesses(label) == ()
    with pytest.raises(DescriptorError):
        c_function(WeightedAffineGroup.degenerate())


def test_c_table_g2(golden: Dict[str, Any]) -> None:
    """Test the c-table of affine G2 with weights (3,3,1) and its witnesses.

    Verifies that:
    1. The sorted (c, second row) pairs match the packaged table
    2. c = 9 is attained away from the reference node on the A2 subgroup
    3. The pair (4, 3) is witnessed on the A1xA1 subgroup
    4. The corrected G2 rows move only the second row
    """
    (row,) = _golden_rows(golden, "~G2")
    group = WeightedAffineGroup.from_weights(affine_type("G2", 2), tuple(row["weights"]))
    table = c_function(group)
    assert _pairs(table) == row["pairs"]
    by_pair = {(table.values[l], table.second_row[l]): l for l in table.labels}
    nine = table.extra_witnesses(by_pair[(9, 4)])
    assert nine and all(w.subgroup == "A2" and w.a_value == 9 for w in nine)
    four = table.extra_witnesses(by_pair[(4, 3)])
    assert four and all(w.subgroup == "A1xA1" and w.a_value == 4 for w in four)
    assert table.extra_witnesses(by_pair[(12, 12)]) == ()
    corrected = c_function(group, G2_TABLE_CORRECTED)
    assert sorted(corrected.row) == [0, 1, 3, 4, 9, 12]
    assert sorted(corrected.second_row.values()) == [0, 1, 3, 3, 7, 12]


def test_c_tables_affine_c2(golden: Dict[str, Any]) -> None:
    """Test the c-tables of affine C2 for the three weight families."""
    rows = _golden_rows(golden, "~C2")
    assert len(rows) == 16
    for row in rows:
        group = WeightedAffineGroup.from_weights(affine_type("C", 2), tuple(row["weights"]))
        assert _pairs(c_function(group)) == row["pairs"]


def test_c_tables_affine_c2_unit_middle_match_reference() -> None:
    """Test that weights (t,1,s) reproduce the reference tables exactly."""
    cases = [(u, 1, u) for u in range(1, 7)] + [(u, 1, u - 1) for u in range(2, 7)]
    for weights in cases:
        group = WeightedAffineGroup.from_weights(affine_type("C", 2), weights)
        found = c_table_discrepancies(c_function(group))
        assert found is not None and found.matches


def test_c_tables_affine_c2_middle_two() -> None:
    """Test weights (u,2,u-1) against the reference table.

    Verifies that:
    1. The sign column is the weighted length 2u+4 of w_0 in B2 with weights (2,u)
    2. Only that column leaves the reference table once u >= 3
    3. At u = 2 the column of the sign twist of the reflection also moves
    """
    for u in range(2, 7):
        group = WeightedAffineGroup.from_weights(affine_type("C", 2), (u, 2, u - 1))
        table = c_function(group)
        assert max(table.row) == 2 * u + 4
        found = c_table_discrepancies(table)
        assert found is not None
        if u == 2:
            assert found.printed_only == ((2, 2), (6, 6))
            assert found.computed_only == ((3, 2), (8, 8))
        else:
            assert found.printed_only == ((2 * u + 2, 2 * u + 2),)
            assert found.computed_only == ((2 * u + 4, 2 * u + 4),)
    assert printed_c_table(WeightedAffineGroup.from_weights(affine_type("C", 2), (3, 2, 3))) is None


@pytest.mark.slow
def test_c_tables_affine_c3(golden: Dict[str, Any]) -> None:
    """Test the c-tables of affine C3 with weights (u,2,2,u-1), u = 2..6."""
    rows = _golden_rows(golden, "~C3")
    assert [row["weights"][0] for row in rows] == [2, 3, 4, 5, 6]
    test_cases: Dict[int, Tuple[Tuple[Tuple[int, int], ...], Tuple[Tuple[int, int], ...]]] = {
        2: (((2, 2), (3, 0)), ((3, 2), (10, 8))),
        3: (((5, 4), (6, 3)), ((6, 4), (8, 7))),
        4: (((6, 6),), ((7, 6),)),
        5: ((), ()),
        6: ((), ()),
    }
    for row in rows:
        group = WeightedAffineGroup.from_weights(affine_type("C", 3), tuple(row["weights"]))
        table = c_function(group)
        assert _pairs(table) == row["pairs"]
        found = c_table_discrepancies(table)
        assert found is not None
        assert (found.printed_only, found.computed_only) == test_cases[row["weights"][0]]


def test_c_table_g2_reference() -> None:
    """Test that only the corrected G2 rows reproduce the reference G2 c-table."""
    group = WeightedAffineGroup.from_weights(affine_type("G2", 2), (3, 3, 1))
    found = c_table_discrepancies(c_function(group))
    assert found is not None
    assert found.printed_only == ((1, 1), (9, 7))
    assert found.computed_only == ((1, 0), (9, 4))
    corrected = c_table_discrepancies(c_function(group, G2_TABLE_CORRECTED))
    assert corrected is not None and corrected.matches
    a1 = WeightedAffineGroup.from_weights(affine_type("A", 1), (2, 5))
    assert c_table_discrepancies(c_function(a1)) is None



def test_c_function_json() -> None:
    """Test the JSON form of a c-function table."""
    group = WeightedAffineGroup.from_weights(affine_type("C", 2), (2, 1, 2))
    data = c_function(group).to_json()
    assert data["group"]["type"] == "~C2"
    assert len(data["labels"]) == len(data["c"]) == len(data["secondRow"]) == 5
    assert max(data["c"]) == 6


def test_order_relations() -> None:
    """Test that ~ refines c-equality and <= follows c."""
    group = WeightedAffineGroup.from_weights(affine_type("C", 2), (1, 1, 1))
    table = c_function(group)
    relations = order_relations(table)
    approx = relations.approx_classes
    assert sorted(len(cls) for cls in approx) == [1, 1, 1, 2]
    assert sum(len(cls) for cls in relations.sim_classes) == len(table.labels)
    for cls in relations.sim_classes:
        assert len({table.values[label] for label in cls}) == 1
    top = approx[-1][0]
    bottom = approx[0][0]
    assert relations.leq(top, bottom)
    assert not relations.leq(bottom, top)
    assert relations.leq(top, top)
    assert len(approx[1]) == 2
    assert relations.is_approx(*approx[1])
    assert table.values[approx[1][0]] == 1
    data = relations.to_json()
    assert len(data["approx"]) == 4


def test_order_relations_g2_singletons() -> None:
    """Test that distinct c-values on affine G2 give singleton classes."""
    group = WeightedAffineGroup.from_weights(affine_type("G2", 2), (3, 3, 1))
    relations = order_relations(c_function(group))
    assert len(relations.approx_classes) == 6
    assert all(len(cls) == 1 for cls in relations.sim_classes)
