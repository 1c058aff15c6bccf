"""Test suite for sharp twisted groups and the blocks of affine Weyl groups.

This module checks the sharpness test and the sharp list, the five-part
block predicate, the closed-form enumeration against a brute-force scan of
node subsets, the (t, s) and (delta, r) coordinates and block a-values.
"""
from __future__ import annotations

from typing import Any, Dict, List, Tuple

import pytest

from blockweyl.affine_blocks import (
    block_coordinates,
    block_from_delta_r,
    block_from_ts,
    blocks_by_predicate,
    check_block_predicate,
    delta_r_to_ts,
    enumerate_blocks,
    is_sharp,
    sharp_list,
    springer_index_set,
    ts_a_value,
    ts_to_delta_r,
)
from blockweyl.const import CONDITION_STABLE, TRIVIAL_BLOCK
from blockweyl.coxeter_core import (
    DiagramAutomorphism,
    affine_type,
    finite_type,
    omega_group,
    op_automorphism,
    parse_descriptor,
    select_omegas,
)
from blockweyl.exceptions import (
    DescriptorError,
    InvariantViolationError,
    UnsupportedComputationError,
)


def _identity(desc_text: str) -> DiagramAutomorphism:
    return DiagramAutomorphism.identity(parse_descriptor(desc_text).size)


def test_sharp_list_matches_golden(golden: Dict[str, Any]) -> None:
    """Test the sharp list up to index 13 against the packaged table."""
    assert sharp_list(13) == golden["sharpList"]


def test_sharp_list_head() -> None:
    """Test the trivial vertices and the first non-trivial entries."""
    rows = sharp_list(5)
    assert rows[0] == {"graph": "a", "index": 2, "type": TRIVIAL_BLOCK, "aValue": 0}
    assert {"graph": "b", "index": 5, "type": "2A2", "aValue": 1} in rows
    assert rows[-1]["type"] == "E8"


def test_is_sharp() -> None:
    """Test sharpness and graph vertices of twisted finite Weyl groups.

    Verifies that:
    1. B2, B6 and D4 are sharp with the expected a-values
    2. A2 is not sharp untwisted but A5 twisted by op is
    3. Two swapped copies of B2 form the vertex 6 of the second graph
    """
    test_cases: List[Tuple[str, int, Tuple[str, int]]] = [
        ("B2", 1, ("a", 3)),
        ("B6", 7, ("a", 5)),
        ("D4", 3, ("a", 4)),
    ]
    for text, a_value, vertex in test_cases:
        result = is_sharp(parse_descriptor(text))
        assert result.sharp
        assert result.a_value == a_value
        assert result.graph_vertex == vertex
    assert not is_sharp(finite_type("A", 2)).sharp
    a5 = finite_type("A", 5)
    twisted = is_sharp(a5, op_automorphism(a5))
    assert twisted.a_value == 4
    assert twisted.graph_vertex == ("b", 7)
    pair = parse_descriptor("B2xB2")
    swapped = is_sharp(pair, DiagramAutomorphism((2, 3, 0, 1)))
    assert swapped.a_value == 2
    assert swapped.graph_vertex == ("b", 6)
    assert swapped.to_json()["factors"] == ["(B2)^2"]


def test_is_sharp_rejects_non_automorphism() -> None:
    """Test that a permutation breaking a bond is refused."""
    with pytest.raises(DescriptorError):
        is_sharp(finite_type("A", 3), DiagramAutomorphism((1, 0, 2)))


def test_ts_a_values() -> None:
    """Test the block a-value formulas at small coordinates."""
    test_cases: List[Tuple[int, int, bool, int]] = [
        (1, 1, False, 0),
        (3, 3, False, 2),
        (4, 4, False, 6),
        (2, 3, False, 1),
        (4, 3, False, 4),
        (2, 1, True, 0),
        (2, 3, True, 0),
    ]
    for t, s, doubleprime, value in test_cases:
        assert ts_a_value(t, s, doubleprime) == value


def test_blocks_affine_c4() -> None:
    """Test C_omega for affine C4 under both elements of Omega_W."""
    c4 = affine_type("C", 4)
    identity, flip = omega_group(c4).elements
    blocks = enumerate_blocks(c4, identity)
    assert [b.ts for b in blocks] == [(1, 1), (3, 3)]
    assert [b.a_value for b in blocks] == [0, 2]
    assert blocks[1].nodes == (0, 1, 3, 4)
    assert blocks[1].delta_r == (9, 0)
    flipped = enumerate_blocks(c4, flip)
    assert [b.ts for b in flipped] == [(2, 1)]
    assert flipped[0].omega_class == "doubleprime"
    assert flipped[0].is_trivial
    assert flipped[0].label == TRIVIAL_BLOCK


def test_blocks_affine_b3() -> None:
    """Test that only the non-trivial omega of affine B3 has a non-empty block."""
    b3 = affine_type("B", 3)
    identity, swap = omega_group(b3).elements
    assert [b.nodes for b in enumerate_blocks(b3, identity)] == [()]
    blocks = enumerate_blocks(b3, swap)
    assert [b.nodes for b in blocks] == [(), (2, 3)]
    assert blocks[1].ts == (2, 3)
    assert blocks[1].a_value == 1


def test_exceptional_block_a_values() -> None:
    """Test the a-values of C_omega for the exceptional and type A diagrams."""
    test_cases: List[Tuple[str, str, List[int]]] = [
        ("~A5", "k=2", [0]),
        ("~E6", "nontrivial", [0, 3]),
        ("~E7", "nontrivial", [0, 7]),
        ("~E8", "1", [0, 16]),
        ("~F4", "1", [0, 4]),
        ("~G2", "1", [0, 1]),
    ]
    for text, selector, values in test_cases:
        affine = parse_descriptor(text)
        for omega in select_omegas(affine, selector):
            assert sorted(b.a_value for b in enumerate_blocks(affine, omega)) == values


def test_e6_block_is_complement_of_special_nodes() -> None:
    """Test that the non-trivial E6 block is S minus S_*."""
    e6 = affine_type("E6", 6)
    omega = select_omegas(e6, "nontrivial")[0]
    blocks = enumerate_blocks(e6, omega)
    assert blocks[1].nodes == (2, 3, 4, 5)
    assert blocks[0].levi_label != blocks[1].levi_label


def test_enumeration_matches_predicate_small() -> None:
    """Test closed-form enumeration against the brute-force predicate scan."""
    for text in ("~C2", "~C3", "~C4", "~B3"):
        affine = parse_descriptor(text)
        for omega in omega_group(affine).elements:
            enumerated = [b.nodes for b in enumerate_blocks(affine, omega)]
            assert sorted(enumerated) == sorted(blocks_by_predicate(affine, omega))


@pytest.mark.slow
def test_enumeration_matches_predicate_large() -> None:
    """Test the same agreement on larger classical diagrams."""
    for text in ("~B4", "~C5", "~D4", "~D5", "~D6"):
        affine = parse_descriptor(text)
        for omega in omega_group(affine).elements:
            enumerated = [b.nodes for b in enumerate_blocks(affine, omega)]
            assert sorted(enumerated) == sorted(blocks_by_predicate(affine, omega))


def test_block_predicate_report() -> None:
    """Test the per-condition report of the predicate."""
    c4 = affine_type("C", 4)
    identity = _identity("~C4")
    report = check_block_predicate(c4, identity, (0, 1, 3, 4))
    assert report.passed
    assert report.as_dict()[CONDITION_STABLE] is True
    unstable = check_block_predicate(c4, identity, (0, 1))
    assert not unstable.passed
    assert unstable.as_dict()[CONDITION_STABLE] is False
    assert check_block_predicate(c4, identity, ()).passed
    with pytest.raises(DescriptorError):
        check_block_predicate(c4, identity, tuple(range(5)))
    with pytest.raises(DescriptorError):
        check_block_predicate(c4, DiagramAutomorphism((1, 0, 2, 3, 4)), ())


def test_block_coordinates() -> None:
    """Test reading (t, s) off node subsets."""
    c4 = affine_type("C", 4)
    identity = _identity("~C4")
    assert block_coordinates(c4, identity, (0, 1, 3, 4)) == (3, 3)
    assert block_coordinates(c4, identity, ()) == (1, 1)
    assert block_coordinates(c4, identity, (2,)) is None
    assert block_coordinates(affine_type("E6", 6), _identity("~E6"), ()) is None


def test_coordinate_round_trips() -> None:
    """Test the (t, s) and (delta, r) maps on every enumerated block."""
    for text in ("~C4", "~B3", "~D4"):
        affine = parse_descriptor(text)
        for omega in omega_group(affine).elements:
            for block in enumerate_blocks(affine, omega):
                assert ts_to_delta_r(affine, omega, block.ts) == block.delta_r
                assert delta_r_to_ts(affine, omega, block.delta_r) == block.ts
                assert block_from_delta_r(affine, omega, block.delta_r) == block


def test_coordinate_violations() -> None:
    """Test that illegal coordinates name the broken rule."""
    c4 = affine_type("C", 4)
    identity = _identity("~C4")
    with pytest.raises(InvariantViolationError):
        ts_to_delta_r(c4, identity, (2, 2))
    with pytest.raises(InvariantViolationError):
        delta_r_to_ts(c4, identity, (4, 2))
    with pytest.raises(DescriptorError):
        block_from_ts(c4, identity, (5, 5))


def test_block_json() -> None:
    """Test the JSON form of a block."""
    c4 = affine_type("C", 4)
    block = enumerate_blocks(c4, _identity("~C4"))[1]
    data = block.to_json()
    assert data["type"] == "C"
    assert data["n"] == 4
    assert data["J"] == "0,1,3,4"
    assert (data["t"], data["s"], data["delta"], data["r"]) == (3, 3, 9, 0)
    assert data["omega"]["order"] == 1


def test_springer_index_set_a2() -> None:
    """Test that every irreducible of S_3 is reached by j-induction."""
    labels = springer_index_set(affine_type("A", 2))
    assert len(labels) == 3


def test_springer_index_set_rank_limit() -> None:
    """Test that large ranks are reported as unsupported."""
    with pytest.raises(UnsupportedComputationError):
        springer_index_set(affine_type("B", 5))
