"""Test suite for Coxeter descriptors, diagram automorphisms and finite groups.

This module covers parsing, the standard affine diagrams, longest elements
with and without weights, Omega_W with its S^! / Omega' / Omega'' split and
the finite group models.
"""
from __future__ import annotations

from typing import List, Tuple

import pytest

from blockweyl.coxeter_core import (
    DiagramAutomorphism,
    affine_type,
    build_group,
    classify_diagram,
    finite_quotient,
    finite_type,
    is_inner_on_quotient,
    longest_element_length,
    matrix_type,
    node_classes,
    omega_group,
    parse_descriptor,
    positive_root_count,
    positive_roots,
    select_omegas,
    special_nodes,
    weighted_longest_length,
)
from blockweyl.exceptions import DescriptorError, UnsupportedComputationError


def test_parse_descriptor_names() -> None:
    """Test that parsed descriptors print back to their canonical names."""
    test_cases: List[Tuple[str, str, int]] = [
        ("B3", "B3", 3),
        ("~C4", "~C4", 5),
        ("~G2", "~G2", 3),
        ("~E6", "~E6", 7),
        ("A1xB2", "A1xB2", 3),
        ("1", "1", 0),
        (" D4 ", "D4", 4),
    ]
    for text, name, size in test_cases:
        desc = parse_descriptor(text)
        assert desc.name == name
        assert desc.size == size


def test_parse_descriptor_mapping() -> None:
    """Test the JSON and mapping forms of a descriptor."""
    assert parse_descriptor({"kind": "affine", "family": "B", "rank": 3}).name == "~B3"
    assert parse_descriptor('{"family": "G", "rank": 2}').name == "G2"
    assert parse_descriptor({"matrix": [[1, 3], [3, 1]]}).size == 2


def test_parse_descriptor_errors() -> None:
    """Test that malformed descriptors raise DescriptorError."""
    test_cases: List[str] = ["X3", "~B2", "D1", "E5", "~A1x~A1", "{broken", "B"]
    for text in test_cases:
        with pytest.raises(DescriptorError):
            parse_descriptor(text)


def test_affine_diagrams() -> None:
    """Test the bonds of the standard affine diagrams."""
    c3 = affine_type("C", 3)
    assert c3.bond(0, 1) == 4 and c3.bond(2, 3) == 4 and c3.bond(1, 2) == 3
    b3 = affine_type("B", 3)
    assert b3.bond(0, 2) == 3 and b3.bond(1, 2) == 3 and b3.bond(2, 3) == 4
    a1 = affine_type("A", 1)
    assert a1.bond(0, 1) == 0
    g2 = affine_type("G2", 2)
    assert g2.bond(0, 1) == 3 and g2.bond(1, 2) == 6 and g2.bond(0, 2) == 2


def test_longest_element_lengths() -> None:
    """Test lengths of longest elements against the number of positive roots."""
    test_cases: List[Tuple[str, int]] = [
        ("A3", 6),
        ("B3", 9),
        ("D4", 12),
        ("G2", 6),
        ("F4", 24),
        ("E6", 36),
        ("E7", 63),
        ("E8", 120),
        ("A1xB2", 5),
    ]
    for text, length in test_cases:
        assert longest_element_length(parse_descriptor(text)) == length
    assert positive_root_count("B", 4) == 16


def test_longest_element_of_subsets() -> None:
    """Test longest elements of parabolic subgroups of affine diagrams."""
    c2 = affine_type("C", 2)
    assert longest_element_length(c2, [0, 1]) == 4
    assert longest_element_length(c2, [0, 2]) == 2
    with pytest.raises(DescriptorError):
        longest_element_length(c2)


def test_weighted_longest_length() -> None:
    """Test weighted lengths: each positive root counts the weight of its class."""
    b2 = finite_type("B", 2)
    assert weighted_longest_length(b2, (1, 3)) == 8
    g2 = finite_type("G2", 2)
    assert weighted_longest_length(g2, (3, 1)) == 12
    b3 = finite_type("B", 3)
    assert weighted_longest_length(b3, (1, 1, 2)) == 12
    c2 = affine_type("C", 2)
    assert weighted_longest_length(c2, (5, 1, 4), [0, 1]) == 12
    with pytest.raises(DescriptorError):
        weighted_longest_length(b2, (1,))


def test_node_classes() -> None:
    """Test that odd bonds join nodes into classes."""
    assert node_classes(finite_type("B", 3)) == (frozenset({0, 1}), frozenset({2}))
    assert len(node_classes(affine_type("C", 2))) == 3
    assert len(node_classes(affine_type("A", 3))) == 1
    assert len(node_classes(affine_type("A", 1))) == 2


def test_diagram_automorphism_algebra() -> None:
    """Test orbits, order, composition and inverse of a node permutation."""
    rotation = DiagramAutomorphism((1, 2, 3, 4, 5, 0))
    assert rotation.order == 6
    assert rotation.r == 1
    square = rotation.compose(rotation)
    assert square.orbits == ((0, 2, 4), (1, 3, 5))
    assert square.order == 3
    assert rotation.compose(rotation.inverse()).is_identity
    assert rotation.power(6).is_identity
    assert str(DiagramAutomorphism((0, 1))) == "id"
    assert rotation.is_automorphism_of(affine_type("A", 5))
    assert not DiagramAutomorphism((1, 0, 2)).is_automorphism_of(affine_type("C", 2))


def test_omega_group_orders() -> None:
    """Test |Omega_W| for every affine family."""
    test_cases: List[Tuple[str, int]] = [
        ("~A5", 6),
        ("~B3", 2),
        ("~C4", 2),
        ("~D4", 4),
        ("~D5", 4),
        ("~E6", 3),
        ("~E7", 2),
        ("~E8", 1),
        ("~F4", 1),
        ("~G2", 1),
    ]
    for text, order in test_cases:
        group = omega_group(parse_descriptor(text))
        assert len(group.elements) == order
        assert group.elements[0].is_identity
        assert set(group.prime) | set(group.doubleprime) == set(group.elements)


def test_special_nodes() -> None:
    """Test S_* as the orbit of node 0."""
    test_cases: List[Tuple[str, Tuple[int, ...]]] = [
        ("~A3", (0, 1, 2, 3)),
        ("~C3", (0, 3)),
        ("~B3", (0, 1)),
        ("~D4", (0, 1, 3, 4)),
        ("~G2", (0,)),
        ("~E6", (0, 1, 6)),
    ]
    for text, nodes in test_cases:
        assert special_nodes(parse_descriptor(text)) == nodes


def test_select_omegas() -> None:
    """Test the omega selectors."""
    a5 = affine_type("A", 5)
    assert len(select_omegas(a5, "k=2")) == 1
    assert len(select_omegas(a5, "k=3")) == 2
    assert len(select_omegas(a5, "nontrivial")) == 5
    assert select_omegas(a5, "1")[0].is_identity
    for selector in ("k=4", "k=x", "sometimes"):
        with pytest.raises(DescriptorError):
            select_omegas(a5, selector)


def test_omega_prime_split_type_c() -> None:
    """Test that the flip of affine C3 moves S^! and so lies in Omega''."""
    group = omega_group(affine_type("C", 3))
    flip = group.elements[1]
    assert flip.perm == (3, 2, 1, 0)
    assert group.bang_nodes == (1, 2)
    assert group.is_prime(group.elements[0])
    assert group.doubleprime == (flip,)


def test_matrix_type() -> None:
    """Test descriptors from explicit Coxeter matrices."""
    triangle = matrix_type([[1, 3, 3], [3, 1, 3], [3, 3, 1]])
    assert triangle.is_affine
    components = classify_diagram(triangle)
    assert len(components) == 1
    assert (components[0].family, components[0].rank) == ("A", 2)
    line = matrix_type([[1, 4], [4, 1]])
    assert not line.is_affine
    with pytest.raises(DescriptorError):
        matrix_type([[1, 3], [2, 1]])


def test_group_orders(small_finite_types: List) -> None:
    """Test the orders of the finite group models."""
    expected = {"A1": 2, "A2": 6, "A3": 24, "B2": 8, "B3": 48, "D4": 192, "G2": 12}
    for desc in small_finite_types:
        assert build_group(desc).order == expected[desc.name]
    assert build_group(finite_type("F4", 4)).order == 1152


def test_group_lengths() -> None:
    """Test that the longest element has the expected length and reduced word."""
    group = build_group(finite_type("B", 3))
    w0 = group.longest_element()
    assert group.length(w0) == 9
    assert len(group.reduced_word(w0)) == 9
    assert group.word_to_element(group.reduced_word(w0)) == w0


def test_e_types_not_enumerated() -> None:
    """Test that E-types are refused as enumerable groups."""
    with pytest.raises(UnsupportedComputationError):
        build_group(finite_type("E6", 6))
    assert build_group(finite_type("E6", 6), lazy=True).rank == 6


def test_finite_quotient_images() -> None:
    """Test that the affine generator maps onto a reflection of the quotient."""
    quotient = finite_quotient(affine_type("C", 2))
    group = quotient.group
    assert quotient.descriptor.name == "C2"
    image = quotient.images[0]
    assert image != group.identity
    assert group.multiply(image, image) == group.identity
    with pytest.raises(DescriptorError):
        finite_quotient(finite_type("C", 2))


def test_positive_roots_with_classes() -> None:
    """Test positive roots of B3 split into six long and three short roots."""
    roots = positive_roots(finite_type("B", 3))
    assert len(roots) == 9
    assert sorted(cls for _, cls in roots) == [0] * 6 + [1] * 3
    assert all(min(root) >= 0 for root, _ in roots)


def test_omega_acts_by_inner_automorphisms() -> None:
    """Test that every omega is realized by conjugation in the finite quotient."""
    for text in ("~A2", "~C2", "~B3"):
        affine = parse_descriptor(text)
        for omega in omega_group(affine).elements:
            assert is_inner_on_quotient(affine, omega) is not None


def test_affine_d_diagrams_are_trees() -> None:
    """Test that affine D_n has n bonds, all simply laced, touching every node.

    Verifies that:
    1. The bond (n - 2, n - 1) at the forked end is present
    2. Omega_W is generated without leaving the diagram
    """
    for rank in (4, 5, 6):
        desc = affine_type("D", rank)
        assert len(desc.bonds) == rank
        assert all(m == 3 for _, _, m in desc.bonds)
        assert desc.bond(rank - 2, rank - 1) == 3
        assert desc.bond(rank - 2, rank) == 3
        assert all(desc.neighbours(node) for node in desc.nodes)
        assert len(omega_group(desc).elements) == 4
    assert len(affine_type("D", 4).neighbours(2)) == 4


def test_omega_prime_split_c2() -> None:
    """Test that the flip of affine C2 lies in Omega'' although it fixes S^!."""
    group = omega_group(affine_type("C", 2))
    assert group.bang_nodes == (1,)
    flip = group.elements[1]
    assert flip.perm == (2, 1, 0)
    assert group.prime == (group.elements[0],)
    assert group.doubleprime == (flip,)
    assert select_omegas(affine_type("C", 2), "doubleprime") == [flip]
