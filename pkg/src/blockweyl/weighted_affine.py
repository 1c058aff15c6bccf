"""Weighted affine Weyl groups attached to blocks, and their c-functions.

This module provides:
1. The weighted affine Weyl group of a block: generators, Coxeter matrix, weights
2. The table-driven weighted group expected for each block
3. The invariant nu and the c-function with its witnesses
4. The relations <=, ~ and the c-equality classes on the finite quotient
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .affine_blocks import (
    BlockDescriptor,
    check_block_predicate,
    enumerate_blocks,
)
from .const import (
    BOND_INFINITY,
    DEFAULT_G2_TABLE,
    ERROR_DEGENERATE,
    ERROR_NOT_A_BLOCK,
    KIND_AFFINE,
    OMEGA_DOUBLEPRIME,
    PROVENANCE_INDUCTION,
    PROVENANCE_TABLE,
    PROVENANCE_TABULATED,
    WEIGHTED_EXCEPTIONAL,
)
from .coxeter_core import (
    CoxeterDescriptor,
    DiagramAutomorphism,
    affine_type,
    automorphism_group,
    classify_diagram,
    finite_quotient,
    finite_type,
    longest_element_length,
    matrix_type,
    special_nodes,
    standard_parabolic,
    trivial_type,
    weighted_longest_length,
)
from .char_tables import (
    IrrLabel,
    character_table,
    induction_multiplicities,
    parabolic_embedding,
    quotient_embedding,
    restriction_multiplicities,
)
from .exceptions import DescriptorError, InvariantViolationError, UnsupportedComputationError
from .hecke_invariants import WeightFunction, a_invariant, l_families, sharp_E0

_LOGGER = logging.getLogger(__name__)


#
# Weighted groups
#
@dataclass(frozen=True)
class WeightedAffineGroup:
    """An affine Weyl group with a weight function on its simple reflections.

    For groups built from a block, orbits lists the omega-orbits on S - J
    generating the group and node_order[k] is the orbit playing standard
    node k of descriptor. weights are given on the standard nodes.
    """

    descriptor: CoxeterDescriptor
    weights: Tuple[int, ...]
    orbits: Tuple[Tuple[int, ...], ...] = ()
    matrix: Tuple[Tuple[int, ...], ...] = ()
    node_order: Tuple[int, ...] = ()
    provenance: str = PROVENANCE_INDUCTION

    def __post_init__(self) -> None:
        """Check the weights against the recognized type."""
        if self.is_degenerate:
            return
        try:
            WeightFunction(self.descriptor, self.weights)
        except DescriptorError as err:
            raise InvariantViolationError(
                f"Weights {self.weights} are not a weight function on {self.descriptor.name}"
            ) from err

    @classmethod
    def from_weights(
        cls, descriptor: CoxeterDescriptor, weights: Optional[Sequence[int]] = None
    ) -> "WeightedAffineGroup":
        """A standard affine type with given (default 1) weights."""
        if not descriptor.is_affine:
            raise DescriptorError(f"{descriptor.name} is not affine")
        values = tuple(weights) if weights is not None else (1,) * descriptor.size
        if len(values) != descriptor.size:
            raise DescriptorError(f"Expected {descriptor.size} weights for {descriptor.name}")
        return cls(descriptor, values, provenance=PROVENANCE_TABLE)

    @classmethod
    def degenerate(cls) -> "WeightedAffineGroup":
        """The group {1} with weight 0."""
        return cls(trivial_type(), (), provenance=PROVENANCE_TABLE)

    @property
    def is_degenerate(self) -> bool:
        """True for {1}."""
        return self.descriptor.size == 0

    @property
    def quotient(self) -> CoxeterDescriptor:
        """The finite quotient by the translations."""
        if self.is_degenerate:
            return trivial_type()
        return finite_type(self.descriptor.family, self.descriptor.rank)

    @property
    def canonical_weights(self) -> Tuple[int, ...]:
        """Smallest weight tuple over the diagram automorphisms."""
        if self.is_degenerate:
            return ()
        return min(
            tuple(self.weights[g(k)] for k in self.descriptor.nodes)
            for g in automorphism_group(self.descriptor)
        )

    def same_type(self, other: "WeightedAffineGroup") -> bool:
        """True when both are the same weighted type up to diagram automorphisms."""
        return (
            self.descriptor == other.descriptor
            and self.canonical_weights == other.canonical_weights
        )

    def to_json(self) -> Dict[str, Any]:
        """JSON form {type, weights}."""
        return {
            "type": self.descriptor.name,
            "weights": list(self.weights),
            "provenance": self.provenance,
        }

    def __str__(self) -> str:
        if self.is_degenerate:
            return "{1}"
        return f"{self.descriptor.name}({','.join(str(w) for w in self.weights)})"


def _m_entry(
    affine: CoxeterDescriptor,
    nodes: Sequence[int],
    first: Tuple[int, ...],
    second: Tuple[int, ...],
) -> int:
    """Bond order of tau_first tau_second from longest element lengths."""
    union = set(nodes) | set(first) | set(second)
    if len(union) == affine.size:
        return BOND_INFINITY
    base = longest_element_length(affine, nodes)
    numerator = 2 * (longest_element_length(affine, sorted(union)) - base)
    denominator = (
        longest_element_length(affine, sorted(set(nodes) | set(first)))
        + longest_element_length(affine, sorted(set(nodes) | set(second)))
        - 2 * base
    )
    if denominator <= 0 or numerator % denominator or numerator // denominator < 2:
        raise InvariantViolationError(
            f"Bond of orbits {first}, {second} over J={list(nodes)} in {affine.name} "
            f"is {numerator}/{denominator}"
        )
    return numerator // denominator


def _restricted_twist(
    affine: CoxeterDescriptor,
    omega: DiagramAutomorphism,
    big_nodes: Sequence[int],
    sub_nodes: Sequence[int],
) -> Tuple[CoxeterDescriptor, CoxeterDescriptor, Any, DiagramAutomorphism]:
    """The embedding W_sub -> W_big of two stable node sets, and omega on W_sub."""
    big = standard_parabolic(affine, big_nodes)
    positions = sorted(big.position(x) for x in sub_nodes)
    embedding = parabolic_embedding(big.descriptor, positions)
    sub = standard_parabolic(big.descriptor, positions)
    by_node = {x: sub.position(big.position(x)) for x in sub_nodes}
    perm = [0] * sub.descriptor.size
    for x in sub_nodes:
        perm[by_node[x]] = by_node[omega(x)]
    return big.descriptor, sub.descriptor, embedding, DiagramAutomorphism(tuple(perm))


def orbit_weight(
    affine: CoxeterDescriptor,
    omega: DiagramAutomorphism,
    nodes: Sequence[int],
    orbit: Sequence[int],
    g2_table: str = DEFAULT_G2_TABLE,
) -> int:
    """Spread of equal-parameter a-values over Ind from W_J to W_(J+orbit) of E0.

    Only the components of J + orbit meeting the orbit take part; the
    others are shared by W_J and contribute the same a-value everywhere.
    """
    joined = sorted(set(nodes) | set(orbit))
    touching = [
        c.nodes for c in classify_diagram(affine, joined) if set(c.nodes) & set(orbit)
    ]
    big_nodes = sorted(x for comp in touching for x in comp)
    sub_nodes = [x for x in big_nodes if x not in set(orbit)]
    big, sub, embedding, twist = _restricted_twist(affine, omega, big_nodes, sub_nodes)
    e0 = sharp_E0(sub, twist, g2_table)
    if e0 is None:
        raise UnsupportedComputationError(
            f"No sharp E0 for {sub.name} inside {affine.name}", "weighted-group"
        )
    values = [
        a_invariant(big, None, label, g2_table)
        for label in induction_multiplicities(embedding, e0)
    ]
    _LOGGER.debug("Orbit %s over J=%s: a-values %s", tuple(orbit), list(nodes), values)
    return max(values) - min(values)


def build_weighted_group(
    affine: CoxeterDescriptor,
    omega: DiagramAutomorphism,
    nodes: Sequence[int],
    g2_table: str = DEFAULT_G2_TABLE,
) -> WeightedAffineGroup:
    """Construct the weighted affine Weyl group of a block.

    Generators are the omega-orbits on S - J; bonds come from the lengths
    of longest elements and weights from the spread of a-values over an
    induction of the sharp E0.

    Raises:
        DescriptorError: when W_J is not in C_omega(W).
    """
    subset = tuple(sorted(set(nodes)))
    if not check_block_predicate(affine, omega, subset).passed:
        raise DescriptorError(ERROR_NOT_A_BLOCK % (list(subset), affine.name, omega))
    orbits = tuple(o for o in omega.orbits if not set(o) & set(subset))
    if len(orbits) == 1:
        return WeightedAffineGroup.degenerate()
    size = len(orbits)
    matrix = [[1] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            matrix[i][j] = matrix[j][i] = _m_entry(affine, subset, orbits[i], orbits[j])
    shape = matrix_type(matrix)
    components = classify_diagram(shape)
    if len(components) != 1 or components[0].kind != KIND_AFFINE:
        raise InvariantViolationError(
            f"Weighted group of J={list(subset)} in {affine.name} is not irreducible affine"
        )
    component = components[0]
    descriptor = affine_type(component.family, component.rank)
    provenance = PROVENANCE_INDUCTION
    try:
        by_orbit = [orbit_weight(affine, omega, subset, o, g2_table) for o in orbits]
        weights = tuple(by_orbit[component.nodes[k]] for k in descriptor.nodes)
    except UnsupportedComputationError as err:
        _LOGGER.warning("Falling back to tabulated weights for %s: %s", affine.name, err)
        weights = _tabulated_weights(affine, omega, subset, descriptor)
        provenance = PROVENANCE_TABULATED
    group = WeightedAffineGroup(
        descriptor,
        weights,
        orbits,
        tuple(tuple(row) for row in matrix),
        tuple(component.nodes),
        provenance,
    )
    _LOGGER.debug("Weighted group of J=%s in %s: %s", list(subset), affine.name, group)
    return group


def _tabulated_weights(
    affine: CoxeterDescriptor,
    omega: DiagramAutomorphism,
    nodes: Sequence[int],
    descriptor: CoxeterDescriptor,
) -> Tuple[int, ...]:
    for block in enumerate_blocks(affine, omega):
        if block.nodes == tuple(nodes):
            expected = expected_weighted_group(block)
            if expected.descriptor == descriptor:
                return expected.weights
    raise UnsupportedComputationError(
        f"No tabulated weights for J={list(nodes)} in {affine.name}", "weighted-group"
    )


def expected_weighted_group(block: BlockDescriptor) -> WeightedAffineGroup:
    """The weighted group a block should produce, from the case tables."""
    affine, omega = block.descriptor, block.omega
    family = affine.family
    if family == "A":
        k = omega.order
        if k == affine.size:
            return WeightedAffineGroup.degenerate()
        return WeightedAffineGroup.from_weights(
            affine_type("A", affine.size // k - 1), (k,) * (affine.size // k)
        )
    if family not in ("B", "C", "D"):
        if block.nodes:
            return WeightedAffineGroup.degenerate()
        if omega.is_identity:
            return WeightedAffineGroup.from_weights(affine)
        target, weights = WEIGHTED_EXCEPTIONAL[family]
        return WeightedAffineGroup.from_weights(affine_type(target, len(weights) - 1), weights)
    if block.ts is None or block.delta_r is None:
        raise InvariantViolationError(f"Block {block.label} of {affine.name} has no coordinates")
    t, s = block.ts
    delta, r = block.delta_r
    if r == 0:
        return WeightedAffineGroup.degenerate()
    doubleprime = block.omega_class == OMEGA_DOUBLEPRIME
    if delta > 0:
        middle = 2 if doubleprime else 1
        if r == 1:
            return WeightedAffineGroup.from_weights(affine_type("A", 1), (t, s))
        return WeightedAffineGroup.from_weights(
            affine_type("C", r), (t,) + (middle,) * (r - 1) + (s,)
        )
    if doubleprime:
        if not omega.compose(omega).is_identity:
            raise InvariantViolationError(
                f"Block {block.label} of {affine.name} has delta=0 with omega^2 != 1"
            )
        return WeightedAffineGroup.from_weights(affine_type("B", r), (2,) * r + (1,))
    return WeightedAffineGroup.from_weights(affine)


#
# nu and the c-function
#
def _check_group(group: WeightedAffineGroup) -> None:
    if group.is_degenerate:
        raise DescriptorError(ERROR_DEGENERATE)


def nu(group: WeightedAffineGroup) -> int:
    """Largest weighted length of w_0 over the special-node deletions."""
    _check_group(group)
    desc = group.descriptor
    return max(
        weighted_longest_length(
            desc, group.weights, [k for k in desc.nodes if k != node]
        )
        for node in special_nodes(desc)
    )


@dataclass(frozen=True)
class Witness:
    """An irreducible E' of a maximal W_(S - {node}) and its a-value."""

    node: int
    subgroup: str
    label: IrrLabel
    a_value: int

    def to_json(self) -> Dict[str, Any]:
        """JSON form of the witness."""
        return {
            "node": self.node,
            "subgroup": self.subgroup,
            "label": str(self.label),
            "a": self.a_value,
        }


@dataclass(frozen=True)
class CFunctionTable:
    """c_E for every irreducible of the finite quotient, with witnesses.

    second_row holds the a-values read through the reference special
    node, whose maximal subgroup is identified with the quotient.
    """

    group: WeightedAffineGroup
    labels: Tuple[IrrLabel, ...]
    values: Dict[IrrLabel, int]
    witnesses: Dict[IrrLabel, Tuple[Witness, ...]]
    reference_node: int
    second_row: Dict[IrrLabel, int]
    subgroups: Tuple[Tuple[int, CoxeterDescriptor, Tuple[int, ...]], ...] = field(
        default=(), compare=False
    )

    @property
    def row(self) -> List[int]:
        """c-values in table order."""
        return [self.values[label] for label in self.labels]

    def extra_witnesses(self, label: IrrLabel) -> Tuple[Witness, ...]:
        """Witnesses away from the reference node where c exceeds the second row."""
        if self.values[label] <= self.second_row[label]:
            return ()
        return tuple(w for w in self.witnesses[label] if w.node != self.reference_node)

    def to_json(self) -> Dict[str, Any]:
        """JSON form of both rows and the witnesses."""
        return {
            "group": self.group.to_json(),
            "labels": [str(label) for label in self.labels],
            "c": self.row,
            "secondRow": [self.second_row[label] for label in self.labels],
            "witnesses": [
                [w.to_json() for w in self.witnesses[label]] for label in self.labels
            ],
        }


def _reference_node(group: WeightedAffineGroup) -> int:
    """The special node of smallest weight, so that the end node of weight u stays."""
    candidates = special_nodes(group.descriptor)
    return min(candidates, key=lambda node: (group.weights[node], node))


def c_function(
    group: WeightedAffineGroup, g2_table: str = DEFAULT_G2_TABLE
) -> CFunctionTable:
    """Compute c_E = max a(E') over the constituents E' of E restricted to maximal subgroups.

    Raises:
        UnsupportedComputationError: when a maximal subgroup has no a-invariant route.
    """
    _check_group(group)
    desc = group.descriptor
    table = character_table(finite_quotient(desc).descriptor)
    values: Dict[IrrLabel, int] = {label: -1 for label in table.labels}
    witnesses: Dict[IrrLabel, List[Witness]] = {label: [] for label in table.labels}
    reference = _reference_node(group)
    second_row: Dict[IrrLabel, int] = {}
    subgroups: List[Tuple[int, CoxeterDescriptor, Tuple[int, ...]]] = []
    for node in desc.nodes:
        subset = [k for k in desc.nodes if k != node]
        embedding = quotient_embedding(desc, subset)
        parabolic = standard_parabolic(desc, subset)
        sub_weights = [0] * parabolic.descriptor.size
        for original, pos in parabolic.node_map:
            sub_weights[pos] = group.weights[original]
        subgroups.append((node, embedding.sub, tuple(sub_weights)))
        a_values = {
            label: a_invariant(embedding.sub, sub_weights, label, g2_table)
            for label in character_table(embedding.sub).labels
        }
        for label in table.labels:
            constituents = restriction_multiplicities(embedding, label)
            best = max(a_values[c] for c in constituents)
            if node == reference:
                second_row[label] = best
            if best > values[label]:
                values[label] = best
                witnesses[label] = []
            if best == values[label]:
                witnesses[label].extend(
                    Witness(node, embedding.sub.name, c, a_values[c])
                    for c in constituents
                    if a_values[c] == best
                )
    result = CFunctionTable(
        group,
        table.labels,
        values,
        {label: tuple(found) for label, found in witnesses.items()},
        reference,
        second_row,
        tuple(subgroups),
    )
    _LOGGER.info("c-function of %s: %s", group, result.row)
    return result


#
# Reference c-tables
#
Pair = Tuple[int, int]


@dataclass(frozen=True)
class CTableDiscrepancy:
    """Where a computed c-table leaves the reference table, as pair multisets."""

    group: str
    printed_only: Tuple[Pair, ...]
    computed_only: Tuple[Pair, ...]

    @property
    def matches(self) -> bool:
        """True when both multisets of (c, second row) pairs agree."""
        return not self.printed_only and not self.computed_only

    def to_json(self) -> Dict[str, Any]:
        """JSON form of the discrepancy."""
        return {
            "group": self.group,
            "printedOnly": [list(p) for p in self.printed_only],
            "computedOnly": [list(p) for p in self.computed_only],
        }


def _ends_and_middle(group: WeightedAffineGroup) -> Optional[Tuple[int, int, int]]:
    weights = group.weights
    middle = set(weights[1:-1])
    if len(middle) != 1:
        return None
    return weights[0], middle.pop(), weights[-1]


def printed_c_table(group: WeightedAffineGroup) -> Optional[Tuple[Pair, ...]]:
    """The reference (c, second row) columns of a weighted group, when tabulated.

    Covered are affine C2 with weights (t,1,s), t = s or t = s +- 1;
    affine C2 and C3 with weights (t,2,...,2,s), t = s +- 1; and affine
    G2 with weights (3,3,1). Otherwise None.
    """
    if group.is_degenerate:
        return None
    desc = group.descriptor
    if desc.family == "G2":
        if group.weights != (3, 3, 1):
            return None
        return tuple(zip((0, 1, 3, 4, 9, 12), (0, 1, 3, 3, 7, 12)))
    if desc.family != "C" or desc.rank not in (2, 3):
        return None
    shape = _ends_and_middle(group)
    if shape is None:
        return None
    t, middle, s = shape
    u = max(t, s)
    first: Tuple[int, ...]
    second: Tuple[int, ...]
    if middle == 1 and desc.rank == 2 and t == s:
        first = (0, 1, u, 2 * u, 2 * u + 2)
        second = (0, 1, u, 2 * u - 1, 2 * u + 2)
    elif middle == 1 and desc.rank == 2 and abs(t - s) == 1:
        first = second = (0, 1, u, 2 * u - 1, 2 * u + 2)
    elif middle == 2 and desc.rank == 2 and abs(t - s) == 1:
        first = (0, u, 2, 2 * u - 1, 2 * u + 2)
        second = (0, u, 2, 2 * u - 2, 2 * u + 2)
    elif middle == 2 and desc.rank == 3 and abs(t - s) == 1:
        first = (0, u, 2, 3 * u - 3, 2 * u - 1, u + 2, 3 * u + 3, 2 * u + 4, 6, 3 * u + 12)
        second = (0, u, 2, 3 * u - 6, 2 * u - 2, u + 2, 3 * u + 2, 2 * u + 4, 6, 3 * u + 12)
    else:
        return None
    return tuple(zip(first, second))


def c_table_discrepancies(table: CFunctionTable) -> Optional[CTableDiscrepancy]:
    """Compare a computed c-table with its reference table; None when untabulated.

    Columns are matched as multisets of (c, second row) pairs, since the
    reference tables do not name their columns.
    """
    printed = printed_c_table(table.group)
    if printed is None:
        return None
    computed = Counter((table.values[label], table.second_row[label]) for label in table.labels)
    expected = Counter(printed)
    result = CTableDiscrepancy(
        str(table.group),
        tuple(sorted((expected - computed).elements())),
        tuple(sorted((computed - expected).elements())),
    )
    if not result.matches:
        _LOGGER.warning(
            "c-table of %s leaves the reference table: reference %s, computed %s",
            table.group,
            list(result.printed_only),
            list(result.computed_only),
        )
    return result


#
# Relations
#
@dataclass(frozen=True)
class OrderRelations:
    """The order <= and the equivalences ~ (witness families) and c-equality."""

    table: CFunctionTable
    sim_classes: Tuple[Tuple[IrrLabel, ...], ...]

    def leq(self, first: IrrLabel, second: IrrLabel) -> bool:
        """first <= second: equal, or c strictly larger."""
        values = self.table.values
        return first == second or values[first] > values[second]

    @property
    def approx_classes(self) -> Tuple[Tuple[IrrLabel, ...], ...]:
        """Classes of equal c, by increasing c."""
        groups: Dict[int, List[IrrLabel]] = {}
        for label in self.table.labels:
            groups.setdefault(self.table.values[label], []).append(label)
        return tuple(tuple(groups[c]) for c in sorted(groups))

    def is_approx(self, first: IrrLabel, second: IrrLabel) -> bool:
        """True when c agrees."""
        return self.table.values[first] == self.table.values[second]

    def is_sim(self, first: IrrLabel, second: IrrLabel) -> bool:
        """True when both lie in one ~ class."""
        return any(first in cls and second in cls for cls in self.sim_classes)

    def to_json(self) -> Dict[str, Any]:
        """JSON form of both equivalences."""
        return {
            "approx": [[str(x) for x in cls] for cls in self.approx_classes],
            "sim": [[str(x) for x in cls] for cls in self.sim_classes],
        }


def order_relations(
    table: CFunctionTable, g2_table: str = DEFAULT_G2_TABLE
) -> OrderRelations:
    """Build <=, c-equality and ~ from a c-function table."""
    family_index: Dict[int, Dict[IrrLabel, int]] = {}
    for node, sub, weights in table.subgroups:
        index: Dict[IrrLabel, int] = {}
        for k, members in enumerate(l_families(sub, weights, g2_table)):
            for member in members:
                index[member] = k
        family_index[node] = index
    parent = {label: label for label in table.labels}

    def find(label: IrrLabel) -> IrrLabel:
        while parent[label] != label:
            parent[label] = parent[parent[label]]
            label = parent[label]
        return label

    labels = table.labels
    for i, first in enumerate(labels):
        for second in labels[i + 1:]:
            if table.values[first] != table.values[second]:
                continue
            linked = any(
                w1.node == w2.node
                and family_index[w1.node][w1.label] == family_index[w2.node][w2.label]
                for w1 in table.witnesses[first]
                for w2 in table.witnesses[second]
            )
            if linked:
                parent[find(second)] = find(first)
    classes: Dict[IrrLabel, List[IrrLabel]] = {}
    for label in labels:
        classes.setdefault(find(label), []).append(label)
    result = OrderRelations(table, tuple(tuple(c) for c in classes.values()))
    _LOGGER.debug("~ classes of %s: %d", table.group, len(result.sim_classes))
    return result


#
# Reports
#
@dataclass(frozen=True)
class BlockReport:
    """A block with its weighted group, nu, a-value and c-function.

    a_value and nu are W-side quantities only.
    """

    block: BlockDescriptor
    group: WeightedAffineGroup
    expected: WeightedAffineGroup
    nu: Optional[int]
    table: Optional[CFunctionTable]

    @property
    def matches_expected(self) -> bool:
        """True when the built group agrees with the case tables."""
        return self.group.same_type(self.expected)

    def to_json(self) -> Dict[str, Any]:
        """JSON form of the report."""
        return {
            "block": self.block.to_json(),
            "group": self.group.to_json(),
            "expected": self.expected.to_json(),
            "c": self.table.row if self.table else None,
            "witnesses": (
                [[w.to_json() for w in self.table.witnesses[l]] for l in self.table.labels]
                if self.table
                else None
            ),
            "nu": self.nu,
            "aBlock": self.block.a_value,
        }


def block_report(
    affine: CoxeterDescriptor,
    omega: DiagramAutomorphism,
    block: BlockDescriptor,
    g2_table: str = DEFAULT_G2_TABLE,
    with_table: bool = True,
) -> BlockReport:
    """Bundle the weighted group, nu, a-value and c-function of one block."""
    if block.descriptor != affine or block.omega != omega:
        raise DescriptorError(ERROR_NOT_A_BLOCK % (block.label, affine.name, omega))
    group = build_weighted_group(affine, omega, block.nodes, g2_table)
    expected = expected_weighted_group(block)
    if not group.same_type(expected):
        _LOGGER.warning("Weighted group %s of %s differs from %s", group, block.label, expected)
    table: Optional[CFunctionTable] = None
    value: Optional[int] = None
    if not group.is_degenerate:
        value = nu(group)
        if with_table:
            try:
                table = c_function(group, g2_table)
            except UnsupportedComputationError as err:
                _LOGGER.warning("No c-function for %s: %s", group, err)
    return BlockReport(block, group, expected, value, table)

