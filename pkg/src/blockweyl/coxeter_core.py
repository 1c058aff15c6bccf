"""Finite and affine Coxeter diagrams, groups and diagram automorphisms.

This module provides:
1. Descriptors for finite, affine, product and explicit-matrix Coxeter types
2. Diagram classification (type recognition with a standard node ordering)
3. Diagram automorphisms, the group Omega_W of an affine diagram and its split
4. Concrete finite groups: signed permutations, reflection matrices, products
5. Root data: positive roots, longest element lengths, characteristic polynomials

Node conventions (0-indexed):
    A_n   chain 0-1-...-(n-1)
    B_n   chain with bond (n-2, n-1) = 4; node n-1 negates a coordinate
    D_n   chain 0-...-(n-2) and node n-1 attached to n-3
    E_n   Bourbaki labels shifted by one
    F4    0-1=2-3 with nodes 0, 1 long
    G2    node 0 long, node 1 short
Affine diagrams carry the extra node 0; affine node k >= 1 is finite node k-1.
"""
from __future__ import annotations

import itertools
import json
import logging
import math
import re
from abc import ABC, abstractmethod
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache, reduce
from typing import (
    Any,
    Callable,
    Dict,
    FrozenSet,
    Hashable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from sympy import Matrix, Poly, Symbol

from .const import (
    AFFINE_ATTACH,
    BANG_THRESHOLD,
    BOND_INFINITY,
    BOND_LABELS,
    CLASSICAL_FAMILIES,
    ENUMERABLE_EXCEPTIONAL,
    ERROR_BAD_NODES,
    ERROR_BAD_OMEGA,
    ERROR_BAD_RANK,
    ERROR_ENUMERATION,
    ERROR_PARSE_DESCRIPTOR,
    EXCEPTIONAL_CARTAN,
    EXCEPTIONAL_FAMILIES,
    EXCEPTIONAL_HIGHEST_ROOT,
    EXCEPTIONAL_OMEGA,
    EXCEPTIONAL_ORDERS,
    EXCEPTIONAL_POSITIVE_ROOTS,
    EXCEPTIONAL_RANKS,
    EXCEPTIONAL_ROOT_SCALE,
    FAMILY_MATRIX,
    FAMILY_PRODUCT,
    FAMILY_TRIVIAL,
    KIND_AFFINE,
    KIND_FINITE,
    MAX_ENUMERATION,
    MIN_AFFINE_RANK,
    MIN_FINITE_RANK,
)
from .exceptions import DescriptorError, UnsupportedComputationError

_LOGGER = logging.getLogger(__name__)

Q = Symbol("q")

Bond = Tuple[int, int, int]
SignedPerm = Tuple[int, ...]
IntMatrix = Tuple[Tuple[int, ...], ...]

_DESCRIPTOR_RE = re.compile(r"^(~?)([A-G])(\d+)$")


#
# Descriptors
#
@dataclass(frozen=True)
class CoxeterDescriptor:
    """A Coxeter diagram on the nodes 0..size-1.

    Bonds are stored as sorted (i, j, m) triples with i < j and m != 2;
    m = BOND_INFINITY stands for an infinite bond.
    """

    kind: str
    family: str
    rank: int
    size: int
    bonds: Tuple[Bond, ...] = ()
    components: Tuple["CoxeterDescriptor", ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        """Validate the bond list."""
        for i, j, m in self.bonds:
            if not 0 <= i < j < self.size:
                raise DescriptorError(f"Bond ({i}, {j}) outside the diagram")
            if m == 2 or m == 1 or m < 0:
                raise DescriptorError(f"Invalid bond order {m} on ({i}, {j})")
        if len({(i, j) for i, j, _ in self.bonds}) != len(self.bonds):
            raise DescriptorError("Repeated bond in descriptor")

    @property
    def nodes(self) -> Tuple[int, ...]:
        """Node identifiers."""
        return tuple(range(self.size))

    @cached_property
    def bond_map(self) -> Dict[Tuple[int, int], int]:
        """Symmetric bond mapping (absent pairs commute)."""
        result: Dict[Tuple[int, int], int] = {}
        for i, j, m in self.bonds:
            result[(i, j)] = m
            result[(j, i)] = m
        return result

    def bond(self, i: int, j: int) -> int:
        """Return the bond order between two distinct nodes."""
        return self.bond_map.get((i, j), 2)

    def neighbours(self, i: int) -> Tuple[int, ...]:
        """Nodes joined to i by a bond."""
        return tuple(j for j in self.nodes if j != i and (i, j) in self.bond_map)

    def coxeter_matrix(self) -> List[List[int]]:
        """Coxeter matrix with 1 on the diagonal and BOND_INFINITY for infinity."""
        return [
            [1 if i == j else self.bond(i, j) for j in self.nodes] for i in self.nodes
        ]

    @property
    def is_affine(self) -> bool:
        """True for affine diagrams."""
        return self.kind == KIND_AFFINE

    @property
    def is_standard(self) -> bool:
        """True for a single standard family in standard node order."""
        return self.family not in (FAMILY_PRODUCT, FAMILY_MATRIX, FAMILY_TRIVIAL)

    @property
    def name(self) -> str:
        """Descriptor string such as 'B3', '~C4', 'A1xB2' or '1'."""
        if self.family == FAMILY_TRIVIAL:
            return "1"
        if self.family == FAMILY_PRODUCT:
            return "x".join(c.name for c in self.components)
        if self.family == FAMILY_MATRIX:
            return f"M{self.size}"
        base = self.family if self.family in EXCEPTIONAL_FAMILIES else (
            f"{self.family}{self.rank}"
        )
        return f"~{base}" if self.is_affine else base

    def __str__(self) -> str:
        return self.name


def _chain(nodes: Sequence[int]) -> List[Bond]:
    return [(a, b, 3) for a, b in zip(nodes, nodes[1:])]


def _sorted_bonds(bonds: Sequence[Bond]) -> Tuple[Bond, ...]:
    return tuple(sorted((min(i, j), max(i, j), m) for i, j, m in bonds))


def _cartan_bonds(family: str) -> List[Bond]:
    cartan = EXCEPTIONAL_CARTAN[family]
    bonds: List[Bond] = []
    for i, row in enumerate(cartan):
        for j in range(i + 1, len(row)):
            product = cartan[i][j] * cartan[j][i]
            if product:
                bonds.append((i, j, {1: 3, 2: 4, 3: 6}[product]))
    return bonds


def _normalize_family(family: str, rank: int) -> Tuple[str, int]:
    family = family.upper()
    if family in ("E", "F", "G"):
        family = f"{family}{rank}"
    if family in EXCEPTIONAL_FAMILIES:
        if EXCEPTIONAL_RANKS[family] != rank:
            raise DescriptorError(ERROR_BAD_RANK % (rank, "finite", family))
    elif family not in CLASSICAL_FAMILIES:
        raise DescriptorError(ERROR_PARSE_DESCRIPTOR % family)
    return family, rank


@lru_cache(maxsize=None)
def finite_type(family: str, rank: int) -> CoxeterDescriptor:
    """Return the standard finite descriptor of a family and rank."""
    family, rank = _normalize_family(family, rank)
    if family in CLASSICAL_FAMILIES and rank < MIN_FINITE_RANK[family]:
        raise DescriptorError(ERROR_BAD_RANK % (rank, KIND_FINITE, family))
    n = rank
    if family == "A":
        bonds = _chain(range(n))
    elif family in ("B", "C"):
        bonds = _chain(range(n - 1))
        if n >= 2:
            bonds.append((n - 2, n - 1, 4))
    elif family == "D":
        bonds = _chain(range(n - 1))
        if n >= 3:
            bonds.append((n - 3, n - 1, 3))
    else:
        bonds = _cartan_bonds(family)
    return CoxeterDescriptor(KIND_FINITE, family, n, n, _sorted_bonds(bonds))


@lru_cache(maxsize=None)
def affine_type(family: str, rank: int) -> CoxeterDescriptor:
    """Return the standard affine descriptor (nodes 0..rank)."""
    family, rank = _normalize_family(family, rank)
    if family in CLASSICAL_FAMILIES and rank < MIN_AFFINE_RANK[family]:
        raise DescriptorError(ERROR_BAD_RANK % (rank, KIND_AFFINE, family))
    n = rank
    if family == "A":
        if n == 1:
            bonds: List[Bond] = [(0, 1, BOND_INFINITY)]
        else:
            bonds = _chain(range(n + 1)) + [(0, n, 3)]
    elif family == "B":
        bonds = [(0, 2, 3), (1, 2, 3)] + _chain(range(2, n)) + [(n - 1, n, 4)]
    elif family == "C":
        bonds = [(0, 1, 4)] + _chain(range(1, n)) + [(n - 1, n, 4)]
    elif family == "D":
        bonds = [(0, 2, 3), (1, 2, 3)] + _chain(range(2, n - 1))
        bonds += [(n - 2, n - 1, 3), (n - 2, n, 3)]
    else:
        bonds = [(i + 1, j + 1, m) for i, j, m in _cartan_bonds(family)]
        bonds.append((0, AFFINE_ATTACH[family] + 1, 3))
    return CoxeterDescriptor(KIND_AFFINE, family, n, n + 1, _sorted_bonds(bonds))


def trivial_type() -> CoxeterDescriptor:
    """The empty diagram (the group {1})."""
    return CoxeterDescriptor(KIND_FINITE, FAMILY_TRIVIAL, 0, 0)


def product_type(parts: Sequence[CoxeterDescriptor]) -> CoxeterDescriptor:
    """Disjoint union of diagrams with nodes offset in order."""
    flat: List[CoxeterDescriptor] = []
    for part in parts:
        if part.family == FAMILY_PRODUCT:
            flat.extend(part.components)
        elif part.family != FAMILY_TRIVIAL:
            flat.append(part)
    if not flat:
        return trivial_type()
    if len(flat) == 1:
        return flat[0]
    bonds: List[Bond] = []
    offset = 0
    for part in flat:
        bonds.extend((i + offset, j + offset, m) for i, j, m in part.bonds)
        offset += part.size
    kind = KIND_AFFINE if any(p.is_affine for p in flat) else KIND_FINITE
    return CoxeterDescriptor(
        kind,
        FAMILY_PRODUCT,
        sum(p.rank for p in flat),
        offset,
        _sorted_bonds(bonds),
        tuple(flat),
    )


def matrix_type(matrix: Sequence[Sequence[int]]) -> CoxeterDescriptor:
    """Descriptor from an explicit Coxeter matrix (0 stands for infinity)."""
    size = len(matrix)
    bonds: List[Bond] = []
    for i in range(size):
        if len(matrix[i]) != size or matrix[i][i] != 1:
            raise DescriptorError("Coxeter matrix must be square with 1 on the diagonal")
        for j in range(i + 1, size):
            if matrix[i][j] != matrix[j][i]:
                raise DescriptorError("Coxeter matrix must be symmetric")
            if matrix[i][j] != 2:
                bonds.append((i, j, int(matrix[i][j])))
    desc = CoxeterDescriptor(KIND_FINITE, FAMILY_MATRIX, size, size, _sorted_bonds(bonds))
    components = classify_diagram(desc)
    if all(c.family != FAMILY_MATRIX for c in components):
        kind = KIND_AFFINE if any(c.kind == KIND_AFFINE for c in components) else KIND_FINITE
        desc = CoxeterDescriptor(kind, FAMILY_MATRIX, desc.rank, size, desc.bonds)
    return desc


def parse_descriptor(value: Union[str, Mapping[str, Any]]) -> CoxeterDescriptor:
    """Parse 'B3', '~C4', 'D4xD4', '1' or a JSON mapping into a descriptor."""
    if isinstance(value, Mapping):
        return _parse_mapping(value)
    text = value.strip()
    if text.startswith("{"):
        try:
            return _parse_mapping(json.loads(text))
        except json.JSONDecodeError as err:
            raise DescriptorError(ERROR_PARSE_DESCRIPTOR % text) from err
    if text in ("", "1"):
        return trivial_type()
    pieces = re.split(r"[x×]", text)
    if len(pieces) > 1:
        parts = [parse_descriptor(p) for p in pieces]
        if any(p.is_affine for p in parts):
            raise DescriptorError(ERROR_PARSE_DESCRIPTOR % text)
        return product_type(parts)
    match = _DESCRIPTOR_RE.match(text)
    if not match:
        raise DescriptorError(ERROR_PARSE_DESCRIPTOR % text)
    tilde, family, rank = match.groups()
    if tilde:
        return affine_type(family, int(rank))
    return finite_type(family, int(rank))


def _parse_mapping(data: Mapping[str, Any]) -> CoxeterDescriptor:
    if "matrix" in data:
        return matrix_type(data["matrix"])
    try:
        kind = data.get("kind", KIND_FINITE)
        family = str(data["family"])
        rank = int(data["rank"])
    except (KeyError, TypeError, ValueError) as err:
        raise DescriptorError(ERROR_PARSE_DESCRIPTOR % dict(data)) from err
    if kind == KIND_AFFINE:
        return affine_type(family, rank)
    if kind == KIND_FINITE:
        return finite_type(family, rank)
    raise DescriptorError(ERROR_PARSE_DESCRIPTOR % dict(data))


#
# Classification
#
@dataclass(frozen=True)
class DiagramComponent:
    """A connected component recognized as a standard type.

    nodes[k] is the node of the classified diagram playing standard node k.
    """

    kind: str
    family: str
    rank: int
    nodes: Tuple[int, ...]

    @property
    def descriptor(self) -> CoxeterDescriptor:
        """The standard descriptor of this component."""
        if self.family == FAMILY_MATRIX:
            raise UnsupportedComputationError(
                f"Component on nodes {self.nodes} has no standard type", "classify"
            )
        if self.kind == KIND_AFFINE:
            return affine_type(self.family, self.rank)
        return finite_type(self.family, self.rank)

    @property
    def name(self) -> str:
        """Standard name of the component."""
        if self.family == FAMILY_MATRIX:
            return f"M{len(self.nodes)}"
        return self.descriptor.name


def _connected_components(
    nodes: Sequence[int], adjacent: Callable[[int, int], bool]
) -> List[List[int]]:
    remaining = list(nodes)
    result: List[List[int]] = []
    while remaining:
        start = remaining.pop(0)
        component = [start]
        queue = deque([start])
        while queue:
            current = queue.popleft()
            for other in list(remaining):
                if adjacent(current, other):
                    remaining.remove(other)
                    component.append(other)
                    queue.append(other)
        result.append(sorted(component))
    return result


def _bfs_order(desc: CoxeterDescriptor) -> List[int]:
    if not desc.size:
        return []
    order = [0]
    seen = {0}
    queue = deque([0])
    while queue:
        current = queue.popleft()
        for other in desc.neighbours(current):
            if other not in seen:
                seen.add(other)
                order.append(other)
                queue.append(other)
    order.extend(k for k in desc.nodes if k not in seen)
    return order


def diagram_embeddings(
    std: CoxeterDescriptor,
    nodes: Sequence[int],
    bond_of: Callable[[int, int], int],
) -> Iterator[Tuple[int, ...]]:
    """Yield every bond-preserving bijection std-node -> node."""
    if len(nodes) != std.size:
        return
    order = _bfs_order(std)
    node_degree = {
        x: sum(1 for y in nodes if y != x and bond_of(x, y) != 2) for x in nodes
    }
    std_degree = {k: len(std.neighbours(k)) for k in std.nodes}
    assignment: Dict[int, int] = {}
    used: set = set()

    def extend(pos: int) -> Iterator[Tuple[int, ...]]:
        if pos == len(order):
            yield tuple(assignment[k] for k in std.nodes)
            return
        k = order[pos]
        for node in nodes:
            if node in used or node_degree[node] != std_degree[k]:
                continue
            if any(bond_of(node, assignment[j]) != std.bond(k, j) for j in assignment):
                continue
            assignment[k] = node
            used.add(node)
            yield from extend(pos + 1)
            del assignment[k]
            used.discard(node)

    yield from extend(0)


def _candidate_types(size: int) -> List[CoxeterDescriptor]:
    candidates: List[CoxeterDescriptor] = [finite_type("A", size)]
    if size >= 2:
        candidates.append(finite_type("B", size))
    if size >= 4:
        candidates.append(finite_type("D", size))
    candidates.extend(
        finite_type(f, r) for f, r in EXCEPTIONAL_RANKS.items() if r == size
    )
    rank = size - 1
    if rank >= 1:
        candidates.append(affine_type("A", rank))
    for family in ("B", "C", "D"):
        if rank >= MIN_AFFINE_RANK[family]:
            candidates.append(affine_type(family, rank))
    candidates.extend(
        affine_type(f, r) for f, r in EXCEPTIONAL_RANKS.items() if r == rank
    )
    return candidates


def classify_diagram(
    desc: CoxeterDescriptor, subset: Optional[Sequence[int]] = None
) -> List[DiagramComponent]:
    """Recognize the connected components of the diagram induced on subset.

    Components are returned in order of their smallest node.
    """
    nodes = sorted(desc.nodes if subset is None else set(subset))
    if any(not 0 <= x < desc.size for x in nodes):
        raise DescriptorError(ERROR_BAD_NODES % (nodes, desc.name))
    result: List[DiagramComponent] = []
    for component in _connected_components(nodes, lambda a, b: desc.bond(a, b) != 2):
        result.append(_classify_connected(desc, component))
    return result


def _classify_connected(desc: CoxeterDescriptor, nodes: List[int]) -> DiagramComponent:
    for std in _candidate_types(len(nodes)):
        for embedding in diagram_embeddings(std, nodes, desc.bond):
            return DiagramComponent(std.kind, std.family, std.rank, embedding)
    _LOGGER.debug("Nodes %s of %s have no standard type", nodes, desc.name)
    return DiagramComponent(KIND_FINITE, FAMILY_MATRIX, len(nodes), tuple(nodes))


@dataclass(frozen=True)
class Parabolic:
    """A node subset viewed as a standard product type."""

    descriptor: CoxeterDescriptor
    node_map: Tuple[Tuple[int, int], ...]
    components: Tuple[DiagramComponent, ...]

    def position(self, node: int) -> int:
        """Index of an original node inside the standard product."""
        return dict(self.node_map)[node]


def standard_parabolic(
    desc: CoxeterDescriptor, subset: Optional[Sequence[int]] = None
) -> Parabolic:
    """Return the standard product type of the subdiagram on subset."""
    components = classify_diagram(desc, subset)
    node_map: List[Tuple[int, int]] = []
    offset = 0
    for component in components:
        for k, node in enumerate(component.nodes):
            node_map.append((node, offset + k))
        offset += len(component.nodes)
    return Parabolic(
        product_type([c.descriptor for c in components]),
        tuple(sorted(node_map)),
        tuple(components),
    )


def node_classes(desc: CoxeterDescriptor) -> Tuple[FrozenSet[int], ...]:
    """Classes of nodes joined by chains of odd bonds."""
    odd = [
        sorted(c)
        for c in _connected_components(
            list(desc.nodes),
            lambda a, b: desc.bond(a, b) not in (2, BOND_INFINITY)
            and desc.bond(a, b) % 2 == 1,
        )
    ]
    return tuple(frozenset(c) for c in sorted(odd))


#
# Root data
#
def positive_root_count(family: str, rank: int) -> int:
    """Number of positive roots of a finite irreducible type."""
    if family == "A":
        return rank * (rank + 1) // 2
    if family in ("B", "C"):
        return rank * rank
    if family == "D":
        return rank * (rank - 1)
    return EXCEPTIONAL_POSITIVE_ROOTS[family]


def _root_scale(desc: CoxeterDescriptor) -> List[int]:
    if desc.family in EXCEPTIONAL_ROOT_SCALE:
        return list(EXCEPTIONAL_ROOT_SCALE[desc.family])
    if desc.family == "B":
        return [2] * (desc.rank - 1) + [1]
    if desc.family == "C":
        return [1] * (desc.rank - 1) + [2]
    return [1] * desc.size


def cartan_matrix(desc: CoxeterDescriptor) -> List[List[int]]:
    """Cartan matrix A with s_i(alpha_j) = alpha_j - A[i][j] alpha_i."""
    if not desc.is_standard:
        parabolic = standard_parabolic(desc)
        if any(c.family == FAMILY_MATRIX or c.kind == KIND_AFFINE for c in parabolic.components):
            raise UnsupportedComputationError(
                f"No Cartan matrix for {desc.name}", "cartan"
            )
        std = parabolic.descriptor
        blocks = [cartan_matrix(c) for c in (std.components or (std,))] if std.size else []
        big = [[0] * std.size for _ in range(std.size)]
        offset = 0
        for block in blocks:
            for i, row in enumerate(block):
                for j, value in enumerate(row):
                    big[offset + i][offset + j] = value
            offset += len(block)
        pos = dict(parabolic.node_map)
        return [[big[pos[i]][pos[j]] for j in desc.nodes] for i in desc.nodes]
    if desc.is_affine:
        raise UnsupportedComputationError(f"No Cartan matrix for {desc.name}", "cartan")
    if desc.family in EXCEPTIONAL_CARTAN:
        return [list(row) for row in EXCEPTIONAL_CARTAN[desc.family]]
    scale = _root_scale(desc)
    cartan = [[2 if i == j else 0 for j in desc.nodes] for i in desc.nodes]
    for i, j, m in desc.bonds:
        if m == 3:
            cartan[i][j] = cartan[j][i] = -1
            continue
        short, long_ = (i, j) if scale[i] < scale[j] else (j, i)
        cartan[short][long_] = -{4: 2, 6: 3}[m]
        cartan[long_][short] = -1
    return cartan


@lru_cache(maxsize=None)
def positive_roots(desc: CoxeterDescriptor) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    """Positive roots in the simple-root basis with the node class of each.

    The class is the index into node_classes(desc) of the simple roots
    conjugate to the root.
    """
    cartan = cartan_matrix(desc)
    classes = node_classes(desc)
    class_of = {node: k for k, cls in enumerate(classes) for node in cls}
    roots: Dict[Tuple[int, ...], int] = {}
    queue: deque = deque()
    for i in desc.nodes:
        simple = tuple(1 if k == i else 0 for k in desc.nodes)
        roots[simple] = class_of[i]
        queue.append(simple)
    while queue:
        root = queue.popleft()
        for i in desc.nodes:
            pairing = sum(cartan[i][j] * root[j] for j in desc.nodes)
            image = list(root)
            image[i] -= pairing
            image_t = tuple(image)
            if all(c >= 0 for c in image_t) and any(image_t) and image_t not in roots:
                roots[image_t] = roots[root]
                queue.append(image_t)
    return tuple(sorted(roots.items(), key=lambda item: (sum(item[0]), item[0])))


def longest_element_length(
    desc: CoxeterDescriptor, subset: Optional[Sequence[int]] = None
) -> int:
    """Length of the longest element of the parabolic subgroup on subset."""
    total = 0
    for component in classify_diagram(desc, subset):
        if component.kind == KIND_AFFINE or component.family == FAMILY_MATRIX:
            if component.family == FAMILY_MATRIX and len(component.nodes) == 2:
                m = desc.bond(*component.nodes)
                if m != BOND_INFINITY:
                    total += m
                    continue
            raise DescriptorError(
                f"Nodes {list(component.nodes)} of {desc.name} generate an infinite group"
            )
        total += positive_root_count(component.family, component.rank)
    return total


def weighted_longest_length(
    desc: CoxeterDescriptor,
    weights: Sequence[int],
    subset: Optional[Sequence[int]] = None,
) -> int:
    """Weight of the longest element: sum of class weights over positive roots."""
    if len(weights) != desc.size:
        raise DescriptorError(f"Expected {desc.size} weights for {desc.name}")
    parabolic = standard_parabolic(desc, subset)
    total = 0
    for component in parabolic.components:
        std = component.descriptor
        if std.is_affine:
            raise DescriptorError(f"{std.name} is not finite")
        classes = node_classes(std)
        for _, cls in positive_roots(std):
            node = min(classes[cls])
            total += weights[component.nodes[node]]
    return total


#
# Diagram automorphisms
#
@dataclass(frozen=True)
class DiagramAutomorphism:
    """A node permutation preserving the bonds; perm[i] is the image of i."""

    perm: Tuple[int, ...]

    @classmethod
    def identity(cls, size: int) -> "DiagramAutomorphism":
        """Return the identity on size nodes."""
        return cls(tuple(range(size)))

    def __call__(self, node: int) -> int:
        return self.perm[node]

    def compose(self, other: "DiagramAutomorphism") -> "DiagramAutomorphism":
        """Return self after other."""
        return DiagramAutomorphism(tuple(self.perm[i] for i in other.perm))

    def inverse(self) -> "DiagramAutomorphism":
        """Return the inverse permutation."""
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            inv[j] = i
        return DiagramAutomorphism(tuple(inv))

    def power(self, k: int) -> "DiagramAutomorphism":
        """Return the k-th power."""
        result = DiagramAutomorphism.identity(len(self.perm))
        for _ in range(k % self.order if self.order else 0):
            result = self.compose(result)
        return result

    @property
    def is_identity(self) -> bool:
        """True for the identity."""
        return all(i == j for i, j in enumerate(self.perm))

    @cached_property
    def orbits(self) -> Tuple[Tuple[int, ...], ...]:
        """Node orbits, each sorted, ordered by smallest node."""
        seen: set = set()
        result: List[Tuple[int, ...]] = []
        for start in range(len(self.perm)):
            if start in seen:
                continue
            orbit = [start]
            seen.add(start)
            current = self.perm[start]
            while current != start:
                orbit.append(current)
                seen.add(current)
                current = self.perm[current]
            result.append(tuple(sorted(orbit)))
        return tuple(result)

    @cached_property
    def order(self) -> int:
        """Order of the permutation."""
        return reduce(lambda a, b: a * b // math.gcd(a, b), (len(o) for o in self.orbits), 1)

    @property
    def r(self) -> int:
        """Number of node orbits."""
        return len(self.orbits)

    def restrict(self, nodes: Sequence[int]) -> "DiagramAutomorphism":
        """Restriction to a stable node list, reindexed by position."""
        index = {node: k for k, node in enumerate(nodes)}
        try:
            return DiagramAutomorphism(tuple(index[self.perm[node]] for node in nodes))
        except KeyError as err:
            raise DescriptorError(f"Nodes {list(nodes)} are not stable") from err

    def stabilizes(self, nodes: Sequence[int]) -> bool:
        """True when the node set is mapped to itself."""
        target = set(nodes)
        return all(self.perm[node] in target for node in nodes)

    def is_automorphism_of(self, desc: CoxeterDescriptor) -> bool:
        """True when the permutation preserves every bond."""
        return len(self.perm) == desc.size and all(
            desc.bond(self.perm[i], self.perm[j]) == m for i, j, m in desc.bonds
        ) and len(set(self.perm)) == desc.size

    def __str__(self) -> str:
        moved = [f"{i}->{j}" for i, j in enumerate(self.perm) if i != j]
        return "id" if not moved else "(" + ", ".join(moved) + ")"


def automorphism_group(desc: CoxeterDescriptor) -> List[DiagramAutomorphism]:
    """All bond-preserving node permutations (finite) or Omega_W (affine)."""
    if desc.is_affine and desc.is_standard:
        return list(omega_group(desc).elements)
    result = [
        DiagramAutomorphism(_invert(embedding))
        for embedding in _self_embeddings(desc)
    ]
    return sorted(result, key=lambda g: (not g.is_identity, g.perm))


def _invert(embedding: Tuple[int, ...]) -> Tuple[int, ...]:
    return DiagramAutomorphism(embedding).inverse().perm


def _self_embeddings(desc: CoxeterDescriptor) -> Iterator[Tuple[int, ...]]:
    if desc.size == 0:
        yield ()
        return
    for perm in diagram_embeddings(desc, list(desc.nodes), desc.bond):
        yield perm


def _standard_op(family: str, rank: int) -> Tuple[int, ...]:
    perm = list(range(rank))
    if family == "A" and rank >= 2:
        perm = [rank - 1 - i for i in range(rank)]
    elif family == "D" and rank % 2 == 1 and rank >= 3:
        perm[rank - 2], perm[rank - 1] = rank - 1, rank - 2
    elif family == "E6":
        perm = [5, 1, 4, 3, 2, 0]
    return tuple(perm)


def op_automorphism(desc: CoxeterDescriptor) -> DiagramAutomorphism:
    """Automorphism induced by conjugation with the longest element."""
    perm = list(desc.nodes)
    for component in classify_diagram(desc):
        if component.kind == KIND_AFFINE:
            raise DescriptorError(f"{desc.name} is not finite")
        if component.family == FAMILY_MATRIX:
            m = desc.bond(*component.nodes) if len(component.nodes) == 2 else 2
            if len(component.nodes) == 2 and m % 2 == 1:
                a, b = component.nodes
                perm[a], perm[b] = b, a
            continue
        local = _standard_op(component.family, component.rank)
        for k, node in enumerate(component.nodes):
            perm[node] = component.nodes[local[k]]
    return DiagramAutomorphism(tuple(perm))


#
# Omega_W
#
@dataclass(frozen=True)
class OmegaGroup:
    """Omega_W of an affine diagram with its S^!, Omega', Omega'' and S_* data."""

    descriptor: CoxeterDescriptor
    elements: Tuple[DiagramAutomorphism, ...]
    bang_nodes: Tuple[int, ...]
    prime: Tuple[DiagramAutomorphism, ...]
    doubleprime: Tuple[DiagramAutomorphism, ...]
    special_nodes: Tuple[int, ...]

    def is_prime(self, omega: DiagramAutomorphism) -> bool:
        """True for members of Omega'."""
        return omega in self.prime


def bang_nodes(desc: CoxeterDescriptor) -> Tuple[int, ...]:
    """Nodes whose touching edges have label sum at least three."""
    result = []
    for node in desc.nodes:
        total = sum(BOND_LABELS.get(desc.bond(node, other), 0) for other in desc.neighbours(node))
        if total >= BANG_THRESHOLD:
            result.append(node)
    return tuple(result)


def _prime_reference(desc: CoxeterDescriptor, bang: Tuple[int, ...]) -> Tuple[int, ...]:
    """Nodes an element of Omega' must fix."""
    # ~C2: S^! is the middle node alone; Omega' is read off the two ends
    if desc.family == "C" and desc.rank == 2:
        return (0, desc.rank)
    return bang


def _omega_generators(desc: CoxeterDescriptor) -> List[Tuple[int, ...]]:
    n = desc.rank
    family = desc.family
    if family == "A":
        return [tuple((i + 1) % (n + 1) for i in range(n + 1))]
    if family == "B":
        return [(1, 0) + tuple(range(2, n + 1))]
    if family == "C":
        return [tuple(n - i for i in range(n + 1))]
    if family == "D":
        if n % 2 == 0:
            sigma1 = [1, 0] + list(range(2, n - 1)) + [n, n - 1]
            sigma2 = [n - i for i in range(n + 1)]
            return [tuple(sigma1), tuple(sigma2)]
        gamma = [n - i for i in range(n + 1)]
        gamma[0], gamma[n], gamma[1], gamma[n - 1] = n, 1, n - 1, 0
        return [tuple(gamma)]
    if family in EXCEPTIONAL_OMEGA:
        mapping = EXCEPTIONAL_OMEGA[family]
        return [tuple(mapping.get(i, i) for i in range(n + 1))]
    return []


@lru_cache(maxsize=None)
def omega_group(desc: CoxeterDescriptor) -> OmegaGroup:
    """Return Omega_W realized as diagram automorphisms of an affine diagram."""
    if not (desc.is_affine and desc.is_standard):
        raise DescriptorError(f"{desc.name} is not a standard affine type")
    identity = DiagramAutomorphism.identity(desc.size)
    elements = {identity}
    frontier = [DiagramAutomorphism(g) for g in _omega_generators(desc)]
    for gen in frontier:
        if not gen.is_automorphism_of(desc):
            raise DescriptorError(f"Omega generator {gen} does not preserve {desc.name}")
    while True:
        new = {g.compose(h) for g in frontier for h in elements} - elements
        if not new:
            break
        elements |= new
    ordered = tuple(sorted(elements, key=lambda g: (g.order, not g.is_identity, g.perm)))
    bang = bang_nodes(desc)
    fixed = _prime_reference(desc, bang)
    if fixed:
        prime = tuple(g for g in ordered if all(g(x) == x for x in fixed))
    else:
        prime = ordered
    doubleprime = tuple(g for g in ordered if g not in prime)
    special = tuple(sorted({g(0) for g in ordered}))
    _LOGGER.debug(
        "Omega of %s: order %d, S^!=%s, |Omega'|=%d", desc.name, len(ordered), bang, len(prime)
    )
    return OmegaGroup(desc, ordered, bang, prime, doubleprime, special)


def special_nodes(desc: CoxeterDescriptor) -> Tuple[int, ...]:
    """The set S_* (the Omega_W-orbit of the node 0)."""
    return omega_group(desc).special_nodes


def select_omegas(desc: CoxeterDescriptor, selector: str) -> List[DiagramAutomorphism]:
    """Resolve an omega selector: 1, prime, doubleprime, k=<int> or nontrivial."""
    group = omega_group(desc)
    selector = selector.strip().lower()
    if selector in ("1", "id", "identity"):
        chosen = [group.elements[0]]
    elif selector == "prime":
        chosen = list(group.prime)
    elif selector == "doubleprime":
        chosen = list(group.doubleprime)
    elif selector == "nontrivial":
        chosen = [g for g in group.elements if not g.is_identity]
    elif selector.startswith("k="):
        try:
            k = int(selector[2:])
        except ValueError as err:
            raise DescriptorError(ERROR_BAD_OMEGA % (selector, desc.name)) from err
        chosen = [g for g in group.elements if g.order == k]
    else:
        raise DescriptorError(ERROR_BAD_OMEGA % (selector, desc.name))
    if not chosen:
        raise DescriptorError(ERROR_BAD_OMEGA % (selector, desc.name))
    return chosen


#
# Finite groups
#
@dataclass(frozen=True)
class ConjugacyClass:
    """A conjugacy class with a representative and its size."""

    label: Hashable
    representative: Any
    size: int


class FiniteCoxeterGroup(ABC):
    """A finite Coxeter group with generators indexed by the descriptor's nodes."""

    def __init__(self, descriptor: CoxeterDescriptor) -> None:
        """Initialize the group handle."""
        self.descriptor = descriptor

    @property
    @abstractmethod
    def identity(self) -> Any:
        """The identity element."""

    @property
    @abstractmethod
    def generators(self) -> Tuple[Any, ...]:
        """Simple reflections in node order."""

    @property
    @abstractmethod
    def order(self) -> int:
        """Group order."""

    @abstractmethod
    def multiply(self, x: Any, y: Any) -> Any:
        """Return x*y (y acts first)."""

    @abstractmethod
    def length(self, x: Any) -> int:
        """Coxeter length."""

    @abstractmethod
    def char_poly(self, x: Any) -> Poly:
        """det(q - x) on the reflection representation."""

    @abstractmethod
    def class_label(self, x: Any) -> Hashable:
        """Label of the conjugacy class of x."""

    @abstractmethod
    def conjugacy_classes(self) -> List[ConjugacyClass]:
        """Conjugacy classes in canonical order."""

    @abstractmethod
    def elements(self) -> Iterator[Any]:
        """Iterate over all elements."""

    @property
    def rank(self) -> int:
        """Number of generators."""
        return self.descriptor.size

    def word_to_element(self, word: Sequence[int]) -> Any:
        """Multiply simple reflections left to right."""
        result = self.identity
        for node in word:
            result = self.multiply(result, self.generators[node])
        return result

    def reduced_word(self, x: Any) -> Tuple[int, ...]:
        """A reduced word for x found by right descents."""
        letters: List[int] = []
        current = x
        current_length = self.length(current)
        while current_length:
            for node, gen in enumerate(self.generators):
                candidate = self.multiply(current, gen)
                candidate_length = self.length(candidate)
                if candidate_length < current_length:
                    letters.append(node)
                    current, current_length = candidate, candidate_length
                    break
            else:
                raise UnsupportedComputationError("No descent found", "reduced_word")
        return tuple(reversed(letters))

    def inverse(self, x: Any) -> Any:
        """Inverse element."""
        return self.word_to_element(tuple(reversed(self.reduced_word(x))))

    def conjugate(self, x: Any, g: Any) -> Any:
        """Return g x g^-1."""
        return self.multiply(self.multiply(g, x), self.inverse(g))

    def longest_element(self) -> Any:
        """The longest element, built by left multiplication while length grows."""
        current = self.identity
        grown = True
        while grown:
            grown = False
            for gen in self.generators:
                candidate = self.multiply(gen, current)
                if self.length(candidate) > self.length(current):
                    current, grown = candidate, True
        return current

    def _check_enumerable(self) -> None:
        if self.order > MAX_ENUMERATION:
            raise UnsupportedComputationError(
                ERROR_ENUMERATION % self.descriptor.name, "enumeration"
            )


def _partitions(n: int, largest: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def _centralizer_order(partition: Sequence[int], base: int = 1) -> int:
    counts: Dict[int, int] = {}
    for part in partition:
        counts[part] = counts.get(part, 0) + 1
    result = 1
    for part, mult in counts.items():
        result *= (base * part) ** mult * math.factorial(mult)
    return result


class SignedPermutationGroup(FiniteCoxeterGroup):
    """Weyl groups of types A, B/C and D as (signed) permutations.

    An element w is a tuple with w[i] = +-(j+1) when w(e_i) = +-e_j.
    Type A_n acts on n+1 points.
    """

    def __init__(self, descriptor: CoxeterDescriptor) -> None:
        """Initialize from a standard classical descriptor."""
        super().__init__(descriptor)
        self.family = "B" if descriptor.family == "C" else descriptor.family
        self.n = descriptor.rank
        self.points = self.n + 1 if self.family == "A" else self.n
        self._generators = self._build_generators()

    def _build_generators(self) -> Tuple[SignedPerm, ...]:
        m = self.points
        gens: List[SignedPerm] = []
        base = list(range(1, m + 1))

        def swap(i: int, j: int, sign: int = 1) -> SignedPerm:
            w = list(base)
            w[i], w[j] = sign * (j + 1), sign * (i + 1)
            return tuple(w)

        if self.family == "A":
            gens = [swap(i, i + 1) for i in range(self.n)]
        elif self.family == "B":
            gens = [swap(i, i + 1) for i in range(self.n - 1)]
            w = list(base)
            w[self.n - 1] = -self.n
            gens.append(tuple(w))
        else:
            gens = [swap(i, i + 1) for i in range(self.n - 1)]
            if self.n >= 2:
                gens.append(swap(self.n - 2, self.n - 1, -1))
            else:
                gens = []
        return tuple(gens)

    @property
    def identity(self) -> SignedPerm:
        return tuple(range(1, self.points + 1))

    @property
    def generators(self) -> Tuple[SignedPerm, ...]:
        return self._generators

    @property
    def order(self) -> int:
        if self.family == "A":
            return math.factorial(self.points)
        if self.family == "B":
            return 2**self.n * math.factorial(self.n)
        return 2 ** max(self.n - 1, 0) * math.factorial(self.n)

    def multiply(self, x: SignedPerm, y: SignedPerm) -> SignedPerm:
        return tuple((1 if v > 0 else -1) * x[abs(v) - 1] for v in y)

    def inverse(self, x: SignedPerm) -> SignedPerm:
        inv = [0] * len(x)
        for i, v in enumerate(x):
            inv[abs(v) - 1] = (1 if v > 0 else -1) * (i + 1)
        return tuple(inv)

    def length(self, x: SignedPerm) -> int:
        count = 0
        m = len(x)
        pos = [abs(v) - 1 for v in x]
        sgn = [1 if v > 0 else -1 for v in x]
        for i in range(m):
            for j in range(i + 1, m):
                first_i = pos[i] < pos[j]
                # e_i - e_j
                if (sgn[i] < 0) if first_i else (sgn[j] > 0):
                    count += 1
                if self.family != "A":
                    # e_i + e_j
                    if (sgn[i] < 0) if first_i else (sgn[j] < 0):
                        count += 1
            if self.family == "B" and sgn[i] < 0:
                count += 1
        return count

    def signed_cycles(self, x: SignedPerm) -> List[Tuple[Tuple[int, ...], int]]:
        """Cycles (as point tuples from their smallest point) with sign products."""
        seen: set = set()
        cycles: List[Tuple[Tuple[int, ...], int]] = []
        for start in range(len(x)):
            if start in seen:
                continue
            points = []
            sign = 1
            current = start
            while current not in seen:
                seen.add(current)
                points.append(current)
                sign *= 1 if x[current] > 0 else -1
                current = abs(x[current]) - 1
            cycles.append((tuple(points), sign))
        return cycles

    def cycle_type(self, x: SignedPerm) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        """Positive and negative cycle lengths, each weakly decreasing."""
        cycles = self.signed_cycles(x)
        pos = tuple(sorted((len(c) for c, s in cycles if s > 0), reverse=True))
        neg = tuple(sorted((len(c) for c, s in cycles if s < 0), reverse=True))
        return pos, neg

    def _split_sign(self, x: SignedPerm) -> str:
        negatives = 0
        for points, _ in self.signed_cycles(x):
            d = 1
            for point in points[:-1]:
                d *= 1 if x[point] > 0 else -1
                if d < 0:
                    negatives += 1
        return "+" if negatives % 2 == 0 else "-"

    def is_split(self, pos: Sequence[int], neg: Sequence[int]) -> bool:
        """True for D_n classes that split (no negative cycles, all even)."""
        return self.family == "D" and not neg and all(p % 2 == 0 for p in pos)

    def class_label(self, x: SignedPerm) -> Hashable:
        pos, neg = self.cycle_type(x)
        if self.family == "A":
            return pos
        if self.family == "B":
            return (pos, neg)
        return (pos, neg, self._split_sign(x) if self.is_split(pos, neg) else "")

    def char_poly(self, x: SignedPerm) -> Poly:
        result = Poly(1, Q)
        for points, sign in self.signed_cycles(x):
            result *= Poly(Q ** len(points) - sign, Q)
        if self.family == "A":
            result = result.exquo(Poly(Q - 1, Q))
        return result

    def _representative(self, pos: Sequence[int], neg: Sequence[int]) -> SignedPerm:
        w = [0] * self.points
        start = 0
        for length, sign in [(p, 1) for p in pos] + [(p, -1) for p in neg]:
            block = list(range(start, start + length))
            for k, point in enumerate(block):
                w[point] = block[(k + 1) % length] + 1
            if sign < 0:
                w[block[-1]] = -w[block[-1]]
            start += length
        return tuple(w)

    def conjugacy_classes(self) -> List[ConjugacyClass]:
        classes: List[ConjugacyClass] = []
        if self.family == "A":
            for lam in _partitions(self.points):
                rep = self._representative(lam, ())
                size = self.order // _centralizer_order(lam)
                classes.append(ConjugacyClass(lam, rep, size))
            return self._identity_first(classes)
        b_order = 2**self.n * math.factorial(self.n)
        for k in range(self.n, -1, -1):
            for pos in _partitions(k):
                for neg in _partitions(self.n - k):
                    if self.family == "D" and len(neg) % 2:
                        continue
                    size = b_order // (
                        _centralizer_order(pos, 2) * _centralizer_order(neg, 2)
                    )
                    rep = self._representative(pos, neg)
                    if self.family == "B":
                        classes.append(ConjugacyClass((pos, neg), rep, size))
                    elif self.is_split(pos, neg):
                        flip = list(rep)
                        minus = self._negate_first(rep)
                        classes.append(ConjugacyClass((pos, neg, "+"), tuple(flip), size // 2))
                        classes.append(ConjugacyClass((pos, neg, "-"), minus, size // 2))
                    else:
                        classes.append(ConjugacyClass((pos, neg, ""), rep, size))
        return self._identity_first(classes)

    def _identity_first(self, classes: List[ConjugacyClass]) -> List[ConjugacyClass]:
        return sorted(classes, key=lambda c: c.representative != self.identity)

    def _negate_first(self, rep: SignedPerm) -> SignedPerm:
        d = tuple([-1] + list(range(2, self.points + 1)))
        return self.multiply(self.multiply(d, rep), d)

    def elements(self) -> Iterator[SignedPerm]:
        self._check_enumerable()
        if self.family == "A":
            for perm in itertools.permutations(range(1, self.points + 1)):
                yield perm
            return
        for perm in itertools.permutations(range(1, self.n + 1)):
            for signs in itertools.product((1, -1), repeat=self.n):
                if self.family == "D" and signs.count(-1) % 2:
                    continue
                yield tuple(s * p for s, p in zip(signs, perm))


class ReflectionMatrixGroup(FiniteCoxeterGroup):
    """Exceptional Weyl groups as integer matrices on simple-root coordinates."""

    def __init__(self, descriptor: CoxeterDescriptor) -> None:
        """Initialize from a standard crystallographic descriptor."""
        super().__init__(descriptor)
        self.cartan = cartan_matrix(descriptor)
        size = descriptor.size
        gens = []
        for i in range(size):
            rows = [[1 if r == c else 0 for c in range(size)] for r in range(size)]
            for c in range(size):
                rows[i][c] -= self.cartan[i][c]
            gens.append(tuple(tuple(row) for row in rows))
        self._generators: Tuple[IntMatrix, ...] = tuple(gens)
        self._roots = [root for root, _ in positive_roots(descriptor)]
        self._lengths: Optional[Dict[IntMatrix, int]] = None
        self._class_index: Optional[Dict[IntMatrix, int]] = None
        self._classes: Optional[List[ConjugacyClass]] = None

    @property
    def enumerable(self) -> bool:
        """True for types enumerated element by element."""
        return self.descriptor.family in ENUMERABLE_EXCEPTIONAL

    @property
    def identity(self) -> IntMatrix:
        size = self.descriptor.size
        return tuple(tuple(1 if r == c else 0 for c in range(size)) for r in range(size))

    @property
    def generators(self) -> Tuple[IntMatrix, ...]:
        return self._generators

    @property
    def order(self) -> int:
        return EXCEPTIONAL_ORDERS[self.descriptor.family]

    def multiply(self, x: IntMatrix, y: IntMatrix) -> IntMatrix:
        size = len(x)
        return tuple(
            tuple(sum(x[r][k] * y[k][c] for k in range(size)) for c in range(size))
            for r in range(size)
        )

    def apply(self, x: IntMatrix, root: Sequence[int]) -> Tuple[int, ...]:
        """Image of a root vector."""
        return tuple(sum(x[r][k] * root[k] for k in range(len(root))) for r in range(len(x)))

    def length(self, x: IntMatrix) -> int:
        if self._lengths is not None and x in self._lengths:
            return self._lengths[x]
        return sum(1 for root in self._roots if sum(self.apply(x, root)) < 0)

    def char_poly(self, x: IntMatrix) -> Poly:
        return Poly(Matrix(x).charpoly(Q).as_expr(), Q)

    def _enumerate(self) -> Dict[IntMatrix, int]:
        if self._lengths is None:
            if not self.enumerable:
                raise UnsupportedComputationError(
                    ERROR_ENUMERATION % self.descriptor.name, "enumeration"
                )
            lengths = {self.identity: 0}
            queue = deque([self.identity])
            while queue:
                current = queue.popleft()
                for gen in self.generators:
                    image = self.multiply(current, gen)
                    if image not in lengths:
                        lengths[image] = lengths[current] + 1
                        queue.append(image)
            if len(lengths) != self.order:
                raise UnsupportedComputationError(
                    f"Enumeration of {self.descriptor.name} gave {len(lengths)} elements",
                    "enumeration",
                )
            _LOGGER.debug("Enumerated %d elements of %s", len(lengths), self.descriptor.name)
            self._lengths = lengths
        return self._lengths

    def elements(self) -> Iterator[IntMatrix]:
        return iter(self._enumerate())

    def conjugacy_classes(self) -> List[ConjugacyClass]:
        if self._classes is None:
            lengths = self._enumerate()
            index: Dict[IntMatrix, int] = {}
            classes: List[ConjugacyClass] = []
            for element in lengths:
                if element in index:
                    continue
                orbit = {element}
                queue = deque([element])
                while queue:
                    current = queue.popleft()
                    for gen in self.generators:
                        image = self.multiply(self.multiply(gen, current), gen)
                        if image not in orbit:
                            orbit.add(image)
                            queue.append(image)
                label = f"c{len(classes)}"
                rep = min(orbit, key=lambda g: (lengths[g], g))
                for member in orbit:
                    index[member] = len(classes)
                classes.append(ConjugacyClass(label, rep, len(orbit)))
            self._class_index = index
            self._classes = classes
            _LOGGER.debug("%s has %d conjugacy classes", self.descriptor.name, len(classes))
        return self._classes

    def class_label(self, x: IntMatrix) -> Hashable:
        self.conjugacy_classes()
        assert self._class_index is not None
        return f"c{self._class_index[x]}"

    def inverse(self, x: IntMatrix) -> IntMatrix:
        current = x
        previous = self.identity
        while current != self.identity:
            previous = current
            current = self.multiply(current, x)
        return previous


class ProductGroup(FiniteCoxeterGroup):
    """Direct product of standard groups with a node map onto the factors."""

    def __init__(
        self,
        descriptor: CoxeterDescriptor,
        factors: Sequence[FiniteCoxeterGroup],
        node_map: Sequence[Tuple[int, int]],
    ) -> None:
        """Initialize; node_map[node] = (factor index, generator index)."""
        super().__init__(descriptor)
        self.factors = tuple(factors)
        self.node_map = tuple(node_map)
        gens = []
        for factor_index, gen_index in self.node_map:
            element = list(self.identity)
            element[factor_index] = self.factors[factor_index].generators[gen_index]
            gens.append(tuple(element))
        self._generators = tuple(gens)

    @property
    def identity(self) -> Tuple[Any, ...]:
        return tuple(f.identity for f in self.factors)

    @property
    def generators(self) -> Tuple[Any, ...]:
        return self._generators

    @property
    def order(self) -> int:
        return math.prod(f.order for f in self.factors)

    def multiply(self, x: Tuple[Any, ...], y: Tuple[Any, ...]) -> Tuple[Any, ...]:
        return tuple(f.multiply(a, b) for f, a, b in zip(self.factors, x, y))

    def inverse(self, x: Tuple[Any, ...]) -> Tuple[Any, ...]:
        return tuple(f.inverse(a) for f, a in zip(self.factors, x))

    def length(self, x: Tuple[Any, ...]) -> int:
        return sum(f.length(a) for f, a in zip(self.factors, x))

    def char_poly(self, x: Tuple[Any, ...]) -> Poly:
        result = Poly(1, Q)
        for f, a in zip(self.factors, x):
            result *= f.char_poly(a)
        return result

    def class_label(self, x: Tuple[Any, ...]) -> Hashable:
        return tuple(f.class_label(a) for f, a in zip(self.factors, x))

    def conjugacy_classes(self) -> List[ConjugacyClass]:
        result = []
        for combo in itertools.product(*(f.conjugacy_classes() for f in self.factors)):
            result.append(
                ConjugacyClass(
                    tuple(c.label for c in combo),
                    tuple(c.representative for c in combo),
                    math.prod(c.size for c in combo),
                )
            )
        return result

    def elements(self) -> Iterator[Tuple[Any, ...]]:
        self._check_enumerable()
        return itertools.product(*(list(f.elements()) for f in self.factors))


def _standard_group(desc: CoxeterDescriptor, lazy: bool) -> FiniteCoxeterGroup:
    if desc.family in CLASSICAL_FAMILIES:
        return SignedPermutationGroup(desc)
    if desc.family in EXCEPTIONAL_FAMILIES:
        if desc.family not in ENUMERABLE_EXCEPTIONAL and not lazy:
            raise UnsupportedComputationError(ERROR_ENUMERATION % desc.name, "enumeration")
        return ReflectionMatrixGroup(desc)
    raise UnsupportedComputationError(f"No group model for {desc.name}", "build_group")


@lru_cache(maxsize=None)
def build_group(desc: CoxeterDescriptor, lazy: bool = False) -> FiniteCoxeterGroup:
    """Return a group handle for a finite descriptor.

    With lazy=True the E-types are allowed as element arithmetic only.
    """
    if desc.is_affine:
        raise DescriptorError(f"{desc.name} is affine; use finite_quotient")
    if desc.is_standard:
        return _standard_group(desc, lazy)
    parabolic = standard_parabolic(desc)
    factors: List[FiniteCoxeterGroup] = []
    node_map: Dict[int, Tuple[int, int]] = {}
    for index, component in enumerate(parabolic.components):
        if component.kind == KIND_AFFINE:
            raise DescriptorError(f"{desc.name} contains an affine component")
        factors.append(build_group(component.descriptor, lazy))
        for k, node in enumerate(component.nodes):
            node_map[node] = (index, k)
    return ProductGroup(desc, factors, [node_map[node] for node in desc.nodes])


def conjugacy_classes(desc: CoxeterDescriptor) -> List[ConjugacyClass]:
    """Conjugacy classes of a finite descriptor."""
    return build_group(desc).conjugacy_classes()


def reflection_char_poly(desc: CoxeterDescriptor, w: Any) -> Poly:
    """Characteristic polynomial det(q - w) on the reflection representation."""
    return build_group(desc, lazy=True).char_poly(w)


def reduced_word(desc: CoxeterDescriptor, w: Any) -> Tuple[int, ...]:
    """A reduced expression for w."""
    return build_group(desc, lazy=True).reduced_word(w)


#
# Finite quotient of an affine group
#
@dataclass(frozen=True)
class FiniteQuotient:
    """The finite quotient W/T with the images of all affine generators."""

    affine: CoxeterDescriptor
    descriptor: CoxeterDescriptor
    group: FiniteCoxeterGroup
    images: Tuple[Any, ...]

    def word_image(self, word: Sequence[int]) -> Any:
        """Image of a word in the affine generators."""
        result = self.group.identity
        for node in word:
            result = self.group.multiply(result, self.images[node])
        return result


def _highest_root_reflection(group: ReflectionMatrixGroup, family: str) -> IntMatrix:
    theta = EXCEPTIONAL_HIGHEST_ROOT[family]
    scale = EXCEPTIONAL_ROOT_SCALE[family]
    size = len(theta)
    form = [[scale[i] * group.cartan[i][j] for j in range(size)] for i in range(size)]
    theta_norm = sum(theta[i] * form[i][j] * theta[j] for i in range(size) for j in range(size))
    columns = []
    for j in range(size):
        pairing = 2 * sum(form[j][i] * theta[i] for i in range(size))
        if pairing % theta_norm:
            raise UnsupportedComputationError(f"Non-integral coroot pairing in {family}", "quotient")
        coeff = pairing // theta_norm
        columns.append([(1 if r == j else 0) - coeff * theta[r] for r in range(size)])
    return tuple(tuple(columns[c][r] for c in range(size)) for r in range(size))


@lru_cache(maxsize=None)
def finite_quotient(desc: CoxeterDescriptor) -> FiniteQuotient:
    """Return W-bar for a standard affine descriptor with generator images."""
    if not (desc.is_affine and desc.is_standard):
        raise DescriptorError(f"{desc.name} is not a standard affine type")
    finite = finite_type(desc.family, desc.rank)
    group = build_group(finite, lazy=True)
    n = desc.rank
    if isinstance(group, SignedPermutationGroup):
        w = list(group.identity)
        if desc.family == "A":
            w[0], w[n] = n + 1, 1
        elif desc.family == "C":
            w[0] = -1
        else:
            w[0], w[1] = -2, -1
        image0: Any = tuple(w)
    else:
        assert isinstance(group, ReflectionMatrixGroup)
        image0 = _highest_root_reflection(group, desc.family)
    images = (image0,) + tuple(group.generators)
    return FiniteQuotient(desc, finite, group, images)


def is_inner_on_quotient(
    desc: CoxeterDescriptor, omega: DiagramAutomorphism
) -> Optional[Any]:
    """Return x in W-bar with x s_i x^-1 = s_omega(i) for all affine nodes."""
    quotient = finite_quotient(desc)
    group = quotient.group
    for x in group.elements():
        x_inv = group.inverse(x)
        if all(
            group.multiply(group.multiply(x, quotient.images[i]), x_inv)
            == quotient.images[omega(i)]
            for i in desc.nodes
        ):
            return x
    return None
