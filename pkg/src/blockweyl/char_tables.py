"""Character tables of finite Weyl groups and their fusion machinery.

This module provides:
1. Irreducible labels and exact integer character tables
2. Murnaghan-Nakayama rules for types A and B, Clifford splitting for type D
3. G2 from packaged data and F4 from class-sum eigenvectors
4. Class fusion, restriction and induction for reflection subgroups
5. Symmetric powers of the reflection character and the b-invariant
"""
from __future__ import annotations

import json
import logging
import random
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from importlib import resources
from typing import Any, Dict, Hashable, Iterator, List, Mapping, Optional, Sequence, Tuple

from sympy import Matrix, Rational, Symbol, factor_list, sqrt

from .const import (
    DATA_G2_TABLE,
    DEFAULT_SYM_BOUND,
    ERROR_BAD_DATA,
    ERROR_EMBEDDING,
    ERROR_NO_TABLE,
    ERROR_ORTHOGONALITY,
    ERROR_SYM_BOUND,
    FAMILY_TRIVIAL,
)
from .coxeter_core import (
    ConjugacyClass,
    CoxeterDescriptor,
    FiniteCoxeterGroup,
    ReflectionMatrixGroup,
    SignedPermutationGroup,
    build_group,
    finite_quotient,
    product_type,
    standard_parabolic,
)
from .exceptions import DescriptorError, InvariantViolationError, UnsupportedComputationError

_LOGGER = logging.getLogger(__name__)

Partition = Tuple[int, ...]

VARIANT_PARTITION = "partition"
VARIANT_BIPARTITION = "bipartition"
VARIANT_D_PAIR = "dpair"
VARIANT_NAME = "name"
VARIANT_PRODUCT = "product"

_F4_EIGEN_ATTEMPTS = 12


#
# Labels
#
@dataclass(frozen=True)
class IrrLabel:
    """Label of an irreducible character.

    value is a partition (type A), a pair of partitions (type B/C),
    a triple (alpha, beta, sign) with alpha <= beta (type D, sign '' unless
    alpha == beta), a name (exceptional) or a tuple of labels (products).
    """

    variant: str
    value: Hashable

    @property
    def factors(self) -> Tuple["IrrLabel", ...]:
        """Component labels of a product label."""
        if self.variant == VARIANT_PRODUCT:
            return tuple(self.value)  # type: ignore[arg-type]
        return (self,)

    def __str__(self) -> str:
        if self.variant == VARIANT_PARTITION:
            return _fmt(self.value)  # type: ignore[arg-type]
        if self.variant == VARIANT_BIPARTITION:
            alpha, beta = self.value  # type: ignore[misc]
            return f"({_fmt(alpha)},{_fmt(beta)})"
        if self.variant == VARIANT_D_PAIR:
            alpha, beta, sign = self.value  # type: ignore[misc]
            if sign:
                return f"({_fmt(alpha)},{_fmt(beta)},{sign})"
            return f"{{{_fmt(alpha)},{_fmt(beta)}}}"
        if self.variant == VARIANT_PRODUCT:
            parts = self.factors
            return "1" if not parts else "⊠".join(str(p) for p in parts)
        return str(self.value)


def _fmt(partition: Sequence[int]) -> str:
    return "[" + ",".join(str(p) for p in partition) + "]"


def partition_label(partition: Sequence[int]) -> IrrLabel:
    """Label of a type A irreducible."""
    return IrrLabel(VARIANT_PARTITION, tuple(partition))


def bipartition_label(alpha: Sequence[int], beta: Sequence[int]) -> IrrLabel:
    """Label of a type B/C irreducible."""
    return IrrLabel(VARIANT_BIPARTITION, (tuple(alpha), tuple(beta)))


def d_label(alpha: Sequence[int], beta: Sequence[int], sign: str = "") -> IrrLabel:
    """Canonical label of a type D irreducible."""
    a, b = tuple(alpha), tuple(beta)
    if a == b and sign not in ("+", "-"):
        raise DescriptorError(f"Degenerate D label {a} needs a sign")
    if a != b:
        sign = ""
    return IrrLabel(VARIANT_D_PAIR, (min(a, b), max(a, b), sign))


def named_label(name: str) -> IrrLabel:
    """Label of an exceptional irreducible."""
    return IrrLabel(VARIANT_NAME, name)


def product_label(parts: Sequence[IrrLabel]) -> IrrLabel:
    """Label of an outer tensor product."""
    return IrrLabel(VARIANT_PRODUCT, tuple(parts))


def partitions(n: int, largest: Optional[int] = None) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def transpose(partition: Sequence[int]) -> Partition:
    """Conjugate partition."""
    if not partition:
        return ()
    return tuple(sum(1 for p in partition if p > i) for i in range(partition[0]))


#
# Character tables
#
@dataclass(frozen=True)
class CharacterTable:
    """Exact character table; values[i][k] is the value of irreducible i on class k."""

    descriptor: CoxeterDescriptor
    classes: Tuple[ConjugacyClass, ...]
    labels: Tuple[IrrLabel, ...]
    values: Tuple[Tuple[int, ...], ...]
    _class_index: Dict[Hashable, int] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self) -> None:
        """Index the class labels."""
        self._class_index.update({c.label: k for k, c in enumerate(self.classes)})

    @property
    def order(self) -> int:
        """Group order."""
        return sum(c.size for c in self.classes)

    @cached_property
    def label_index(self) -> Dict[IrrLabel, int]:
        """Row index of each label."""
        return {label: i for i, label in enumerate(self.labels)}

    def class_index(self, class_label: Hashable) -> int:
        """Column index of a class label."""
        try:
            return self._class_index[class_label]
        except KeyError as err:
            raise DescriptorError(
                f"Unknown class {class_label!r} of {self.descriptor.name}"
            ) from err

    def row(self, label: IrrLabel) -> Tuple[int, ...]:
        """Character values of an irreducible."""
        try:
            return self.values[self.label_index[label]]
        except KeyError as err:
            raise DescriptorError(
                f"{label} is not an irreducible of {self.descriptor.name}"
            ) from err

    def dimension(self, label: IrrLabel) -> int:
        """Degree of an irreducible."""
        return self.row(label)[self.class_index(self.classes[0].label)]

    @property
    def dimensions(self) -> List[int]:
        """Degrees in label order."""
        return [row[0] for row in self.values]

    @property
    def trivial(self) -> IrrLabel:
        """The trivial character."""
        for label, row in zip(self.labels, self.values):
            if all(v == 1 for v in row):
                return label
        raise InvariantViolationError(ERROR_NO_TABLE % self.descriptor.name)

    @property
    def sign(self) -> IrrLabel:
        """The sign character."""
        group = build_group(self.descriptor)
        target = tuple((-1) ** group.length(c.representative) for c in self.classes)
        for label, row in zip(self.labels, self.values):
            if row == target:
                return label
        raise InvariantViolationError(ERROR_NO_TABLE % self.descriptor.name)

    def inner_product(self, f: Sequence[Any], g: Sequence[Any]) -> Any:
        """(1/|W|) sum over classes of |c| f(c) g(c) for real class functions."""
        total = sum(c.size * a * b for c, a, b in zip(self.classes, f, g))
        return Rational(total, self.order)

    def decompose(self, values: Sequence[Any]) -> Dict[IrrLabel, int]:
        """Multiplicities of the irreducibles in a class function."""
        result: Dict[IrrLabel, int] = {}
        for label, row in zip(self.labels, self.values):
            mult = self.inner_product(row, values)
            if mult != int(mult):
                raise InvariantViolationError(
                    f"Non-integral multiplicity {mult} of {label} in {self.descriptor.name}"
                )
            if mult:
                result[label] = int(mult)
        return result

    def tensor(self, a: IrrLabel, b: IrrLabel) -> Dict[IrrLabel, int]:
        """Decomposition of an inner tensor product."""
        return self.decompose([x * y for x, y in zip(self.row(a), self.row(b))])

    def check_orthogonality(self) -> None:
        """Raise InvariantViolationError unless both orthogonality relations hold."""
        order = self.order
        if len(self.labels) != len(self.classes) or any(d <= 0 for d in self.dimensions):
            raise InvariantViolationError(ERROR_ORTHOGONALITY % self.descriptor.name)
        for i, row in enumerate(self.values):
            for j in range(i, len(self.values)):
                total = sum(c.size * x * y for c, x, y in zip(self.classes, row, self.values[j]))
                if total != (order if i == j else 0):
                    raise InvariantViolationError(ERROR_ORTHOGONALITY % self.descriptor.name)
        for k, cls in enumerate(self.classes):
            column = sum(row[k] * row[k] for row in self.values)
            if column * cls.size != order:
                raise InvariantViolationError(ERROR_ORTHOGONALITY % self.descriptor.name)

    def to_json(self) -> Dict[str, Any]:
        """Serializable form with stringified integers."""
        return {
            "descriptor": self.descriptor.name,
            "classes": [
                {"label": str(c.label), "size": str(c.size)} for c in self.classes
            ],
            "irreducibles": [str(label) for label in self.labels],
            "values": [[str(v) for v in row] for row in self.values],
        }


def _beta_set(partition: Sequence[int], length: int) -> Tuple[int, ...]:
    padded = list(partition) + [0] * (length - len(partition))
    return tuple(sorted(p + length - 1 - i for i, p in enumerate(padded)))


def _rim_hooks(beta: Tuple[int, ...], size: int) -> Iterator[Tuple[Tuple[int, ...], int]]:
    beads = set(beta)
    for x in beta:
        y = x - size
        if y < 0 or y in beads:
            continue
        height = sum(1 for z in beta if y < z < x)
        yield tuple(sorted((beads - {x}) | {y})), -1 if height % 2 else 1


@lru_cache(maxsize=None)
def _mn_a(beta: Tuple[int, ...], cycles: Tuple[int, ...]) -> int:
    if not cycles:
        return 1
    total = 0
    for new, sign in _rim_hooks(beta, cycles[0]):
        total += sign * _mn_a(new, cycles[1:])
    return total


def symmetric_character(partition: Sequence[int], cycle_type: Sequence[int]) -> int:
    """Murnaghan-Nakayama value of chi^partition on a cycle type."""
    if sum(partition) != sum(cycle_type):
        raise DescriptorError(f"Size mismatch between {partition} and {cycle_type}")
    length = max(len(partition), 1)
    return _mn_a(_beta_set(partition, length), tuple(sorted(cycle_type, reverse=True)))


@lru_cache(maxsize=None)
def _mn_b(
    beta_a: Tuple[int, ...], beta_b: Tuple[int, ...], cycles: Tuple[Tuple[int, int], ...]
) -> int:
    if not cycles:
        return 1
    size, cycle_sign = cycles[0]
    rest = cycles[1:]
    total = 0
    for new, sign in _rim_hooks(beta_a, size):
        total += sign * _mn_b(new, beta_b, rest)
    for new, sign in _rim_hooks(beta_b, size):
        total += cycle_sign * sign * _mn_b(beta_a, new, rest)
    return total


def hyperoctahedral_character(
    alpha: Sequence[int],
    beta: Sequence[int],
    positive: Sequence[int],
    negative: Sequence[int],
) -> int:
    """Value of chi^(alpha,beta) of W(B_n) on a signed cycle type."""
    cycles = sorted(
        [(p, 1) for p in positive] + [(p, -1) for p in negative], reverse=True
    )
    return _mn_b(
        _beta_set(alpha, max(len(alpha), 1)),
        _beta_set(beta, max(len(beta), 1)),
        tuple(cycles),
    )


def _table_a(desc: CoxeterDescriptor, group: SignedPermutationGroup) -> CharacterTable:
    classes = tuple(group.conjugacy_classes())
    labels = tuple(partition_label(lam) for lam in partitions(group.points))
    values = tuple(
        tuple(symmetric_character(label.value, c.label) for c in classes)  # type: ignore[arg-type]
        for label in labels
    )
    return CharacterTable(desc, classes, labels, values)


def _bipartitions(n: int) -> Iterator[Tuple[Partition, Partition]]:
    for k in range(n, -1, -1):
        for alpha in partitions(k):
            for beta in partitions(n - k):
                yield alpha, beta


def _table_b(desc: CoxeterDescriptor, group: SignedPermutationGroup) -> CharacterTable:
    classes = tuple(group.conjugacy_classes())
    labels = tuple(bipartition_label(a, b) for a, b in _bipartitions(group.n))
    values = tuple(
        tuple(
            hyperoctahedral_character(*label.value, *c.label)  # type: ignore[misc]
            for c in classes
        )
        for label in labels
    )
    return CharacterTable(desc, classes, labels, values)


def _d_value(alpha: Partition, beta: Partition, sign: str, cls: ConjugacyClass) -> int:
    positive, negative, class_sign = cls.label  # type: ignore[misc]
    value = hyperoctahedral_character(alpha, beta, positive, negative)
    if alpha != beta:
        return value
    if not class_sign:
        return value // 2
    halves = [p // 2 for p in positive]
    difference = 2 ** len(halves) * symmetric_character(alpha, halves)
    if (sign == "+") != (class_sign == "+"):
        difference = -difference
    total = value + difference
    if total % 2:
        raise InvariantViolationError(f"Odd split value for ({alpha},{alpha},{sign})")
    return total // 2


def _table_d(desc: CoxeterDescriptor, group: SignedPermutationGroup) -> CharacterTable:
    classes = tuple(group.conjugacy_classes())
    labels: List[IrrLabel] = []
    for alpha, beta in _bipartitions(group.n):
        if alpha < beta:
            labels.append(d_label(alpha, beta))
        elif alpha == beta:
            labels.append(d_label(alpha, beta, "+"))
            labels.append(d_label(alpha, beta, "-"))
    labels.sort(key=lambda label: _d_sort_key(label, group.n))
    values = tuple(
        tuple(_d_value(*label.value, c) for c in classes)  # type: ignore[misc]
        for label in labels
    )
    return CharacterTable(desc, classes, tuple(labels), values)


def _d_sort_key(label: IrrLabel, n: int) -> Tuple[int, Any]:
    alpha, beta, sign = label.value  # type: ignore[misc]
    big, small = (beta, alpha) if sum(beta) >= sum(alpha) else (alpha, beta)
    return (n - sum(big), tuple(-p for p in big), tuple(-p for p in small), sign)


def _data_text(name: str) -> str:
    return resources.files("blockweyl").joinpath("data", name).read_text(encoding="utf-8")


def _table_g2(desc: CoxeterDescriptor, group: FiniteCoxeterGroup) -> CharacterTable:
    try:
        data = json.loads(_data_text(DATA_G2_TABLE))
        class_rows = data["classes"]
        characters = data["characters"]
    except (OSError, json.JSONDecodeError, KeyError) as err:
        raise InvariantViolationError(ERROR_BAD_DATA % (DATA_G2_TABLE, err)) from err
    group_classes = {c.label: c for c in group.conjugacy_classes()}
    classes: List[ConjugacyClass] = []
    for row in class_rows:
        label = group.class_label(group.word_to_element(row["word"]))
        found = group_classes[label]
        if found.size != row["size"]:
            raise InvariantViolationError(
                ERROR_BAD_DATA % (DATA_G2_TABLE, f"class {row['name']} has size {found.size}")
            )
        classes.append(found)
    if len({c.label for c in classes}) != len(group_classes):
        raise InvariantViolationError(ERROR_BAD_DATA % (DATA_G2_TABLE, "classes incomplete"))
    labels = tuple(named_label(row["label"]) for row in characters)
    values = tuple(tuple(int(v) for v in row["values"]) for row in characters)
    return CharacterTable(desc, tuple(classes), labels, values)


def _class_algebra(group: ReflectionMatrixGroup) -> List[List[List[int]]]:
    classes = group.conjugacy_classes()
    count = len(classes)
    index = {c.label: k for k, c in enumerate(classes)}
    reps = [c.representative for c in classes]
    hits = [[[0] * count for _ in range(count)] for _ in range(count)]
    for x in group.elements():
        j = index[group.class_label(x)]
        for i, z in enumerate(reps):
            hits[j][i][index[group.class_label(group.multiply(x, z))]] += 1
    structure = [[[0] * count for _ in range(count)] for _ in range(count)]
    for j in range(count):
        for i in range(count):
            for k in range(count):
                numerator = classes[i].size * hits[j][i][k]
                if numerator % classes[k].size:
                    raise InvariantViolationError(
                        f"Non-integral class multiplication constant in {group.descriptor.name}"
                    )
                structure[j][i][k] = numerator // classes[k].size
    return structure


def _central_characters(
    structure: List[List[List[int]]], count: int
) -> List[List[Rational]]:
    x = Symbol("x")
    for attempt in range(_F4_EIGEN_ATTEMPTS):
        rng = random.Random(attempt)
        coefficients = [rng.randint(1, 9) for _ in range(count)]
        combined = Matrix(
            count,
            count,
            lambda i, k: sum(c * structure[j][i][k] for j, c in enumerate(coefficients)),
        )
        _, factors = factor_list(combined.charpoly(x).as_expr(), x)
        roots = []
        for poly, _mult in factors:
            coeffs = poly.as_poly(x).all_coeffs()
            if len(coeffs) != 2:
                raise InvariantViolationError("Non-rational central character")
            roots.append(Rational(-coeffs[1], coeffs[0]))
        vectors: List[List[Rational]] = []
        for root in roots:
            space = (combined - root * Matrix.eye(count)).nullspace()
            if len(space) != 1:
                break
            vector = space[0]
            vectors.append([vector[k] / vector[0] for k in range(count)])
        if len(vectors) == count:
            _LOGGER.debug("Class-sum eigenvectors separated at attempt %d", attempt)
            return vectors
        _LOGGER.debug("Eigenspaces not separated at attempt %d; retrying", attempt)
    raise InvariantViolationError("Class-sum eigenvectors could not be separated")


def _f4_characters(group: ReflectionMatrixGroup) -> List[Tuple[int, ...]]:
    classes = group.conjugacy_classes()
    count = len(classes)
    rows = []
    for omega in _central_characters(_class_algebra(group), count):
        norm = sum(w * w / c.size for w, c in zip(omega, classes))
        degree = sqrt(Rational(group.order) / norm)
        values = [w * degree / c.size for w, c in zip(omega, classes)]
        if any(not v.is_integer for v in values):
            raise InvariantViolationError("Non-integral F4 character value")
        rows.append(tuple(int(v) for v in values))
    return rows


def _table_f4(desc: CoxeterDescriptor, group: ReflectionMatrixGroup) -> CharacterTable:
    classes = tuple(group.conjugacy_classes())
    rows = _f4_characters(group)
    long_class = group.class_label(group.generators[0])
    short_class = group.class_label(group.generators[2])
    index = {c.label: k for k, c in enumerate(classes)}
    provisional = CharacterTable(
        desc, classes, tuple(named_label(f"#{i}") for i in range(len(rows))), tuple(rows)
    )
    keyed: Dict[Tuple[int, int], List[Tuple[int, ...]]] = {}
    for row in rows:
        b = _first_sym_degree(provisional, row, DEFAULT_SYM_BOUND)
        keyed.setdefault((row[0], b), []).append(row)
    named: List[Tuple[Tuple[int, int, str], Tuple[int, ...]]] = []
    for (dim, b), members in keyed.items():
        if len(members) == 1:
            named.append(((b, dim, ""), members[0]))
            continue
        if len(members) != 2:
            raise InvariantViolationError(f"Unexpected F4 degree collision at phi{dim},{b}")
        members.sort(
            key=lambda r: (r[index[long_class]], r[index[short_class]]), reverse=True
        )
        if members[0][index[long_class]] == members[1][index[long_class]]:
            members.sort(key=lambda r: r[index[short_class]])
        named.append(((b, dim, "'"), members[0]))
        named.append(((b, dim, "''"), members[1]))
    named.sort(key=lambda item: item[0])
    labels = tuple(named_label(f"phi{dim},{b}{mark}") for (b, dim, mark), _ in named)
    _LOGGER.info("Computed F4 character table with %d irreducibles", len(labels))
    return CharacterTable(desc, classes, labels, tuple(row for _, row in named))


def _product_table(desc: CoxeterDescriptor, tables: Sequence[CharacterTable]) -> CharacterTable:
    group = build_group(desc)
    classes = tuple(group.conjugacy_classes())
    labels: List[IrrLabel] = []
    values: List[Tuple[int, ...]] = []
    factor_rows = [list(zip(t.labels, t.values)) for t in tables]
    for combo in _product(factor_rows):
        labels.append(product_label([label for label, _ in combo]))
        row = []
        for cls in classes:
            value = 1
            for (table, (_, factor_row), part) in zip(tables, combo, cls.label):  # type: ignore[arg-type]
                value *= factor_row[table.class_index(part)]
            row.append(value)
        values.append(tuple(row))
    return CharacterTable(desc, classes, tuple(labels), tuple(values))


def _product(rows: Sequence[Sequence[Any]]) -> Iterator[Tuple[Any, ...]]:
    if not rows:
        yield ()
        return
    for head in rows[0]:
        for tail in _product(rows[1:]):
            yield (head,) + tail


@lru_cache(maxsize=None)
def character_table(desc: CoxeterDescriptor) -> CharacterTable:
    """Return the exact character table of a finite Weyl group.

    Raises:
        UnsupportedComputationError: for E6, E7 and E8 components.
    """
    if desc.is_affine:
        raise DescriptorError(f"{desc.name} is not finite")
    if desc.family == FAMILY_TRIVIAL:
        group = build_group(desc)
        classes = tuple(group.conjugacy_classes())
        return CharacterTable(desc, classes, (product_label([]),), ((1,),))
    if not desc.is_standard:
        parabolic = standard_parabolic(desc)
        tables = [character_table(c.descriptor) for c in parabolic.components]
        table = _product_table(desc, tables)
    else:
        if desc.family in ("E6", "E7", "E8"):
            raise UnsupportedComputationError(ERROR_NO_TABLE % desc.name, "character_table")
        group = build_group(desc)
        if desc.family == "A":
            table = _table_a(desc, group)  # type: ignore[arg-type]
        elif desc.family in ("B", "C"):
            table = _table_b(desc, group)  # type: ignore[arg-type]
        elif desc.family == "D":
            table = _table_d(desc, group)  # type: ignore[arg-type]
        elif desc.family == "G2":
            table = _table_g2(desc, group)
        elif desc.family == "F4":
            table = _table_f4(desc, group)  # type: ignore[arg-type]
        else:
            raise UnsupportedComputationError(ERROR_NO_TABLE % desc.name, "character_table")
    table.check_orthogonality()
    _LOGGER.debug(
        "Character table of %s: %d classes, order %d", desc.name, len(table.classes), table.order
    )
    return table


#
# Embeddings and fusion
#
@dataclass(frozen=True)
class SubgroupEmbedding:
    """A reflection subgroup given by the images of its simple reflections."""

    sub: CoxeterDescriptor
    big: CoxeterDescriptor
    images: Tuple[Any, ...]

    @cached_property
    def fusion(self) -> Dict[Hashable, Hashable]:
        """Map from subgroup class labels to big-group class labels."""
        sub_group = build_group(self.sub)
        big_group = build_group(self.big)
        result: Dict[Hashable, Hashable] = {}
        for cls in sub_group.conjugacy_classes():
            element = big_group.identity
            for node in sub_group.reduced_word(cls.representative):
                element = big_group.multiply(element, self.images[node])
            result[cls.label] = big_group.class_label(element)
        return result

    def check_relations(self) -> None:
        """Verify the Coxeter relations of the images."""
        group = build_group(self.big)
        for node, image in enumerate(self.images):
            if image == group.identity or group.multiply(image, image) != group.identity:
                raise DescriptorError(ERROR_EMBEDDING % (self.sub.name, self.big.name))
            for other in range(node + 1, len(self.images)):
                m = self.sub.bond(node, other)
                product = group.multiply(image, self.images[other])
                power = group.identity
                for _ in range(m):
                    power = group.multiply(power, product)
                if power != group.identity:
                    raise DescriptorError(ERROR_EMBEDDING % (self.sub.name, self.big.name))


def parabolic_embedding(big: CoxeterDescriptor, nodes: Sequence[int]) -> SubgroupEmbedding:
    """The standard parabolic subgroup on a node subset."""
    parabolic = standard_parabolic(big, nodes)
    group = build_group(big)
    by_position = {pos: node for node, pos in parabolic.node_map}
    images = tuple(group.generators[by_position[k]] for k in range(parabolic.descriptor.size))
    return SubgroupEmbedding(parabolic.descriptor, big, images)


def quotient_embedding(affine: CoxeterDescriptor, nodes: Sequence[int]) -> SubgroupEmbedding:
    """The image in the finite quotient of a finite parabolic of an affine group."""
    parabolic = standard_parabolic(affine, nodes)
    quotient = finite_quotient(affine)
    by_position = {pos: node for node, pos in parabolic.node_map}
    images = tuple(
        quotient.images[by_position[k]] for k in range(parabolic.descriptor.size)
    )
    embedding = SubgroupEmbedding(parabolic.descriptor, quotient.descriptor, images)
    return embedding


def reflection_embedding(
    sub: CoxeterDescriptor, big: CoxeterDescriptor, images: Sequence[Any]
) -> SubgroupEmbedding:
    """An explicit generator-to-element embedding, checked for the Coxeter relations."""
    if len(images) != sub.size:
        raise DescriptorError(ERROR_EMBEDDING % (sub.name, big.name))
    embedding = SubgroupEmbedding(sub, big, tuple(images))
    embedding.check_relations()
    return embedding


def combinatorial_fusion(big: CoxeterDescriptor, nodes: Sequence[int]) -> Dict[Hashable, Hashable]:
    """Fusion of a standard parabolic of A_n or B_n by concatenating cycle types.

    Keys are class labels of parabolic_embedding(big, nodes).sub.
    """
    if not big.is_standard or big.is_affine or big.family not in ("A", "B", "C"):
        raise UnsupportedComputationError(ERROR_EMBEDDING % (list(nodes), big.name))
    parabolic = standard_parabolic(big, nodes)
    sub_group = build_group(parabolic.descriptor)
    components = parabolic.components
    points = big.rank + 1 if big.family == "A" else big.rank
    end = big.rank - 1
    result: Dict[Hashable, Hashable] = {}
    for cls in sub_group.conjugacy_classes():
        labels = cls.label if len(components) != 1 else (cls.label,)
        positive: List[int] = []
        negative: List[int] = []
        used = 0
        for comp, label in zip(components, labels):  # type: ignore[arg-type]
            if big.family == "A" or end not in comp.nodes:
                positive.extend(label)
                used += len(comp.nodes) + 1
            elif comp.family == "A":
                # the lone negation node
                (positive if label == (1, 1) else negative).append(1)
                used += 1
            else:
                positive.extend(label[0])
                negative.extend(label[1])
                used += len(comp.nodes)
        positive.extend([1] * (points - used))
        pos = tuple(sorted(positive, reverse=True))
        neg = tuple(sorted(negative, reverse=True))
        result[cls.label] = pos if big.family == "A" else (pos, neg)
    return result


def _fused_values(
    embedding: SubgroupEmbedding, big_table: CharacterTable, label: IrrLabel
) -> List[int]:
    row = big_table.row(label)
    sub_table = character_table(embedding.sub)
    fusion = embedding.fusion
    return [row[big_table.class_index(fusion[c.label])] for c in sub_table.classes]


def restriction_multiplicities(
    embedding: SubgroupEmbedding, label: IrrLabel
) -> Dict[IrrLabel, int]:
    """Decompose the restriction of a big-group irreducible."""
    sub_table = character_table(embedding.sub)
    big_table = character_table(embedding.big)
    return sub_table.decompose(_fused_values(embedding, big_table, label))


def induction_multiplicities(
    embedding: SubgroupEmbedding, label: IrrLabel
) -> Dict[IrrLabel, int]:
    """Decompose the induction of a subgroup irreducible (Frobenius reciprocity)."""
    sub_table = character_table(embedding.sub)
    big_table = character_table(embedding.big)
    sub_row = sub_table.row(label)
    result: Dict[IrrLabel, int] = {}
    for big_label in big_table.labels:
        mult = sub_table.inner_product(sub_row, _fused_values(embedding, big_table, big_label))
        if mult:
            result[big_label] = int(mult)
    return result


def induce_character(
    embedding: SubgroupEmbedding, parts: Mapping[IrrLabel, int]
) -> Dict[IrrLabel, int]:
    """Induce a sum of subgroup irreducibles."""
    total: Dict[IrrLabel, int] = {}
    for label, mult in parts.items():
        for big_label, big_mult in induction_multiplicities(embedding, label).items():
            total[big_label] = total.get(big_label, 0) + mult * big_mult
    return total


#
# Symmetric powers
#
@lru_cache(maxsize=None)
def _sym_series(desc: CoxeterDescriptor, bound: int) -> Dict[Hashable, Tuple[int, ...]]:
    """Per class label, the characters of Sym^N of the reflection rep, N <= bound."""
    group = build_group(desc)
    series: Dict[Hashable, Tuple[int, ...]] = {}
    for cls in group.conjugacy_classes():
        coeffs = group.char_poly(cls.representative).all_coeffs()
        rank = len(coeffs) - 1
        # det(1 - t w) has coefficient coeffs[k] at t^k
        h = [1]
        for n in range(1, bound + 1):
            h.append(-sum(int(coeffs[k]) * h[n - k] for k in range(1, min(n, rank) + 1)))
        series[cls.label] = tuple(h)
    return series


def sym_power_reflection_multiplicity(
    desc: CoxeterDescriptor, label: IrrLabel, n: int, bound: int = DEFAULT_SYM_BOUND
) -> int:
    """Multiplicity of an irreducible in the n-th symmetric power of the reflection rep."""
    if n < 0 or n > bound:
        raise DescriptorError(ERROR_SYM_BOUND % (bound, label))
    table = character_table(desc)
    series = _sym_series(desc, bound)
    values = [series[c.label][n] for c in table.classes]
    return int(table.inner_product(table.row(label), values))


def _first_sym_degree(table: CharacterTable, row: Sequence[int], bound: int) -> int:
    series = _sym_series(table.descriptor, bound)
    for n in range(bound + 1):
        if table.inner_product(row, [series[c.label][n] for c in table.classes]):
            return n
    raise InvariantViolationError(ERROR_SYM_BOUND % (bound, row[0]))


def b_invariant(desc: CoxeterDescriptor, label: IrrLabel, bound: int = DEFAULT_SYM_BOUND) -> int:
    """Smallest n with the irreducible in the n-th symmetric power."""
    table = character_table(desc)
    return _first_sym_degree(table, table.row(label), bound)


def outer_tensor(parts: Sequence[IrrLabel]) -> IrrLabel:
    """Outer tensor product label, flattening nested products."""
    flat: List[IrrLabel] = []
    for part in parts:
        flat.extend(part.factors)
    return flat[0] if len(flat) == 1 else product_label(flat)


def labels_of(desc: CoxeterDescriptor) -> Tuple[IrrLabel, ...]:
    """Irreducible labels of a finite descriptor."""
    return character_table(desc).labels


def product_descriptor(parts: Sequence[CoxeterDescriptor]) -> CoxeterDescriptor:
    """Product descriptor matching the factor order of product labels."""
    return product_type(parts)
