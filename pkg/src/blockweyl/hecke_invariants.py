"""Degree invariants of Iwahori-Hecke algebras with unequal parameters.

This module provides:
1. Weight functions on Coxeter diagrams
2. Generic degrees from the tabulated expressions and from symbols
3. The a-invariant by tables, two-parameter symbols, scaling and additivity
4. The z-invariant, special representations and the sharp E0
5. Families and truncated (j-)induction
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from sympy import Expr, Integer, Poly, Rational, Symbol, cancel, fraction, sympify, together

from .config import load_weighted_f4
from .const import (
    D_TABLE_EXPRESSIONS,
    DEFAULT_G2_TABLE,
    DEFAULT_SYM_BOUND,
    ERROR_BAD_WEIGHTS,
    ERROR_J_UNIQUENESS,
    ERROR_NO_ROUTE,
    EXCEPTIONAL_E0,
    EXCEPTIONAL_SHARP,
    F4_A_VALUES,
    F4_FAMILIES,
    FAMILY_TRIVIAL,
    G2_CORRECTED_ROWS,
    G2_FAMILIES,
    G2_LABELS,
    G2_TABLE_CORRECTED,
    G2_TABLE_PRINTED,
    G2_TABLE_VARIANTS,
    PROVENANCE_PRODUCT,
    PROVENANCE_SYMBOL,
    PROVENANCE_TABLE,
)
from .coxeter_core import (
    Q,
    CoxeterDescriptor,
    DiagramAutomorphism,
    build_group,
    finite_type,
    node_classes,
    op_automorphism,
    standard_parabolic,
)
from .char_tables import (
    IrrLabel,
    SubgroupEmbedding,
    VARIANT_BIPARTITION,
    VARIANT_D_PAIR,
    bipartition_label,
    character_table,
    d_label,
    induction_multiplicities,
    named_label,
    parabolic_embedding,
    partition_label,
    partitions,
    product_label,
    sym_power_reflection_multiplicity,
    b_invariant,
    transpose,
)
from .exceptions import DescriptorError, InvariantViolationError, UnsupportedComputationError

_LOGGER = logging.getLogger(__name__)

V = Symbol("v")
_Y = Symbol("y")
_S = Symbol("s")

_F4_LABEL_RE = re.compile(r"^phi(\d+),(\d+)")

# Weighted F4 a-values keyed by (label, weights)
_WEIGHTED_F4: Dict[Tuple[str, Tuple[int, ...]], int] = {}

Partition = Tuple[int, ...]


#
# Weight functions
#
@dataclass(frozen=True)
class WeightFunction:
    """Positive integer weights on the nodes of a diagram.

    Nodes joined by an odd bond carry equal weights.
    """

    descriptor: CoxeterDescriptor
    weights: Tuple[int, ...]

    def __post_init__(self) -> None:
        """Validate the weights against the diagram."""
        if len(self.weights) != self.descriptor.size or any(
            not isinstance(w, int) or w <= 0 for w in self.weights
        ):
            raise DescriptorError(ERROR_BAD_WEIGHTS % (list(self.weights), self.descriptor.name))
        for cls in node_classes(self.descriptor):
            if len({self.weights[node] for node in cls}) > 1:
                raise DescriptorError(
                    ERROR_BAD_WEIGHTS % (list(self.weights), self.descriptor.name)
                )

    @classmethod
    def equal(cls, desc: CoxeterDescriptor, k: int = 1) -> "WeightFunction":
        """Return the weight function k times length."""
        return cls(desc, (k,) * desc.size)

    def __getitem__(self, node: int) -> int:
        return self.weights[node]

    @property
    def constant(self) -> Optional[int]:
        """The common weight, or None when the weights differ."""
        values = set(self.weights)
        if len(values) == 1:
            return values.pop()
        return 1 if not values else None

    def scaled(self, k: int) -> "WeightFunction":
        """Multiply every weight by k."""
        return WeightFunction(self.descriptor, tuple(k * w for w in self.weights))

    def restrict(self, nodes: Sequence[int]) -> "WeightFunction":
        """Weights on the standard product type of a node subset."""
        parabolic = standard_parabolic(self.descriptor, nodes)
        weights = [0] * parabolic.descriptor.size
        for node, pos in parabolic.node_map:
            weights[pos] = self.weights[node]
        return WeightFunction(parabolic.descriptor, tuple(weights))


WeightsLike = Union[None, int, Sequence[int], WeightFunction]


def as_weight_function(desc: CoxeterDescriptor, weights: WeightsLike) -> WeightFunction:
    """Coerce None, an integer, a sequence or a WeightFunction."""
    if weights is None:
        return WeightFunction.equal(desc)
    if isinstance(weights, WeightFunction):
        if weights.descriptor != desc:
            raise DescriptorError(ERROR_BAD_WEIGHTS % (list(weights.weights), desc.name))
        return weights
    if isinstance(weights, int):
        return WeightFunction.equal(desc, weights)
    return WeightFunction(desc, tuple(int(w) for w in weights))


def _components(
    desc: CoxeterDescriptor, weights: Sequence[int], label: IrrLabel
) -> Iterator[Tuple[CoxeterDescriptor, Tuple[int, ...], IrrLabel]]:
    """Split a descriptor, its weights and a label into standard factors."""
    if desc.is_standard:
        yield desc, tuple(weights), label
        return
    parabolic = standard_parabolic(desc)
    factors = label.factors
    if desc.family == FAMILY_TRIVIAL:
        factors = ()
    if len(factors) != len(parabolic.components):
        raise DescriptorError(f"{label} is not an irreducible of {desc.name}")
    for component, factor in zip(parabolic.components, factors):
        yield component.descriptor, tuple(weights[n] for n in component.nodes), factor


def load_weighted_f4_table(path: Optional[str]) -> int:
    """Register weighted F4 a-values from a data file; returns the row count."""
    rows = load_weighted_f4(path)
    _WEIGHTED_F4.update(rows)
    return len(rows)


#
# Partitions and symbols
#
def n_invariant(partition: Sequence[int]) -> int:
    """n(lambda) = sum (i-1) lambda_i."""
    return sum(i * part for i, part in enumerate(partition))


def hook_lengths(partition: Sequence[int]) -> List[int]:
    """Hook lengths of all cells."""
    conjugate = transpose(partition)
    return [
        partition[i] - j + conjugate[j] - i - 1
        for i in range(len(partition))
        for j in range(partition[i])
    ]


def _padded(partition: Sequence[int], length: int) -> List[int]:
    return list(partition) + [0] * (length - len(partition))


@dataclass(frozen=True)
class BSymbol:
    """The two rows of the symbol of a bipartition for weights (b; a,...,a)."""

    top: Tuple[int, ...]
    bottom: Tuple[int, ...]

    @property
    def content(self) -> Tuple[int, ...]:
        """Entries of both rows as a sorted multiset."""
        return tuple(sorted(self.top + self.bottom))

    @property
    def min_sum(self) -> int:
        """Sum of min(x, y) over unordered pairs of entries."""
        entries = self.content
        size = len(entries)
        return sum(z * (size - k - 1) for k, z in enumerate(entries))


def b_symbol(alpha: Sequence[int], beta: Sequence[int], a: int = 1, b: int = 1) -> BSymbol:
    """Symbol of (alpha, beta) in B_n with weight b on the negation node."""
    n = sum(alpha) + sum(beta)
    m = n + (b + a - 1) // a + 1
    top = [a * (p + m - i - 1) + b for i, p in enumerate(_padded(alpha, m))]
    bottom = [a * (p + m - i - 1) for i, p in enumerate(_padded(beta, m))]
    return BSymbol(tuple(sorted(top)), tuple(sorted(bottom)))


def d_symbol(alpha: Sequence[int], beta: Sequence[int]) -> BSymbol:
    """Defect zero symbol of an unordered pair in D_n."""
    m = sum(alpha) + sum(beta)
    top = [p + m - i - 1 for i, p in enumerate(_padded(alpha, m))]
    bottom = [p + m - i - 1 for i, p in enumerate(_padded(beta, m))]
    return BSymbol(tuple(sorted(top)), tuple(sorted(bottom)))


def _equal_b_rows(alpha: Sequence[int], beta: Sequence[int]) -> Tuple[List[int], List[int]]:
    """Equal-parameter B symbol: m+1 entries from alpha, m from beta."""
    m = sum(alpha) + sum(beta)
    top = [p + m - i for i, p in enumerate(_padded(alpha, m + 1))]
    bottom = [p + m - i - 1 for i, p in enumerate(_padded(beta, m))]
    return top, bottom


def _equal_d_rows(alpha: Sequence[int], beta: Sequence[int]) -> Tuple[List[int], List[int]]:
    symbol = d_symbol(alpha, beta)
    return list(symbol.top), list(symbol.bottom)


def _family_of(desc: CoxeterDescriptor) -> str:
    return "B" if desc.family == "C" else desc.family


def _bd_parts(label: IrrLabel) -> Tuple[Partition, Partition]:
    if label.variant == VARIANT_BIPARTITION:
        alpha, beta = label.value  # type: ignore[misc]
        return alpha, beta
    if label.variant == VARIANT_D_PAIR:
        alpha, beta, _ = label.value  # type: ignore[misc]
        return alpha, beta
    raise DescriptorError(f"{label} is not a bipartition label")


#
# Generic degrees
#
@dataclass(frozen=True)
class GenericDegree:
    """A generic degree as a rational function in v."""

    expr: Expr
    provenance: str

    def __post_init__(self) -> None:
        """Reject the zero function."""
        if self.expr == 0:
            raise InvariantViolationError("Generic degree vanishes")

    @cached_property
    def _parts(self) -> Tuple[Poly, Poly]:
        num, den = fraction(cancel(together(self.expr)))
        return Poly(num, V), Poly(den, V)

    @property
    def valuation(self) -> int:
        """Order of vanishing at v = 0."""
        num, den = self._parts
        return min(m[0] for m in num.monoms()) - min(m[0] for m in den.monoms())

    def multiplicity(self, factor: Expr) -> int:
        """Multiplicity of a polynomial factor in v."""
        divisor = Poly(factor, V)
        total = 0
        for sign, poly in ((1, self._parts[0]), (-1, self._parts[1])):
            while True:
                quotient, remainder = poly.div(divisor)
                if not remainder.is_zero:
                    break
                total += sign
                poly = quotient
        return total

    def at(self, value: Union[int, Rational]) -> Expr:
        """Value at a given v."""
        return cancel(self.expr.subs(V, value))

    def __mul__(self, other: "GenericDegree") -> "GenericDegree":
        return GenericDegree(cancel(self.expr * other.expr), PROVENANCE_PRODUCT)


def _table_route(
    desc: CoxeterDescriptor, weights: Sequence[int]
) -> Optional[Tuple[str, int, int]]:
    """Table key with the parameters a, b when a printed table applies."""
    family, rank = _family_of(desc), desc.rank
    if family == "A" and rank == 1:
        return "A1", weights[0], weights[0]
    if family == "A" and rank == 2:
        return "A2", weights[0], weights[0]
    if family == "B" and rank == 2:
        return "B2", weights[0], weights[1]
    if family == "B" and rank == 3 and weights[0] == weights[1]:
        return "B3", weights[0], weights[2]
    if family == "G2":
        return "G2", weights[0], weights[1]
    return None


@lru_cache(maxsize=None)
def _table_text(key: str, row_key: object, g2_table: str) -> str:
    if g2_table not in G2_TABLE_VARIANTS:
        raise DescriptorError(f"Unknown G2 table variant {g2_table!r}")
    rows = dict(D_TABLE_EXPRESSIONS[key])
    if row_key not in rows:
        raise DescriptorError(f"{row_key} is not listed in the {key} table")
    text = rows[row_key]
    if key == "G2" and g2_table == G2_TABLE_CORRECTED:
        text = G2_CORRECTED_ROWS.get(row_key, text)  # type: ignore[call-overload]
    return text


def table_degree(
    key: str, label: IrrLabel, a: int, b: int, g2_table: str = DEFAULT_G2_TABLE
) -> GenericDegree:
    """Evaluate a tabulated D expression at q = v^(2a), y = v^(2b)."""
    text = _table_text(key, label.value, g2_table)
    expr = sympify(text, locals={"q": Q, "y": _Y, "s": _S})
    value = expr.subs({Q: V ** (2 * a), _Y: V ** (2 * b), _S: V ** (a + b)}, simultaneous=True)
    return GenericDegree(cancel(value), PROVENANCE_TABLE)


def _type_a_degree(partition: Partition) -> Expr:
    size = sum(partition)
    num = Q ** n_invariant(partition)
    for i in range(1, size + 1):
        num *= Q**i - 1
    den = Integer(1)
    for h in hook_lengths(partition):
        den *= Q**h - 1
    return cancel(num / den)


def _symbol_ratio(top: Sequence[int], bottom: Sequence[int]) -> Expr:
    num = Integer(1)
    for row in (top, bottom):
        for i, x in enumerate(row):
            for y in row[i + 1:]:
                num *= Q ** max(x, y) - Q ** min(x, y)
    for x in top:
        for y in bottom:
            num *= Q**x + Q**y
    den = Integer(1)
    for z in list(top) + list(bottom):
        for h in range(1, z + 1):
            den *= Q ** (2 * h) - 1
    return num / den


def _raw_b_degree(alpha: Partition, beta: Partition) -> Expr:
    n = sum(alpha) + sum(beta)
    top, bottom = _equal_b_rows(alpha, beta)
    order = Integer(1)
    for i in range(1, n + 1):
        order *= Q ** (2 * i) - 1
    power = (len(top) + len(bottom) - 1) // 2
    return order * _symbol_ratio(top, bottom) / 2**power


def _raw_d_degree(alpha: Partition, beta: Partition) -> Expr:
    n = sum(alpha) + sum(beta)
    top, bottom = _equal_d_rows(alpha, beta)
    order = Q**n - 1
    for i in range(1, n):
        order *= Q ** (2 * i) - 1
    power = (len(top) + len(bottom) - 2) // 2 + (1 if alpha == beta else 0)
    return order * _symbol_ratio(top, bottom) / 2**power


def _equal_degree_in_q(desc: CoxeterDescriptor, label: IrrLabel) -> Expr:
    family = _family_of(desc)
    if family == "A":
        return _type_a_degree(label.value)  # type: ignore[arg-type]
    if family == "B":
        alpha, beta = _bd_parts(label)
        return cancel(_raw_b_degree(alpha, beta) / _raw_b_degree((desc.rank,), ()))
    if family == "D":
        alpha, beta = _bd_parts(label)
        return cancel(_raw_d_degree(alpha, beta) / _raw_d_degree((desc.rank,), ()))
    raise UnsupportedComputationError(ERROR_NO_ROUTE % (desc.name, "equal"), "generic_degree")


def generic_degree(
    desc: CoxeterDescriptor,
    weights: WeightsLike,
    label: IrrLabel,
    g2_table: str = DEFAULT_G2_TABLE,
) -> GenericDegree:
    """Generic degree of an irreducible for a weight function.

    Raises:
        UnsupportedComputationError: when no table or symbol formula applies.
    """
    wf = as_weight_function(desc, weights)
    result: Optional[GenericDegree] = None
    parts = 0
    for comp, comp_weights, factor in _components(desc, wf.weights, label):
        degree = _component_degree(comp, comp_weights, factor, g2_table)
        result = degree if result is None else result * degree
        parts += 1
    if result is None:
        return GenericDegree(Integer(1), PROVENANCE_PRODUCT)
    if parts > 1 or not desc.is_standard:
        return GenericDegree(result.expr, PROVENANCE_PRODUCT)
    return result


def _component_degree(
    desc: CoxeterDescriptor, weights: Tuple[int, ...], label: IrrLabel, g2_table: str
) -> GenericDegree:
    route = _table_route(desc, weights)
    if route is not None:
        key, a, b = route
        return table_degree(key, label, a, b, g2_table)
    if len(set(weights)) == 1 and _family_of(desc) in ("A", "B", "D"):
        k = weights[0]
        expr = _equal_degree_in_q(desc, label).subs(Q, V ** (2 * k))
        return GenericDegree(cancel(expr), PROVENANCE_SYMBOL)
    raise UnsupportedComputationError(
        ERROR_NO_ROUTE % (desc.name, list(weights)), "generic_degree"
    )


#
# a-invariant
#
def table_a_value(
    desc: CoxeterDescriptor,
    weights: Sequence[int],
    label: IrrLabel,
    g2_table: str = DEFAULT_G2_TABLE,
) -> Optional[int]:
    """a-value from a printed table, or None when no table applies."""
    route = _table_route(desc, weights)
    if route is None:
        return None
    key, a, b = route
    valuation = table_degree(key, label, a, b, g2_table).valuation
    if valuation % 2:
        raise InvariantViolationError(
            f"Odd valuation {valuation} for {label} of {desc.name} with weights {list(weights)}"
        )
    return valuation // 2


def symbol_a_value(desc: CoxeterDescriptor, weights: Sequence[int], label: IrrLabel) -> int:
    """a-value of a type B/C irreducible from its two-parameter symbol."""
    if _family_of(desc) != "B":
        raise UnsupportedComputationError(ERROR_NO_ROUTE % (desc.name, list(weights)), "symbol")
    b = weights[-1]
    a = weights[0] if desc.rank > 1 else b
    alpha, beta = _bd_parts(label)
    trivial = b_symbol((desc.rank,), (), a, b)
    return b_symbol(alpha, beta, a, b).min_sum - trivial.min_sum


def equal_a_value(
    desc: CoxeterDescriptor, label: IrrLabel, g2_table: str = DEFAULT_G2_TABLE
) -> int:
    """a-value for equal parameters on an irreducible standard type."""
    family = _family_of(desc)
    if family == "A":
        return n_invariant(label.value)  # type: ignore[arg-type]
    if family == "B":
        return symbol_a_value(desc, (1,) * desc.size, label)
    if family == "D":
        alpha, beta = _bd_parts(label)
        return d_symbol(alpha, beta).min_sum - d_symbol((desc.rank,), ()).min_sum
    if family == "G2":
        return table_a_value(desc, (1, 1), label, g2_table)  # type: ignore[return-value]
    if family == "F4":
        match = _F4_LABEL_RE.match(str(label.value))
        key = (int(match.group(1)), int(match.group(2))) if match else None
        if key in F4_A_VALUES:
            return F4_A_VALUES[key]  # type: ignore[index]
        raise DescriptorError(f"{label} is not an irreducible of F4")
    raise UnsupportedComputationError(ERROR_NO_ROUTE % (desc.name, "equal"), "a_invariant")


def _component_a(
    desc: CoxeterDescriptor, weights: Tuple[int, ...], label: IrrLabel, g2_table: str
) -> int:
    value = table_a_value(desc, weights, label, g2_table)
    if value is not None:
        return value
    if _family_of(desc) == "B":
        return symbol_a_value(desc, weights, label)
    if len(set(weights)) == 1:
        return weights[0] * equal_a_value(desc, label, g2_table)
    key = (str(label), weights)
    if desc.family == "F4" and key in _WEIGHTED_F4:
        return _WEIGHTED_F4[key]
    raise UnsupportedComputationError(
        ERROR_NO_ROUTE % (desc.name, list(weights)), "a_invariant"
    )


def a_invariant(
    desc: CoxeterDescriptor,
    weights: WeightsLike,
    label: IrrLabel,
    g2_table: str = DEFAULT_G2_TABLE,
) -> int:
    """a-invariant of an irreducible of a finite Coxeter group.

    Args:
        desc: A finite descriptor, possibly a product.
        weights: Weight function, constant weight or None for equal parameters.
        label: The irreducible.
        g2_table: Which G2 table to evaluate.

    Returns:
        Half the order of vanishing of the generic degree at v = 0.

    Raises:
        UnsupportedComputationError: when no route applies.
    """
    wf = as_weight_function(desc, weights)
    return sum(
        _component_a(comp, comp_weights, factor, g2_table)
        for comp, comp_weights, factor in _components(desc, wf.weights, label)
    )


#
# z-invariant and b-invariant
#
def _same_row_even(row: Sequence[int]) -> int:
    return sum(
        1 for i, x in enumerate(row) for y in row[i + 1:] if (x - y) % 2 == 0
    )


def _cross_odd(top: Sequence[int], bottom: Sequence[int]) -> int:
    return sum(1 for x in top for y in bottom if (x - y) % 2)


def _component_z(desc: CoxeterDescriptor, label: IrrLabel, g2_table: str) -> int:
    family = _family_of(desc)
    if family == "A":
        partition = label.value  # type: ignore[assignment]
        size = sum(partition)  # type: ignore[arg-type]
        hooks = hook_lengths(partition)  # type: ignore[arg-type]
        return size // 2 - sum(1 for h in hooks if h % 2 == 0)
    if family in ("B", "D"):
        alpha, beta = _bd_parts(label)
        n = desc.rank
        if family == "B":
            top, bottom = _equal_b_rows(alpha, beta)
            base = n
        else:
            top, bottom = _equal_d_rows(alpha, beta)
            base = n - 1 + (1 if n % 2 == 0 else 0)
        return (
            base
            + _same_row_even(top)
            + _same_row_even(bottom)
            + _cross_odd(top, bottom)
            - sum(top)
            - sum(bottom)
        )
    if family == "G2":
        return table_degree("G2", label, 1, 1, g2_table).multiplicity(V**2 + 1)
    raise UnsupportedComputationError(ERROR_NO_ROUTE % (desc.name, "equal"), "z_invariant")


def z_invariant(
    desc: CoxeterDescriptor, label: IrrLabel, g2_table: str = DEFAULT_G2_TABLE
) -> int:
    """Multiplicity of v^2 + 1 in the equal-parameter generic degree."""
    weights = (1,) * desc.size
    return sum(
        _component_z(comp, factor, g2_table)
        for comp, _, factor in _components(desc, weights, label)
    )


def closed_b_invariant(desc: CoxeterDescriptor, label: IrrLabel) -> int:
    """b-invariant of a classical irreducible from its partitions."""
    family = _family_of(desc)
    if family == "A":
        return n_invariant(label.value)  # type: ignore[arg-type]
    alpha, beta = _bd_parts(label)
    if family == "B":
        return 2 * n_invariant(alpha) + 2 * n_invariant(beta) + sum(beta)
    if family == "D":
        return 2 * n_invariant(alpha) + 2 * n_invariant(beta) + min(sum(alpha), sum(beta))
    raise UnsupportedComputationError(f"No closed b-invariant for {desc.name}", "b_invariant")


def _component_b(desc: CoxeterDescriptor, label: IrrLabel, bound: int) -> int:
    if _family_of(desc) in ("A", "B", "D"):
        return closed_b_invariant(desc, label)
    return b_invariant(desc, label, bound)


#
# Special representations
#
def classical_labels(desc: CoxeterDescriptor) -> Iterator[IrrLabel]:
    """Irreducible labels of a classical type without building its table."""
    family, n = _family_of(desc), desc.rank
    if family == "A":
        for lam in partitions(n + 1):
            yield partition_label(lam)
        return
    for k in range(n, -1, -1):
        for alpha in partitions(k):
            for beta in partitions(n - k):
                if family == "B":
                    yield bipartition_label(alpha, beta)
                elif alpha == beta:
                    yield d_label(alpha, beta, "+")
                    yield d_label(alpha, beta, "-")
                elif alpha < beta:
                    yield d_label(alpha, beta)


def _component_labels(desc: CoxeterDescriptor) -> Tuple[IrrLabel, ...]:
    if _family_of(desc) in ("A", "B", "D"):
        return tuple(classical_labels(desc))
    return character_table(desc).labels


def is_special(
    desc: CoxeterDescriptor,
    label: IrrLabel,
    bound: int = DEFAULT_SYM_BOUND,
    g2_table: str = DEFAULT_G2_TABLE,
) -> bool:
    """True when the equal-parameter a- and b-invariants agree."""
    weights = (1,) * desc.size
    return all(
        equal_a_value(comp, factor, g2_table) == _component_b(comp, factor, bound)
        for comp, _, factor in _components(desc, weights, label)
    )


def special_representations(
    desc: CoxeterDescriptor,
    bound: int = DEFAULT_SYM_BOUND,
    g2_table: str = DEFAULT_G2_TABLE,
) -> List[IrrLabel]:
    """Special irreducibles, in table order."""
    if desc.is_standard:
        return [
            label
            for label in _component_labels(desc)
            if is_special(desc, label, bound, g2_table)
        ]
    parabolic = standard_parabolic(desc)
    result = [product_label([])]
    for component in parabolic.components:
        specials = special_representations(component.descriptor, bound, g2_table)
        result = [product_label(list(head.factors) + [s]) for head in result for s in specials]
    return result


#
# Sharpness
#
def _irreducible_E0(
    desc: CoxeterDescriptor, gamma: DiagramAutomorphism, g2_table: str
) -> Optional[IrrLabel]:
    op = op_automorphism(desc)
    if (op.r * op.order) % 2 or op.compose(gamma).order % 2 == 0:
        return None
    if desc.family in EXCEPTIONAL_E0 and desc.family != "G2":
        if (desc.family, gamma.order) not in EXCEPTIONAL_SHARP:
            return None
        return named_label(EXCEPTIONAL_E0[desc.family])
    if desc.family in ("E6", "E7", "E8"):
        return None
    candidates = [
        label
        for label in _component_labels(desc)
        if _component_z(desc, label, g2_table) == op.r
        and is_special(desc, label, g2_table=g2_table)
    ]
    if len(candidates) > 1:
        raise InvariantViolationError(
            f"Several special E0 for {desc.name}: {[str(c) for c in candidates]}"
        )
    return candidates[0] if candidates else None


def sharp_E0(
    desc: CoxeterDescriptor,
    gamma: Optional[DiagramAutomorphism] = None,
    g2_table: str = DEFAULT_G2_TABLE,
) -> Optional[IrrLabel]:
    """The special E0 with z(E0) = r(op) when the twisted group is sharp.

    Components permuted cyclically by gamma contribute the E0 of one of
    them twisted by the return map; None means not sharp.
    """
    gamma = gamma or DiagramAutomorphism.identity(desc.size)
    if not gamma.is_automorphism_of(desc):
        raise DescriptorError(f"{gamma} is not an automorphism of {desc.name}")
    if desc.is_standard:
        return _irreducible_E0(desc, gamma, g2_table)
    parabolic = standard_parabolic(desc)
    components = parabolic.components
    owner = {node: k for k, comp in enumerate(components) for node in comp.nodes}
    chosen: Dict[int, IrrLabel] = {}
    for k, comp in enumerate(components):
        if k in chosen:
            continue
        orbit = [k]
        current = owner[gamma(comp.nodes[0])]
        while current != k:
            orbit.append(current)
            current = owner[gamma(components[current].nodes[0])]
        back = gamma.power(len(orbit))
        local = DiagramAutomorphism(
            tuple(comp.nodes.index(back(node)) for node in comp.nodes)
        )
        label = _irreducible_E0(comp.descriptor, local, g2_table)
        if label is None:
            return None
        for member in orbit:
            chosen[member] = label
    return product_label([chosen[k] for k in range(len(components))])


def sharp_a_value(
    desc: CoxeterDescriptor,
    gamma: Optional[DiagramAutomorphism] = None,
    g2_table: str = DEFAULT_G2_TABLE,
) -> Optional[int]:
    """Equal-parameter a-value of the sharp E0, or None when not sharp."""
    label = sharp_E0(desc, gamma, g2_table)
    if label is None:
        return None
    gamma = gamma or DiagramAutomorphism.identity(desc.size)
    total = 0
    for comp, _, factor in _components(desc, (1,) * desc.size, label):
        if comp.family in ("E6", "E8"):
            order = 2 if comp.family == "E6" else 1
            total += EXCEPTIONAL_SHARP[(comp.family, order)]["a_value"]
        else:
            total += equal_a_value(comp, factor, g2_table)
    return total


#
# Induction and families
#
def truncated_induction(
    embedding: SubgroupEmbedding,
    label: IrrLabel,
    weights: WeightsLike = None,
    g2_table: str = DEFAULT_G2_TABLE,
) -> Dict[IrrLabel, int]:
    """Constituents of the induced character with the same a-value.

    weights is a weight function on the big group; the subgroup is a
    standard parabolic carrying the restricted weights.
    """
    big_weights = as_weight_function(embedding.big, weights)
    sub_weights = _sub_weights(embedding, big_weights)
    target = a_invariant(embedding.sub, sub_weights, label, g2_table)
    return {
        big_label: mult
        for big_label, mult in induction_multiplicities(embedding, label).items()
        if a_invariant(embedding.big, big_weights, big_label, g2_table) == target
    }


def _sub_weights(embedding: SubgroupEmbedding, weights: WeightFunction) -> WeightFunction:
    generators = build_group(embedding.big).generators
    node_of = {gen: node for node, gen in enumerate(generators)}
    sub_weights = []
    for image in embedding.images:
        if image not in node_of:
            raise DescriptorError(
                f"{embedding.sub.name} is not a standard parabolic of {embedding.big.name}"
            )
        sub_weights.append(weights[node_of[image]])
    return WeightFunction(embedding.sub, tuple(sub_weights))


def j_induction(
    embedding: SubgroupEmbedding,
    label: IrrLabel,
    bound: int = DEFAULT_SYM_BOUND,
    g2_table: str = DEFAULT_G2_TABLE,
) -> IrrLabel:
    """The irreducible in both Ind(E) and Sym^a(E) of the reflection representation.

    Raises:
        InvariantViolationError: when there is not exactly one such irreducible.
    """
    a_value = a_invariant(embedding.sub, None, label, g2_table)
    hits = [
        big_label
        for big_label in induction_multiplicities(embedding, label)
        if sym_power_reflection_multiplicity(embedding.big, big_label, a_value, bound)
    ]
    if len(hits) != 1:
        raise InvariantViolationError(
            ERROR_J_UNIQUENESS % (label, embedding.sub.name, [str(h) for h in hits])
        )
    _LOGGER.debug(
        "j(%s) from %s to %s is %s", label, embedding.sub.name, embedding.big.name, hits[0]
    )
    return hits[0]


class _Partition:
    """Union-find over labels."""

    def __init__(self, labels: Iterable[IrrLabel]) -> None:
        self._labels = list(labels)
        self._parent = {label: label for label in self._labels}

    def find(self, label: IrrLabel) -> IrrLabel:
        root = label
        while self._parent[root] != root:
            root = self._parent[root]
        self._parent[label] = root
        return root

    def union_all(self, labels: Iterable[IrrLabel]) -> None:
        items = list(labels)
        for other in items[1:]:
            self._parent[self.find(other)] = self.find(items[0])

    def blocks(self) -> Tuple[Tuple[IrrLabel, ...], ...]:
        groups: Dict[IrrLabel, List[IrrLabel]] = {}
        for label in self._labels:
            groups.setdefault(self.find(label), []).append(label)
        return tuple(tuple(group) for group in groups.values())


@lru_cache(maxsize=None)
def recursive_families(
    desc: CoxeterDescriptor, weights: Tuple[int, ...], g2_table: str = DEFAULT_G2_TABLE
) -> Tuple[Tuple[IrrLabel, ...], ...]:
    """Families by the inductive rule over maximal parabolic subgroups.

    For every family F of a maximal parabolic, the constituents of the
    truncated inductions of the members of F form one linked set, and so
    do their sign twists.
    """
    table = character_table(desc)
    if desc.size == 0:
        return (table.labels,)
    wf = WeightFunction(desc, weights)
    blocks = _Partition(table.labels)
    for node in desc.nodes:
        subset = [k for k in desc.nodes if k != node]
        embedding = parabolic_embedding(desc, subset)
        sub_weights = _sub_weights(embedding, wf)
        for family in l_families(embedding.sub, sub_weights.weights, g2_table):
            hits: List[IrrLabel] = []
            for member in family:
                hits.extend(truncated_induction(embedding, member, wf, g2_table))
            blocks.union_all(hits)
            blocks.union_all([tensor_sign(desc, hit) for hit in hits])
    return blocks.blocks()


def _symbol_families(
    desc: CoxeterDescriptor, weights: Tuple[int, ...]
) -> Tuple[Tuple[IrrLabel, ...], ...]:
    family = _family_of(desc)
    blocks: Dict[Tuple[object, ...], List[IrrLabel]] = {}
    for label in classical_labels(desc):
        alpha, beta = _bd_parts(label)
        if family == "B":
            b = weights[-1]
            a = weights[0] if desc.rank > 1 else b
            key: Tuple[object, ...] = b_symbol(alpha, beta, a, b).content
        else:
            # degenerate symbols split into two singleton families
            sign = label.value[2]  # type: ignore[index]
            key = d_symbol(alpha, beta).content + (sign,)
        blocks.setdefault(key, []).append(label)
    return tuple(tuple(group) for group in blocks.values())


@lru_cache(maxsize=None)
def l_families(
    desc: CoxeterDescriptor, weights: Tuple[int, ...], g2_table: str = DEFAULT_G2_TABLE
) -> Tuple[Tuple[IrrLabel, ...], ...]:
    """Partition of the irreducibles into families for a weight function.

    Type A families are singletons; types B and D use symbol contents;
    G2 and F4 with equal weights use their tabulated families; everything
    else follows the inductive rule.
    """
    wf = WeightFunction(desc, tuple(weights))
    if desc.family == FAMILY_TRIVIAL:
        return ((product_label([]),),)
    if not desc.is_standard:
        combos: List[List[Tuple[IrrLabel, ...]]] = [[]]
        for component in standard_parabolic(desc).components:
            comp_weights = tuple(wf.weights[n] for n in component.nodes)
            parts = l_families(component.descriptor, comp_weights, g2_table)
            combos = [combo + [part] for combo in combos for part in parts]
        return tuple(tuple(_product_members(combo)) for combo in combos)
    family = _family_of(desc)
    if family == "A":
        return tuple((label,) for label in classical_labels(desc))
    if family in ("B", "D"):
        return _symbol_families(desc, wf.weights)
    if wf.constant is not None and desc.family == "F4":
        return _named_families(desc, F4_FAMILIES)
    if wf.constant is not None and desc.family == "G2" and g2_table == G2_TABLE_CORRECTED:
        return _named_families(desc, G2_FAMILIES)
    return recursive_families(desc, wf.weights, g2_table)


def _product_members(combo: Sequence[Tuple[IrrLabel, ...]]) -> Iterator[IrrLabel]:
    heads: List[List[IrrLabel]] = [[]]
    for part in combo:
        heads = [head + [label] for head in heads for label in part]
    for head in heads:
        yield product_label(head)


def _named_families(
    desc: CoxeterDescriptor, listed: Sequence[Sequence[str]]
) -> Tuple[Tuple[IrrLabel, ...], ...]:
    labels = character_table(desc).labels
    grouped = {name for group in listed for name in group}
    result = [tuple(named_label(name) for name in group) for group in listed]
    result.extend((label,) for label in labels if label.value not in grouped)
    return tuple(result)


def family_of(
    desc: CoxeterDescriptor,
    weights: WeightsLike,
    label: IrrLabel,
    g2_table: str = DEFAULT_G2_TABLE,
) -> Tuple[IrrLabel, ...]:
    """The family containing an irreducible."""
    wf = as_weight_function(desc, weights)
    for family in l_families(desc, wf.weights, g2_table):
        if label in family:
            return family
    raise DescriptorError(f"{label} is not an irreducible of {desc.name}")


def tensor_sign(desc: CoxeterDescriptor, label: IrrLabel) -> IrrLabel:
    """E tensored with the sign character."""
    table = character_table(desc)
    return next(iter(table.tensor(label, table.sign)))


#
# G2 table variants
#
@dataclass(frozen=True)
class G2Discrepancy:
    """A G2 irreducible whose a-value depends on the table variant."""

    a: int
    b: int
    label: str
    printed: int
    corrected: int
    closed_form: int


@dataclass(frozen=True)
class TableDiscrepancy:
    """A tabulated irreducible whose a-value misses its closed-form list."""

    key: str
    a: int
    b: int
    label: str
    computed: int
    closed_form: int


_TABLE_WEIGHTS = {
    "A1": lambda a, b: (a,),
    "A2": lambda a, b: (a, a),
    "B2": lambda a, b: (a, b),
    "G2": lambda a, b: (a, b),
    "B3": lambda a, b: (a, a, b),
}


def closed_form_a_values(key: str, a: int, b: int) -> Dict[object, int]:
    """The printed closed-form a-list of a table, keyed by table row."""
    m, m2 = min(a, b), min(2 * a, b)
    lists = {
        "A1": (0, a),
        "A2": (0, a, 3 * a),
        "B2": (0, a + b - m, 2 * a - m, 2 * b - m, 2 * a + 2 * b),
        "G2": (0, a + b - m, a + b - m, 2 * a - 2 * m, 2 * b - 2 * m, 3 * a + 3 * b),
        "B3": (
            0, a + b - m, 2 * a - m, 3 * b - m - m2, a + 2 * b - m2, 3 * a + b - m2,
            2 * a + 3 * b - m, 3 * a + 2 * b - m, 6 * a - m - m2, 6 * a + 3 * b,
        ),
    }
    if key not in lists:
        raise DescriptorError(f"No closed-form a-list for {key}")
    rows = [row for row, _ in D_TABLE_EXPRESSIONS[key]]
    return dict(zip(rows, lists[key]))


def printed_list_discrepancies(
    keys: Sequence[str] = ("A1", "A2", "B2", "G2", "B3"),
    points: Optional[Iterable[Tuple[int, int]]] = None,
    g2_table: str = DEFAULT_G2_TABLE,
) -> List[TableDiscrepancy]:
    """Points where a_invariant leaves the closed-form a-lists.

    The default sweep is (a, b) in {1..5}^2; degenerate points such as
    a = b or 2a = b are included.
    """
    sweep = list(points) if points is not None else [
        (a, b) for a in range(1, 6) for b in range(1, 6)
    ]
    result: List[TableDiscrepancy] = []
    for key in keys:
        desc = finite_type("G2", 2) if key == "G2" else finite_type(key[0], int(key[1:]))
        for a, b in sweep:
            expected = closed_form_a_values(key, a, b)
            weights = _TABLE_WEIGHTS[key](a, b)
            for label in character_table(desc).labels:
                computed = a_invariant(desc, weights, label, g2_table)
                if computed != expected[label.value]:
                    result.append(
                        TableDiscrepancy(key, a, b, str(label), computed, expected[label.value])
                    )
    if result:
        _LOGGER.warning("%d a-values leave the closed-form lists", len(result))
    return result


def _g2_closed_form(label: str, a: int, b: int) -> int:
    return closed_form_a_values("G2", a, b)[label]


def g2_table_discrepancies(
    points: Iterable[Tuple[int, int]] = ((1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (2, 3)),
) -> List[G2Discrepancy]:
    """Parameter points where the printed and corrected G2 tables disagree."""
    g2 = finite_type("G2", 2)
    result: List[G2Discrepancy] = []
    for a, b in points:
        for name in G2_LABELS:
            label = named_label(name)
            printed = table_a_value(g2, (a, b), label, G2_TABLE_PRINTED)
            corrected = table_a_value(g2, (a, b), label, G2_TABLE_CORRECTED)
            if printed != corrected:
                result.append(
                    G2Discrepancy(
                        a, b, name, int(printed or 0), int(corrected or 0),
                        _g2_closed_form(name, a, b),
                    )
                )
    _LOGGER.info("%d G2 table discrepancies", len(result))
    return result


def weighted_a_values(
    desc: CoxeterDescriptor, weights: WeightsLike, g2_table: str = DEFAULT_G2_TABLE
) -> Mapping[IrrLabel, int]:
    """a-values of every irreducible in table order."""
    return {
        label: a_invariant(desc, weights, label, g2_table)
        for label in character_table(desc).labels
    }
