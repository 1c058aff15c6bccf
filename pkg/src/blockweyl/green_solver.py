"""Exact solution of the P / Lambda' system attached to a weighted group.

This module provides:
1. Rational functions in q with integer coefficients (sympy fraction field)
2. The pairing matrix Omega' built from the character table of the finite quotient
3. The unique block-triangular factorization Omega' = P^T Lambda' P
4. Verification, order comparison and numeric specialization of a solution
"""
from __future__ import annotations

import csv
import io
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from sympy import Rational, ZZ, sympify
from sympy.core.sympify import SympifyError
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from .char_tables import IrrLabel, character_table
from .const import (
    ELIMINATION_ORDERS,
    ERROR_BAD_Q,
    ERROR_POLE,
    ERROR_SINGULAR_BLOCK,
    ERROR_VERIFICATION,
    MATRIX_LAMBDA,
    MATRIX_OMEGA,
    MATRIX_P,
    ORDER_COLUMN_BLOCK,
    ORDER_ROW_BLOCK,
)
from .coxeter_core import Q, build_group, finite_quotient
from .exceptions import DescriptorError, InvariantViolationError
from .weighted_affine import CFunctionTable, OrderRelations, WeightedAffineGroup

_LOGGER = logging.getLogger(__name__)

# Rational functions in q over the integers; elements are kept reduced with
# a denominator of positive leading coefficient.
FIELD = ZZ.frac_field(Q)
RatFun = Any
Matrix = Tuple[Tuple[RatFun, ...], ...]


#
# Rational functions
#
def ratfun(value: Any) -> RatFun:
    """Convert an int, a sympy expression or a string into the field."""
    if isinstance(value, int):
        return FIELD.convert(value)
    if isinstance(value, str):
        try:
            value = sympify(value, locals={"q": Q})
        except (SympifyError, SyntaxError) as err:
            message = f"Cannot read {value!r} as a rational function"
            raise DescriptorError(message) from err
    return FIELD.from_sympy(value)


def q_power(exponent: int) -> RatFun:
    """q raised to an integer power."""
    return FIELD.from_sympy(Q) ** exponent


def ratfun_to_string(value: RatFun) -> str:
    """Stringify as '(num)/(den)' with expanded integer polynomials."""
    return f"({value.numer.as_expr()})/({value.denom.as_expr()})"


def parse_q(text: str) -> Rational:
    """Read a rational specialization value such as '2' or '3/2'."""
    try:
        value = Rational(str(text))
    except (TypeError, ValueError, SympifyError) as err:
        raise DescriptorError(ERROR_BAD_Q % text) from err
    return value


def specialize(value: RatFun, q_value: Rational) -> Rational:
    """Evaluate at a rational q.

    Raises:
        DescriptorError: when q_value is a pole.
    """
    denominator = value.denom.as_expr().subs(Q, q_value)
    if denominator == 0:
        raise DescriptorError(ERROR_POLE % (ratfun_to_string(value), q_value))
    return Rational(value.numer.as_expr().subs(Q, q_value)) / Rational(denominator)


def _degree(poly: Any) -> int:
    return int(poly.degree()) if poly else 0


#
# Omega'
#
@dataclass(frozen=True)
class GreenSystem:
    """Omega' with the order data it is solved against.

    Indices run by decreasing c and then table order, so that E' <= E with
    E' != E only occurs for E' before E. blocks are the c-equality classes
    and sim the ~ classes, both as index tuples.
    """

    group: WeightedAffineGroup
    labels: Tuple[IrrLabel, ...]
    c_values: Tuple[int, ...]
    blocks: Tuple[Tuple[int, ...], ...]
    sim: Tuple[Tuple[int, ...], ...]
    omega: Matrix = field(compare=False)

    @property
    def size(self) -> int:
        """Number of irreducibles of the finite quotient."""
        return len(self.labels)

    def index(self, label: IrrLabel) -> int:
        """Position of an irreducible."""
        return self.labels.index(label)

    def leq(self, first: int, second: int) -> bool:
        """first <= second: equal, or larger c."""
        return first == second or self.c_values[first] > self.c_values[second]

    def approx(self, first: int, second: int) -> bool:
        """Equal c."""
        return self.c_values[first] == self.c_values[second]

    def similar(self, first: int, second: int) -> bool:
        """Same ~ class."""
        return any(first in cls and second in cls for cls in self.sim)


def _class_weights(quotient_desc: Any) -> Tuple[Any, List[RatFun]]:
    table = character_table(quotient_desc)
    group = build_group(quotient_desc)
    order = FIELD.convert(table.order)
    weights = []
    for cls in table.classes:
        det = FIELD.from_sympy(group.char_poly(cls.representative).as_expr())
        weights.append(FIELD.convert(cls.size) / (order * det))
    return table, weights


def omega_prime(
    group: WeightedAffineGroup, table: CFunctionTable, first: IrrLabel, second: IrrLabel
) -> RatFun:
    """One entry of Omega'.

    The class sum of chi_E chi_E' / det(q - w) over the finite quotient,
    divided by its order and by q^(c_E + c_E').
    """
    chars, weights = _class_weights(finite_quotient(group.descriptor).descriptor)
    row, other = chars.row(first), chars.row(second)
    total = FIELD.zero
    for k, weight in enumerate(weights):
        total += weight * row[k] * other[k]
    return total * q_power(-table.values[first] - table.values[second])


def green_system(
    group: WeightedAffineGroup, table: CFunctionTable, relations: OrderRelations
) -> GreenSystem:
    """Assemble Omega' over all pairs of irreducibles of the finite quotient."""
    chars, weights = _class_weights(finite_quotient(group.descriptor).descriptor)
    position = {label: k for k, label in enumerate(table.labels)}
    labels = tuple(
        sorted(table.labels, key=lambda label: (-table.values[label], position[label]))
    )
    c_values = tuple(table.values[label] for label in labels)
    rows = [chars.row(label) for label in labels]
    scale = [q_power(-c) for c in c_values]
    size = len(labels)
    entries: List[List[RatFun]] = [[FIELD.zero] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            total = FIELD.zero
            for k, weight in enumerate(weights):
                product = rows[i][k] * rows[j][k]
                if product:
                    total += weight * product
            entries[i][j] = entries[j][i] = total * scale[i] * scale[j]
    blocks: Dict[int, List[int]] = {}
    for k, c in enumerate(c_values):
        blocks.setdefault(c, []).append(k)
    index = {label: k for k, label in enumerate(labels)}
    sim = tuple(
        tuple(sorted(index[label] for label in cls)) for cls in relations.sim_classes
    )
    system = GreenSystem(
        group,
        labels,
        c_values,
        tuple(tuple(blocks[c]) for c in sorted(blocks, reverse=True)),
        sim,
        tuple(tuple(row) for row in entries),
    )
    _LOGGER.debug(
        "Omega' of %s: %d irreducibles in %d c-blocks", group, size, len(system.blocks)
    )
    return system


#
# Solving
#
@dataclass(frozen=True)
class PLambdaSolution:
    """P and Lambda' in the index order of the system."""

    system: GreenSystem
    p: Matrix
    lam: Matrix
    order: str = ORDER_ROW_BLOCK
    dropped: Tuple[Tuple[int, int], ...] = ()

    def p_entry(self, first: IrrLabel, second: IrrLabel) -> RatFun:
        """P_(first, second)."""
        return self.p[self.system.index(first)][self.system.index(second)]

    def lambda_entry(self, first: IrrLabel, second: IrrLabel) -> RatFun:
        """Lambda'_(first, second)."""
        return self.lam[self.system.index(first)][self.system.index(second)]

    def with_p_entry(self, i: int, j: int, value: RatFun) -> "PLambdaSolution":
        """Copy with one P entry replaced."""
        rows = [list(row) for row in self.p]
        rows[i][j] = value
        matrix = tuple(tuple(r) for r in rows)
        return PLambdaSolution(self.system, matrix, self.lam, self.order, self.dropped)

    def matrices(self) -> Iterator[Tuple[str, Matrix]]:
        """Yield (name, matrix) for P, Lambda' and Omega'."""
        yield MATRIX_P, self.p
        yield MATRIX_LAMBDA, self.lam
        yield MATRIX_OMEGA, self.system.omega

    def to_json(self) -> Dict[str, Any]:
        """JSON form with stringified rational functions."""
        result: Dict[str, Any] = {
            "group": self.system.group.to_json(),
            "labels": [str(label) for label in self.system.labels],
            "c": list(self.system.c_values),
            "order": self.order,
            "simDropped": [list(pair) for pair in self.dropped],
        }
        for name, matrix in self.matrices():
            result[name] = [[ratfun_to_string(x) for x in row] for row in matrix]
        return result


def _dm(rows: Sequence[Sequence[RatFun]]) -> DomainMatrix:
    data = [list(row) for row in rows]
    return DomainMatrix(data, (len(data), len(data[0]) if data else 0), FIELD)


def _sub(
    matrix: Sequence[Sequence[RatFun]], rows: Sequence[int], cols: Sequence[int]
) -> DomainMatrix:
    return _dm([[matrix[i][j] for j in cols] for i in rows])


def _store(
    target: List[List[RatFun]],
    rows: Sequence[int],
    cols: Sequence[int],
    value: DomainMatrix,
) -> None:
    values = value.to_list()
    for a, i in enumerate(rows):
        for b, j in enumerate(cols):
            target[i][j] = values[a][b]


def _invert(block: DomainMatrix, c_value: int) -> DomainMatrix:
    try:
        return block.inv()
    except DMNonInvertibleMatrixError as err:
        raise InvariantViolationError(ERROR_SINGULAR_BLOCK % c_value) from err


def _sim_pivot(
    system: GreenSystem,
    block: Sequence[int],
    residual: DomainMatrix,
    dropped: List[Tuple[int, int]],
) -> DomainMatrix:
    """The c-block of Lambda' with unknowns on the ~ classes only.

    Residual entries between different ~ classes are not allocated; their
    positions go to dropped.
    """
    values = residual.to_list()
    masked = [[FIELD.zero] * len(block) for _ in block]
    for a, i in enumerate(block):
        for b, j in enumerate(block):
            if system.similar(i, j):
                masked[a][b] = values[a][b]
            elif values[a][b]:
                dropped.append((i, j))
    return _dm(masked)


def _empty(size: int) -> List[List[RatFun]]:
    return [
        [FIELD.one if i == j else FIELD.zero for j in range(size)] for i in range(size)
    ]


def _solve_row_blocks(
    system: GreenSystem, dropped: List[Tuple[int, int]]
) -> Tuple[List[List[RatFun]], ...]:
    """Left-looking: each block row of P from the finished rows above it."""
    p = _empty(system.size)
    lam = [[FIELD.zero] * system.size for _ in range(system.size)]
    blocks = system.blocks
    for k, block in enumerate(blocks):
        inverse: Optional[DomainMatrix] = None
        for target in blocks[k:]:
            acc = _sub(system.omega, block, target)
            for earlier in blocks[:k]:
                acc = acc - (
                    _sub(p, earlier, block).transpose()
                    * _sub(lam, earlier, earlier)
                    * _sub(p, earlier, target)
                )
            if target is block:
                pivot = _sim_pivot(system, block, acc, dropped)
                _store(lam, block, block, pivot)
                inverse = _invert(pivot, system.c_values[block[0]])
            else:
                assert inverse is not None
                _store(p, block, target, inverse * acc)
        _LOGGER.debug(
            "Solved c-block %d of size %d", system.c_values[block[0]], len(block)
        )
    return p, lam


def _solve_column_blocks(
    system: GreenSystem, dropped: List[Tuple[int, int]]
) -> Tuple[List[List[RatFun]], ...]:
    """Right-looking: peel off one block and update the Schur complement."""
    p = _empty(system.size)
    lam = [[FIELD.zero] * system.size for _ in range(system.size)]
    rest = [list(row) for row in system.omega]
    blocks = system.blocks
    for k, block in enumerate(blocks):
        pivot = _sim_pivot(system, block, _sub(rest, block, block), dropped)
        _store(lam, block, block, pivot)
        inverse = _invert(pivot, system.c_values[block[0]])
        later = [i for b in blocks[k + 1:] for i in b]
        if not later:
            continue
        row = inverse * _sub(rest, block, later)
        _store(p, block, later, row)
        update = row.transpose() * pivot * row
        _store(rest, later, later, _sub(rest, later, later) - update)
    return p, lam


def solve_p_lambda(
    system: GreenSystem, order: str = ORDER_ROW_BLOCK
) -> PLambdaSolution:
    """Solve Omega' = P^T Lambda' P with P unitriangular and Lambda' c-block diagonal.

    Raises:
        DescriptorError: for an unknown elimination order.
        InvariantViolationError: when a diagonal block is singular.
    """
    if order not in ELIMINATION_ORDERS:
        raise DescriptorError(f"Unknown elimination order {order!r}")
    solver = _solve_row_blocks if order == ORDER_ROW_BLOCK else _solve_column_blocks
    dropped: List[Tuple[int, int]] = []
    p, lam = solver(system, dropped)
    solution = PLambdaSolution(
        system,
        tuple(tuple(r) for r in p),
        tuple(tuple(r) for r in lam),
        order,
        tuple(sorted(dropped)),
    )
    if dropped:
        _LOGGER.warning(
            "Omega' of %s is nonzero on %d pairs outside ~; Lambda' keeps them at 0",
            system.group,
            len(dropped),
        )
    _LOGGER.info("Solved P/Lambda' for %s (%s)", system.group, order)
    return solution


def compare_orders(system: GreenSystem) -> List[Tuple[str, int, int]]:
    """Entries where the two elimination orders disagree, as (matrix, i, j)."""
    first = solve_p_lambda(system, ORDER_ROW_BLOCK)
    second = solve_p_lambda(system, ORDER_COLUMN_BLOCK)
    mismatches: List[Tuple[str, int, int]] = []
    for (name, a), (_, b) in zip(first.matrices(), second.matrices()):
        for i, (row_a, row_b) in enumerate(zip(a, b)):
            mismatches.extend(
                (name, i, j) for j, (x, y) in enumerate(zip(row_a, row_b)) if x != y
            )
    if mismatches:
        _LOGGER.warning("Elimination orders disagree on %d entries", len(mismatches))
    return mismatches


#
# Verification
#
@dataclass(frozen=True)
class VerificationReport:
    """Outcome of re-checking every constraint of the system."""

    failures: Tuple[str, ...]
    sim_violations: Tuple[Tuple[int, int], ...]
    max_numerator_degree: int
    max_denominator_degree: int

    @property
    def passed(self) -> bool:
        """True when every constraint holds."""
        return not self.failures

    def to_json(self) -> Dict[str, Any]:
        """JSON form of the report."""
        return {
            "passed": self.passed,
            "failures": list(self.failures),
            "simViolations": [list(pair) for pair in self.sim_violations],
            "maxNumeratorDegree": self.max_numerator_degree,
            "maxDenominatorDegree": self.max_denominator_degree,
        }


def sim_support(solution: PLambdaSolution) -> Tuple[Tuple[int, int], ...]:
    """Pairs outside one ~ class that Lambda' would need, or carries.

    Solved Lambda' is zero off ~ by construction, so for a solver output this
    is the residual the elimination could not allocate.
    """
    system = solution.system
    carried = {
        (i, j)
        for i in range(system.size)
        for j in range(system.size)
        if solution.lam[i][j] and not system.similar(i, j)
    }
    result = tuple(sorted(carried | set(solution.dropped)))
    if result:
        _LOGGER.warning(
            "Lambda' of %s is needed on %d pairs outside ~", system.group, len(result)
        )
    return result


def verify_solution(
    solution: PLambdaSolution, omega: Optional[Matrix] = None
) -> VerificationReport:
    """Check P_EE = 1, the vanishing conditions and P^T Lambda' P = Omega' entrywise."""
    system = solution.system
    target = omega if omega is not None else system.omega
    p, lam = solution.p, solution.lam
    labels = system.labels
    failures: List[str] = []
    for i in range(system.size):
        for j in range(system.size):
            pair = (labels[i], labels[j])
            if i == j and p[i][j] != FIELD.one:
                failures.append(ERROR_VERIFICATION % ("P_EE = 1", *pair))
            if i != j and p[i][j] and (system.approx(i, j) or not system.leq(i, j)):
                failures.append(ERROR_VERIFICATION % ("P support", *pair))
            if lam[i][j] and not system.approx(i, j):
                failures.append(ERROR_VERIFICATION % ("Lambda' support", *pair))
    product = (_dm(p).transpose() * _dm(lam) * _dm(p)).to_list()
    for i in range(system.size):
        for j in range(system.size):
            if product[i][j] != target[i][j]:
                failures.append(
                    ERROR_VERIFICATION % ("P^T Lambda' P = Omega'", labels[i], labels[j])
                )
    nonzero = [x for row in p for x in row if x]
    report = VerificationReport(
        tuple(failures),
        sim_support(solution),
        max((_degree(x.numer) for x in nonzero), default=0),
        max((_degree(x.denom) for x in nonzero), default=0),
    )
    if not report.passed:
        _LOGGER.warning("Solution for %s fails %d checks", system.group, len(failures))
    return report


#
# Export
#
def specialization_csv(solution: PLambdaSolution, q_text: str) -> str:
    """CSV of P, Lambda' and Omega' evaluated at a rational q."""
    q_value = parse_q(q_text)
    labels = [str(label) for label in solution.system.labels]
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["matrix", "row", *labels])
    for name, matrix in solution.matrices():
        for label, row in zip(labels, matrix):
            writer.writerow([name, label, *(str(specialize(x, q_value)) for x in row)])
    return buffer.getvalue()
