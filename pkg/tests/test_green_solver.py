"""Test suite for the P / Lambda' solver.

The affine A1 system has a closed form: with m = max(t, s) the sign comes
first, P(sign, trivial) = q^(m-1), Lambda'(sign, sign) = q^(1-2m)/(q^2-1)
and Lambda'(trivial, trivial) = 1/q. Larger systems are checked through
verification and by comparing both elimination orders.
"""
from __future__ import annotations

import csv
import io
from typing import List, Tuple

import pytest
from sympy import Rational

from blockweyl.char_tables import character_table
from blockweyl.const import MATRIX_LAMBDA, MATRIX_OMEGA, MATRIX_P, ORDER_COLUMN_BLOCK
from blockweyl.coxeter_core import affine_type, finite_type
from blockweyl.exceptions import DescriptorError
from blockweyl.green_solver import (
    FIELD,
    GreenSystem,
    PLambdaSolution,
    compare_orders,
    green_system,
    omega_prime,
    parse_q,
    q_power,
    ratfun,
    solve_p_lambda,
    specialization_csv,
    specialize,
    verify_solution,
)
from blockweyl.weighted_affine import WeightedAffineGroup, c_function, order_relations


def _system(descriptor_family: str, rank: int, weights: Tuple[int, ...]) -> GreenSystem:
    group = WeightedAffineGroup.from_weights(affine_type(descriptor_family, rank), weights)
    table = c_function(group)
    return green_system(group, table, order_relations(table))


def _a1_solution(weights: Tuple[int, int]) -> PLambdaSolution:
    return solve_p_lambda(_system("A", 1, weights))


def test_ratfun_parsing() -> None:
    """Test conversion of ints and strings into the field."""
    assert ratfun(1) == FIELD.one
    assert ratfun("q**2") == q_power(2)
    assert ratfun("1/q") == q_power(-1)
    with pytest.raises(DescriptorError):
        ratfun("q+(")


def test_parse_q() -> None:
    """Test reading rational values of q."""
    assert parse_q("2") == 2
    assert parse_q("3/2") == Rational(3, 2)
    with pytest.raises(DescriptorError):
        parse_q("abc")


def test_specialize() -> None:
    """Test evaluation at a rational q and refusal at a pole."""
    value = ratfun("q/(q**2 - 1)")
    assert specialize(value, Rational(2)) == Rational(2, 3)
    with pytest.raises(DescriptorError):
        specialize(value, Rational(1))


def test_system_order_affine_a1() -> None:
    """Test that the sign, with the larger c, comes first."""
    system = _system("A", 1, (2, 3))
    table = character_table(finite_type("A", 1))
    assert system.labels == (table.sign, table.trivial)
    assert system.c_values == (3, 0)
    assert system.blocks == ((0,), (1,))
    assert system.leq(0, 1)
    assert not system.leq(1, 0)


def test_omega_prime_entry() -> None:
    """Test one Omega' entry against the class-sum formula."""
    group = WeightedAffineGroup.from_weights(affine_type("A", 1), (1, 1))
    table = c_function(group)
    trivial = character_table(finite_type("A", 1)).trivial
    assert omega_prime(group, table, trivial, trivial) == ratfun("q/(q**2 - 1)")


def test_closed_form_affine_a1() -> None:
    """Test the affine A1 solution for several weights.

    Verifies that:
    1. P(sign, trivial) = q^(m-1)
    2. Lambda'(sign, sign) = q^(1-2m)/(q^2-1)
    3. Lambda'(trivial, trivial) = 1/q
    """
    table = character_table(finite_type("A", 1))
    sign, trivial = table.sign, table.trivial
    test_cases: List[Tuple[Tuple[int, int], int]] = [
        ((1, 1), 1),
        ((1, 2), 2),
        ((3, 2), 3),
        ((1, 4), 4),
    ]
    for weights, m in test_cases:
        solution = _a1_solution(weights)
        assert solution.p_entry(sign, trivial) == q_power(m - 1)
        assert solution.p_entry(trivial, sign) == FIELD.zero
        assert solution.p_entry(sign, sign) == FIELD.one
        assert solution.lambda_entry(sign, sign) == q_power(1 - 2 * m) / ratfun("q**2 - 1")
        assert solution.lambda_entry(trivial, trivial) == q_power(-1)
        assert solution.lambda_entry(sign, trivial) == FIELD.zero
    equal = _a1_solution((1, 1))
    assert equal.p_entry(sign, trivial) == FIELD.one


def test_verify_solution() -> None:
    """Test that a solved system passes every check."""
    solution = _a1_solution((1, 3))
    report = verify_solution(solution)
    assert report.passed
    assert report.sim_violations == ()
    assert solution.dropped == ()
    assert report.max_numerator_degree == 2
    assert report.to_json()["passed"] is True


def test_verify_detects_corruption() -> None:
    """Test that replacing one P entry is caught."""
    solution = _a1_solution((1, 3))
    wrong_value = solution.with_p_entry(0, 1, q_power(3))
    report = verify_solution(wrong_value)
    assert not report.passed
    assert any("Omega'" in failure for failure in report.failures)
    wrong_support = solution.with_p_entry(1, 0, FIELD.one)
    assert any("P support" in f for f in verify_solution(wrong_support).failures)


def test_elimination_orders_agree_affine_a1() -> None:
    """Test that row-block and column-block elimination agree."""
    system = _system("A", 1, (2, 5))
    assert compare_orders(system) == []
    column = solve_p_lambda(system, ORDER_COLUMN_BLOCK)
    assert column.order == ORDER_COLUMN_BLOCK
    assert verify_solution(column).passed
    with pytest.raises(DescriptorError):
        solve_p_lambda(system, "diagonal")


@pytest.mark.slow
def test_affine_c2_and_g2_systems(g2_weighted: WeightedAffineGroup) -> None:
    """Test solving systems with a c-block of size two and a G2 system."""
    c2 = _system("C", 2, (1, 1, 1))
    assert sorted(len(block) for block in c2.blocks) == [1, 1, 1, 2]
    assert verify_solution(solve_p_lambda(c2)).passed
    assert compare_orders(c2) == []
    table = c_function(g2_weighted)
    g2 = green_system(g2_weighted, table, order_relations(table))
    assert verify_solution(solve_p_lambda(g2)).passed


def test_solution_json() -> None:
    """Test the JSON form of a solution."""
    data = _a1_solution((1, 2)).to_json()
    assert data["c"] == [2, 0]
    assert data[MATRIX_P][0][1] == "(q)/(1)"
    assert set(data) >= {MATRIX_P, MATRIX_LAMBDA, MATRIX_OMEGA, "labels", "order"}


def test_specialization_csv() -> None:
    """Test the CSV export at q = 2."""
    solution = _a1_solution((1, 3))
    rows = list(csv.reader(io.StringIO(specialization_csv(solution, "2"))))
    labels = [str(label) for label in solution.system.labels]
    assert rows[0] == ["matrix", "row", *labels]
    assert len(rows) == 1 + 3 * 2
    assert rows[1] == [MATRIX_P, labels[0], "1", "4"]
    assert rows[4][0] == MATRIX_LAMBDA
    assert rows[4][3] == "1/2"
    with pytest.raises(DescriptorError):
        specialization_csv(solution, "1")


@pytest.mark.slow
def test_lambda_vanishes_off_sim_classes() -> None:
    """Test that Lambda' has no entries between different ~ classes.

    Verifies that:
    1. Every nonzero Lambda' entry of affine C3 with weights (1, 2, 2, 1) lies in one ~ class
    2. Residual entries the elimination could not place are equal-c pairs outside ~
    3. Verification reports exactly those pairs and fails only because of them
    4. Both elimination orders agree
    """
    system = _system("C", 3, (1, 2, 2, 1))
    solution = solve_p_lambda(system)
    for i in range(system.size):
        for j in range(system.size):
            if solution.lam[i][j]:
                assert system.similar(i, j), (i, j)
    for i, j in solution.dropped:
        assert system.approx(i, j)
        assert not system.similar(i, j)
    report = verify_solution(solution)
    assert report.sim_violations == solution.dropped
    assert report.passed == (not solution.dropped)
    assert solve_p_lambda(system, ORDER_COLUMN_BLOCK).dropped == solution.dropped
    assert compare_orders(system) == []
    assert solution.to_json()["simDropped"] == [list(pair) for pair in solution.dropped]
