"""Cross-check suite and golden data for blockweyl.

This module provides:
1. Regeneration of the golden tables (sharp list, blocks, weighted groups, c-tables)
2. Comparison of regenerated tables with the packaged golden file
3. Invariant sweeps over every affine family up to a rank bound
4. A suite runner collecting per-check results
"""
from __future__ import annotations

import itertools
import json
import logging
import random
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from sympy import Rational

from .affine_blocks import (
    blocks_by_predicate,
    delta_r_to_ts,
    enumerate_blocks,
    sharp_list,
    ts_to_delta_r,
)
from .char_tables import (
    IrrLabel,
    SubgroupEmbedding,
    character_table,
    induction_multiplicities,
    parabolic_embedding,
    restriction_multiplicities,
)
from .config import Settings
from .const import (
    BOND_LABELS,
    CLASSICAL_FAMILIES,
    DATA_GOLDEN,
    DEFAULT_G2_TABLE,
    ERROR_BAD_DATA,
    MIN_AFFINE_RANK,
    PROVENANCE_TABULATED,
)
from .coxeter_core import (
    CoxeterDescriptor,
    DiagramAutomorphism,
    affine_type,
    build_group,
    finite_type,
    node_classes,
    omega_group,
    parse_descriptor,
    select_omegas,
)
from .exceptions import BlockWeylError, DescriptorError
from .green_solver import (
    compare_orders,
    green_system,
    omega_prime,
    solve_p_lambda,
    verify_solution,
)
from .hecke_invariants import (
    a_invariant,
    j_induction,
    printed_list_discrepancies,
    special_representations,
    symbol_a_value,
    table_a_value,
)
from .weighted_affine import (
    WeightedAffineGroup,
    build_weighted_group,
    c_function,
    expected_weighted_group,
    nu,
    order_relations,
)

_LOGGER = logging.getLogger(__name__)

# Largest index of the sharp list kept in the golden file
GOLDEN_MAX_T = 13

# Sweep bounds of verify: blocks up to affine rank 9, P/Lambda' up to quotient rank 4
VERIFY_MAX_RANK = 9
VERIFY_GREEN_RANK = 4
VERIFY_TABLE_RANK = 6

# Random (J, E, E') triples of the Frobenius check, drawn from a fixed seed
FROBENIUS_SAMPLES = 100
FROBENIUS_SEED = 1729

EXCEPTIONAL_AFFINE: Tuple[Tuple[str, int], ...] = (
    ("E6", 6), ("E7", 7), ("E8", 8), ("F4", 4), ("G2", 2)
)

# (descriptor, omega selector) pairs whose blocks are frozen by a-value
GOLDEN_BLOCK_CASES: Tuple[Tuple[str, str], ...] = (
    ("~A5", "k=2"),
    ("~E6", "nontrivial"),
    ("~E7", "nontrivial"),
    ("~E8", "1"),
    ("~F4", "1"),
    ("~G2", "1"),
)

# (descriptor, omega selector) pairs whose weighted group of J = {} is frozen
GOLDEN_GROUP_CASES: Tuple[Tuple[str, str], ...] = (
    ("~A5", "k=2"),
    ("~A5", "k=3"),
    ("~A5", "k=6"),
    ("~E6", "nontrivial"),
    ("~E7", "nontrivial"),
)


def _c_table_cases() -> List[Tuple[str, Tuple[int, ...]]]:
    cases: List[Tuple[str, Tuple[int, ...]]] = [("~G2", (3, 3, 1))]
    cases.extend(("~C2", (u, 1, u)) for u in range(1, 7))
    cases.extend(("~C2", (u, 1, u - 1)) for u in range(2, 7))
    cases.extend(("~C2", (u, 2, u - 1)) for u in range(2, 7))
    cases.extend(("~C3", (u, 2, 2, u - 1)) for u in range(2, 7))
    return cases


#
# Golden data
#
def _block_rows(descriptor: str, selector: str) -> List[Dict[str, Any]]:
    affine = parse_descriptor(descriptor)
    rows = []
    for omega in select_omegas(affine, selector):
        blocks = enumerate_blocks(affine, omega)
        rows.append(
            {
                "descriptor": descriptor,
                "omegaOrder": omega.order,
                "aValues": sorted(block.a_value for block in blocks),
            }
        )
    return rows


def _group_rows(descriptor: str, selector: str, g2_table: str) -> List[Dict[str, Any]]:
    affine = parse_descriptor(descriptor)
    rows = []
    for omega in select_omegas(affine, selector):
        group = build_weighted_group(affine, omega, (), g2_table)
        rows.append(
            {
                "descriptor": descriptor,
                "omegaOrder": omega.order,
                "type": "{1}" if group.is_degenerate else group.descriptor.name,
                "weights": list(group.canonical_weights),
            }
        )
    return rows


def _c_table_row(descriptor: str, weights: Sequence[int], g2_table: str) -> Dict[str, Any]:
    group = WeightedAffineGroup.from_weights(parse_descriptor(descriptor), weights)
    table = c_function(group, g2_table)
    pairs = sorted([table.values[label], table.second_row[label]] for label in table.labels)
    return {"descriptor": descriptor, "weights": list(weights), "pairs": pairs}


def build_golden(g2_table: str = DEFAULT_G2_TABLE) -> Dict[str, Any]:
    """Regenerate every golden table from the engine."""
    golden: Dict[str, Any] = {
        "sharpList": sharp_list(GOLDEN_MAX_T),
        "blocks": [row for case in GOLDEN_BLOCK_CASES for row in _block_rows(*case)],
        "weightedGroups": [
            row for case in GOLDEN_GROUP_CASES for row in _group_rows(*case, g2_table)
        ],
        "cTables": [_c_table_row(d, w, g2_table) for d, w in _c_table_cases()],
    }
    _LOGGER.info("Regenerated %d golden sections", len(golden))
    return golden


def load_golden(path: Optional[str] = None) -> Dict[str, Any]:
    """Read the packaged golden file, or another one given by path."""
    try:
        if path:
            text = Path(path).read_text(encoding="utf-8")
        else:
            text = resources.files("blockweyl").joinpath("data", DATA_GOLDEN).read_text(
                encoding="utf-8"
            )
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as err:
        raise DescriptorError(ERROR_BAD_DATA % (path or DATA_GOLDEN, err)) from err


def write_golden(directory: str, g2_table: str = DEFAULT_G2_TABLE) -> Path:
    """Write regenerated golden tables into a directory; returns the file path."""
    target = Path(directory)
    target.mkdir(parents=True, exist_ok=True)
    path = target / DATA_GOLDEN
    path.write_text(
        json.dumps(build_golden(g2_table), indent=2, sort_keys=True) + "\n",
        encoding="utf-8",
    )
    _LOGGER.info("Wrote golden tables to %s", path)
    return path


def diff_golden(expected: Dict[str, Any], actual: Dict[str, Any]) -> List[str]:
    """Describe every row where two golden mappings differ."""
    problems: List[str] = []
    for section in sorted(set(expected) | set(actual)):
        want, got = expected.get(section), actual.get(section)
        if want is None or got is None:
            problems.append(f"{section}: section missing")
            continue
        if len(want) != len(got):
            problems.append(f"{section}: {len(got)} rows, expected {len(want)}")
        for k, (a, b) in enumerate(zip(want, got)):
            if a != b:
                problems.append(f"{section}[{k}]: got {b}, expected {a}")
    return problems


#
# Checks
#
@dataclass(frozen=True)
class CheckResult:
    """Outcome of one check."""

    name: str
    checked: int
    failures: Tuple[str, ...]
    skipped: Tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        """True without failures."""
        return not self.failures

    def to_json(self) -> Dict[str, Any]:
        """JSON form of the result."""
        return {
            "name": self.name,
            "checked": self.checked,
            "passed": self.passed,
            "failures": list(self.failures),
            "skipped": list(self.skipped),
        }


@dataclass(frozen=True)
class SuiteOptions:
    """Bounds of the sweeps."""

    max_rank: int = VERIFY_MAX_RANK
    green_rank: int = VERIFY_GREEN_RANK
    table_rank: int = VERIFY_TABLE_RANK
    g2_table: str = DEFAULT_G2_TABLE
    golden_path: Optional[str] = None

    @classmethod
    def from_settings(cls, settings: Settings, **overrides: Any) -> "SuiteOptions":
        """Suite options using the g2 table of the run settings."""
        return cls(g2_table=settings.g2_table, **overrides)


def _classical_affine(max_rank: int) -> List[CoxeterDescriptor]:
    return [
        affine_type(family, rank)
        for family in ("B", "C", "D")
        for rank in range(MIN_AFFINE_RANK[family], max_rank + 1)
    ]


def _omegas(affine: CoxeterDescriptor) -> Tuple[DiagramAutomorphism, ...]:
    return omega_group(affine).elements


def check_golden(options: SuiteOptions) -> CheckResult:
    """Regenerated tables equal the golden file."""
    expected = load_golden(options.golden_path)
    problems = diff_golden(expected, build_golden(options.g2_table))
    return CheckResult("golden", sum(len(v) for v in expected.values()), tuple(problems))


def check_character_tables(options: SuiteOptions) -> CheckResult:
    """Both orthogonality relations for every finite table up to the rank bound."""
    descs = [finite_type("A", n) for n in range(1, options.table_rank + 3)]
    descs += [finite_type("B", n) for n in range(2, options.table_rank + 1)]
    descs += [finite_type("D", n) for n in range(4, options.table_rank + 1)]
    descs += [finite_type("G2", 2), finite_type("F4", 4)]
    failures = []
    for desc in descs:
        try:
            character_table(desc).check_orthogonality()
        except BlockWeylError as err:
            failures.append(f"{desc.name}: {err}")
    return CheckResult("character-tables", len(descs), tuple(failures))


def check_enumeration(options: SuiteOptions) -> CheckResult:
    """Closed-form enumeration equals the predicate scan; coordinate maps invert.

    Runs over the classical families and type A up to the rank bound, and
    over every exceptional affine type.
    """
    failures: List[str] = []
    checked = 0
    diagrams = _classical_affine(options.max_rank)
    diagrams += [affine_type("A", n) for n in range(1, options.max_rank + 1)]
    diagrams += [affine_type(family, rank) for family, rank in EXCEPTIONAL_AFFINE]
    for affine in diagrams:
        for omega in _omegas(affine):
            checked += 1
            try:
                blocks = enumerate_blocks(affine, omega)
                scanned = set(blocks_by_predicate(affine, omega))
            except BlockWeylError as err:
                failures.append(f"{affine.name} omega={omega}: {err}")
                continue
            listed = {block.nodes for block in blocks}
            if listed != scanned:
                failures.append(
                    f"{affine.name} omega={omega}: enumerated {sorted(listed)}, "
                    f"predicate {sorted(scanned)}"
                )
            for block in blocks:
                if block.ts is None or block.delta_r is None:
                    continue
                if ts_to_delta_r(affine, omega, block.ts) != block.delta_r:
                    failures.append(f"{affine.name} {block.label}: (t,s) -> (delta,r)")
                if delta_r_to_ts(affine, omega, block.delta_r) != block.ts:
                    failures.append(f"{affine.name} {block.label}: (delta,r) -> (t,s)")
    return CheckResult("enumeration", checked, tuple(failures))


def check_weighted_groups(options: SuiteOptions) -> CheckResult:
    """The constructed weighted group of every block matches the case tables.

    Groups whose weights fell back to the case tables are listed as skipped;
    comparing them with the same tables proves nothing.
    """
    failures: List[str] = []
    skipped: List[str] = []
    checked = 0
    cases = [(affine, _omegas(affine)) for affine in _classical_affine(options.max_rank)]
    cases += [
        (affine_type("A", n), _omegas(affine_type("A", n)))
        for n in range(1, options.max_rank + 1)
    ]
    cases += [
        (affine, tuple(select_omegas(affine, "nontrivial")))
        for affine in (affine_type("E6", 6), affine_type("E7", 7))
    ]
    for affine, omegas in cases:
        for omega in omegas:
            for block in enumerate_blocks(affine, omega):
                if affine.family not in CLASSICAL_FAMILIES and block.nodes:
                    continue
                group = build_weighted_group(affine, omega, block.nodes, options.g2_table)
                name = f"{affine.name} omega={omega} J={block.label}"
                if group.provenance == PROVENANCE_TABULATED:
                    skipped.append(f"{name}: weights tabulated")
                    continue
                checked += 1
                expected = expected_weighted_group(block)
                if not group.same_type(expected):
                    failures.append(f"{name}: {group} != {expected}")
    return CheckResult("weighted-groups", checked, tuple(failures), tuple(skipped))


def check_nu(options: SuiteOptions) -> CheckResult:
    """nu of affine A1 with weights (t, s) is max(t, s)."""
    failures = []
    pairs = [(t, s) for t in range(1, 6) for s in range(1, 6)]
    for t, s in pairs:
        group = WeightedAffineGroup.from_weights(affine_type("A", 1), (t, s))
        if nu(group) != max(t, s):
            failures.append(f"nu(~A1({t},{s})) = {nu(group)}")
    return CheckResult("nu", len(pairs), tuple(failures))


def check_weight_scaling(options: SuiteOptions) -> CheckResult:
    """a with k times the weights is k times a, for k up to 4 and rank up to 3."""
    descs = [
        finite_type("A", 1),
        finite_type("A", 2),
        finite_type("B", 2),
        finite_type("G2", 2),
        finite_type("B", 3),
    ]
    failures = []
    checked = 0
    for desc in descs:
        classes = node_classes(desc)
        for values in itertools.product(range(1, 4), repeat=len(classes)):
            weights = [0] * desc.size
            for cls, value in zip(classes, values):
                for node in cls:
                    weights[node] = value
            for label in character_table(desc).labels:
                base = a_invariant(desc, weights, label, options.g2_table)
                for k in range(2, 5):
                    checked += 1
                    scaled = [k * w for w in weights]
                    if a_invariant(desc, scaled, label, options.g2_table) != k * base:
                        failures.append(f"{desc.name} {weights} {label}: k={k}")
    return CheckResult("weight-scaling", checked, tuple(failures))


FROBENIUS_TYPES: Tuple[Tuple[str, int], ...] = (
    ("A", 3), ("A", 4), ("B", 3), ("B", 4), ("D", 4), ("D", 5), ("G2", 2)
)


def _elementwise_multiplicity(
    embedding: SubgroupEmbedding, label: IrrLabel, big_label: IrrLabel
) -> Rational:
    """<E, Res E'> summed over the subgroup elements one at a time."""
    sub_group = build_group(embedding.sub)
    big_group = build_group(embedding.big)
    sub_table = character_table(embedding.sub)
    big_table = character_table(embedding.big)
    sub_row = sub_table.row(label)
    big_row = big_table.row(big_label)
    total = 0
    for element in sub_group.elements():
        image = big_group.identity
        for node in sub_group.reduced_word(element):
            image = big_group.multiply(image, embedding.images[node])
        total += (
            sub_row[sub_table.class_index(sub_group.class_label(element))]
            * big_row[big_table.class_index(big_group.class_label(image))]
        )
    return Rational(total, sub_group.order)


def frobenius_samples(
    count: int = FROBENIUS_SAMPLES, seed: int = FROBENIUS_SEED
) -> List[Tuple[SubgroupEmbedding, Tuple[int, ...], IrrLabel, IrrLabel]]:
    """Seeded random (W, J, E, E') with J a nonempty proper node subset."""
    rng = random.Random(seed)
    samples = []
    for _ in range(count):
        big = finite_type(*rng.choice(FROBENIUS_TYPES))
        size = rng.randint(1, big.size - 1)
        nodes = tuple(sorted(rng.sample(list(big.nodes), size)))
        embedding = parabolic_embedding(big, nodes)
        label = rng.choice(character_table(embedding.sub).labels)
        big_label = rng.choice(character_table(big).labels)
        samples.append((embedding, nodes, label, big_label))
    return samples


def check_frobenius(
    options: SuiteOptions, count: int = FROBENIUS_SAMPLES, seed: int = FROBENIUS_SEED
) -> CheckResult:
    """Induction and restriction multiplicities equal an elementwise inner product.

    The inner product runs over the subgroup elements, each sent into the big
    group through a reduced word, so it does not use the class fusion.
    """
    failures = []
    for embedding, nodes, label, big_label in frobenius_samples(count, seed):
        direct = _elementwise_multiplicity(embedding, label, big_label)
        induced = induction_multiplicities(embedding, label).get(big_label, 0)
        restricted = restriction_multiplicities(embedding, big_label).get(label, 0)
        if not direct == induced == restricted:
            failures.append(
                f"{embedding.big.name} J={nodes} {label} / {big_label}: "
                f"elementwise {direct}, induced {induced}, restricted {restricted}"
            )
    return CheckResult("frobenius", count, tuple(failures))


def check_printed_lists(options: SuiteOptions) -> CheckResult:
    """a-values of A1, A2, B2, G2 and B3 follow the closed-form lists on {1..5}^2."""
    found = printed_list_discrepancies(g2_table=options.g2_table)
    failures = tuple(
        f"{d.key}({d.a},{d.b}) {d.label}: computed {d.computed}, list {d.closed_form}"
        for d in found
    )
    return CheckResult("printed-lists", 5 * 25, failures)


def _signed_trace(x: Tuple[int, ...]) -> int:
    return sum((v == i + 1) - (v == -(i + 1)) for i, v in enumerate(x))


def check_d4_split_classes(options: SuiteOptions) -> CheckResult:
    """D4 conjugacy classes from brute-force orbits agree with the table classes.

    The orbits are closed under conjugation by the simple reflections. Each
    must carry one class label and the size of that class; the split pairs
    (2,2)+/- and (4)+/- among them.
    """
    desc = finite_type("D", 4)
    group = build_group(desc)
    table = character_table(desc)
    failures: List[str] = []
    sizes = {cls.label: cls.size for cls in table.classes}
    remaining = set(group.elements())
    seen_labels = set()
    while remaining:
        start = remaining.pop()
        orbit = {start}
        frontier = [start]
        while frontier:
            x = frontier.pop()
            for gen in group.generators:
                y = group.conjugate(x, gen)
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        remaining -= orbit
        labels = {group.class_label(x) for x in orbit}
        if len(labels) != 1:
            failures.append(f"orbit of {start} carries labels {sorted(map(str, labels))}")
            continue
        (label,) = labels
        if label in seen_labels or sizes.get(label) != len(orbit):
            failures.append(f"class {label}: orbit size {len(orbit)}, table {sizes.get(label)}")
        seen_labels.add(label)
    if seen_labels != set(sizes):
        failures.append(f"orbits give {len(seen_labels)} classes, table {len(sizes)}")
    try:
        table.check_orthogonality()
        trace = table.decompose([_signed_trace(cls.representative) for cls in table.classes])
    except BlockWeylError as err:
        failures.append(str(err))
    else:
        if sorted(trace.values()) != [1]:
            failures.append(f"reflection character decomposes as {trace}")
    return CheckResult("d4-split-classes", group.order, tuple(failures))


J_INDUCTION_TYPES: Tuple[Tuple[str, int], ...] = (
    ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("D", 4), ("G2", 2)
)


def check_j_induction_specials(options: SuiteOptions) -> CheckResult:
    """j-induction from a proper parabolic sends special irreducibles to specials."""
    failures: List[str] = []
    checked = 0
    for family, rank in J_INDUCTION_TYPES:
        big = finite_type(family, rank)
        specials = set(special_representations(big, g2_table=options.g2_table))
        for size in range(1, big.size):
            for nodes in itertools.combinations(big.nodes, size):
                embedding = parabolic_embedding(big, nodes)
                for label in special_representations(embedding.sub, g2_table=options.g2_table):
                    checked += 1
                    try:
                        image = j_induction(embedding, label, g2_table=options.g2_table)
                    except BlockWeylError as err:
                        failures.append(f"{big.name} J={nodes} {label}: {err}")
                        continue
                    if image not in specials:
                        failures.append(f"{big.name} J={nodes}: j({label}) = {image} not special")
    return CheckResult("j-induction-specials", checked, tuple(failures))


def check_route_consistency(options: SuiteOptions) -> CheckResult:
    """The generic-degree table and the symbol give the same a-values for B2 and B3."""
    failures: List[str] = []
    checked = 0
    cases = [
        (finite_type("B", 2), lambda a, b: (a, b)),
        (finite_type("B", 3), lambda a, b: (a, a, b)),
    ]
    for desc, weights_of in cases:
        labels = character_table(desc).labels
        for a, b in itertools.product(range(1, 6), repeat=2):
            weights = weights_of(a, b)
            for label in labels:
                checked += 1
                tabled = table_a_value(desc, weights, label, options.g2_table)
                symbol = symbol_a_value(desc, weights, label)
                if tabled != symbol:
                    failures.append(
                        f"{desc.name}{list(weights)} {label}: table {tabled}, symbol {symbol}"
                    )
    return CheckResult("route-consistency", checked, tuple(failures))


def check_char_poly_classes(options: SuiteOptions) -> CheckResult:
    """The characteristic polynomial is constant on every conjugacy class."""
    top = min(options.max_rank, 4)
    descs = [finite_type("A", n) for n in range(1, top + 1)]
    descs += [finite_type("B", n) for n in range(2, top + 1)]
    descs += [finite_type("D", n) for n in range(4, top + 1)]
    descs += [finite_type("G2", 2), finite_type("F4", 4)]
    failures: List[str] = []
    checked = 0
    for desc in descs:
        group = build_group(desc)
        expected = {
            cls.label: group.char_poly(cls.representative) for cls in group.conjugacy_classes()
        }
        for element in group.elements():
            checked += 1
            label = group.class_label(element)
            if group.char_poly(element) != expected.get(label):
                failures.append(f"{desc.name} {element}: not the polynomial of class {label}")
    return CheckResult("char-poly-classes", checked, tuple(failures))


def check_matrices(options: SuiteOptions) -> CheckResult:
    """Constructed Coxeter matrices are symmetric with crystallographic bonds."""
    failures: List[str] = []
    checked = 0
    for affine in _classical_affine(options.max_rank):
        for omega in _omegas(affine):
            for block in enumerate_blocks(affine, omega):
                group = build_weighted_group(affine, omega, block.nodes, options.g2_table)
                if group.is_degenerate or not group.matrix:
                    continue
                checked += 1
                matrix = group.matrix
                size = len(matrix)
                if any(matrix[i][i] != 1 for i in range(size)) or any(
                    matrix[i][j] != matrix[j][i] or matrix[i][j] not in BOND_LABELS
                    for i in range(size)
                    for j in range(i)
                ):
                    failures.append(f"{affine.name} omega={omega} J={block.label}: {matrix}")
    return CheckResult("matrices", checked, tuple(failures))


def check_green(options: SuiteOptions) -> CheckResult:
    """Solve, verify and compare both elimination orders for small quotients."""
    failures: List[str] = []
    checked = 0
    for affine in _classical_affine(options.max_rank):
        for omega in _omegas(affine):
            for block in enumerate_blocks(affine, omega):
                group = build_weighted_group(affine, omega, block.nodes, options.g2_table)
                if group.is_degenerate or group.descriptor.rank > options.green_rank:
                    continue
                checked += 1
                table = c_function(group, options.g2_table)
                system = green_system(group, table, order_relations(table, options.g2_table))
                name = f"{affine.name} omega={omega} J={block.label}"
                labels = system.labels
                if any(
                    system.omega[i][j] != omega_prime(group, table, labels[j], labels[i])
                    for i in range(system.size)
                    for j in range(i)
                ):
                    failures.append(f"{name}: Omega' is not symmetric")
                report = verify_solution(solve_p_lambda(system))
                failures.extend(f"{name}: {problem}" for problem in report.failures)
                if compare_orders(system):
                    failures.append(f"{name}: elimination orders disagree")
    return CheckResult("green", checked, tuple(failures))


CHECKS: Dict[str, Callable[[SuiteOptions], CheckResult]] = {
    "golden": check_golden,
    "character-tables": check_character_tables,
    "enumeration": check_enumeration,
    "weighted-groups": check_weighted_groups,
    "nu": check_nu,
    "weight-scaling": check_weight_scaling,
    "frobenius": check_frobenius,
    "printed-lists": check_printed_lists,
    "d4-split-classes": check_d4_split_classes,
    "j-induction-specials": check_j_induction_specials,
    "route-consistency": check_route_consistency,
    "char-poly-classes": check_char_poly_classes,
    "matrices": check_matrices,
    "green": check_green,
}


def run_suite(
    options: SuiteOptions, names: Optional[Sequence[str]] = None
) -> List[CheckResult]:
    """Run the named checks (all by default); a raised error counts as a failure."""
    selected = list(names) if names else list(CHECKS)
    unknown = [name for name in selected if name not in CHECKS]
    if unknown:
        raise DescriptorError(f"Unknown checks {unknown}; choose from {sorted(CHECKS)}")
    results = []
    for name in selected:
        _LOGGER.debug("Running check %s", name)
        try:
            result = CHECKS[name](options)
        except BlockWeylError as err:
            result = CheckResult(name, 0, (f"{type(err).__name__}: {err}",))
        if not result.passed:
            _LOGGER.warning("Check %s failed %d times", name, len(result.failures))
        results.append(result)
    return results
