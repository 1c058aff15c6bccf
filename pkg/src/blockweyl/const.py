"""Constants for the blockweyl engine.

This module defines all constants used throughout the package:
1. Configuration keys, defaults and exit codes
2. Coxeter family data (Cartan matrices, highest roots, root counts)
3. Closed formulas and tabulated values for sharp twisted Weyl groups
4. Exceptional character data (labels, a-values, families)
5. Error message templates

The constants are organized by category and include type hints so that
every table is self-describing.
"""
from __future__ import annotations

from typing import Any, Dict, FrozenSet, List, Tuple, TypedDict

# Package domain
DOMAIN: str = "blockweyl"

#
# Configuration Constants
#
CONF_SYM_BOUND: str = "sym_bound"
CONF_DATA_PATH: str = "data_path"
CONF_OUTPUT_FORMAT: str = "output_format"
CONF_Q_VALUE: str = "q_value"
CONF_G2_TABLE: str = "g2_table"

CONF_SUBCOMMAND: str = "subcommand"
CONF_DESCRIPTOR: str = "descriptor"
CONF_OMEGA: str = "omega"
CONF_WEIGHTS: str = "weights"
CONF_J: str = "J"
CONF_OUT: str = "out"
CONF_VERBOSE: str = "verbose"

ENV_DATA_PATH: str = "BLOCKWEYL_DATA"

# Default configuration values
DEFAULT_SYM_BOUND: int = 64
DEFAULT_OUTPUT_FORMAT: str = "pretty"
DEFAULT_Q_VALUE: str = "2"
G2_TABLE_PRINTED: str = "printed"
G2_TABLE_CORRECTED: str = "corrected"
DEFAULT_G2_TABLE: str = G2_TABLE_PRINTED
DEFAULT_OMEGA: str = "1"

OUTPUT_FORMATS: Tuple[str, ...] = ("json", "csv", "pretty")
G2_TABLE_VARIANTS: Tuple[str, ...] = (G2_TABLE_PRINTED, G2_TABLE_CORRECTED)
SUBCOMMANDS: Tuple[str, ...] = (
    "blocks",
    "weighted-group",
    "c-table",
    "green",
    "sharp-list",
    "springer-index",
    "verify",
    "golden",
)

# Process exit codes
EXIT_OK: int = 0
EXIT_PARSE_ERROR: int = 2
EXIT_UNSUPPORTED: int = 3
EXIT_INVARIANT_FAILURE: int = 4

# Packaged data files
DATA_G2_TABLE: str = "g2.json"
DATA_GOLDEN: str = "golden.json"
DATA_WEIGHTED_F4: str = "weighted_a_F4.json"

#
# Coxeter Families
#
KIND_FINITE: str = "finite"
KIND_AFFINE: str = "affine"

FAMILY_PRODUCT: str = "X"
FAMILY_MATRIX: str = "M"
FAMILY_TRIVIAL: str = "1"

CLASSICAL_FAMILIES: FrozenSet[str] = frozenset({"A", "B", "C", "D"})
EXCEPTIONAL_FAMILIES: FrozenSet[str] = frozenset({"E6", "E7", "E8", "F4", "G2"})
ENUMERABLE_EXCEPTIONAL: FrozenSet[str] = frozenset({"F4", "G2"})

# Coxeter matrix entry standing for an infinite bond
BOND_INFINITY: int = 0

# Smallest admissible rank per family
MIN_FINITE_RANK: Dict[str, int] = {"A": 1, "B": 1, "C": 1, "D": 2}
MIN_AFFINE_RANK: Dict[str, int] = {"A": 1, "B": 3, "C": 2, "D": 4}

# Edge label counted towards S^! (sum of labels of touching edges)
BOND_LABELS: Dict[int, int] = {2: 0, 3: 1, 4: 2, 6: 3, BOND_INFINITY: 0}
BANG_THRESHOLD: int = 3

EXCEPTIONAL_RANKS: Dict[str, int] = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}

# Cartan matrices A with s_i(alpha_j) = alpha_j - A[i][j] alpha_i.
# E_n: Bourbaki labels shifted by one; F4: nodes 0,1 long, 2,3 short;
# G2: node 0 long, node 1 short.
EXCEPTIONAL_CARTAN: Dict[str, List[List[int]]] = {
    "E6": [
        [2, 0, -1, 0, 0, 0],
        [0, 2, 0, -1, 0, 0],
        [-1, 0, 2, -1, 0, 0],
        [0, -1, -1, 2, -1, 0],
        [0, 0, 0, -1, 2, -1],
        [0, 0, 0, 0, -1, 2],
    ],
    "E7": [
        [2, 0, -1, 0, 0, 0, 0],
        [0, 2, 0, -1, 0, 0, 0],
        [-1, 0, 2, -1, 0, 0, 0],
        [0, -1, -1, 2, -1, 0, 0],
        [0, 0, 0, -1, 2, -1, 0],
        [0, 0, 0, 0, -1, 2, -1],
        [0, 0, 0, 0, 0, -1, 2],
    ],
    "E8": [
        [2, 0, -1, 0, 0, 0, 0, 0],
        [0, 2, 0, -1, 0, 0, 0, 0],
        [-1, 0, 2, -1, 0, 0, 0, 0],
        [0, -1, -1, 2, -1, 0, 0, 0],
        [0, 0, 0, -1, 2, -1, 0, 0],
        [0, 0, 0, 0, -1, 2, -1, 0],
        [0, 0, 0, 0, 0, -1, 2, -1],
        [0, 0, 0, 0, 0, 0, -1, 2],
    ],
    "F4": [
        [2, -1, 0, 0],
        [-1, 2, -1, 0],
        [0, -2, 2, -1],
        [0, 0, -1, 2],
    ],
    "G2": [
        [2, -1],
        [-3, 2],
    ],
}

# Half squared root lengths d_i, so that (alpha_i, alpha_j) = d_i A[i][j]
EXCEPTIONAL_ROOT_SCALE: Dict[str, List[int]] = {
    "E6": [1] * 6,
    "E7": [1] * 7,
    "E8": [1] * 8,
    "F4": [2, 2, 1, 1],
    "G2": [3, 1],
}

# Highest root coefficients in the simple-root basis
EXCEPTIONAL_HIGHEST_ROOT: Dict[str, List[int]] = {
    "E6": [1, 2, 2, 3, 2, 1],
    "E7": [2, 2, 3, 4, 3, 2, 1],
    "E8": [2, 3, 4, 6, 5, 4, 3, 2],
    "F4": [2, 3, 4, 2],
    "G2": [2, 3],
}

EXCEPTIONAL_POSITIVE_ROOTS: Dict[str, int] = {
    "E6": 36,
    "E7": 63,
    "E8": 120,
    "F4": 24,
    "G2": 6,
}

EXCEPTIONAL_ORDERS: Dict[str, int] = {
    "E6": 51840,
    "E7": 2903040,
    "E8": 696729600,
    "F4": 1152,
    "G2": 12,
}

# Enumeration guard for finite groups
MAX_ENUMERATION: int = 10**7

#
# Sharp Twisted Weyl Groups
#
class SharpValue(TypedDict):
    """Type definition for a tabulated sharp a-value."""
    family: str
    twist_order: int
    a_value: int


# a-values of the exceptional sharp entries, keyed by (family, ord(gamma))
EXCEPTIONAL_SHARP: Dict[Tuple[str, int], SharpValue] = {
    ("G2", 1): {"family": "G2", "twist_order": 1, "a_value": 1},
    ("D4", 3): {"family": "D4", "twist_order": 3, "a_value": 3},
    ("F4", 1): {"family": "F4", "twist_order": 1, "a_value": 4},
    ("E6", 2): {"family": "E6", "twist_order": 2, "a_value": 7},
    ("E8", 1): {"family": "E8", "twist_order": 1, "a_value": 16},
}

# Special E0 with z(E0) = r(op) for exceptional sharp types
EXCEPTIONAL_E0: Dict[str, str] = {
    "G2": "phi2,1",
    "F4": "phi12,4",
    "E6": "phi80,7",
    "E8": "phi4480,16",
}

# Index of the trivial vertex in the two graphs of sharp groups
GRAPH_A_TRIVIAL_INDEX: int = 2
GRAPH_B_TRIVIAL_INDEX: int = 4
GRAPH_A: str = "a"
GRAPH_B: str = "b"

#
# Blocks
#
OMEGA_PRIME: str = "prime"
OMEGA_DOUBLEPRIME: str = "doubleprime"
TRIVIAL_BLOCK: str = "{1}"

# Conditions of the block predicate, in evaluation order
CONDITION_STABLE: str = "stable"
CONDITION_SHARP: str = "sharp"
CONDITION_IRREDUCIBLE: str = "irreducible_complement"
CONDITION_GRAPH_A_EDGE: str = "graph_a_edge"
CONDITION_GRAPH_B_EDGE: str = "graph_b_edge"
BLOCK_CONDITIONS: Tuple[str, ...] = (
    CONDITION_STABLE,
    CONDITION_SHARP,
    CONDITION_IRREDUCIBLE,
    CONDITION_GRAPH_A_EDGE,
    CONDITION_GRAPH_B_EDGE,
)

# Largest affine rank with a character-table backed Springer index set
MAX_SPRINGER_RANK: int = 4

#
# Weighted Affine Groups
#
PROVENANCE_INDUCTION: str = "induction"
# Weights copied from the case tables when the induction route is unavailable
PROVENANCE_TABULATED: str = "tabulated"

# Weighted group attached to {1} for omega != 1: (affine family, standard weights)
WEIGHTED_EXCEPTIONAL: Dict[str, Tuple[str, Tuple[int, ...]]] = {
    "E6": ("G2", (3, 3, 1)),
    "E7": ("F4", (2, 2, 2, 1, 1)),
}

#
# Green Solver
#
ORDER_ROW_BLOCK: str = "row-block"
ORDER_COLUMN_BLOCK: str = "column-block"
ELIMINATION_ORDERS: Tuple[str, ...] = (ORDER_ROW_BLOCK, ORDER_COLUMN_BLOCK)

MATRIX_P: str = "P"
MATRIX_LAMBDA: str = "Lambda'"
MATRIX_OMEGA: str = "Omega'"

#
# Exceptional Character Data
#
G2_LABELS: Tuple[str, ...] = (
    "phi1,0",
    "phi2,1",
    "phi2,2",
    "phi1,3''",
    "phi1,3'",
    "phi1,6",
)

# Equal-parameter a-values of F4 keyed by (dimension, b-value)
F4_A_VALUES: Dict[Tuple[int, int], int] = {
    (1, 0): 0,
    (4, 1): 1,
    (2, 4): 1,
    (9, 2): 2,
    (8, 3): 3,
    (12, 4): 4,
    (16, 5): 4,
    (6, 6): 4,
    (9, 6): 4,
    (4, 7): 4,
    (4, 8): 4,
    (1, 12): 4,
    (8, 9): 9,
    (9, 10): 10,
    (4, 13): 13,
    (2, 16): 13,
    (1, 24): 24,
}

# F4 families with more than one member, by label
F4_FAMILIES: Tuple[Tuple[str, ...], ...] = (
    ("phi4,1", "phi2,4'", "phi2,4''"),
    (
        "phi12,4",
        "phi16,5",
        "phi6,6'",
        "phi6,6''",
        "phi9,6'",
        "phi9,6''",
        "phi4,7'",
        "phi4,7''",
        "phi4,8",
        "phi1,12'",
        "phi1,12''",
    ),
    ("phi4,13", "phi2,16'", "phi2,16''"),
)

G2_FAMILIES: Tuple[Tuple[str, ...], ...] = (
    ("phi1,0",),
    ("phi2,1", "phi2,2", "phi1,3''", "phi1,3'"),
    ("phi1,6",),
)

#
# Levi Labels
#
LEVI_TYPE_A: str = "L_der ≅ SL_{k}^{m}"
LEVI_TORUS: str = "L = T (maximal torus)"
LEVI_WHOLE: str = "L = G"
# Levi label of the {1} block for a nontrivial omega
LEVI_EXCEPTIONAL_TRIVIAL: Dict[str, str] = {
    "E6": "L_der ≅ SL_3 × SL_3",
    "E7": "L_der ≅ SL_2 × SL_2 × SL_2",
}
LEVI_SP: str = "L_der ≅ Sp_{delta}"
LEVI_SPIN: str = "L_der ≅ Spin_{delta}"
LEVI_SPIN_SL2: str = "L_der ≅ Spin_{delta} × SL_2^{r}"

#
# Error Messages
#
ERROR_PARSE_DESCRIPTOR: str = "Cannot parse Coxeter descriptor %r"
ERROR_BAD_RANK: str = "Rank %d is not admissible for %s type %s"
ERROR_BAD_WEIGHTS: str = "Weights %s are not a weight function on %s"
ERROR_BAD_OMEGA: str = "Omega selector %r is not valid for %s"
ERROR_BAD_NODES: str = "Node set %s is not a proper subset of the nodes of %s"
ERROR_ENUMERATION: str = "Enumeration of %s is not supported"
ERROR_NO_TABLE: str = "No character table for %s"
ERROR_NO_ROUTE: str = "No a-invariant route for %s with weights %s"
ERROR_EMBEDDING: str = "Embedding of %s into %s is not recognized"
ERROR_NOT_A_BLOCK: str = "%s is not in C_omega(%s) for omega=%s"
ERROR_DEGENERATE: str = "The weighted group is degenerate ({1})"
ERROR_J_UNIQUENESS: str = "j-induction of %s from %s is not unique: %s"
ERROR_SINGULAR_BLOCK: str = "Singular diagonal block at c=%d"
ERROR_ORTHOGONALITY: str = "Character table of %s fails orthogonality"
ERROR_SYM_BOUND: str = "No symmetric power up to %d contains %s"
ERROR_BAD_DATA: str = "Data file %s is invalid: %s"
ERROR_CONSTRAINT: str = "Block coordinates %s violate %s"
ERROR_UNSUPPORTED_RANK: str = "%s has rank %d; at most %d is supported"
ERROR_POLE: str = "Entry %s has a pole at q=%s"
ERROR_BAD_Q: str = "Cannot read %r as a rational value of q"
ERROR_VERIFICATION: str = "Solution fails %s at (%s, %s)"

#
# Affine Diagram Data
#
# Finite node (0-indexed) the affine node s0 is joined to
AFFINE_ATTACH: Dict[str, int] = {"E6": 1, "E7": 0, "E8": 7, "F4": 0, "G2": 0}

# Generators of Omega_W for exceptional affine types, as node maps
EXCEPTIONAL_OMEGA: Dict[str, Dict[int, int]] = {
    "E6": {0: 1, 1: 6, 6: 0, 2: 3, 3: 5, 5: 2, 4: 4},
    "E7": {0: 7, 7: 0, 1: 6, 6: 1, 3: 5, 5: 3, 2: 2, 4: 4},
}

#
# Generic Degree Tables
#
# D-values in q = v^(2a), y = v^(2b), s = sqrt(qy) = v^(a+b), keyed by
# irreducible (partition, bipartition or name). Weights: A1 (a), A2 (a, a),
# B2 (a, b), G2 (a on the long node, b), B3 (a, a, b).
D_TABLE_EXPRESSIONS: Dict[str, Tuple[Tuple[Any, str], ...]] = {
    "A1": (
        ((2,), "1"),
        ((1, 1), "q"),
    ),
    "A2": (
        ((3,), "1"),
        ((2, 1), "q**2 + q"),
        ((1, 1, 1), "q**3"),
    ),
    "B2": (
        (((2,), ()), "1"),
        (((1,), (1,)), "q*y*(q + 1)*(y + 1)/(q + y)"),
        (((1, 1), ()), "q**2*(q*y + 1)/(q + y)"),
        (((), (2,)), "y**2*(q*y + 1)/(q + y)"),
        (((), (1, 1)), "q**2*y**2"),
    ),
    "G2": (
        ("phi1,0", "1"),
        ("phi2,1", "q*y*(q + 1)*(y + 1)*(q*y + s + 1)/(2*(q + s + y))"),
        ("phi2,2", "q*y*(q + 1)*(y + 1)*(q*y - s + 1)/(2*(q - s + y))"),
        ("phi1,3''", "q**2*(q**2*y**2 + q*y + 1)/(q**2 + q*y + y**2)"),
        ("phi1,3'", "y**2*(q**2*y**2 + q*y + 1)/(q**2 + q*y + y**2)"),
        ("phi1,6", "q**3*y**3"),
    ),
    "B3": (
        (((3,), ()), "1"),
        (((2,), (1,)), "q*y*(q**2 + q + 1)*(q*y + 1)/(q + y)"),
        (((2, 1), ()), "q**2*(q + 1)*(q**2*y + 1)/(q + y)"),
        (((), (3,)), "y**3*(q*y + 1)*(q**2*y + 1)/((q**2 + y)*(q + y))"),
        (((1,), (2,)), "q*y**2*(q**2 + q + 1)*(q**2*y + 1)/(q**2 + y)"),
        (((1, 1), (1,)), "q**3*y*(q**2 + q + 1)*(q**2*y + 1)/(q**2 + y)"),
        (((), (2, 1)), "q**2*y**3*(q + 1)*(q**2*y + 1)/(q + y)"),
        (((1,), (1, 1)), "q**3*y**2*(q**2 + q + 1)*(q*y + 1)/(q + y)"),
        (((1, 1, 1), ()), "q**6*(q*y + 1)*(q**2*y + 1)/((q**2 + y)*(q + y))"),
        (((), (1, 1, 1)), "q**6*y**3"),
    ),
}

# Rows of the G2 table replaced in the opt-in corrected variant
G2_CORRECTED_ROWS: Dict[str, str] = {
    "phi1,3''": "q**3*(q**2*y**2 + q*y + 1)/(q**2 + q*y + y**2)",
    "phi1,3'": "y**3*(q**2*y**2 + q*y + 1)/(q**2 + q*y + y**2)",
}

# Provenance tags of generic degrees
PROVENANCE_TABLE: str = "table"
PROVENANCE_SYMBOL: str = "symbol-formula"
PROVENANCE_PRODUCT: str = "product"
