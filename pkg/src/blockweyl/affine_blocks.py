"""Sharp twisted Weyl groups and the blocks of an affine Weyl group.

This module provides:
1. Sharpness of a finite Weyl group twisted by a diagram automorphism
2. The predicate cutting C_omega(W) out of the node subsets of an affine diagram
3. Closed-form enumeration of C_omega(W) with (t, s) and (delta, r) coordinates
4. Block a-values, Levi labels and the Springer indexing set

Classical node subsets are read positionally: the piece of J at each end of
the diagram carries the index of a vertex of one of the two graphs of sharp
groups, and an empty end counts as the trivial vertex of that end.
"""
from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from .const import (
    BLOCK_CONDITIONS,
    CONDITION_GRAPH_A_EDGE,
    CONDITION_GRAPH_B_EDGE,
    CONDITION_IRREDUCIBLE,
    CONDITION_SHARP,
    CONDITION_STABLE,
    DEFAULT_G2_TABLE,
    DEFAULT_SYM_BOUND,
    ERROR_BAD_NODES,
    ERROR_BAD_OMEGA,
    ERROR_CONSTRAINT,
    ERROR_NOT_A_BLOCK,
    ERROR_UNSUPPORTED_RANK,
    EXCEPTIONAL_SHARP,
    GRAPH_A,
    GRAPH_A_TRIVIAL_INDEX,
    GRAPH_B,
    GRAPH_B_TRIVIAL_INDEX,
    LEVI_EXCEPTIONAL_TRIVIAL,
    LEVI_SP,
    LEVI_SPIN,
    LEVI_SPIN_SL2,
    LEVI_TORUS,
    LEVI_TYPE_A,
    LEVI_WHOLE,
    MAX_SPRINGER_RANK,
    OMEGA_DOUBLEPRIME,
    OMEGA_PRIME,
    TRIVIAL_BLOCK,
)
from .coxeter_core import (
    CoxeterDescriptor,
    DiagramAutomorphism,
    Parabolic,
    classify_diagram,
    finite_quotient,
    omega_group,
    op_automorphism,
    standard_parabolic,
)
from .char_tables import IrrLabel, character_table, quotient_embedding
from .exceptions import DescriptorError, InvariantViolationError, UnsupportedComputationError
from .hecke_invariants import j_induction, special_representations

_LOGGER = logging.getLogger(__name__)

Piece = FrozenSet[int]


def _exact_sqrt(value: int) -> Optional[int]:
    if value < 0:
        return None
    root = math.isqrt(value)
    return root if root * root == value else None


#
# Sharpness
#
@dataclass(frozen=True)
class SharpFactor:
    """A gamma-orbit of orbit_size isomorphic components.

    twist_order is the order of gamma^orbit_size on one member; index is
    the graph index t of that member when it is a graph vertex.
    """

    family: str
    rank: int
    orbit_size: int
    twist_order: int
    a_value: Optional[int]
    index: Optional[int] = None

    @property
    def name(self) -> str:
        """Type name such as 'B2' or '2D9'."""
        base = self.family if self.family[1:] else f"{self.family}{self.rank}"
        twisted = f"{self.twist_order}{base}" if self.twist_order > 1 else base
        return twisted if self.orbit_size == 1 else f"({twisted})^{self.orbit_size}"

    @property
    def sharp(self) -> bool:
        """True when the twisted component is sharp."""
        return self.a_value is not None


@dataclass(frozen=True)
class SharpDescriptor:
    """Sharpness data of a finite Weyl group twisted by gamma."""

    descriptor: CoxeterDescriptor
    gamma: DiagramAutomorphism
    factors: Tuple[SharpFactor, ...]

    @property
    def sharp(self) -> bool:
        """True when every gamma-irreducible factor is sharp."""
        return all(f.sharp for f in self.factors)

    @property
    def a_value(self) -> Optional[int]:
        """Sum over factors of orbit size times a-value; None when not sharp."""
        if not self.sharp:
            return None
        return sum(f.orbit_size * (f.a_value or 0) for f in self.factors)

    @property
    def graph_vertex(self) -> Optional[Tuple[str, int]]:
        """(graph, index) when the twisted group is a vertex of one of the two graphs."""
        if not self.sharp:
            return None
        if not self.factors:
            return GRAPH_A, GRAPH_A_TRIVIAL_INDEX
        if len(self.factors) != 1 or self.factors[0].index is None:
            return None
        factor = self.factors[0]
        if factor.orbit_size == 1:
            return (GRAPH_B if factor.family == "A" else GRAPH_A), factor.index
        if factor.orbit_size == 2 and factor.family in ("B", "D"):
            return GRAPH_B, 2 * factor.index
        return None

    def to_json(self) -> Dict[str, Any]:
        """JSON form used by the sharp-list command."""
        vertex = self.graph_vertex
        return {
            "type": self.descriptor.name,
            "gamma": str(self.gamma),
            "factors": [f.name for f in self.factors],
            "sharp": self.sharp,
            "aValue": self.a_value,
            "graph": vertex[0] if vertex else None,
            "index": vertex[1] if vertex else None,
        }


def _component_sharpness(
    desc: CoxeterDescriptor, delta: DiagramAutomorphism
) -> Tuple[Optional[int], Optional[int]]:
    """(a-value, graph index) of an irreducible twisted group, a-value None if not sharp."""
    op = op_automorphism(desc)
    if (op.r * op.order) % 2 or op.compose(delta).order % 2 == 0:
        return None, None
    family, rank = desc.family, desc.rank
    if family == "A":
        t = _exact_sqrt(8 * (rank + 1) + 1)
        if t is not None and t >= 5:
            return (t - 3) * (t - 1) * (t + 1) // 48, t
    elif family in ("B", "C"):
        t = _exact_sqrt(4 * rank + 1)
        if t is not None and t >= 3:
            return (t - 1) * (t + 1) * (2 * t - 3) // 24, t
    elif family == "D":
        root = _exact_sqrt(rank)
        if root is not None:
            t = 2 * root
            return (t - 2) * t * (2 * t + 1) // 24, (t if delta.order <= 2 else None)
    elif (family, delta.order) in EXCEPTIONAL_SHARP:
        return EXCEPTIONAL_SHARP[(family, delta.order)]["a_value"], None
    return None, None


def is_sharp(
    desc: CoxeterDescriptor, gamma: Optional[DiagramAutomorphism] = None
) -> SharpDescriptor:
    """Decompose a twisted finite Weyl group into gamma-orbits and test each.

    A gamma-orbit of k components is sharp when one member twisted by
    gamma^k is; its a-value counts k times.
    """
    gamma = gamma or DiagramAutomorphism.identity(desc.size)
    if not gamma.is_automorphism_of(desc):
        raise DescriptorError(f"{gamma} is not an automorphism of {desc.name}")
    components = standard_parabolic(desc).components if desc.size else ()
    owner = {node: k for k, comp in enumerate(components) for node in comp.nodes}
    seen: set = set()
    factors: List[SharpFactor] = []
    for k, comp in enumerate(components):
        if k in seen:
            continue
        orbit = [k]
        current = owner[gamma(comp.nodes[0])]
        while current != k:
            orbit.append(current)
            current = owner[gamma(components[current].nodes[0])]
        seen.update(orbit)
        back = gamma.power(len(orbit))
        local = DiagramAutomorphism(tuple(comp.nodes.index(back(node)) for node in comp.nodes))
        a_value, index = _component_sharpness(comp.descriptor, local)
        factors.append(
            SharpFactor(comp.family, comp.rank, len(orbit), local.order, a_value, index)
        )
    result = SharpDescriptor(desc, gamma, tuple(factors))
    _LOGGER.debug("%s twisted by %s: sharp=%s a=%s", desc.name, gamma, result.sharp, result.a_value)
    return result


def _graph_a_row(t: int) -> Dict[str, Any]:
    if t == GRAPH_A_TRIVIAL_INDEX:
        name, a_value = TRIVIAL_BLOCK, 0
    elif t % 2:
        name, a_value = f"B{(t * t - 1) // 4}", (t - 1) * (t + 1) * (2 * t - 3) // 24
    else:
        prefix = "" if t % 4 == 0 else "2"
        name, a_value = f"{prefix}D{t * t // 4}", (t - 2) * t * (2 * t + 1) // 24
    return {"graph": GRAPH_A, "index": t, "type": name, "aValue": a_value}


def _graph_b_row(t: int) -> Dict[str, Any]:
    if t == GRAPH_B_TRIVIAL_INDEX:
        name, a_value = f"{TRIVIAL_BLOCK}x{TRIVIAL_BLOCK}", 0
    elif t % 2:
        name, a_value = f"2A{(t * t - 1) // 8 - 1}", (t - 3) * (t - 1) * (t + 1) // 48
    else:
        half = _graph_a_row(t // 2)
        name, a_value = f"({half['type']})^2", 2 * half["aValue"]
    return {"graph": GRAPH_B, "index": t, "type": name, "aValue": a_value}


def sharp_list(max_t: int) -> List[Dict[str, Any]]:
    """Vertices of both graphs of sharp groups up to index max_t, then the exceptional ones."""
    rows = [_graph_a_row(t) for t in range(GRAPH_A_TRIVIAL_INDEX, max_t + 1)]
    rows.extend(_graph_b_row(t) for t in range(GRAPH_B_TRIVIAL_INDEX, max_t + 1))
    for (family, order), entry in EXCEPTIONAL_SHARP.items():
        name = family if order == 1 else f"{order}{family}"
        rows.append({"graph": None, "index": None, "type": name, "aValue": entry["a_value"]})
    return rows


#
# Block predicate
#
@dataclass(frozen=True)
class PredicateReport:
    """Per-condition outcome of the block predicate; None marks an inapplicable condition."""

    descriptor: CoxeterDescriptor
    omega: DiagramAutomorphism
    nodes: Tuple[int, ...]
    conditions: Tuple[Tuple[str, Optional[bool]], ...]

    @property
    def passed(self) -> bool:
        """True when no applicable condition fails."""
        return all(value is not False for _, value in self.conditions)

    def as_dict(self) -> Dict[str, Optional[bool]]:
        """Conditions keyed by name."""
        return dict(self.conditions)


def _validate(affine: CoxeterDescriptor, omega: DiagramAutomorphism) -> None:
    group = omega_group(affine)
    if omega not in group.elements:
        raise DescriptorError(ERROR_BAD_OMEGA % (str(omega), affine.name))


def _pieces(affine: CoxeterDescriptor, nodes: Sequence[int]) -> List[Piece]:
    return [frozenset(c.nodes) for c in classify_diagram(affine, nodes)]


def _twist(parabolic: Parabolic, omega: DiagramAutomorphism) -> DiagramAutomorphism:
    """omega transported to the standard product of a stable node subset."""
    position = dict(parabolic.node_map)
    perm = [0] * parabolic.descriptor.size
    for node, pos in parabolic.node_map:
        perm[pos] = position[omega(node)]
    return DiagramAutomorphism(tuple(perm))


def twisted_parabolic(
    affine: CoxeterDescriptor, omega: DiagramAutomorphism, nodes: Sequence[int]
) -> SharpDescriptor:
    """Sharpness data of W_J twisted by an omega stabilizing J."""
    if not omega.stabilizes(nodes):
        raise DescriptorError(f"{omega} does not stabilize {list(nodes)}")
    parabolic = standard_parabolic(affine, nodes)
    return is_sharp(parabolic.descriptor, _twist(parabolic, omega))


def _complement_irreducible(
    affine: CoxeterDescriptor, omega: DiagramAutomorphism, nodes: Sequence[int]
) -> bool:
    complement = [x for x in affine.nodes if x not in set(nodes)]
    pieces = _pieces(affine, complement)
    owner = {node: k for k, piece in enumerate(pieces) for node in piece}
    reached = {0}
    current = owner[omega(min(pieces[0]))]
    while current != 0:
        reached.add(current)
        current = owner[omega(min(pieces[current]))]
    return len(reached) == len(pieces)


def _fork_index(
    pieces: List[Piece], legs: Tuple[int, int], twisted: bool
) -> Optional[Tuple[int, Optional[Piece]]]:
    """Index of a D-type piece grown from a pair of legs; 2 or 0 when empty."""
    touching = [p for p in pieces if p & set(legs)]
    if not touching:
        return (2 if twisted else 0), None
    piece = touching[0]
    if len(touching) > 1 or not set(legs) <= piece:
        return None
    root = _exact_sqrt(len(piece))
    if root is None or root < 2:
        return None
    return 2 * root, piece


def _chain_end_index(pieces: List[Piece], end: int) -> Optional[Tuple[int, Optional[Piece]]]:
    """Index of a B-type piece at a double-bond end; 1 when empty."""
    touching = [p for p in pieces if end in p]
    if not touching:
        return 1, None
    t = _exact_sqrt(4 * len(touching[0]) + 1)
    return (t, touching[0]) if t is not None else None


def _center_index(
    pieces: List[Piece], omega: DiagramAutomorphism, n: int
) -> Optional[int]:
    """Index of the omega-stable middle piece; 1 over a node, 3 over an edge when empty."""
    if not pieces:
        return 1 if n % 2 == 0 else 3
    if len(pieces) > 1 or not omega.stabilizes(tuple(pieces[0])):
        return None
    return _exact_sqrt(8 * (len(pieces[0]) + 1) + 1)


def block_coordinates(
    affine: CoxeterDescriptor, omega: DiagramAutomorphism, nodes: Sequence[int]
) -> Optional[Tuple[int, int]]:
    """Read the pair (t, s) off a node subset of a classical affine diagram.

    Returns None for the other families and for subsets whose pieces are
    not end pieces (and, for omega in Omega'', one stable middle piece).
    """
    family, n = affine.family, affine.rank
    if family not in ("B", "C", "D"):
        return None
    pieces = _pieces(affine, nodes)
    doubleprime = omega in omega_group(affine).doubleprime
    if family == "D" and doubleprime:
        square = omega.compose(omega)
        left = _fork_index(pieces, (0, 1), square(0) != 0)
        right = _fork_index(pieces, (n - 1, n), square(n) != n)
    elif family == "D":
        left = _fork_index(pieces, (0, 1), omega(0) != 0)
        right = _fork_index(pieces, (n - 1, n), omega(n) != n)
    elif family == "B":
        left = _fork_index(pieces, (0, 1), omega(0) != 0)
        right = _chain_end_index(pieces, n)
    else:
        left = _chain_end_index(pieces, 0)
        right = _chain_end_index(pieces, n)
    if left is None or right is None:
        return None
    if left[1] is not None and left[1] == right[1]:
        return None
    rest = [p for p in pieces if p not in (left[1], right[1])]
    if not doubleprime:
        return None if rest else (left[0], right[0])
    if left[0] != right[0]:
        return None
    s = _center_index(rest, omega, n)
    return None if s is None else (2 * left[0], s)


def check_block_predicate(
    affine: CoxeterDescriptor, omega: DiagramAutomorphism, nodes: Sequence[int]
) -> PredicateReport:
    """Evaluate the five conditions defining C_omega(W) on a node subset J.

    The graph-edge conditions apply to classical types only: the first
    when S^! has two nodes and Omega'' is empty, the second when omega
    lies in Omega''. The empty subset passes by fiat.
    """
    _validate(affine, omega)
    subset = tuple(sorted(set(nodes)))
    if len(subset) >= affine.size or any(not 0 <= x < affine.size for x in subset):
        raise DescriptorError(ERROR_BAD_NODES % (list(subset), affine.name))
    group = omega_group(affine)
    classical = affine.family in ("B", "C", "D")
    graph_a = classical and len(group.bang_nodes) == 2 and not group.doubleprime
    graph_b = classical and omega in group.doubleprime
    values: Dict[str, Optional[bool]] = {
        CONDITION_GRAPH_A_EDGE: True if graph_a else None,
        CONDITION_GRAPH_B_EDGE: True if graph_b else None,
    }
    if not subset:
        values.update({CONDITION_STABLE: True, CONDITION_SHARP: True, CONDITION_IRREDUCIBLE: True})
    else:
        stable = all(g.stabilizes(subset) for g in group.elements)
        values[CONDITION_STABLE] = stable
        values[CONDITION_SHARP] = stable and twisted_parabolic(affine, omega, subset).sharp
        values[CONDITION_IRREDUCIBLE] = stable and _complement_irreducible(affine, omega, subset)
        if graph_a or graph_b:
            ts = block_coordinates(affine, omega, subset)
            edge = ts is not None and abs(ts[0] - ts[1]) == 1
            values[CONDITION_GRAPH_A_EDGE if graph_a else CONDITION_GRAPH_B_EDGE] = edge
    report = PredicateReport(
        affine, omega, subset, tuple((key, values[key]) for key in BLOCK_CONDITIONS)
    )
    _LOGGER.debug("Predicate on %s, omega=%s, J=%s: %s", affine.name, omega, subset, report.as_dict())
    return report


def blocks_by_predicate(
    affine: CoxeterDescriptor, omega: DiagramAutomorphism
) -> List[Tuple[int, ...]]:
    """Every node subset passing the predicate, by brute force over proper subsets."""
    _validate(affine, omega)
    result: List[Tuple[int, ...]] = []
    for size in range(affine.size):
        for subset in itertools.combinations(affine.nodes, size):
            if check_block_predicate(affine, omega, subset).passed:
                result.append(subset)
    return result


#
# Coordinates
#
@dataclass(frozen=True)
class BlockDescriptor:
    """A member of C_omega(W) with its coordinates, a-value and Levi label."""

    descriptor: CoxeterDescriptor
    omega: DiagramAutomorphism
    omega_class: str
    nodes: Tuple[int, ...]
    ts: Optional[Tuple[int, int]]
    delta_r: Optional[Tuple[int, int]]
    a_value: int
    levi_label: str

    @property
    def is_trivial(self) -> bool:
        """True for the block of the subgroup {1}."""
        return not self.nodes

    @property
    def label(self) -> str:
        """J as a node list, or {1}."""
        return TRIVIAL_BLOCK if self.is_trivial else ",".join(str(x) for x in self.nodes)

    def to_json(self) -> Dict[str, Any]:
        """JSON form of the block."""
        return {
            "type": self.descriptor.family,
            "n": self.descriptor.rank,
            "omega": {
                "class": self.omega_class,
                "order": self.omega.order,
                "squareIsIdentity": self.omega.compose(self.omega).is_identity,
            },
            "J": self.label,
            "t": self.ts[0] if self.ts else None,
            "s": self.ts[1] if self.ts else None,
            "delta": self.delta_r[0] if self.delta_r else None,
            "r": self.delta_r[1] if self.delta_r else None,
            "aValue": self.a_value,
            "leviLabel": self.levi_label,
        }


def _omega_class(affine: CoxeterDescriptor, omega: DiagramAutomorphism) -> str:
    return OMEGA_DOUBLEPRIME if omega in omega_group(affine).doubleprime else OMEGA_PRIME


def _counting_r(affine: CoxeterDescriptor, doubleprime: bool, t: int, s: int) -> Optional[int]:
    n = affine.rank
    total = 2 * n + 1 if affine.family == "C" else 2 * n
    if doubleprime:
        remainder, step = total - t * s // 2, 4
    else:
        remainder, step = total - t * s, 2
    if remainder < 0 or remainder % step:
        return None
    return remainder // step


def _ts_violation(
    affine: CoxeterDescriptor, omega: DiagramAutomorphism, t: int, s: int
) -> Optional[str]:
    """Name of the first congruence or counting rule (t, s) breaks, else None."""
    family = affine.family
    doubleprime = omega in omega_group(affine).doubleprime
    lowest_s = 0 if family == "D" and not doubleprime else 1
    if t < 0 or s < lowest_s:
        return "nonnegative indices"
    if not doubleprime:
        if family == "B":
            if t % 4 != (0 if omega.is_identity else 2):
                return "t = 0 or 2 mod 4"
            if abs(t - s) != 1:
                return "t - s = +-1"
        elif t != s:
            return "t = s"
        elif family == "C" and t % 2 == 0:
            return "t odd"
        elif family == "D" and t % 4 != (0 if omega.is_identity else 2):
            return "t = 0 or 2 mod 4"
    else:
        if abs(t - s) != 1:
            return "t - s = +-1"
        if family == "C" and t % 4 != 2:
            return "t = 2 mod 4"
        if family == "D" and t % 8 != (0 if omega.compose(omega).is_identity else 4):
            return "t = 0 or 4 mod 8"
    if _counting_r(affine, doubleprime, t, s) is None:
        return "counting"
    return None


def _delta_violation(
    affine: CoxeterDescriptor, omega: DiagramAutomorphism, delta: int, r: int
) -> Optional[str]:
    """Name of the first rule (delta, r) breaks, else None."""
    family, n = affine.family, affine.rank
    doubleprime = omega in omega_group(affine).doubleprime
    total = 2 * n + 1 if family == "C" else 2 * n
    if delta < 0 or r < 0:
        return "nonnegative coordinates"
    if doubleprime:
        if delta + 4 * r != total:
            return "delta + 4r"
        u = (math.isqrt(8 * delta + 1) - 1) // 2
        if u * (u + 1) // 2 != delta:
            return "delta triangular"
        if family == "D" and delta % 4 != (0 if omega.compose(omega).is_identity else 2):
            return "delta = 0 or 2 mod 4"
        return None
    if delta + 2 * r != total:
        return "delta + 2r"
    if family == "B":
        sigma = (math.isqrt(4 * delta + 1) - 1) // 2
        if sigma * (sigma + 1) != delta:
            return "delta = sigma(sigma + 1)"
        if (sigma % 4 in (0, 3)) != omega.is_identity:
            return "sigma = 0, 3 or 1, 2 mod 4"
        return None
    sigma = math.isqrt(delta)
    if sigma * sigma != delta:
        return "delta square"
    if family == "C" and sigma % 2 == 0:
        return "sigma odd"
    if family == "D" and sigma % 4 != (0 if omega.is_identity else 2):
        return "sigma = 0 or 2 mod 4"
    return None


def ts_to_delta_r(
    affine: CoxeterDescriptor, omega: DiagramAutomorphism, ts: Tuple[int, int]
) -> Tuple[int, int]:
    """Map (t, s) to (delta, r): delta = ts over Omega', ts/2 over Omega''.

    Raises:
        InvariantViolationError: when either side breaks its constraints.
    """
    t, s = ts
    rule = _ts_violation(affine, omega, t, s)
    if rule:
        raise InvariantViolationError(ERROR_CONSTRAINT % ((t, s), rule))
    doubleprime = omega in omega_group(affine).doubleprime
    r = _counting_r(affine, doubleprime, t, s)
    assert r is not None
    delta = t * s // 2 if doubleprime else t * s
    rule = _delta_violation(affine, omega, delta, r)
    if rule:
        raise InvariantViolationError(ERROR_CONSTRAINT % ((delta, r), rule))
    return delta, r


def delta_r_to_ts(
    affine: CoxeterDescriptor, omega: DiagramAutomorphism, delta_r: Tuple[int, int]
) -> Tuple[int, int]:
    """Inverse of ts_to_delta_r."""
    delta, r = delta_r
    rule = _delta_violation(affine, omega, delta, r)
    if rule:
        raise InvariantViolationError(ERROR_CONSTRAINT % ((delta, r), rule))
    family = affine.family
    if omega in omega_group(affine).doubleprime:
        u = (math.isqrt(8 * delta + 1) - 1) // 2
        ts = (u, u + 1) if u % 2 == 0 else (u + 1, u)
    elif family == "B":
        sigma = (math.isqrt(4 * delta + 1) - 1) // 2
        ts = (sigma, sigma + 1) if sigma % 2 == 0 else (sigma + 1, sigma)
    else:
        ts = (math.isqrt(delta), math.isqrt(delta))
    rule = _ts_violation(affine, omega, *ts)
    if rule:
        raise InvariantViolationError(ERROR_CONSTRAINT % (ts, rule))
    return ts


def ts_a_value(t: int, s: int, doubleprime: bool = False) -> int:
    """a-value of the block with coordinates (t, s)."""
    if not doubleprime:
        if t == s:
            if t % 2:
                return (t - 1) * (t + 1) * (2 * t - 3) // 12
            return (t - 2) * t * (2 * t + 1) // 12
        if s == t + 1:
            return (t - 1) * t * (t + 1) // 6
        return (t - 2) * (t - 1) * t // 6
    if t % 4 == 2:
        if s == t - 1:
            return (t - 2) * (2 * t * t - 5 * t - 6) // 48
        return (t - 2) * (t + 2) * (2 * t - 3) // 48
    if s == t - 1:
        return (t - 4) * t * (2 * t - 1) // 48
    return t * (2 * t * t - 3 * t - 8) // 48


def block_a_value(block: BlockDescriptor) -> int:
    """a-value of a block from its coordinates, or from its sharp parabolic."""
    if block.ts is not None:
        return ts_a_value(*block.ts, doubleprime=block.omega_class == OMEGA_DOUBLEPRIME)
    value = twisted_parabolic(block.descriptor, block.omega, block.nodes).a_value
    if value is None:
        raise InvariantViolationError(
            ERROR_NOT_A_BLOCK % (block.label, block.descriptor.name, block.omega)
        )
    return value


#
# Enumeration
#
def _fork_size(t: int) -> int:
    return 0 if t in (0, 2) else t * t // 4


def _chain_size(t: int) -> int:
    return (t * t - 1) // 4


def _center_nodes(n: int, s: int) -> List[int]:
    if s in (1, 3):
        return []
    size = (s * s - 1) // 8 - 1
    if (n - size) % 2 == 0:
        raise InvariantViolationError(f"Middle piece of size {size} cannot be centered in rank {n}")
    low = (n - size + 1) // 2
    return list(range(low, low + size))


def _block_nodes(
    affine: CoxeterDescriptor, doubleprime: bool, t: int, s: int
) -> Tuple[int, ...]:
    """The canonical node subset of the block with coordinates (t, s)."""
    family, n = affine.family, affine.rank
    if doubleprime:
        size = _chain_size(t // 2) if family == "C" else _fork_size(t // 2)
        nodes = list(range(size)) + _center_nodes(n, s) + list(range(n - size + 1, n + 1))
    else:
        left = _chain_size(t) if family == "C" else _fork_size(t)
        right = _fork_size(s) if family == "D" else _chain_size(s)
        nodes = list(range(left)) + list(range(n - right + 1, n + 1))
    return tuple(sorted(set(nodes)))


def _legal_pairs(affine: CoxeterDescriptor, omega: DiagramAutomorphism) -> Iterator[Tuple[int, int]]:
    family, n = affine.family, affine.rank
    doubleprime = omega in omega_group(affine).doubleprime
    if doubleprime:
        start, step = (2, 4) if family == "C" else (
            (0 if omega.compose(omega).is_identity else 4), 8
        )
    elif family == "C":
        start, step = 1, 2
    else:
        start, step = (0 if omega.is_identity else 2), 4
    for t in range(start, 4 * n + 4, step):
        if doubleprime or family == "B":
            candidates = [t - 1, t + 1]
        else:
            candidates = [t]
        for s in candidates:
            if _ts_violation(affine, omega, t, s) is None:
                yield t, s


def levi_label(
    affine: CoxeterDescriptor,
    omega: DiagramAutomorphism,
    nodes: Sequence[int],
    delta_r: Optional[Tuple[int, int]] = None,
) -> str:
    """Display label of the Levi subgroup attached to a block."""
    family = affine.family
    if family == "A":
        k = omega.order
        return LEVI_TYPE_A.format(k=k, m=affine.size // k)
    if family in ("B", "C", "D"):
        if delta_r is None:
            raise DescriptorError(f"Levi label of {affine.name} needs (delta, r)")
        delta, r = delta_r
        if family == "B":
            return LEVI_SP.format(delta=delta)
        if omega in omega_group(affine).doubleprime:
            return LEVI_SPIN_SL2.format(delta=delta, r=r)
        return LEVI_SPIN.format(delta=delta)
    if nodes:
        return LEVI_WHOLE
    if not omega.is_identity and family in LEVI_EXCEPTIONAL_TRIVIAL:
        return LEVI_EXCEPTIONAL_TRIVIAL[family]
    return LEVI_TORUS


def block_from_ts(
    affine: CoxeterDescriptor, omega: DiagramAutomorphism, ts: Tuple[int, int]
) -> BlockDescriptor:
    """The block with coordinates (t, s); the node subset is re-read and checked.

    Raises:
        DescriptorError: when (t, s) is not a legal coordinate pair.
        InvariantViolationError: when the canonical subset does not read back as (t, s).
    """
    _validate(affine, omega)
    rule = _ts_violation(affine, omega, *ts)
    if rule:
        raise DescriptorError(ERROR_CONSTRAINT % (ts, rule))
    omega_class = _omega_class(affine, omega)
    doubleprime = omega_class == OMEGA_DOUBLEPRIME
    nodes = _block_nodes(affine, doubleprime, *ts)
    if block_coordinates(affine, omega, nodes) != tuple(ts):
        raise InvariantViolationError(
            f"Nodes {list(nodes)} of {affine.name} do not read back as {tuple(ts)}"
        )
    delta_r = ts_to_delta_r(affine, omega, ts)
    a_value = ts_a_value(*ts, doubleprime=doubleprime)
    sharp_value = twisted_parabolic(affine, omega, nodes).a_value
    if sharp_value != a_value:
        raise InvariantViolationError(
            f"a-value {a_value} of {tuple(ts)} differs from the sharp sum {sharp_value}"
        )
    return BlockDescriptor(
        affine,
        omega,
        omega_class,
        nodes,
        tuple(ts),
        delta_r,
        a_value,
        levi_label(affine, omega, nodes, delta_r),
    )


def block_from_delta_r(
    affine: CoxeterDescriptor, omega: DiagramAutomorphism, delta_r: Tuple[int, int]
) -> BlockDescriptor:
    """The block with coordinates (delta, r)."""
    return block_from_ts(affine, omega, delta_r_to_ts(affine, omega, delta_r))


def _exceptional_block(
    affine: CoxeterDescriptor, omega: DiagramAutomorphism, nodes: Sequence[int]
) -> BlockDescriptor:
    a_value = twisted_parabolic(affine, omega, nodes).a_value
    if a_value is None:
        raise InvariantViolationError(ERROR_NOT_A_BLOCK % (list(nodes), affine.name, omega))
    return BlockDescriptor(
        affine,
        omega,
        _omega_class(affine, omega),
        tuple(nodes),
        None,
        None,
        a_value,
        levi_label(affine, omega, nodes),
    )


def enumerate_blocks(
    affine: CoxeterDescriptor, omega: DiagramAutomorphism
) -> List[BlockDescriptor]:
    """List C_omega(W) by the closed-form case analysis.

    Type A has only {1}. E6 and E7 add S - S_* for omega != 1; E8, F4
    and G2 add the finite Weyl group. B, C and D run over the legal
    (t, s) pairs.
    """
    _validate(affine, omega)
    family = affine.family
    if family == "A":
        blocks = [_exceptional_block(affine, omega, ())]
    elif family in ("B", "C", "D"):
        blocks = [block_from_ts(affine, omega, ts) for ts in _legal_pairs(affine, omega)]
    else:
        blocks = [_exceptional_block(affine, omega, ())]
        if family in ("E6", "E7"):
            if not omega.is_identity:
                special = set(omega_group(affine).special_nodes)
                nodes = tuple(x for x in affine.nodes if x not in special)
                blocks.append(_exceptional_block(affine, omega, nodes))
        else:
            blocks.append(_exceptional_block(affine, omega, tuple(affine.nodes[1:])))
    _LOGGER.debug("C_omega(%s) for omega=%s has %d blocks", affine.name, omega, len(blocks))
    return blocks


#
# Springer indexing set
#
def springer_index_set(
    affine: CoxeterDescriptor,
    bound: int = DEFAULT_SYM_BOUND,
    g2_table: str = DEFAULT_G2_TABLE,
) -> List[IrrLabel]:
    """j-inductions to the finite quotient of the specials of every W_J, J a proper subset.

    Raises:
        UnsupportedComputationError: above the character-table backed rank.
    """
    if affine.rank > MAX_SPRINGER_RANK:
        raise UnsupportedComputationError(
            ERROR_UNSUPPORTED_RANK % (affine.name, affine.rank, MAX_SPRINGER_RANK),
            "springer-index",
        )
    quotient = finite_quotient(affine).descriptor
    table = character_table(quotient)
    found = {table.trivial}
    for size in range(1, affine.size):
        for subset in itertools.combinations(affine.nodes, size):
            embedding = quotient_embedding(affine, subset)
            for label in special_representations(embedding.sub, bound, g2_table):
                found.add(j_induction(embedding, label, bound, g2_table))
    result = [label for label in table.labels if label in found]
    _LOGGER.debug("Springer index set of %s has %d labels", affine.name, len(result))
    return result
