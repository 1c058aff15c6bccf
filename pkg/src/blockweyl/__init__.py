"""Unipotent blocks, weighted affine Weyl groups and their c-functions."""
from __future__ import annotations

import logging

from .affine_blocks import BlockDescriptor, enumerate_blocks, sharp_list
from .coxeter_core import CoxeterDescriptor, affine_type, finite_type, parse_descriptor
from .exceptions import (
    BlockWeylError,
    DescriptorError,
    InvariantViolationError,
    UnsupportedComputationError,
)
from .green_solver import green_system, solve_p_lambda, verify_solution
from .weighted_affine import (
    WeightedAffineGroup,
    build_weighted_group,
    c_function,
    nu,
    order_relations,
)

logging.getLogger(__name__).addHandler(logging.NullHandler())

__version__ = "0.1.0"

__all__ = [
    "BlockDescriptor",
    "BlockWeylError",
    "CoxeterDescriptor",
    "DescriptorError",
    "InvariantViolationError",
    "UnsupportedComputationError",
    "WeightedAffineGroup",
    "affine_type",
    "build_weighted_group",
    "c_function",
    "enumerate_blocks",
    "finite_type",
    "green_system",
    "nu",
    "order_relations",
    "parse_descriptor",
    "sharp_list",
    "solve_p_lambda",
    "verify_solution",
]
