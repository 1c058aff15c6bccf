"""Exceptions raised by the blockweyl engine."""
from __future__ import annotations

from typing import Optional

from .const import EXIT_INVARIANT_FAILURE, EXIT_PARSE_ERROR, EXIT_UNSUPPORTED


class BlockWeylError(Exception):
    """Base class for all blockweyl errors."""

    exit_code: int = 1


class DescriptorError(BlockWeylError):
    """Invalid descriptor, weight function, node set or request."""

    exit_code = EXIT_PARSE_ERROR


class UnsupportedComputationError(BlockWeylError):
    """A computation has no available route."""

    exit_code = EXIT_UNSUPPORTED

    def __init__(self, message: str, route: Optional[str] = None) -> None:
        """Initialize the error with the name of the missing route."""
        super().__init__(message)
        self.route = route


class InvariantViolationError(BlockWeylError):
    """A self-check failed."""

    exit_code = EXIT_INVARIANT_FAILURE
