"""Run settings and request validation for blockweyl."""
from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import voluptuous as vol

from .const import (
    CONF_DATA_PATH,
    CONF_DESCRIPTOR,
    CONF_G2_TABLE,
    CONF_J,
    CONF_OMEGA,
    CONF_OUT,
    CONF_OUTPUT_FORMAT,
    CONF_Q_VALUE,
    CONF_SUBCOMMAND,
    CONF_SYM_BOUND,
    CONF_VERBOSE,
    CONF_WEIGHTS,
    DEFAULT_G2_TABLE,
    DEFAULT_OMEGA,
    DEFAULT_OUTPUT_FORMAT,
    DEFAULT_Q_VALUE,
    DEFAULT_SYM_BOUND,
    ENV_DATA_PATH,
    ERROR_BAD_DATA,
    G2_TABLE_VARIANTS,
    OUTPUT_FORMATS,
    SUBCOMMANDS,
)
from .exceptions import DescriptorError

_LOGGER = logging.getLogger(__name__)


def _rational(value: Any) -> str:
    """Validate a rational number string such as '2' or '3/2'."""
    try:
        Fraction(str(value))
    except (ValueError, ZeroDivisionError) as err:
        raise vol.Invalid(f"not a rational number: {value!r}") from err
    return str(value)


def _int_list(value: Any) -> List[int]:
    """Coerce '3,3,1' or [3, 3, 1] into a list of positive integers."""
    if isinstance(value, str):
        items: List[Any] = [v for v in value.split(",") if v.strip()]
    else:
        items = list(value)
    try:
        result = [int(v) for v in items]
    except (TypeError, ValueError) as err:
        raise vol.Invalid(f"not a list of integers: {value!r}") from err
    if any(v <= 0 for v in result):
        raise vol.Invalid("weights must be positive")
    return result


def _node_list(value: Any) -> Optional[List[int]]:
    """Coerce 'empty', '1,2' or a list into a node list; None keeps default."""
    if value is None:
        return None
    if isinstance(value, str):
        if value.strip().lower() in ("empty", "none", ""):
            return []
        items: List[Any] = value.split(",")
    else:
        items = list(value)
    try:
        return sorted(int(v) for v in items)
    except (TypeError, ValueError) as err:
        raise vol.Invalid(f"not a node list: {value!r}") from err


SETTINGS_SCHEMA = vol.Schema(
    {
        vol.Required(CONF_SYM_BOUND, default=DEFAULT_SYM_BOUND): vol.All(
            vol.Coerce(int), vol.Range(min=1, max=256)
        ),
        vol.Optional(CONF_DATA_PATH, default=None): vol.Any(None, str),
        vol.Required(CONF_OUTPUT_FORMAT, default=DEFAULT_OUTPUT_FORMAT): vol.In(
            OUTPUT_FORMATS
        ),
        vol.Required(CONF_Q_VALUE, default=DEFAULT_Q_VALUE): _rational,
        vol.Required(CONF_G2_TABLE, default=DEFAULT_G2_TABLE): vol.In(
            G2_TABLE_VARIANTS
        ),
    }
)

REQUEST_SCHEMA = vol.Schema(
    {
        vol.Required(CONF_SUBCOMMAND): vol.In(SUBCOMMANDS),
        vol.Optional(CONF_DESCRIPTOR, default=None): vol.Any(None, str),
        vol.Optional(CONF_OMEGA, default=DEFAULT_OMEGA): str,
        vol.Optional(CONF_WEIGHTS, default=None): vol.Any(None, _int_list),
        vol.Optional(CONF_J, default=None): _node_list,
        vol.Optional(CONF_OUTPUT_FORMAT, default=DEFAULT_OUTPUT_FORMAT): vol.In(
            OUTPUT_FORMATS
        ),
        vol.Optional(CONF_OUT, default=None): vol.Any(None, str),
        vol.Optional(CONF_VERBOSE, default=False): bool,
    }
)

WEIGHTED_F4_SCHEMA = vol.Schema(
    [
        {
            vol.Required("label"): str,
            vol.Required("weights"): vol.All(
                [vol.All(vol.Coerce(int), vol.Range(min=1))], vol.Length(min=4, max=4)
            ),
            vol.Required("a"): vol.All(vol.Coerce(int), vol.Range(min=0)),
        }
    ]
)


@dataclass(frozen=True)
class Settings:
    """Validated run settings."""

    sym_bound: int = DEFAULT_SYM_BOUND
    data_path: Optional[str] = None
    output_format: str = DEFAULT_OUTPUT_FORMAT
    q_value: str = DEFAULT_Q_VALUE
    g2_table: str = DEFAULT_G2_TABLE


@dataclass(frozen=True)
class CommandRequest:
    """A validated command-line request."""

    subcommand: str
    descriptor: Optional[str] = None
    omega: str = DEFAULT_OMEGA
    weights: Optional[Tuple[int, ...]] = None
    J: Optional[Tuple[int, ...]] = None
    output_format: str = DEFAULT_OUTPUT_FORMAT
    out: Optional[str] = None
    verbose: bool = False


def load_settings(overrides: Optional[Dict[str, Any]] = None) -> Settings:
    """Merge environment and overrides into validated settings."""
    raw: Dict[str, Any] = {}
    env_path = os.environ.get(ENV_DATA_PATH)
    if env_path:
        raw[CONF_DATA_PATH] = env_path
    raw.update({k: v for k, v in (overrides or {}).items() if v is not None})
    try:
        data = SETTINGS_SCHEMA(raw)
    except vol.Invalid as err:
        raise DescriptorError(f"Invalid settings: {err}") from err
    _LOGGER.debug("Loaded settings %s", data)
    return Settings(**data)


def build_request(raw: Dict[str, Any]) -> CommandRequest:
    """Validate a raw request mapping into a CommandRequest."""
    try:
        data = REQUEST_SCHEMA(raw)
    except vol.Invalid as err:
        raise DescriptorError(f"Invalid request: {err}") from err
    weights = data[CONF_WEIGHTS]
    nodes = data[CONF_J]
    return CommandRequest(
        subcommand=data[CONF_SUBCOMMAND],
        descriptor=data[CONF_DESCRIPTOR],
        omega=data[CONF_OMEGA],
        weights=tuple(weights) if weights is not None else None,
        J=tuple(nodes) if nodes is not None else None,
        output_format=data[CONF_OUTPUT_FORMAT],
        out=data[CONF_OUT],
        verbose=data[CONF_VERBOSE],
    )


def load_weighted_f4(path: Optional[str]) -> Dict[Tuple[str, Tuple[int, ...]], int]:
    """Load the optional weighted F4 a-value file.

    Args:
        path: Location of the JSON file, or None.

    Returns:
        Mapping (label, weights) -> a-value; empty when no file is configured.
    """
    if not path:
        return {}
    file_path = Path(path)
    if not file_path.is_file():
        _LOGGER.warning("Weighted F4 data file %s not found", path)
        return {}
    try:
        rows = WEIGHTED_F4_SCHEMA(json.loads(file_path.read_text(encoding="utf-8")))
    except (json.JSONDecodeError, vol.Invalid) as err:
        raise DescriptorError(ERROR_BAD_DATA % (path, err)) from err
    _LOGGER.debug("Loaded %d weighted F4 rows from %s", len(rows), path)
    return {(row["label"], tuple(row["weights"])): row["a"] for row in rows}
