"""Command-line interface for blockweyl.

This module provides:
1. The argument parser with one subparser per subcommand
2. Handlers turning a validated request into a serializable payload
3. json, csv and pretty rendering of the payloads
4. Mapping of engine errors onto process exit codes
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

from .affine_blocks import enumerate_blocks, sharp_list, springer_index_set
from .checks import (
    CHECKS,
    VERIFY_GREEN_RANK,
    VERIFY_MAX_RANK,
    VERIFY_TABLE_RANK,
    SuiteOptions,
    diff_golden,
    load_golden,
    run_suite,
    write_golden,
)
from .config import CommandRequest, Settings, build_request, load_settings
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
    DATA_WEIGHTED_F4,
    DEFAULT_OMEGA,
    DEFAULT_OUTPUT_FORMAT,
    DOMAIN,
    ELIMINATION_ORDERS,
    ERROR_NOT_A_BLOCK,
    EXIT_INVARIANT_FAILURE,
    EXIT_OK,
    G2_TABLE_VARIANTS,
    ORDER_ROW_BLOCK,
    OUTPUT_FORMATS,
)
from .coxeter_core import parse_descriptor, select_omegas
from .exceptions import BlockWeylError, DescriptorError
from .green_solver import (
    green_system,
    ratfun_to_string,
    solve_p_lambda,
    specialization_csv,
    verify_solution,
)
from .hecke_invariants import load_weighted_f4_table
from .weighted_affine import (
    CFunctionTable,
    WeightedAffineGroup,
    block_report,
    build_weighted_group,
    c_function,
    c_table_discrepancies,
    nu,
    order_relations,
)

_LOGGER = logging.getLogger(__name__)

LOG_FORMAT = "%(name)s %(levelname)s: %(message)s"


@dataclass
class CommandOutput:
    """Payload of a subcommand with its pretty and tabular renderings."""

    payload: Any
    text: str
    rows: Optional[List[Dict[str, Any]]] = None
    csv_text: Optional[str] = None
    exit_code: int = EXIT_OK


#
# Parser
#
def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        dest=CONF_OUTPUT_FORMAT,
        choices=OUTPUT_FORMATS,
        default=None,
        help=f"Output format (default: {DEFAULT_OUTPUT_FORMAT}).",
    )
    parser.add_argument("--out", dest=CONF_OUT, default=None, help="Write output to a file.")
    parser.add_argument(
        "-v", "--verbose", dest=CONF_VERBOSE, action="store_true", help="Debug logging."
    )


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser of the blockweyl command."""
    parser = argparse.ArgumentParser(
        prog=DOMAIN,
        description="Unipotent blocks, weighted affine Weyl groups and their c-functions.",
    )
    parser.add_argument(
        "--g2-table",
        dest=CONF_G2_TABLE,
        choices=G2_TABLE_VARIANTS,
        default=None,
        help="Which generic-degree table of G2 to use.",
    )
    parser.add_argument(
        "--sym-bound",
        dest=CONF_SYM_BOUND,
        type=int,
        default=None,
        help="Largest symmetric power searched for b-invariants.",
    )
    parser.add_argument(
        "--data",
        dest=CONF_DATA_PATH,
        default=None,
        help="Directory with optional weighted F4 a-data (overrides BLOCKWEYL_DATA).",
    )
    sub = parser.add_subparsers(dest=CONF_SUBCOMMAND, required=True)

    blocks = sub.add_parser("blocks", help="List C_omega(W) with coordinates.")
    blocks.add_argument(CONF_DESCRIPTOR, help="Affine descriptor such as ~C4.")
    blocks.add_argument("--omega", dest=CONF_OMEGA, default=DEFAULT_OMEGA)

    group = sub.add_parser("weighted-group", help="Weighted affine group of a block.")
    group.add_argument(CONF_DESCRIPTOR)
    group.add_argument("--omega", dest=CONF_OMEGA, default=DEFAULT_OMEGA)
    group.add_argument("--J", dest=CONF_J, default=None, help="Nodes such as 1,2 or empty.")

    table = sub.add_parser("c-table", help="c-function of a weighted affine group.")
    table.add_argument(CONF_DESCRIPTOR)
    table.add_argument("--weights", dest=CONF_WEIGHTS, default=None)

    green = sub.add_parser("green", help="Solve Omega' = P^T Lambda' P.")
    green.add_argument(CONF_DESCRIPTOR)
    green.add_argument("--weights", dest=CONF_WEIGHTS, default=None)
    green.add_argument("--omega", dest=CONF_OMEGA, default=DEFAULT_OMEGA)
    green.add_argument("--J", dest=CONF_J, default=None)
    green.add_argument("--order", choices=ELIMINATION_ORDERS, default=ORDER_ROW_BLOCK)
    green.add_argument(
        "--q", dest=CONF_Q_VALUE, default=None, help="Rational q for csv specialization."
    )

    sharp = sub.add_parser("sharp-list", help="Vertices of the graphs of sharp groups.")
    sharp.add_argument("--max-t", type=int, default=13)

    springer = sub.add_parser("springer-index", help="j-induced specials of parabolics.")
    springer.add_argument(CONF_DESCRIPTOR)

    verify = sub.add_parser("verify", help="Run the cross-check suite.")
    verify.add_argument("--check", action="append", choices=sorted(CHECKS), default=None)
    verify.add_argument("--max-rank", type=int, default=VERIFY_MAX_RANK)
    verify.add_argument("--green-rank", type=int, default=VERIFY_GREEN_RANK)
    verify.add_argument("--table-rank", type=int, default=VERIFY_TABLE_RANK)
    verify.add_argument("--golden-file", default=None)

    golden = sub.add_parser("golden", help="Regenerate the golden tables into a directory.")
    golden.add_argument("directory")

    for subparser in sub.choices.values():
        _add_common(subparser)
    return parser


#
# Handlers
#
def _rows_text(rows: Sequence[Dict[str, Any]], columns: Sequence[str]) -> str:
    lines = ["  ".join(columns)]
    lines.extend("  ".join(str(row.get(c, "")) for c in columns) for row in rows)
    return "\n".join(lines)


def run_blocks(
    request: CommandRequest, settings: Settings, args: argparse.Namespace
) -> CommandOutput:
    """Blocks of every selected omega with their weighted groups."""
    affine = parse_descriptor(request.descriptor or "")
    rows: List[Dict[str, Any]] = []
    lines: List[str] = []
    for omega in select_omegas(affine, request.omega):
        lines.append(f"{affine.name} omega={omega}")
        for block in enumerate_blocks(affine, omega):
            report = block_report(affine, omega, block, settings.g2_table, with_table=False)
            row = block.to_json()
            row["omegaPerm"] = str(omega)
            row["group"] = str(report.group)
            row["nu"] = report.nu
            rows.append(row)
            lines.append(
                f"  J={block.label} t={row['t']} s={row['s']} delta={row['delta']} "
                f"r={row['r']} a={block.a_value} W={report.group}  {block.levi_label}"
            )
    return CommandOutput(rows, "\n".join(lines), rows=rows)


def run_weighted_group(
    request: CommandRequest, settings: Settings, args: argparse.Namespace
) -> CommandOutput:
    """Weighted group, nu and c-function of one block or of every block."""
    affine = parse_descriptor(request.descriptor or "")
    payload: List[Dict[str, Any]] = []
    lines: List[str] = []
    for omega in select_omegas(affine, request.omega):
        blocks = enumerate_blocks(affine, omega)
        if request.J is not None:
            blocks = [block for block in blocks if block.nodes == request.J]
            if not blocks:
                raise DescriptorError(ERROR_NOT_A_BLOCK % (list(request.J), affine.name, omega))
        for block in blocks:
            report = block_report(
                affine, omega, block, settings.g2_table, with_table=request.J is not None
            )
            payload.append(report.to_json())
            lines.append(
                f"omega={omega} J={block.label}: {report.group} "
                f"({report.group.provenance}) nu={report.nu} a={block.a_value}"
            )
            if not report.matches_expected:
                lines.append(f"  expected {report.expected}")
            if report.table is not None:
                lines.append(_c_table_text(report.table))
    return CommandOutput(payload, "\n".join(lines))


def _c_table_text(table: CFunctionTable) -> str:
    labels = [str(label) for label in table.labels]
    width = max(len(label) for label in labels)
    lines = [
        "E      " + " ".join(label.rjust(width) for label in labels),
        "c      " + " ".join(str(table.values[l]).rjust(width) for l in table.labels),
        "ref    " + " ".join(str(table.second_row[l]).rjust(width) for l in table.labels),
    ]
    for label in table.labels:
        for witness in table.extra_witnesses(label):
            lines.append(
                f"  {label}: c={table.values[label]} from node {witness.node} "
                f"via {witness.label} of {witness.subgroup}"
            )
    return "\n".join(lines)


def run_c_table(
    request: CommandRequest, settings: Settings, args: argparse.Namespace
) -> CommandOutput:
    """Two-row c-function report of a weighted affine group."""
    group = WeightedAffineGroup.from_weights(
        parse_descriptor(request.descriptor or ""), request.weights
    )
    table = c_function(group, settings.g2_table)
    payload = table.to_json()
    payload["nu"] = nu(group)
    rows = [
        {"E": str(label), "c": table.values[label], "secondRow": table.second_row[label]}
        for label in table.labels
    ]
    text = f"{group}  nu={payload['nu']}  reference node {table.reference_node}\n"
    text += _c_table_text(table)
    discrepancy = c_table_discrepancies(table)
    if discrepancy is not None:
        payload["reference"] = discrepancy.to_json()
        if discrepancy.matches:
            text += "\nreference table: matches"
        else:
            text += (
                f"\nreference table differs: reference {list(discrepancy.printed_only)}, "
                f"computed {list(discrepancy.computed_only)}"
            )
    return CommandOutput(payload, text, rows=rows)


def _green_group(request: CommandRequest, settings: Settings) -> WeightedAffineGroup:
    affine = parse_descriptor(request.descriptor or "")
    if request.J is None:
        return WeightedAffineGroup.from_weights(affine, request.weights)
    omegas = select_omegas(affine, request.omega)
    if len(omegas) != 1:
        raise DescriptorError(f"Omega selector {request.omega!r} must pick one element")
    return build_weighted_group(affine, omegas[0], request.J, settings.g2_table)


def run_green(
    request: CommandRequest, settings: Settings, args: argparse.Namespace
) -> CommandOutput:
    """Solve and verify the P/Lambda' system of a weighted group."""
    group = _green_group(request, settings)
    table = c_function(group, settings.g2_table)
    system = green_system(group, table, order_relations(table, settings.g2_table))
    solution = solve_p_lambda(system, args.order)
    report = verify_solution(solution)
    payload = solution.to_json()
    payload["verification"] = report.to_json()
    lines = [f"{group}: {system.size} irreducibles, {len(system.blocks)} c-blocks"]
    for name, matrix in solution.matrices():
        lines.append(name)
        for label, row in zip(system.labels, matrix):
            lines.append(f"  {label}: " + ", ".join(ratfun_to_string(x) for x in row))
    lines.append("verified" if report.passed else "FAILED: " + "; ".join(report.failures))
    return CommandOutput(
        payload,
        "\n".join(lines),
        csv_text=specialization_csv(solution, settings.q_value),
        exit_code=EXIT_OK if report.passed else EXIT_INVARIANT_FAILURE,
    )


def run_sharp_list(
    request: CommandRequest, settings: Settings, args: argparse.Namespace
) -> CommandOutput:
    """Sharp groups up to an index."""
    rows = sharp_list(args.max_t)
    return CommandOutput(rows, _rows_text(rows, ("graph", "index", "type", "aValue")), rows=rows)


def run_springer_index(
    request: CommandRequest, settings: Settings, args: argparse.Namespace
) -> CommandOutput:
    """Labels reached by j-induction from the specials of proper parabolics."""
    affine = parse_descriptor(request.descriptor or "")
    found = springer_index_set(affine, settings.sym_bound, settings.g2_table)
    labels = [str(label) for label in found]
    return CommandOutput(labels, "\n".join(labels), rows=[{"E": label} for label in labels])


def run_verify(
    request: CommandRequest, settings: Settings, args: argparse.Namespace
) -> CommandOutput:
    """Cross-check suite; exits nonzero on any failure."""
    options = SuiteOptions.from_settings(
        settings,
        max_rank=args.max_rank,
        green_rank=args.green_rank,
        table_rank=args.table_rank,
        golden_path=args.golden_file,
    )
    results = run_suite(options, args.check)
    rows = [result.to_json() for result in results]
    lines = []
    for result in results:
        status = "ok" if result.passed else f"{len(result.failures)} failures"
        skipped = f", {len(result.skipped)} skipped" if result.skipped else ""
        lines.append(f"{result.name}: {result.checked} checked{skipped}, {status}")
        lines.extend(f"  {failure}" for failure in result.failures)
    failed = any(not result.passed for result in results)
    return CommandOutput(
        rows,
        "\n".join(lines),
        rows=[
            {k: v for k, v in row.items() if k not in ("failures", "skipped")} for row in rows
        ],
        exit_code=EXIT_INVARIANT_FAILURE if failed else EXIT_OK,
    )


def run_golden(
    request: CommandRequest, settings: Settings, args: argparse.Namespace
) -> CommandOutput:
    """Write regenerated golden tables and diff them against the packaged ones."""
    path = write_golden(args.directory, settings.g2_table)
    problems = diff_golden(load_golden(), load_golden(str(path)))
    for problem in problems:
        _LOGGER.warning("Golden difference: %s", problem)
    payload = {"path": str(path), "differences": problems}
    text = f"Wrote {path}" + "".join(f"\n  {p}" for p in problems)
    return CommandOutput(payload, text)


HANDLERS: Dict[str, Callable[[CommandRequest, Settings, argparse.Namespace], CommandOutput]] = {
    "blocks": run_blocks,
    "weighted-group": run_weighted_group,
    "c-table": run_c_table,
    "green": run_green,
    "sharp-list": run_sharp_list,
    "springer-index": run_springer_index,
    "verify": run_verify,
    "golden": run_golden,
}


#
# Rendering
#
def render(output: CommandOutput, output_format: str, subcommand: str) -> str:
    """Serialize a command output in one of the output formats."""
    if output_format == "json":
        return json.dumps(output.payload, indent=2, ensure_ascii=False) + "\n"
    if output_format == "csv":
        if output.csv_text is not None:
            return output.csv_text
        if not output.rows:
            raise DescriptorError(f"csv output is not available for {subcommand}")
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=list(output.rows[0]), lineterminator="\n")
        writer.writeheader()
        for row in output.rows:
            writer.writerow({k: _csv_cell(v) for k, v in row.items()})
        return buffer.getvalue()
    return output.text + "\n"


def _csv_cell(value: Any) -> Any:
    if isinstance(value, (dict, list)):
        return json.dumps(value, ensure_ascii=False, sort_keys=True)
    return value


def _write(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
        _LOGGER.info("Wrote %s", out)
    else:
        sys.stdout.write(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the blockweyl command and return its exit status."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING, format=LOG_FORMAT
    )
    raw = vars(args)
    try:
        settings = load_settings(
            {
                CONF_SYM_BOUND: raw.get(CONF_SYM_BOUND),
                CONF_DATA_PATH: raw.get(CONF_DATA_PATH),
                CONF_OUTPUT_FORMAT: raw.get(CONF_OUTPUT_FORMAT),
                CONF_Q_VALUE: raw.get(CONF_Q_VALUE),
                CONF_G2_TABLE: raw.get(CONF_G2_TABLE),
            }
        )
        if settings.data_path:
            count = load_weighted_f4_table(str(Path(settings.data_path) / DATA_WEIGHTED_F4))
            _LOGGER.debug("Registered %d weighted F4 rows", count)
        request = build_request(
            {
                CONF_SUBCOMMAND: args.subcommand,
                CONF_DESCRIPTOR: raw.get(CONF_DESCRIPTOR),
                CONF_OMEGA: raw.get(CONF_OMEGA) or DEFAULT_OMEGA,
                CONF_WEIGHTS: raw.get(CONF_WEIGHTS),
                CONF_J: raw.get(CONF_J),
                CONF_OUTPUT_FORMAT: settings.output_format,
                CONF_OUT: raw.get(CONF_OUT),
                CONF_VERBOSE: bool(args.verbose),
            }
        )
        output = HANDLERS[request.subcommand](request, settings, args)
        _write(render(output, request.output_format, request.subcommand), request.out)
    except BlockWeylError as err:
        _LOGGER.error("%s: %s", type(err).__name__, err)
        return err.exit_code
    return output.exit_code


if __name__ == "__main__":
    raise SystemExit(main(sys.argv[1:]))
