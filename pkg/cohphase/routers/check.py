"""`cohphase check`: run the invariant suite."""

import argparse

from cohphase.core.exceptions import ExitCode, InvariantFailed
from cohphase.dependencies.run_config import add_system_arguments, get_run_config, get_state_spec
from cohphase.models.catalog import CatalogId
from cohphase.schemas.results import CheckSummary, InvariantResult
from cohphase.services.invariants import run_invariant_suite
from cohphase.utils.export import format_float


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "check",
        help="Run the invariant suite for a system",
        description="Check normalization, symmetry, uncertainty relation and dual-path agreement.",
    )
    add_system_arguments(parser)
    parser.add_argument("--all", action="store_true", help="Check every catalog system")
    parser.set_defaults(handler=run)


def format_row(system: str, result: InvariantResult) -> str:
    status = "pass" if result.passed else "FAIL"
    value = format_float(result.value) if result.value is not None else result.detail
    return f"{system:<20} {result.name:<28} {status:<5} {value:<24} {format_float(result.tolerance)}"


def run(args: argparse.Namespace) -> int:
    """
    Print a pass/fail table.

    Raises:
        InvariantFailed: Naming the first failing invariant
    """
    if args.all:
        configs = [get_run_config(args, system={"id": c.value}) for c in CatalogId]
    else:
        configs = [get_run_config(args)]

    summaries = []
    for config in configs:
        spec = get_state_spec(config)
        summaries.append(CheckSummary(
            system=config.system.name,
            results=run_invariant_suite(spec, config.window, config.policy),
        ))

    print(f"{'system':<20} {'invariant':<28} {'status':<5} {'value':<24} tolerance")
    for summary in summaries:
        for result in summary.results:
            print(format_row(summary.system, result))

    for summary in summaries:
        if not summary.passed:
            failure = summary.failures[0]
            raise InvariantFailed(failure.name, f"for {summary.system} {failure.detail}".strip())
    return ExitCode.OK
