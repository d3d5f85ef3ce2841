"""`cohphase squeeze`: variances and squeezing parameters over a z sweep."""

import argparse

from cohphase.core.exceptions import ConfigurationException, ExitCode
from cohphase.dependencies.run_config import (
    add_sweep_arguments,
    add_system_arguments,
    get_run_config,
    get_state_spec,
    get_system_params,
)
from cohphase.services.sweep import SweepRow, squeeze_sweep
from cohphase.utils.export import emit, render_csv, render_json


SQUEEZE_HEADER = ["z", "var_n", "var_phi", "commutator", "S_n", "S_phi"]


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "squeeze",
        help="Number/phase squeezing parameters against z",
        description="Evaluate var_n, var_phi, |<[n, phi]>|, S_n and S_phi on a z sweep.",
    )
    add_system_arguments(parser)
    add_sweep_arguments(parser)
    parser.set_defaults(handler=run)


def _row(row: SweepRow) -> list[float | None]:
    z = abs(row.z)
    report = row.report
    if report is None:
        return [z, None, None, None, None, None]
    return [z, report.var_n, report.var_phi, report.commutator_mag, report.s_n, report.s_phi]


def run(args: argparse.Namespace) -> int:
    """
    Write one row per z; undefined or failed values are empty fields.
    """
    config = get_run_config(args)
    points = config.points()
    if not points:
        raise ConfigurationException("squeeze needs a z sweep (--z-lo/--z-hi/--z-count)")

    spec = get_state_spec(config)
    rows = [_row(r) for r in squeeze_sweep(spec, points, config.window, config.policy)]

    if config.output.format == "json":
        text = render_json({
            "system": config.system.name,
            "params": get_system_params(config),
            "rows": [dict(zip(SQUEEZE_HEADER, r)) for r in rows],
        })
    else:
        text = render_csv(SQUEEZE_HEADER, rows)

    emit(text, config.output.path)
    return ExitCode.OK
