"""`cohphase dist`: phase distributions against theta."""

import argparse
import logging

from cohphase.core.exceptions import ConfigurationException, ExitCode
from cohphase.dependencies.run_config import (
    add_sweep_arguments,
    add_system_arguments,
    get_run_config,
    get_state_spec,
    get_system_params,
)
from cohphase.services.phase import phase_distribution
from cohphase.services.sweep import map_points
from cohphase.utils.export import emit, format_float, render_csv, render_json


logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "dist",
        help="Pegg-Barnett phase distribution P(theta)",
        description="Sample P(theta) over the phase window for one z or a sweep of z values.",
    )
    add_system_arguments(parser)
    add_sweep_arguments(parser)
    parser.add_argument("--theta-grid", type=int, help="Number of theta samples (default 2001)")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    """
    Write P(theta) as CSV (`theta,P` or `theta,P_z<z>,...`) or JSON.

    Raises:
        ConfigurationException: If no z is given
        NumericalException: If any z fails to evaluate
    """
    config = get_run_config(args)
    points = config.points()
    if not points:
        raise ConfigurationException("dist needs --z or a z sweep")

    spec = get_state_spec(config)
    distributions = map_points(
        lambda z: phase_distribution(spec, z, config.theta_grid, config.window, config.policy),
        points,
    )
    thetas = distributions[0].thetas

    if config.output.format == "json":
        text = render_json({
            "system": config.system.name,
            "params": get_system_params(config),
            "theta": [float(t) for t in thetas],
            "distributions": [
                {"z": [d.z.real, d.z.imag], "P": [float(v) for v in d.values]}
                for d in distributions
            ],
        })
    else:
        if config.is_sweep:
            header = ["theta"] + [f"P_z{format_float(abs(z))}" for z in points]
        else:
            header = ["theta", "P"]
        columns = [d.values for d in distributions]
        rows = ([t, *(col[i] for col in columns)] for i, t in enumerate(thetas))
        text = render_csv(header, rows)

    emit(text, config.output.path)
    logger.info("%s: wrote %d distribution(s)", spec.label, len(distributions))
    return ExitCode.OK
