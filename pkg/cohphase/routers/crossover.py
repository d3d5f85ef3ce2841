"""`cohphase crossover`: sign changes of S_n or S_phi."""

import argparse

from cohphase.core.exceptions import ConfigurationException, ExitCode
from cohphase.dependencies.run_config import (
    add_sweep_arguments,
    add_system_arguments,
    get_run_config,
    get_state_spec,
    get_system_params,
)
from cohphase.models.phase import SqueezingParameter
from cohphase.schemas.results import CrossoverResult
from cohphase.services.squeezing import CROSSOVER_XTOL, crossover_scan
from cohphase.utils.export import emit, render_json


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "crossover",
        help="Locate squeezing crossovers in z",
        description="Scan S_n or S_phi over [z_lo, z_hi] and bisect every sign change to 1e-4.",
    )
    add_system_arguments(parser)
    add_sweep_arguments(parser, single=False)
    parser.add_argument("--which", choices=[p.value for p in SqueezingParameter], help="Parameter to follow (default Sn)")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    """Write {system, params, which, roots, tol} as JSON."""
    config = get_run_config(args)
    sweep = config.z_sweep
    if sweep is None:
        raise ConfigurationException("crossover needs --z-lo and --z-hi")
    try:
        step = sweep.resolved_step()
    except ValueError as exc:
        raise ConfigurationException(str(exc))

    spec = get_state_spec(config)
    roots = crossover_scan(spec, config.which, sweep.lo, sweep.hi, step, config.window, config.policy)

    result = CrossoverResult(
        system=config.system.name,
        params=get_system_params(config),
        which=config.which,
        roots=roots,
        tol=CROSSOVER_XTOL,
    )
    emit(render_json(result.model_dump(mode="json")), config.output.path)
    return ExitCode.OK
