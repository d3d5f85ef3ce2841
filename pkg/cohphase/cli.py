"""Central argument parser that includes all sub-command routers."""

import argparse

from cohphase.core.config import get_settings
from cohphase.routers import catalog, check, crossover, dist, squeeze


def create_parser() -> argparse.ArgumentParser:
    """Create and configure the top-level parser."""
    parser = argparse.ArgumentParser(
        prog=get_settings().APP_NAME,
        description="Phase distributions and number-phase squeezing of nonlinear coherent states",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {get_settings().APP_VERSION}")
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Diagnostic verbosity (default from COHPHASE_LOG_LEVEL)",
    )

    subparsers = parser.add_subparsers(dest="command", required=True, metavar="command")

    # Artifacts
    dist.register(subparsers)
    squeeze.register(subparsers)
    crossover.register(subparsers)

    # Diagnostics
    check.register(subparsers)
    catalog.register(subparsers)

    return parser
