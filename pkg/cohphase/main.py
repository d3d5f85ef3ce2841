"""Command-line entry point."""

import sys

from pydantic import ValidationError

from cohphase.cli import create_parser
from cohphase.core.exceptions import (
    CohPhaseException,
    cohphase_exception_handler,
    pydantic_validation_exception_handler,
)
from cohphase.core.logging import configure_logging


def main(argv: list[str] | None = None) -> int:
    """
    Run one sub-command.

    Returns:
        0 on success, 1 when an invariant fails, 2 for usage and
        configuration errors, 3 for numerical failures
    """
    try:
        parser = create_parser()
        args = parser.parse_args(argv)
        configure_logging(args.log_level)
        return int(args.handler(args))
    except CohPhaseException as exc:
        return cohphase_exception_handler(exc)
    except ValidationError as exc:
        return pydantic_validation_exception_handler(exc)


if __name__ == "__main__":
    sys.exit(main())
