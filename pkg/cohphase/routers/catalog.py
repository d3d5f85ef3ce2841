"""`cohphase catalog`: list the built-in systems."""

import argparse

from cohphase.core.exceptions import ExitCode
from cohphase.crud.systems import list_catalog
from cohphase.utils.export import emit, render_json


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "catalog",
        help="List catalog systems as JSON",
        description="Print ids, parameters with defaults and ranges, and reference expressions.",
    )
    parser.add_argument("-o", "--output", help="Artifact path (default: stdout)")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    entries = [d.model_dump(mode="json") for d in list_catalog()]
    emit(render_json(entries), args.output)
    return ExitCode.OK
