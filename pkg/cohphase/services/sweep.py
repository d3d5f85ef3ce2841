"""Concurrent evaluation over many z values."""

import logging
import os
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import TypeVar

from cohphase.core.config import get_settings
from cohphase.core.exceptions import NumericalException
from cohphase.models.phase import DEFAULT_WINDOW, PhaseWindow, SqueezingReport
from cohphase.models.state import StateSpec
from cohphase.schemas.policy import DEFAULT_POLICY, TruncationPolicy
from cohphase.services.squeezing import squeezing_report


logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def resolve_workers(max_workers: int | None = None) -> int:
    """Worker count: explicit value, else COHPHASE_THREADS, else the executor default."""
    if max_workers is not None:
        return max(1, max_workers)
    threads = get_settings().THREADS
    if threads is not None:
        return threads
    return min(32, (os.cpu_count() or 1) + 4)


def map_points(
    fn: Callable[[T], R],
    points: Iterable[T],
    max_workers: int | None = None
) -> list[R]:
    """Apply fn to every point concurrently; results come back in input order."""
    points = list(points)
    workers = min(resolve_workers(max_workers), max(1, len(points)))
    if workers == 1:
        return [fn(p) for p in points]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fn, points))


@dataclass(frozen=True)
class SweepRow:
    """One sweep point; report is None when the point failed numerically."""

    z: complex
    report: SqueezingReport | None = None
    error: NumericalException | None = None


def squeeze_sweep(
    spec: StateSpec,
    zs: Sequence[complex],
    window: PhaseWindow = DEFAULT_WINDOW,
    policy: TruncationPolicy = DEFAULT_POLICY,
    max_workers: int | None = None
) -> list[SweepRow]:
    """
    Squeezing reports for a sequence of z values.

    Numerical failures at a single point (NotConverged, DomainExceeded,
    SeriesOverflow) are logged and returned as rows without a report;
    any other error aborts the sweep.
    """
    def evaluate(z: complex) -> SweepRow:
        try:
            return SweepRow(z=z, report=squeezing_report(spec, z, window, policy))
        except NumericalException as exc:
            logger.warning("%s at z=%r: %s: %s", spec.label, z, exc.name, exc.message)
            return SweepRow(z=z, error=exc)

    return map_points(evaluate, zs, max_workers)
