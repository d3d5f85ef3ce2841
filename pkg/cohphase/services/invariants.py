"""Self-checks run by `cohphase check`."""

import logging
import math
from collections.abc import Callable

import numpy as np

from cohphase.core.exceptions import NumericalException
from cohphase.models.phase import DEFAULT_WINDOW, PhaseWindow
from cohphase.models.state import StateKind, StateSpec
from cohphase.schemas.policy import DEFAULT_POLICY, TruncationPolicy
from cohphase.schemas.results import InvariantResult
from cohphase.services.phase import phase_density, phase_distribution, phase_distribution_direct
from cohphase.services.series import (
    as_nonlinearity,
    build_coefficients,
    eigen_residual,
    nonlinearity_values,
    recover_nonlinearity,
    state_amplitudes,
)
from cohphase.services.squeezing import squeezing_report


logger = logging.getLogger(__name__)

SAMPLE_FRACTIONS = (0.3, 0.6, 0.9)
SAMPLE_REACH = 3.0
CHECK_GRID = 2001
DIRECT_GRID = 257
RECOVERY_ORDER = 64

# A check maps one z to (deviation, tolerance); it passes when deviation <= tolerance.
Check = Callable[[float], tuple[float, float]]


def sample_points(spec: StateSpec) -> list[float]:
    """0.3 r, 0.6 r and 0.9 r with r = min(radius, 3)."""
    reach = min(spec.radius, SAMPLE_REACH)
    return [f * reach for f in SAMPLE_FRACTIONS]


def _relative_gap(a: float | None, b: float | None) -> float:
    if a is None or b is None:
        return 0.0 if a is b else math.inf
    return abs(a - b) / max(1.0, abs(a))


class InvariantSuite:
    """Property checks of one state family at its sample points."""

    def __init__(
        self,
        spec: StateSpec,
        window: PhaseWindow = DEFAULT_WINDOW,
        policy: TruncationPolicy = DEFAULT_POLICY
    ):
        self.spec = spec
        self.window = window
        self.policy = policy

    def amplitude_normalization(self, z: float) -> tuple[float, float]:
        c = state_amplitudes(self.spec, z, self.policy)
        return abs(float(np.sum(np.abs(c) ** 2)) - 1.0), 1e-10

    def eigenvector(self, z: float) -> tuple[float, float]:
        return eigen_residual(self.spec, z, self.policy), 1e-9 * max(1.0, z)

    def nonlinearity_recovery(self, z: float) -> tuple[float, float]:
        table = build_coefficients(self.spec, RECOVERY_ORDER)
        expected = nonlinearity_values(self.spec, RECOVERY_ORDER)
        recovered = recover_nonlinearity(table)
        return float(np.max(np.abs(recovered - expected) / np.abs(expected))), 1e-10

    def distribution_normalization(self, z: float) -> tuple[float, float]:
        dist = phase_distribution(self.spec, z, CHECK_GRID, self.window, self.policy)
        return abs(dist.total() - 1.0), 1e-8

    def theta_symmetry(self, z: float) -> tuple[float, float]:
        thetas = self.window.grid(CHECK_GRID)
        forward = phase_density(self.spec, z, thetas, self.policy)
        mirrored = phase_density(self.spec, z, -thetas, self.policy)
        return float(np.max(np.abs(forward - mirrored))), 1e-12

    def closed_vs_amplitude_form(self, z: float) -> tuple[float, float]:
        thetas = self.window.grid(DIRECT_GRID)
        closed = phase_density(self.spec, z, thetas, self.policy)
        direct = phase_distribution_direct(self.spec, z, thetas, self.policy)
        return float(np.max(np.abs(closed - direct))), 1e-10

    def uncertainty_relation(self, z: float) -> tuple[float, float]:
        report = squeezing_report(self.spec, z, self.window, self.policy)
        return report.commutator_mag ** 2 / 4.0 - report.uncertainty_product, 1e-9

    def dual_path(self, z: float) -> tuple[float, float]:
        f_spec = as_nonlinearity(self.spec)
        thetas = self.window.grid(CHECK_GRID)
        gaps = [float(np.max(np.abs(
            phase_density(self.spec, z, thetas, self.policy) - phase_density(f_spec, z, thetas, self.policy)
        )))]
        e_report = squeezing_report(self.spec, z, self.window, self.policy)
        f_report = squeezing_report(f_spec, z, self.window, self.policy)
        for field in ("var_n", "var_phi", "s_n", "s_phi"):
            gaps.append(_relative_gap(getattr(e_report, field), getattr(f_report, field)))
        return max(gaps), 1e-10

    def checks(self) -> dict[str, Check]:
        checks: dict[str, Check] = {
            "amplitude-normalization": self.amplitude_normalization,
            "eigenvector": self.eigenvector,
            "nonlinearity-recovery": self.nonlinearity_recovery,
            "distribution-normalization": self.distribution_normalization,
            "theta-symmetry": self.theta_symmetry,
            "closed-vs-amplitude-form": self.closed_vs_amplitude_form,
            "uncertainty-relation": self.uncertainty_relation,
        }
        if self.spec.kind is StateKind.SPECTRUM:
            checks["dual-path"] = self.dual_path
        return checks

    def run_check(self, name: str, check: Check) -> InvariantResult:
        worst: tuple[float, float, float] | None = None
        for z in sample_points(self.spec):
            try:
                value, tolerance = check(z)
            except NumericalException as exc:
                return InvariantResult(
                    name=name, passed=False, tolerance=0.0, z=z, detail=f"{exc.name}: {exc.message}"
                )
            if worst is None or value - tolerance > worst[0] - worst[1]:
                worst = (value, tolerance, z)

        value, tolerance, z = worst
        passed = bool(value <= tolerance)
        if not passed:
            logger.warning("%s: invariant %s failed at z=%r (%r > %r)", self.spec.label, name, z, value, tolerance)
        return InvariantResult(name=name, passed=passed, value=value, tolerance=tolerance, z=z)

    def run(self) -> list[InvariantResult]:
        return [self.run_check(name, check) for name, check in self.checks().items()]


def run_invariant_suite(
    spec: StateSpec,
    window: PhaseWindow = DEFAULT_WINDOW,
    policy: TruncationPolicy = DEFAULT_POLICY
) -> list[InvariantResult]:
    """
    Run every applicable invariant at z in {0.3 r, 0.6 r, 0.9 r}.

    Dual-path equivalence is checked for spectrum-defined families only.
    """
    return InvariantSuite(spec, window, policy).run()
