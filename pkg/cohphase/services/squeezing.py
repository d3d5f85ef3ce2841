"""Number/phase squeezing parameters and their sign changes in z."""

import logging
import math

import numpy as np
from scipy.optimize import bisect

from cohphase.core.exceptions import InvalidParameter
from cohphase.models.phase import DEFAULT_WINDOW, PhaseWindow, SqueezingParameter, SqueezingReport
from cohphase.models.state import StateSpec
from cohphase.schemas.policy import DEFAULT_POLICY, TruncationPolicy
from cohphase.services.phase import commutator_expectation, number_moments, phase_variance


logger = logging.getLogger(__name__)

# Below this |<[n, phi]>| the squeezing parameters are undefined.
COMMUTATOR_FLOOR = 1e-12

CROSSOVER_XTOL = 1e-4


def squeezing_report(
    spec: StateSpec,
    z: complex,
    window: PhaseWindow = DEFAULT_WINDOW,
    policy: TruncationPolicy = DEFAULT_POLICY
) -> SqueezingReport:
    """
    Variances, commutator and squeezing parameters at one z.

    The state is rotated to real z = |z| first, so the window is taken
    relative to the mean phase. S = 2 Var / |<[n, phi]>| - 1; a negative
    S_n (S_phi) means number (phase) squeezing.

    Args:
        spec: State family
        z: Coherent-state label
        window: Phase window relative to the mean phase
        policy: Series truncation policy

    Returns:
        SqueezingReport with s_n and s_phi None when the commutator vanishes

    Raises:
        DomainExceeded: If |z| >= spec.radius
        NotConverged: If the series cannot be truncated within policy.n_cap
    """
    z = complex(z)
    z_mag = abs(z)
    mean, var_n = number_moments(spec, z_mag, policy)
    var_phi = phase_variance(spec, z_mag, policy)
    commutator_mag = abs(commutator_expectation(spec, z_mag, window, policy))

    if commutator_mag < COMMUTATOR_FLOOR:
        s_n = s_phi = None
    else:
        s_n = 2.0 * var_n / commutator_mag - 1.0
        s_phi = 2.0 * var_phi / commutator_mag - 1.0

    return SqueezingReport(
        z=z,
        var_n=var_n,
        var_phi=var_phi,
        commutator_mag=commutator_mag,
        s_n=s_n,
        s_phi=s_phi,
        mean_number=mean,
    )


def scan_grid(z_lo: float, z_hi: float, step: float) -> np.ndarray:
    """z_lo, z_lo + step, ... below z_hi, then z_hi itself."""
    count = int(math.floor((z_hi - z_lo) / step))
    grid = z_lo + step * np.arange(count + 1, dtype=float)
    grid = grid[grid < z_hi - 1e-12 * max(1.0, z_hi)]
    return np.append(grid, z_hi)


def crossover_scan(
    spec: StateSpec,
    which: SqueezingParameter | str,
    z_lo: float,
    z_hi: float,
    step: float,
    window: PhaseWindow = DEFAULT_WINDOW,
    policy: TruncationPolicy = DEFAULT_POLICY
) -> list[float]:
    """
    Locate the z values where S_n or S_phi changes sign.

    The parameter is sampled on a grid of spacing step; every bracketing
    interval is then bisected to |dz| < 1e-4.

    Returns:
        Ascending roots; empty when no sign change is found

    Raises:
        InvalidParameter: Unless 0 < z_lo < z_hi < spec.radius and step > 0
    """
    which = SqueezingParameter(which)
    if not 0.0 < z_lo < z_hi:
        raise InvalidParameter("z range", (z_lo, z_hi), "0 < z_lo < z_hi")
    if not z_hi < spec.radius:
        raise InvalidParameter("z_hi", z_hi, f"z_hi < radius {spec.radius!r}")
    if not step > 0.0:
        raise InvalidParameter("step", step, "step > 0")

    def parameter(z: float) -> float:
        value = squeezing_report(spec, z, window, policy).parameter(which)
        return math.nan if value is None else value

    grid = scan_grid(z_lo, z_hi, step)
    values = [parameter(z) for z in grid]

    roots: list[float] = []
    for i in range(len(grid) - 1):
        a, b = float(grid[i]), float(grid[i + 1])
        fa, fb = values[i], values[i + 1]
        if fa == 0.0:
            roots.append(a)
        elif fa * fb < 0.0:
            logger.debug("%s: %s changes sign in [%r, %r]", spec.label, which.value, a, b)
            roots.append(float(bisect(parameter, a, b, xtol=CROSSOVER_XTOL)))
    if values[-1] == 0.0:
        roots.append(float(grid[-1]))

    return roots
