"""
Phase distribution and number/phase moments in the s -> infinity limit.

All closed forms reduce to the lag sums R_m = sum_k a_k a_{k+m} of the
real, normalized amplitudes a_n at |z|; the phase of z only shifts theta.
For a spectrum-defined family the same formulas hold with
d_n = 1 / sqrt([e_n]!), so one code path serves both kinds.
"""

import logging
import math
from functools import lru_cache

import numpy as np

from cohphase.core.exceptions import InvalidParameter
from cohphase.models.phase import DEFAULT_WINDOW, PhaseDistribution, PhaseWindow
from cohphase.models.state import StateSpec
from cohphase.schemas.policy import DEFAULT_POLICY, TruncationPolicy
from cohphase.services.series import check_domain, real_amplitudes, state_amplitudes


logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi
UNIFORM_DENSITY = 1.0 / TWO_PI
UNIFORM_VARIANCE = math.pi ** 2 / 3.0


@lru_cache(maxsize=2048)
def _lag_sums(spec: StateSpec, z_mag: float, policy: TruncationPolicy) -> np.ndarray:
    """R_0, R_1, ... for the state at real z = z_mag."""
    amps = real_amplitudes(spec, z_mag, policy)
    lags = np.correlate(amps, amps, mode="full")[len(amps) - 1:]
    lags.flags.writeable = False
    return lags


def lag_sums(spec: StateSpec, z: complex, policy: TruncationPolicy = DEFAULT_POLICY) -> np.ndarray:
    """
    Autocorrelations R_m = sum_k a_k a_{k+m} of the amplitudes at |z|.

    Raises:
        DomainExceeded: If |z| >= spec.radius
        NotConverged: If the series cannot be truncated within policy.n_cap
    """
    z_mag = abs(complex(z))
    check_domain(spec, z_mag)
    return _lag_sums(spec, z_mag, policy)


def _density(lags: np.ndarray, thetas: np.ndarray, phi: float) -> np.ndarray:
    m = np.arange(1, len(lags), dtype=float)
    cross = np.cos(np.outer(thetas - phi, m)) @ lags[1:]
    return (1.0 + 2.0 * cross) / TWO_PI


def phase_density(
    spec: StateSpec,
    z: complex,
    thetas: np.ndarray,
    policy: TruncationPolicy = DEFAULT_POLICY
) -> np.ndarray:
    """P(theta) at arbitrary angles from the cosine-series closed form."""
    z = complex(z)
    lags = lag_sums(spec, z, policy)
    phi = float(np.angle(z))
    return _density(lags, np.asarray(thetas, dtype=float), phi)


def phase_distribution(
    spec: StateSpec,
    z: complex,
    grid_size: int,
    window: PhaseWindow = DEFAULT_WINDOW,
    policy: TruncationPolicy = DEFAULT_POLICY
) -> PhaseDistribution:
    """
    Sample the phase distribution on a uniform grid over the window.

    P(theta) = (1/2pi) (1 + 2 sum_{m>=1} R_m cos(m (theta - arg z))).

    Args:
        spec: State family
        z: Coherent-state label
        grid_size: Number of grid points, both window ends included
        window: Phase window
        policy: Series truncation policy

    Returns:
        PhaseDistribution on the grid

    Raises:
        InvalidParameter: If grid_size < 2
        DomainExceeded: If |z| >= spec.radius
        NotConverged: If the series cannot be truncated within policy.n_cap
    """
    if grid_size < 2:
        raise InvalidParameter("grid_size", grid_size, "grid_size >= 2")
    z = complex(z)
    thetas = window.grid(grid_size)
    values = phase_density(spec, z, thetas, policy)
    return PhaseDistribution(window=window, thetas=thetas, values=values, z=z, spec_label=spec.label)


def phase_distribution_direct(
    spec: StateSpec,
    z: complex,
    thetas: np.ndarray,
    policy: TruncationPolicy = DEFAULT_POLICY
) -> np.ndarray:
    """P(theta) = |sum_n c_n e^{-i n theta}|^2 / 2pi from the amplitudes themselves."""
    c = state_amplitudes(spec, z, policy)
    thetas = np.asarray(thetas, dtype=float)
    overlap = np.exp(-1j * np.outer(thetas, np.arange(len(c)))) @ c
    return np.abs(overlap) ** 2 / TWO_PI


def phase_variance(spec: StateSpec, z: complex, policy: TruncationPolicy = DEFAULT_POLICY) -> float:
    """
    Phase variance about the mean phase.

    pi^2/3 + 4 sum_{m>=1} R_m (-1)^m / m^2, i.e. the variance over the window
    centred on arg z; complex z is rotated onto the real axis first.
    """
    lags = lag_sums(spec, z, policy)
    m = np.arange(1, len(lags), dtype=float)
    alternating = np.where(m % 2 == 0, 1.0, -1.0)
    return UNIFORM_VARIANCE + 4.0 * float(np.sum(lags[1:] * alternating / (m * m)))


def number_moments(
    spec: StateSpec,
    z: complex,
    policy: TruncationPolicy = DEFAULT_POLICY
) -> tuple[float, float]:
    """<n> and <(dn)^2> of the state at |z|."""
    z_mag = abs(complex(z))
    amps = real_amplitudes(spec, z_mag, policy)
    p = amps * amps
    n = np.arange(len(p), dtype=float)
    mean = float(np.sum(n * p))
    return mean, float(np.sum((n - mean) ** 2 * p))


def mean_number(spec: StateSpec, z: complex, policy: TruncationPolicy = DEFAULT_POLICY) -> float:
    """<n> = sum n |c_n|^2."""
    return number_moments(spec, z, policy)[0]


def number_variance(spec: StateSpec, z: complex, policy: TruncationPolicy = DEFAULT_POLICY) -> float:
    """
    <(dn)^2> = <n^2> - <n>^2, summed as sum (n - <n>)^2 |c_n|^2.

    Raises:
        DomainExceeded: If |z| >= spec.radius
        NotConverged: If the series cannot be truncated within policy.n_cap
    """
    return number_moments(spec, z, policy)[1]


def commutator_expectation(
    spec: StateSpec,
    z: complex,
    window: PhaseWindow = DEFAULT_WINDOW,
    policy: TruncationPolicy = DEFAULT_POLICY
) -> float:
    """
    Real factor 1 - 2pi P(theta0) of <[n, phi_theta]> = i (1 - 2pi P(theta0)).

    Equals -2 sum_{m>=1} R_m cos(m (theta0 - arg z)); exactly zero at z = 0.
    """
    z = complex(z)
    lags = lag_sums(spec, z, policy)
    m = np.arange(1, len(lags), dtype=float)
    phi = float(np.angle(z))
    return -2.0 * float(np.sum(lags[1:] * np.cos(m * (window.theta0 - phi))))


def window_first_moment(
    spec: StateSpec,
    z: complex,
    window: PhaseWindow = DEFAULT_WINDOW,
    policy: TruncationPolicy = DEFAULT_POLICY
) -> float:
    """
    Closed-form integral of theta P(theta) over the window.

    c + 2 sum_{m>=1} R_m (-1)^m sin(m (c - arg z)) / m, with c the window centre.
    """
    z = complex(z)
    lags = lag_sums(spec, z, policy)
    m = np.arange(1, len(lags), dtype=float)
    alternating = np.where(m % 2 == 0, 1.0, -1.0)
    offset = window.center - float(np.angle(z))
    return window.center + 2.0 * float(np.sum(lags[1:] * alternating * np.sin(m * offset) / m))


def mean_phase(spec: StateSpec, z: complex, policy: TruncationPolicy = DEFAULT_POLICY) -> float:
    """
    First phase moment over the window centred on arg z.

    The distribution is symmetric about arg z, so this is arg z itself
    (0 for real z and for z = 0).
    """
    z = complex(z)
    return window_first_moment(spec, z, PhaseWindow.centered_on(float(np.angle(z))), policy)
