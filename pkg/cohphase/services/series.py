"""
Expansion coefficients, normalization and truncation of coherent-state series.

A family is given either by a nonlinearity function f(n) or by a spectrum e_n.
Coefficients d_n are kept as ln|d_n| plus a sign array so that products such as
d_n z^n never overflow; the normalization series is summed with log-sum-exp.
"""

import logging
import math
from collections.abc import Callable
from functools import lru_cache

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view
from scipy.special import logsumexp

from cohphase.core.exceptions import (
    DomainExceeded,
    InvalidParameter,
    NegativeSpectrum,
    NonpositiveSpectrum,
    NotConverged,
    SeriesOverflow,
    SpectrumGroundNotZero,
    ZeroNonlinearity,
)
from cohphase.models.state import CoefficientTable, StateKind, StateSpec
from cohphase.schemas.policy import DEFAULT_POLICY, TruncationPolicy


logger = logging.getLogger(__name__)

# Consecutive terms that must all fall below the tail bound.
TAIL_WINDOW = 8

# |e_0| at or below this counts as the required zero ground level.
GROUND_TOL = 1e-14

_INITIAL_ORDER = 64
# Longest amplitude series, independent of policy.n_cap.
AMPLITUDE_CAP = 4096
_LOG_MAX = math.log(np.finfo(float).max)


def _log_powers(n_terms: int, log_x: float) -> np.ndarray:
    """n * log_x for n = 0 .. n_terms-1, with x**0 = 1 even for x = 0."""
    if log_x == -math.inf:
        out = np.full(n_terms, -math.inf)
        out[0] = 0.0
        return out
    return np.arange(n_terms, dtype=float) * log_x


def _safe_log(x: float) -> float:
    return math.log(x) if x > 0.0 else -math.inf


def check_domain(spec: StateSpec, z_mag: float) -> None:
    """
    Reject |z| outside the convergence disk of the family.

    Raises:
        InvalidParameter: If |z| is negative or not a number
        DomainExceeded: If |z| >= spec.radius
    """
    if not z_mag >= 0.0:
        raise InvalidParameter("|z|", z_mag, "|z| >= 0")
    if z_mag >= spec.radius:
        raise DomainExceeded(z_mag, spec.radius)


def f_from_spectrum(e: Callable[[int], float]) -> Callable[[int], float]:
    """
    Nonlinearity function f(n) = sqrt(e_n / n) of a spectrum.

    The returned map is defined for n >= 1 and raises NegativeSpectrum
    when e_n < 0.
    """
    def f(n: int) -> float:
        if n < 1:
            raise InvalidParameter("n", n, "n >= 1 for f(n)")
        value = float(e(n))
        if value < 0.0:
            raise NegativeSpectrum(n, value)
        return math.sqrt(value / n)

    return f


def spectrum_from_f(f: Callable[[int], float]) -> Callable[[int], float]:
    """Spectrum e_n = n f(n)^2 of the normal-ordered Hamiltonian, with e_0 = 0."""
    def e(n: int) -> float:
        if n == 0:
            return 0.0
        value = float(f(n))
        return n * value * value

    return e


@lru_cache(maxsize=128)
def as_nonlinearity(spec: StateSpec) -> StateSpec:
    """Re-express a spectrum-defined family through f = sqrt(e_n / n)."""
    if spec.kind is StateKind.NONLINEARITY:
        return spec
    return StateSpec(
        kind=StateKind.NONLINEARITY,
        evaluator=f_from_spectrum(spec.evaluator),
        radius=spec.radius,
        label=f"{spec.label} (f-path)",
        params=spec.params,
    )


def nonlinearity_values(spec: StateSpec, n_max: int) -> np.ndarray:
    """f(1) .. f(n_max) of a family, whichever way it is specified."""
    f = spec if spec.kind is StateKind.NONLINEARITY else f_from_spectrum(spec.evaluator)
    return np.fromiter((f(i) for i in range(1, n_max + 1)), dtype=float, count=n_max)


def _spectrum_logs(spec: StateSpec, n_max: int) -> np.ndarray:
    ground = spec(0)
    if abs(ground) > GROUND_TOL:
        raise SpectrumGroundNotZero(ground)

    values = np.empty(n_max)
    for i in range(1, n_max + 1):
        value = spec(i)
        if not value > 0.0:
            raise NonpositiveSpectrum(i, value)
        values[i - 1] = value
    return np.log(values)


def _nonlinearity_values(spec: StateSpec, n_max: int) -> np.ndarray:
    values = np.empty(n_max)
    for i in range(1, n_max + 1):
        value = spec(i)
        if value == 0.0:
            raise ZeroNonlinearity(i)
        values[i - 1] = value
    return values


@lru_cache(maxsize=256)
def _cached_coefficients(spec: StateSpec, n_max: int) -> CoefficientTable:
    if spec.kind is StateKind.SPECTRUM:
        # d_n = 1 / sqrt([e_n]!)
        log_mag = -0.5 * np.concatenate(([0.0], np.cumsum(_spectrum_logs(spec, n_max))))
        sign = np.ones(n_max + 1)
    else:
        # d_n = 1 / (sqrt(n!) f(1) ... f(n))
        f = _nonlinearity_values(spec, n_max)
        i = np.arange(1, n_max + 1, dtype=float)
        log_mag = -np.concatenate(([0.0], np.cumsum(0.5 * np.log(i) + np.log(np.abs(f)))))
        sign = np.concatenate(([1.0], np.cumprod(np.sign(f))))
        if np.any(sign < 0):
            logger.warning("%s: sign-alternating f(n); phase results are experimental", spec.label)

    logger.debug("%s: built coefficient table up to n=%d", spec.label, n_max)
    return CoefficientTable(log_mag=log_mag, sign=sign, n_max=n_max)


def build_coefficients(spec: StateSpec, n_max: int) -> CoefficientTable:
    """
    Build ln|d_n| and sign(d_n) for n = 0 .. n_max.

    Args:
        spec: State family
        n_max: Highest index to tabulate

    Returns:
        Coefficient table with d_0 = 1

    Raises:
        ZeroNonlinearity: If f(n) = 0 for some 1 <= n <= n_max
        NonpositiveSpectrum: If e_n <= 0 for some 1 <= n <= n_max
        SpectrumGroundNotZero: If |e_0| > 1e-14
    """
    if n_max < 0:
        raise InvalidParameter("n_max", n_max, "n_max >= 0")
    return _cached_coefficients(spec, int(n_max))


def recover_nonlinearity(table: CoefficientTable) -> np.ndarray:
    """f(n) = (1/sqrt(n)) d_{n-1} / d_n for n = 1 .. n_max."""
    n = np.arange(1, table.n_max + 1, dtype=float)
    ratio = np.exp(table.log_mag[:-1] - table.log_mag[1:] - 0.5 * np.log(n))
    return table.sign[:-1] * table.sign[1:] * ratio


def _log_terms(table: CoefficientTable, z_mag2: float, n_terms: int) -> np.ndarray:
    """ln(d_n^2 |z|^{2n}) for n < n_terms."""
    return 2.0 * table.log_mag[:n_terms] + _log_powers(n_terms, _safe_log(z_mag2))


def normalization(table: CoefficientTable, z_mag2: float, n_terms: int) -> float:
    """
    Truncated normalization sum of d_n^2 |z|^{2n} over n < n_terms.

    Raises:
        InvalidParameter: If n_terms is not in 1 .. table.n_max + 1
        SeriesOverflow: If the sum exceeds the double range
    """
    if not 1 <= n_terms <= table.n_max + 1:
        raise InvalidParameter("n_terms", n_terms, f"1 <= n_terms <= {table.n_max + 1}")
    if not z_mag2 >= 0.0:
        raise InvalidParameter("|z|^2", z_mag2, "|z|^2 >= 0")

    log_total = float(logsumexp(_log_terms(table, z_mag2, n_terms)))
    if log_total > _LOG_MAX:
        raise SeriesOverflow(log_total)
    return math.exp(log_total)


@lru_cache(maxsize=2048)
def _truncation(spec: StateSpec, z_mag: float, policy: TruncationPolicy) -> tuple[int, int]:
    """Truncation order N and the order of a cached table holding N + TAIL_WINDOW terms."""
    log_tol = math.log(policy.tail_tol)
    limit = policy.n_cap + TAIL_WINDOW - 1
    n_max = min(_INITIAL_ORDER, limit)

    while True:
        table = _cached_coefficients(spec, n_max)
        log_terms = _log_terms(table, z_mag * z_mag, n_max + 1)
        log_partial = np.logaddexp.accumulate(log_terms)
        # row j holds terms j+1 .. j+TAIL_WINDOW, the guard window of N = j+1
        guard = sliding_window_view(log_terms[1:], TAIL_WINDOW).max(axis=1)
        candidates = min(len(guard), policy.n_cap)
        small = guard[:candidates] < log_tol + log_partial[:candidates]
        if small.any():
            order = int(np.argmax(small)) + 1
            logger.debug("%s: |z|=%r truncated at N=%d", spec.label, z_mag, order)
            return order, n_max
        if n_max >= limit:
            raise NotConverged(z_mag, policy.n_cap)
        n_max = min(2 * n_max, limit)


def choose_truncation(
    spec: StateSpec,
    z_mag: float,
    policy: TruncationPolicy = DEFAULT_POLICY
) -> int:
    """
    Smallest N whose next TAIL_WINDOW normalization terms are each below
    tail_tol times the partial sum of the first N terms.

    Raises:
        DomainExceeded: If |z| >= spec.radius
        NotConverged: If no N <= policy.n_cap satisfies the bound
    """
    check_domain(spec, z_mag)
    order, _ = _truncation(spec, float(z_mag), policy)
    return order


@lru_cache(maxsize=2048)
def _amplitude_order(spec: StateSpec, z_mag: float, policy: TruncationPolicy) -> tuple[int, int]:
    """
    Length of the amplitude series and the order of a cached table holding it.

    Amplitudes enter the phase sums linearly, so the tail bound applies to
    d_n |z|^n against the norm: the squared terms must stay below tail_tol^2
    times the partial sum. The series never ends before the truncation order.
    """
    order, n_max = _truncation(spec, z_mag, policy)
    log_tol = 2.0 * math.log(policy.tail_tol)

    while True:
        table = _cached_coefficients(spec, n_max)
        log_terms = _log_terms(table, z_mag * z_mag, n_max + 1)
        log_partial = np.logaddexp.accumulate(log_terms)
        guard = sliding_window_view(log_terms[1:], TAIL_WINDOW).max(axis=1)
        small = guard < log_tol + log_partial[:len(guard)]
        small[:order - 1] = False
        if small.any():
            n_terms = int(np.argmax(small)) + 1 + TAIL_WINDOW
            logger.debug("%s: |z|=%r amplitude series of %d terms", spec.label, z_mag, n_terms)
            return n_terms, n_max
        if n_max >= AMPLITUDE_CAP:
            raise NotConverged(z_mag, AMPLITUDE_CAP)
        n_max = min(2 * n_max, AMPLITUDE_CAP)


@lru_cache(maxsize=2048)
def _real_amplitudes(spec: StateSpec, z_mag: float, policy: TruncationPolicy) -> np.ndarray:
    n_terms, table_order = _amplitude_order(spec, z_mag, policy)
    table = _cached_coefficients(spec, table_order)
    log_amp = table.log_mag[:n_terms] + _log_powers(n_terms, _safe_log(z_mag))
    log_norm = 0.5 * float(logsumexp(2.0 * log_amp))
    amps = table.sign[:n_terms] * np.exp(log_amp - log_norm)
    amps.flags.writeable = False
    return amps


def real_amplitudes(
    spec: StateSpec,
    z_mag: float,
    policy: TruncationPolicy = DEFAULT_POLICY
) -> np.ndarray:
    """
    Normalized amplitudes N^{-1/2} d_n |z|^n of the state at real z = |z|.

    The series runs past the truncation order until the amplitude tail
    itself is below tail_tol.
    """
    check_domain(spec, z_mag)
    return _real_amplitudes(spec, float(z_mag), policy)


def state_amplitudes(
    spec: StateSpec,
    z: complex,
    policy: TruncationPolicy = DEFAULT_POLICY
) -> np.ndarray:
    """
    Number-state amplitudes c_n = N^{-1/2} d_n z^n, normalized to unit norm.

    Raises:
        DomainExceeded: If |z| >= spec.radius
        NotConverged: If the series cannot be truncated within policy.n_cap
    """
    z = complex(z)
    amps = real_amplitudes(spec, abs(z), policy)
    phase = np.exp(1j * np.angle(z) * np.arange(len(amps)))
    return amps * phase


def eigen_residual(
    spec: StateSpec,
    z: complex,
    policy: TruncationPolicy = DEFAULT_POLICY
) -> float:
    """
    Largest component of A|z> - z|z>, i.e. max |sqrt(n+1) f(n+1) c_{n+1} - z c_n|.
    """
    z = complex(z)
    c = state_amplitudes(spec, z, policy)
    if len(c) < 2:
        return 0.0
    n = np.arange(1, len(c), dtype=float)
    lowered = np.sqrt(n) * nonlinearity_values(spec, len(c) - 1) * c[1:]
    return float(np.max(np.abs(lowered - z * c[:-1])))
