"""Pytest configuration and fixtures."""

import logging
import math
from collections.abc import Callable

import numpy as np
import pytest
from scipy.integrate import trapezoid

from cohphase.crud.systems import system_repo
from cohphase.main import main
from cohphase.models.catalog import CatalogId
from cohphase.models.phase import DEFAULT_WINDOW, PhaseWindow
from cohphase.models.state import StateSpec
from cohphase.schemas.policy import DEFAULT_POLICY, TruncationPolicy
from cohphase.services.phase import phase_density


SPECTRUM_IDS = [
    CatalogId.HYDROGEN_LIKE,
    CatalogId.POSCHL_TELLER,
    CatalogId.INFINITE_WELL,
    CatalogId.ISOTONIC,
]

# Quadrature oracle resolution
QUADRATURE_POINTS = 20001


@pytest.fixture
def policy() -> TruncationPolicy:
    """Default truncation policy."""
    return DEFAULT_POLICY


@pytest.fixture
def window() -> PhaseWindow:
    """Default window [-pi, pi)."""
    return DEFAULT_WINDOW


@pytest.fixture
def harmonic() -> StateSpec:
    return system_repo.make(CatalogId.HARMONIC)


@pytest.fixture(params=list(CatalogId), ids=lambda c: c.value)
def catalog_spec(request) -> StateSpec:
    """Every catalog system with its default parameters."""
    return system_repo.make(request.param)


@pytest.fixture(params=SPECTRUM_IDS, ids=lambda c: c.value)
def spectrum_spec(request) -> StateSpec:
    """Every spectrum-defined catalog system."""
    return system_repo.make(request.param)


@pytest.fixture
def quadrature() -> Callable[[StateSpec, complex, float], tuple[float, float]]:
    """
    Trapezoid oracle for the first two theta moments of P over a window.

    Returns (mean, variance) on a 20001-point grid.
    """
    def moments(spec: StateSpec, z: complex, theta0: float = -math.pi) -> tuple[float, float]:
        thetas = np.linspace(theta0, theta0 + 2.0 * math.pi, QUADRATURE_POINTS)
        p = phase_density(spec, z, thetas)
        mean = float(trapezoid(thetas * p, thetas))
        second = float(trapezoid(thetas ** 2 * p, thetas))
        return mean, second - mean ** 2

    return moments


@pytest.fixture
def cli(capsys) -> Callable[..., tuple[int, str, str]]:
    """
    Run the command-line entry point in-process.

    Returns a callable taking argv items and returning (exit code, stdout, stderr).
    """
    def run(*argv: str) -> tuple[int, str, str]:
        code = main([str(a) for a in argv])
        out, err = capsys.readouterr()
        return code, out, err

    yield run

    # configure_logging binds a handler to the captured stream
    root = logging.getLogger()
    for handler in list(root.handlers):
        if type(handler) is logging.StreamHandler:
            root.removeHandler(handler)
