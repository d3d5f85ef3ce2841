"""Phase-space results: windows, distributions and squeezing reports."""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.integrate import trapezoid


class SqueezingParameter(str, Enum):
    """Which squeezing parameter a crossover search follows."""
    SN = "Sn"
    SPHI = "Sphi"


@dataclass(frozen=True)
class PhaseWindow:
    """The 2*pi interval [theta0, theta0 + 2*pi) the phase lives on."""

    theta0: float = -math.pi

    def __post_init__(self) -> None:
        if not math.isfinite(self.theta0):
            raise ValueError(f"theta0 must be finite, got {self.theta0!r}")

    @property
    def theta1(self) -> float:
        return self.theta0 + 2.0 * math.pi

    @property
    def center(self) -> float:
        return self.theta0 + math.pi

    def grid(self, size: int) -> np.ndarray:
        """Uniform grid including both ends of the window."""
        return np.linspace(self.theta0, self.theta1, size)

    @classmethod
    def centered_on(cls, phi: float) -> "PhaseWindow":
        return cls(theta0=phi - math.pi)


DEFAULT_WINDOW = PhaseWindow()


@dataclass(frozen=True, eq=False)
class PhaseDistribution:
    """Samples of P(theta) over a window."""

    window: PhaseWindow
    thetas: np.ndarray
    values: np.ndarray
    z: complex
    spec_label: str = ""

    def __post_init__(self) -> None:
        self.thetas.flags.writeable = False
        self.values.flags.writeable = False

    def __len__(self) -> int:
        return len(self.thetas)

    def total(self) -> float:
        """Trapezoid integral over the window."""
        return float(trapezoid(self.values, self.thetas))


@dataclass(frozen=True)
class SqueezingReport:
    """
    Number and phase fluctuations of one state.

    s_n and s_phi are None when the commutator vanishes (z = 0).
    """

    z: complex
    var_n: float
    var_phi: float
    commutator_mag: float
    s_n: float | None
    s_phi: float | None
    mean_number: float = 0.0

    @property
    def number_squeezed(self) -> bool:
        return self.s_n is not None and self.s_n < 0.0

    @property
    def phase_squeezed(self) -> bool:
        return self.s_phi is not None and self.s_phi < 0.0

    def parameter(self, which: SqueezingParameter) -> float | None:
        return self.s_n if which is SqueezingParameter.SN else self.s_phi

    @property
    def uncertainty_product(self) -> float:
        return self.var_n * self.var_phi
