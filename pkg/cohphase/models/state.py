"""Generalized coherent-state families and their expansion coefficients."""

import math
from collections.abc import Callable
from dataclasses import dataclass, field
from enum import Enum

import numpy as np


class StateKind(str, Enum):
    """How a state family is specified."""
    NONLINEARITY = "nonlinearity"  # f(n), defined for n >= 1
    SPECTRUM = "spectrum"  # e_n, defined for n >= 0


@dataclass(frozen=True)
class StateSpec:
    """
    A generalized coherent-state family.

    The evaluator maps a nonnegative integer n to f(n) for kind NONLINEARITY
    and to e_n for kind SPECTRUM. Equality and hashing cover every field, the
    evaluator by identity, so coefficient tables can be cached per family.
    """

    kind: StateKind
    evaluator: Callable[[int], float]
    radius: float = math.inf
    label: str = ""
    params: tuple[tuple[str, float], ...] = field(default=())

    def __call__(self, n: int) -> float:
        return float(self.evaluator(n))

    @property
    def is_bounded(self) -> bool:
        """Whether the family lives in a finite disk |z| < radius."""
        return math.isfinite(self.radius)

    def param_dict(self) -> dict[str, float]:
        return dict(self.params)


@dataclass(frozen=True, eq=False)
class CoefficientTable:
    """ln|d_n| and sign(d_n) for n = 0 .. n_max; arrays are read-only."""

    log_mag: np.ndarray
    sign: np.ndarray
    n_max: int

    def __post_init__(self) -> None:
        self.log_mag.flags.writeable = False
        self.sign.flags.writeable = False

    def __len__(self) -> int:
        return self.n_max + 1

    @property
    def values(self) -> np.ndarray:
        """d_n themselves; underflows to zero for large n."""
        return self.sign * np.exp(self.log_mag)

    @property
    def alternating(self) -> bool:
        return bool(np.any(self.sign < 0))
