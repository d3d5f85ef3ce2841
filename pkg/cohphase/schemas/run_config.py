"""Pydantic schemas describing one command run."""

import math
from typing import Any, Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from cohphase.core.config import get_settings
from cohphase.crud.systems import system_repo
from cohphase.dsl.compiler import ExprKind
from cohphase.models.catalog import CatalogId
from cohphase.models.phase import PhaseWindow, SqueezingParameter
from cohphase.schemas.policy import TruncationPolicy


class CatalogSystem(BaseModel):
    """A built-in family with optional parameter overrides."""
    model_config = ConfigDict(extra="forbid")

    id: CatalogId
    params: dict[str, float] = Field(default_factory=dict)

    @property
    def radius(self) -> float:
        descriptor = system_repo.get_by_id(self.id)
        return math.inf if descriptor.radius is None else descriptor.radius

    @property
    def name(self) -> str:
        return self.id.value


class DslSystem(BaseModel):
    """A family defined by an f(n) or e_n expression."""
    model_config = ConfigDict(extra="forbid")

    kind: ExprKind
    expr: str = Field(..., min_length=1)
    params: dict[str, float] = Field(default_factory=dict)
    radius: float = Field(math.inf, gt=0.0, description="Convergence radius in |z|")

    @field_validator("radius", mode="before")
    @classmethod
    def default_radius(cls, v: Any) -> Any:
        return math.inf if v is None else v

    @property
    def name(self) -> str:
        return "dsl"


class ZSweep(BaseModel):
    """Evenly spaced real z values lo .. hi."""
    model_config = ConfigDict(extra="forbid")

    lo: float = Field(..., ge=0.0)
    hi: float
    count: int = Field(1, ge=1)
    step: float | None = Field(None, gt=0.0, description="Scan spacing for crossover searches")

    @model_validator(mode="after")
    def check_range(self) -> "ZSweep":
        if self.hi < self.lo:
            raise ValueError("hi must not be below lo")
        return self

    def values(self) -> list[float]:
        if self.count == 1:
            return [self.lo]
        return [float(v) for v in np.linspace(self.lo, self.hi, self.count)]

    def resolved_step(self) -> float:
        if self.step is not None:
            return self.step
        if self.count > 1:
            return (self.hi - self.lo) / (self.count - 1)
        raise ValueError("a crossover scan needs z_sweep.step or z_sweep.count > 1")


class ZPoint(BaseModel):
    """A single z = magnitude * exp(i phase)."""
    model_config = ConfigDict(extra="forbid")

    magnitude: float = Field(..., ge=0.0)
    phase: float = 0.0

    @property
    def value(self) -> complex:
        if self.phase == 0.0:
            return complex(self.magnitude, 0.0)
        return complex(self.magnitude * math.cos(self.phase), self.magnitude * math.sin(self.phase))


class OutputSpec(BaseModel):
    """Where and how an artifact is written; stdout when path is None."""
    model_config = ConfigDict(extra="forbid")

    path: str | None = None
    format: Literal["csv", "json"] = "csv"


class RunConfig(BaseModel):
    """
    Validated description of one run.

    Config files use these field names; unset numeric fields fall back
    to the COHPHASE_* settings.
    """
    model_config = ConfigDict(extra="forbid")

    system: CatalogSystem | DslSystem
    z_sweep: ZSweep | None = None
    z: ZPoint | None = None
    theta_grid: int = Field(default_factory=lambda: get_settings().THETA_GRID, ge=2)
    window_theta0: float = Field(default_factory=lambda: get_settings().WINDOW_THETA0)
    tail_tol: float = Field(default_factory=lambda: get_settings().TAIL_TOL, gt=0.0, lt=1.0)
    n_cap: int = Field(default_factory=lambda: get_settings().N_CAP, ge=2)
    output: OutputSpec = Field(default_factory=OutputSpec)
    which: SqueezingParameter = SqueezingParameter.SN

    @field_validator("system", mode="before")
    @classmethod
    def expand_bare_id(cls, v: Any) -> Any:
        """Accept a bare catalog id string."""
        if isinstance(v, str):
            return {"id": v}
        return v

    @model_validator(mode="after")
    def check_z(self) -> "RunConfig":
        if self.z is not None and self.z_sweep is not None:
            raise ValueError("z and z_sweep are mutually exclusive")
        if self.z_sweep is not None and not self.z_sweep.hi < self.system.radius:
            raise ValueError(f"z_sweep.hi must be below the radius {self.system.radius!r}")
        return self

    @property
    def policy(self) -> TruncationPolicy:
        return TruncationPolicy(tail_tol=self.tail_tol, n_cap=self.n_cap)

    @property
    def window(self) -> PhaseWindow:
        return PhaseWindow(theta0=self.window_theta0)

    @property
    def is_sweep(self) -> bool:
        return self.z_sweep is not None

    def points(self) -> list[complex]:
        """z values of the run in output order."""
        if self.z_sweep is not None:
            return [complex(v, 0.0) for v in self.z_sweep.values()]
        if self.z is not None:
            return [self.z.value]
        return []
