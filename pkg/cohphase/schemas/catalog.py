"""Pydantic schemas describing catalog entries."""

from pydantic import BaseModel, ConfigDict, Field

from cohphase.models.catalog import CatalogId
from cohphase.models.state import StateKind


class ParamSpec(BaseModel):
    """One named parameter of a catalog family."""
    model_config = ConfigDict(frozen=True)

    name: str = Field(..., description="Parameter name used by --param and config files")
    default: float = Field(..., description="Value used in the reference figures")
    constraint: str = Field(..., description="Validity range")
    description: str = Field("", description="Meaning of the parameter")


class CatalogDescriptor(BaseModel):
    """Catalog entry as listed by `cohphase catalog`."""
    model_config = ConfigDict(frozen=True)

    id: CatalogId
    label: str
    kind: StateKind
    radius: float | None = Field(None, description="Convergence radius in |z|; None when unbounded")
    params: list[ParamSpec] = Field(default_factory=list)
    reference_expr: str = Field(..., description="Equivalent expression for the DSL")
    specialization_of: CatalogId | None = Field(None, description="Parent family this entry fixes a parameter of")
    notes: str = ""
