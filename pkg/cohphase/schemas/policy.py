"""Pydantic schema for series truncation."""

from pydantic import BaseModel, ConfigDict, Field


class TruncationPolicy(BaseModel):
    """Controls where the normalization series is cut off."""
    model_config = ConfigDict(frozen=True)

    tail_tol: float = Field(1e-12, gt=0.0, lt=1.0, description="Relative tail bound on the normalization series")
    n_cap: int = Field(512, ge=2, description="Hard maximum number of terms")


DEFAULT_POLICY = TruncationPolicy()
