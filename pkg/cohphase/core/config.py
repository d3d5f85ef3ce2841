"""Application configuration using Pydantic Settings."""

import math
from functools import lru_cache
from typing import Literal

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables (prefix ``COHPHASE_``)."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="COHPHASE_",
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    APP_NAME: str = "cohphase"
    APP_VERSION: str = "0.1.0"
    LOG_LEVEL: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "WARNING"

    # Sweeps
    THREADS: int | None = None

    # Series truncation
    TAIL_TOL: float = 1e-12
    N_CAP: int = 512

    # Phase grid
    THETA_GRID: int = 2001
    WINDOW_THETA0: float = -math.pi

    @field_validator("THREADS")
    @classmethod
    def validate_threads(cls, v: int | None) -> int | None:
        """Ensure the thread cap is positive when given."""
        if v is not None and v < 1:
            raise ValueError("THREADS must be at least 1")
        return v

    @field_validator("TAIL_TOL")
    @classmethod
    def validate_tail_tol(cls, v: float) -> float:
        """Ensure the tail tolerance is a proper fraction."""
        if not 0.0 < v < 1.0:
            raise ValueError("TAIL_TOL must lie in (0, 1)")
        return v

    @field_validator("N_CAP")
    @classmethod
    def validate_n_cap(cls, v: int) -> int:
        if v < 2:
            raise ValueError("N_CAP must be at least 2")
        return v

    @field_validator("THETA_GRID")
    @classmethod
    def validate_theta_grid(cls, v: int) -> int:
        if v < 2:
            raise ValueError("THETA_GRID must be at least 2")
        return v


@lru_cache
def get_settings() -> Settings:
    """
    Settings read from the environment on first use.

    Raises:
        ValidationError: If a COHPHASE_* variable is invalid
    """
    return Settings()
