"""Pydantic schemas for command results."""

from pydantic import BaseModel, ConfigDict, Field

from cohphase.models.phase import SqueezingParameter


class CrossoverResult(BaseModel):
    """Sign changes of one squeezing parameter."""
    model_config = ConfigDict(frozen=True)

    system: str = Field(..., description="Catalog id or 'dsl'")
    params: dict[str, float] = Field(default_factory=dict)
    which: SqueezingParameter
    roots: list[float] = Field(default_factory=list, description="Ascending crossover positions in z")
    tol: float = Field(1e-4, description="Bisection tolerance in z")


class InvariantResult(BaseModel):
    """Outcome of one property check, worst case over the sampled z values."""
    model_config = ConfigDict(frozen=True)

    name: str
    passed: bool
    value: float | None = Field(None, description="Worst measured deviation")
    tolerance: float
    z: float | None = Field(None, description="Sample point of the worst deviation")
    detail: str = ""


class CheckSummary(BaseModel):
    """All invariant results for one system."""

    system: str
    results: list[InvariantResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list[InvariantResult]:
        return [r for r in self.results if not r.passed]
