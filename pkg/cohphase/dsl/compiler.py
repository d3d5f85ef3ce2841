"""Turn expression text into a StateSpec."""

import logging
import math
from collections.abc import Mapping
from enum import Enum
from functools import lru_cache

from cohphase.core.exceptions import (
    InvalidParameter,
    NonpositiveSpectrum,
    SpectrumGroundNotZero,
    UnboundVariable,
    ZeroNonlinearity,
)
from cohphase.dsl.ast import free_variables
from cohphase.dsl.evaluator import evaluate
from cohphase.dsl.parser import parse_source
from cohphase.models.state import StateKind, StateSpec
from cohphase.services.series import GROUND_TOL


logger = logging.getLogger(__name__)

# Levels 1 .. PROBE_LEVELS are checked when compiling.
PROBE_LEVELS = 16


class ExprKind(str, Enum):
    """What a user expression defines."""
    F = "f"  # nonlinearity f(n)
    E = "e"  # spectrum e_n

    @property
    def state_kind(self) -> StateKind:
        return StateKind.NONLINEARITY if self is ExprKind.F else StateKind.SPECTRUM


def _check_env(env: Mapping[str, float]) -> dict[str, float]:
    checked = {}
    for name, value in env.items():
        if name == "n":
            raise InvalidParameter("n", value, "n is reserved for the level index")
        value = float(value)
        if not math.isfinite(value):
            raise InvalidParameter(name, value, "finite value")
        checked[name] = value
    return checked


def _probe(spec: StateSpec) -> None:
    if spec.kind is StateKind.SPECTRUM:
        ground = spec(0)
        if abs(ground) > GROUND_TOL:
            raise SpectrumGroundNotZero(ground)
        for n in range(1, PROBE_LEVELS + 1):
            value = spec(n)
            if not value > 0.0:
                raise NonpositiveSpectrum(n, value)
    else:
        for n in range(1, PROBE_LEVELS + 1):
            if spec(n) == 0.0:
                raise ZeroNonlinearity(n)


def compile_spec(
    kind: ExprKind | str,
    src: str,
    env: Mapping[str, float] | None = None,
    radius: float = math.inf,
    label: str | None = None
) -> StateSpec:
    """
    Compile an f(n) or e_n expression into a state family.

    Args:
        kind: "f" for a nonlinearity function, "e" for a spectrum
        src: Expression text over `n` and the names in env
        env: Parameter bindings
        radius: Convergence radius in |z|; unbounded by default
        label: Display name; defaults to the expression

    Returns:
        StateSpec whose evaluator memoizes its values per n

    Raises:
        LexError, ParseError, ArityError: If src is not a valid expression
        UnboundVariable: If src uses a name missing from env
        DomainError: If evaluation fails at a probed level
        SpectrumGroundNotZero, NonpositiveSpectrum, ZeroNonlinearity: From probing
    """
    kind = ExprKind(kind)
    env = _check_env(env or {})
    if not radius > 0.0:
        raise InvalidParameter("radius", radius, "radius > 0")

    tree = parse_source(src)
    unbound = sorted(free_variables(tree) - {"n"} - env.keys())
    if unbound:
        raise UnboundVariable(unbound[0])

    @lru_cache(maxsize=None)
    def evaluator(n: int) -> float:
        return evaluate(tree, n, env)

    spec = StateSpec(
        kind=kind.state_kind,
        evaluator=evaluator,
        radius=float(radius),
        label=label or f"{kind.value}(n) = {src}",
        params=tuple(sorted(env.items())),
    )
    _probe(spec)
    logger.debug("compiled %s", spec.label)
    return spec
