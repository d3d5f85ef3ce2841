"""Repository for the built-in coherent-state families."""

import logging
import math
from collections.abc import Callable, Mapping
from functools import lru_cache

import numpy as np
from scipy.special import gammaln

from cohphase.core.exceptions import InvalidParameter
from cohphase.models.catalog import CatalogId
from cohphase.models.state import StateKind, StateSpec
from cohphase.schemas.catalog import CatalogDescriptor, ParamSpec


logger = logging.getLogger(__name__)


KAPPA = ParamSpec(
    name="kappa",
    default=3.0,
    constraint="kappa in {1/2, 1, 3/2, 2, ...}",
    description="Bargmann index of the SU(1,1) discrete series",
)

# Ordered as listed by `cohphase catalog`.
CATALOG: dict[CatalogId, CatalogDescriptor] = {
    CatalogId.HARMONIC: CatalogDescriptor(
        id=CatalogId.HARMONIC,
        label="Harmonic oscillator",
        kind=StateKind.NONLINEARITY,
        reference_expr="1",
        notes="Canonical coherent states, f(n) = 1.",
    ),
    CatalogId.PENSON_SOLOMON: CatalogDescriptor(
        id=CatalogId.PENSON_SOLOMON,
        label="Penson-Solomon",
        kind=StateKind.NONLINEARITY,
        params=[ParamSpec(name="q", default=0.5, constraint="0 < q <= 1", description="Deformation parameter")],
        reference_expr="q^(1-n)",
        notes="f(n) = q^(1-n); q = 1 is the harmonic oscillator.",
    ),
    CatalogId.BARUT_GIRARDELLO: CatalogDescriptor(
        id=CatalogId.BARUT_GIRARDELLO,
        label="Barut-Girardello SU(1,1)",
        kind=StateKind.NONLINEARITY,
        params=[KAPPA],
        reference_expr="sqrt(n + 2*kappa - 1)",
        notes="f(n) = sqrt(n + 2 kappa - 1); dual of Gilmore-Perelomov.",
    ),
    CatalogId.GILMORE_PERELOMOV: CatalogDescriptor(
        id=CatalogId.GILMORE_PERELOMOV,
        label="Gilmore-Perelomov SU(1,1)",
        kind=StateKind.NONLINEARITY,
        radius=1.0,
        params=[KAPPA],
        reference_expr="1/sqrt(n + 2*kappa - 1)",
        notes="f(n) = 1/sqrt(n + 2 kappa - 1); defined for |z| < 1.",
    ),
    CatalogId.HYDROGEN_LIKE: CatalogDescriptor(
        id=CatalogId.HYDROGEN_LIKE,
        label="Hydrogen-like spectrum",
        kind=StateKind.SPECTRUM,
        radius=1.0,
        reference_expr="1 - 1/(n+1)^2",
        notes="e_n = 1 - 1/(n+1)^2; defined in the unit disk.",
    ),
    CatalogId.POSCHL_TELLER: CatalogDescriptor(
        id=CatalogId.POSCHL_TELLER,
        label="Poschl-Teller potential",
        kind=StateKind.SPECTRUM,
        params=[ParamSpec(name="nu", default=5.0, constraint="nu > 2", description="nu = lambda + kappa")],
        reference_expr="n*(n+nu)",
        notes="e_n = n(n + nu).",
    ),
    CatalogId.INFINITE_WELL: CatalogDescriptor(
        id=CatalogId.INFINITE_WELL,
        label="Infinite square well",
        kind=StateKind.SPECTRUM,
        reference_expr="n*(n+nu)",
        specialization_of=CatalogId.POSCHL_TELLER,
        notes="Poschl-Teller spectrum with nu = 2.",
    ),
    CatalogId.ISOTONIC: CatalogDescriptor(
        id=CatalogId.ISOTONIC,
        label="Isotonic oscillator",
        kind=StateKind.SPECTRUM,
        params=[ParamSpec(
            name="gamma_p",
            default=2.5,
            constraint="gamma_p > 1",
            description="gamma = 1 + sqrt(1 + 4A)/2; may be given as the coupling A >= 0 instead",
        )],
        reference_expr="4*n",
        notes="Shifted spectrum e_n = 2(2n + gamma) - 2 gamma = 4n; results do not depend on gamma.",
    ),
}

INFINITE_WELL_NU = 2.0


def isotonic_gamma(coupling: float) -> float:
    """gamma = 1 + sqrt(1 + 4A)/2 of the isotonic oscillator x^2 + A/x^2."""
    if not coupling >= 0.0:
        raise InvalidParameter("A", coupling, "A >= 0")
    return 1.0 + 0.5 * math.sqrt(1.0 + 4.0 * coupling)


def isotonic_energy(n: int, gamma: float) -> float:
    """Unshifted isotonic eigenvalue 2(2n + gamma)."""
    return 2.0 * (2.0 * n + gamma)


# Evaluators are written with the same float operations, in the same order,
# as the reference expressions so compiled DSL specs match them bit for bit.

def _harmonic() -> Callable[[int], float]:
    def f(n: int) -> float:
        return 1.0
    return f


def _penson_solomon(q: float) -> Callable[[int], float]:
    def f(n: int) -> float:
        n = float(n)
        return q ** (1.0 - n)
    return f


def _barut_girardello(kappa: float) -> Callable[[int], float]:
    def f(n: int) -> float:
        n = float(n)
        return math.sqrt(n + 2.0 * kappa - 1.0)
    return f


def _gilmore_perelomov(kappa: float) -> Callable[[int], float]:
    def f(n: int) -> float:
        n = float(n)
        return 1.0 / math.sqrt(n + 2.0 * kappa - 1.0)
    return f


def _hydrogen_like() -> Callable[[int], float]:
    def e(n: int) -> float:
        n = float(n)
        return 1.0 - 1.0 / (n + 1.0) ** 2.0
    return e


def _poschl_teller(nu: float) -> Callable[[int], float]:
    def e(n: int) -> float:
        n = float(n)
        return n * (n + nu)
    return e


def _isotonic() -> Callable[[int], float]:
    def e(n: int) -> float:
        n = float(n)
        return 4.0 * n
    return e


class SystemRepository:
    """Repository for catalog state families."""

    def get_all(self) -> list[CatalogDescriptor]:
        """
        List all catalog entries in stable order.

        Returns:
            Descriptors with parameter documentation
        """
        return list(CATALOG.values())

    def get_by_id(self, system_id: CatalogId | str) -> CatalogDescriptor:
        """
        Get a catalog entry by id.

        Raises:
            InvalidParameter: If the id is not in the catalog
        """
        try:
            return CATALOG[CatalogId(system_id)]
        except ValueError:
            raise InvalidParameter("system", system_id, f"one of {[c.value for c in CatalogId]}")

    def resolve_params(
        self,
        system_id: CatalogId | str,
        params: Mapping[str, float] | None = None
    ) -> dict[str, float]:
        """
        Fill in defaults and validate parameters of a catalog family.

        Args:
            system_id: Catalog id
            params: User-supplied values; missing names take their defaults

        Returns:
            Complete, validated parameter map

        Raises:
            InvalidParameter: With the violated range
        """
        descriptor = self.get_by_id(system_id)
        params = dict(params or {})

        if descriptor.id is CatalogId.ISOTONIC and "A" in params:
            if "gamma_p" in params:
                raise InvalidParameter("A", params["A"], "give either gamma_p or A, not both")
            params["gamma_p"] = isotonic_gamma(float(params.pop("A")))

        known = {p.name for p in descriptor.params}
        for name in params:
            if name not in known:
                raise InvalidParameter(name, params[name], f"known parameters of {descriptor.id.value}: {sorted(known)}")

        resolved = {p.name: float(params.get(p.name, p.default)) for p in descriptor.params}
        self._validate(descriptor.id, resolved)
        return resolved

    @staticmethod
    def _validate(system_id: CatalogId, params: dict[str, float]) -> None:
        if system_id is CatalogId.PENSON_SOLOMON:
            q = params["q"]
            if not 0.0 < q <= 1.0:
                raise InvalidParameter("q", q, "0 < q <= 1")
        elif system_id in (CatalogId.BARUT_GIRARDELLO, CatalogId.GILMORE_PERELOMOV):
            kappa = params["kappa"]
            if not kappa >= 0.5:
                raise InvalidParameter("kappa", kappa, "kappa >= 1/2")
            if not float(2.0 * kappa).is_integer():
                logger.warning("kappa=%r is not a half-integer; outside the discrete series", kappa)
        elif system_id is CatalogId.POSCHL_TELLER:
            nu = params["nu"]
            if not nu > 2.0:
                raise InvalidParameter("nu", nu, "nu > 2 (nu = 2 is infinite-well)")
        elif system_id is CatalogId.ISOTONIC:
            gamma = params["gamma_p"]
            if not gamma > 1.0:
                raise InvalidParameter("gamma_p", gamma, "gamma_p > 1")

    def make(
        self,
        system_id: CatalogId | str,
        params: Mapping[str, float] | None = None
    ) -> StateSpec:
        """
        Build the StateSpec of a catalog family.

        Args:
            system_id: Catalog id
            params: Parameter values; defaults are the reference-figure values

        Returns:
            Immutable StateSpec; equal inputs return the same object
        """
        descriptor = self.get_by_id(system_id)
        resolved = self.resolve_params(descriptor.id, params)
        return _make_spec(descriptor.id, tuple(sorted(resolved.items())))

    def reference_expression(
        self,
        system_id: CatalogId | str,
        params: Mapping[str, float] | None = None
    ) -> tuple[StateKind, str, dict[str, float]]:
        """
        DSL source equivalent to a catalog family.

        Returns:
            Kind, expression text and the parameter environment to compile it with
        """
        descriptor = self.get_by_id(system_id)
        env = self.resolve_params(descriptor.id, params)
        if descriptor.id is CatalogId.INFINITE_WELL:
            env = {"nu": INFINITE_WELL_NU}
        return descriptor.kind, descriptor.reference_expr, env

    def reference_log_coefficients(
        self,
        system_id: CatalogId | str,
        n_max: int,
        params: Mapping[str, float] | None = None
    ) -> np.ndarray:
        """
        ln d_n from the closed-form expansions of each family, n = 0 .. n_max.

        These are independent of the f(n) / e_n product route and serve as
        its cross-check.
        """
        descriptor = self.get_by_id(system_id)
        p = self.resolve_params(descriptor.id, params)
        n = np.arange(n_max + 1, dtype=float)
        log_fact = gammaln(n + 1.0)

        match descriptor.id:
            case CatalogId.HARMONIC:
                return -0.5 * log_fact
            case CatalogId.PENSON_SOLOMON:
                return 0.5 * n * (n - 1.0) * math.log(p["q"]) - 0.5 * log_fact
            case CatalogId.BARUT_GIRARDELLO:
                two_k = 2.0 * p["kappa"]
                return -0.5 * (log_fact + gammaln(n + two_k) - gammaln(two_k))
            case CatalogId.GILMORE_PERELOMOV:
                two_k = 2.0 * p["kappa"]
                return 0.5 * (gammaln(n + two_k) - gammaln(two_k) - log_fact)
            case CatalogId.HYDROGEN_LIKE:
                # [e_n]! telescopes to (n + 2) / (2 (n + 1))
                return -0.5 * np.log((n + 2.0) / (2.0 * (n + 1.0)))
            case CatalogId.POSCHL_TELLER | CatalogId.INFINITE_WELL:
                nu = p.get("nu", INFINITE_WELL_NU)
                return -0.5 * (log_fact + gammaln(n + nu + 1.0) - gammaln(nu + 1.0))
            case CatalogId.ISOTONIC:
                return -0.5 * (n * math.log(4.0) + log_fact)
        raise NotImplementedError(descriptor.id)


@lru_cache(maxsize=None)
def _make_spec(system_id: CatalogId, params: tuple[tuple[str, float], ...]) -> StateSpec:
    p = dict(params)
    descriptor = CATALOG[system_id]

    match system_id:
        case CatalogId.HARMONIC:
            evaluator = _harmonic()
        case CatalogId.PENSON_SOLOMON:
            evaluator = _penson_solomon(p["q"])
        case CatalogId.BARUT_GIRARDELLO:
            evaluator = _barut_girardello(p["kappa"])
        case CatalogId.GILMORE_PERELOMOV:
            evaluator = _gilmore_perelomov(p["kappa"])
        case CatalogId.HYDROGEN_LIKE:
            evaluator = _hydrogen_like()
        case CatalogId.POSCHL_TELLER:
            evaluator = _poschl_teller(p["nu"])
        case CatalogId.INFINITE_WELL:
            evaluator = _poschl_teller(INFINITE_WELL_NU)
        case CatalogId.ISOTONIC:
            evaluator = _isotonic()

    return StateSpec(
        kind=descriptor.kind,
        evaluator=evaluator,
        radius=descriptor.radius if descriptor.radius is not None else math.inf,
        label=descriptor.id.value,
        params=params,
    )


# Global repository instance
system_repo = SystemRepository()


def list_catalog() -> list[CatalogDescriptor]:
    """All catalog entries in stable order."""
    return system_repo.get_all()


def make(system_id: CatalogId | str, params: Mapping[str, float] | None = None) -> StateSpec:
    """StateSpec of a catalog family."""
    return system_repo.make(system_id, params)
