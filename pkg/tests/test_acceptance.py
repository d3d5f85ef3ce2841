"""End-to-end regression over the figure presets and the catalog."""

import json
import math

import numpy as np
import pytest

from cohphase.crud.systems import system_repo
from cohphase.models.catalog import CatalogId
from cohphase.models.state import StateKind
from cohphase.services.invariants import sample_points
from cohphase.services.phase import number_variance, phase_density
from cohphase.services.series import as_nonlinearity
from cohphase.services.squeezing import squeezing_report
from cohphase.utils.export import parse_csv


# Crossovers read off the published figures, checked to +-0.15 in z.
FIGURE_READS = {
    "fig2": {"Sn": 2.4, "Sphi": 2.7},
    "fig4": {"Sphi": 2.75},
    "fig6": {"Sn": 0.29},
    "fig8": {"Sn": 0.42, "Sphi": 0.78},
    "fig10": {"Sphi": 2.84},
    "fig12": {"Sn": 1.2, "Sphi": 2.2},
}

# Figure reads this implementation does not reproduce; see DESIGN.md.
# Barut-Girardello kappa = 3 and Poschl-Teller nu = 5 share f(n) = sqrt(n + 5),
# so their crossovers coincide.
COMPUTED_ONLY = {
    "fig4": {"Sn": 1.6521},
    "fig6": {"Sphi": 0.4236},
    "fig10": {"Sn": 1.6521},
}

SQUEEZE_PRESETS = ["fig2", "fig4", "fig6", "fig8", "fig10", "fig12"]


def crossover_roots(cli, preset: str, which: str) -> list[float]:
    code, out, err = cli("crossover", "--preset", preset, "--which", which)
    assert code == 0, err
    return json.loads(out)["roots"]


def squeeze_rows(cli, *argv: str) -> list[list[float | None]]:
    code, out, err = cli("squeeze", *argv)
    assert code == 0, err
    return parse_csv(out)[1]


class TestCrossoverRegression:
    """Sign changes of S_n and S_phi on the figure presets."""

    @pytest.mark.parametrize("preset,which,expected", [
        (preset, which, z) for preset, reads in FIGURE_READS.items() for which, z in reads.items()
    ])
    def test_figure_reads(self, cli, preset, which, expected):
        assert crossover_roots(cli, preset, which) == [pytest.approx(expected, abs=0.15)]

    @pytest.mark.parametrize("preset,which,expected", [
        (preset, which, z) for preset, reads in COMPUTED_ONLY.items() for which, z in reads.items()
    ])
    def test_computed_roots(self, cli, preset, which, expected):
        assert crossover_roots(cli, preset, which) == [pytest.approx(expected, abs=0.05)]

    @pytest.mark.parametrize("preset", SQUEEZE_PRESETS)
    def test_number_root_below_phase_root(self, cli, preset):
        (sn,) = crossover_roots(cli, preset, "Sn")
        (sphi,) = crossover_roots(cli, preset, "Sphi")

        assert sn < sphi

    @pytest.mark.parametrize("preset", SQUEEZE_PRESETS)
    def test_no_squeezing_between_roots(self, cli, preset):
        (sn,) = crossover_roots(cli, preset, "Sn")
        (sphi,) = crossover_roots(cli, preset, "Sphi")
        rows = squeeze_rows(cli, "--preset", preset)

        between = [r for r in rows if sn + 1e-3 < r[0] < sphi - 1e-3]
        assert between
        assert all(r[4] > 0.0 and r[5] > 0.0 for r in between)

    @pytest.mark.parametrize("preset", SQUEEZE_PRESETS)
    def test_opposite_trend(self, cli, preset):
        rows = squeeze_rows(cli, "--preset", preset)
        s_n = np.array([r[4] for r in rows])
        s_phi = np.array([r[5] for r in rows])

        assert np.all(np.diff(s_n) >= -1e-12)
        assert np.all(np.diff(s_phi) <= 1e-12)


class TestCatalogOracles:
    """Analytic and cross-path oracles over the whole catalog."""

    @pytest.mark.parametrize("z", [0.5, 1.0, 2.0, 3.0])
    def test_canonical_poisson_variance(self, harmonic, z):
        assert number_variance(harmonic, z) == pytest.approx(z * z, abs=1e-10)

    def test_peak_grows_with_z(self, catalog_spec):
        peaks = [float(phase_density(catalog_spec, z, [0.0])[0]) for z in sample_points(catalog_spec)]

        assert peaks[0] < peaks[1] < peaks[2]

    def test_dual_path(self, spectrum_spec):
        converted = as_nonlinearity(spectrum_spec)
        thetas = np.linspace(-math.pi, math.pi, 257)

        for z in sample_points(spectrum_spec):
            assert np.max(np.abs(phase_density(spectrum_spec, z, thetas) - phase_density(converted, z, thetas))) < 1e-10
            e_report = squeezing_report(spectrum_spec, z)
            f_report = squeezing_report(converted, z)
            for field in ("var_n", "var_phi", "s_n", "s_phi"):
                assert getattr(f_report, field) == pytest.approx(getattr(e_report, field), rel=1e-10, abs=1e-10)

    def test_vacuum_through_cli(self, cli):
        code, out, _ = cli("dist", "--system", "hydrogen", "--z", "0", "--theta-grid", "7")
        rows = parse_csv(out)[1]

        assert code == 0
        assert all(abs(r[1] - 1.0 / (2.0 * math.pi)) < 1e-12 for r in rows)


class TestExpressionConformance:
    """Reference expressions reproduce catalog artifacts byte for byte."""

    @pytest.mark.parametrize("system_id", list(CatalogId), ids=lambda c: c.value)
    def test_squeeze_csv_identical(self, cli, system_id):
        kind, expr, env = system_repo.reference_expression(system_id)
        descriptor = system_repo.get_by_id(system_id)
        z_hi = 0.9 * min(descriptor.radius or math.inf, 3.0)
        sweep = ("--z-lo", "0", "--z-hi", repr(z_hi), "--z-count", "12")

        dsl_argv = [
            "--system", "dsl",
            "--kind", "f" if kind is StateKind.NONLINEARITY else "e",
            "--expr", expr,
        ]
        for name, value in env.items():
            dsl_argv += ["--param", f"{name}={value!r}"]
        if descriptor.radius is not None:
            dsl_argv += ["--radius", repr(descriptor.radius)]

        _, catalog, _ = cli("squeeze", "--system", system_id.value, *sweep)
        _, dsl, _ = cli("squeeze", *dsl_argv, *sweep)

        assert catalog
        assert dsl == catalog
