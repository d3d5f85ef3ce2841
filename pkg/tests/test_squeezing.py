"""Tests for squeezing reports, crossover search, sweeps and the invariant suite."""

import logging
import math

import numpy as np
import pytest

from cohphase.core.exceptions import DomainExceeded, InvalidParameter, NotConverged
from cohphase.crud.systems import system_repo
from cohphase.models.catalog import CatalogId
from cohphase.models.phase import PhaseWindow, SqueezingParameter
from cohphase.schemas.results import CheckSummary, InvariantResult
from cohphase.services.invariants import InvariantSuite, run_invariant_suite
from cohphase.services.phase import UNIFORM_VARIANCE
from cohphase.services.squeezing import crossover_scan, scan_grid, squeezing_report
from cohphase.services.sweep import map_points, resolve_workers, squeeze_sweep


# (system, params, z_lo, z_hi, S_n root, S_phi root)
CROSSOVERS = [
    (CatalogId.HARMONIC, {}, 0.05, 4.0, 0.6220, 1.0988),
    (CatalogId.PENSON_SOLOMON, {"q": 0.5}, 0.05, 4.0, 2.3921, 2.6993),
    (CatalogId.BARUT_GIRARDELLO, {"kappa": 3.0}, 0.05, 4.0, 1.6521, 2.8392),
    (CatalogId.GILMORE_PERELOMOV, {"kappa": 3.0}, 0.05, 0.95, 0.2343, 0.4236),
    (CatalogId.HYDROGEN_LIKE, {}, 0.05, 0.95, 0.4156, 0.7780),
    (CatalogId.POSCHL_TELLER, {"nu": 5.0}, 0.1, 4.0, 1.6521, 2.8392),
    (CatalogId.INFINITE_WELL, {}, 0.1, 4.0, 1.2523, 2.0939),
    (CatalogId.ISOTONIC, {"gamma_p": 2.5}, 0.1, 4.0, 1.2440, 2.1977),
]


class TestSqueezingReport:
    """Tests for squeezing_report."""

    def test_penson_solomon_number_squeezed(self):
        report = squeezing_report(system_repo.make(CatalogId.PENSON_SOLOMON), 1.0)

        assert report.s_n == pytest.approx(-0.233, abs=1e-3)
        assert report.s_phi == pytest.approx(0.863, abs=1e-3)
        assert report.number_squeezed
        assert not report.phase_squeezed

    def test_penson_solomon_phase_squeezed(self):
        report = squeezing_report(system_repo.make(CatalogId.PENSON_SOLOMON), 3.5)

        assert report.s_n == pytest.approx(0.069, abs=1e-3)
        assert report.s_phi == pytest.approx(-0.054, abs=1e-3)
        assert report.phase_squeezed
        assert not report.number_squeezed

    def test_harmonic_large_z(self, harmonic):
        report = squeezing_report(harmonic, 3.0)

        assert report.var_n == pytest.approx(9.0, rel=1e-9)
        assert report.mean_number == pytest.approx(9.0, rel=1e-9)
        assert report.commutator_mag == pytest.approx(0.999997, abs=1e-6)
        assert report.s_n == pytest.approx(2.0 * 9.0 / report.commutator_mag - 1.0, rel=1e-12)

    def test_undefined_at_vacuum(self, catalog_spec):
        report = squeezing_report(catalog_spec, 0.0)

        assert report.s_n is None
        assert report.s_phi is None
        assert report.commutator_mag == 0.0
        assert report.var_phi == UNIFORM_VARIANCE
        assert not report.number_squeezed
        assert not report.phase_squeezed

    def test_uses_modulus_of_z(self, catalog_spec):
        z = min(catalog_spec.radius, 3.0) * 0.5
        a = squeezing_report(catalog_spec, z)
        b = squeezing_report(catalog_spec, z * np.exp(2.5j))

        assert b.s_n == pytest.approx(a.s_n, rel=1e-12)
        assert b.s_phi == pytest.approx(a.s_phi, rel=1e-12)
        assert b.z == z * np.exp(2.5j)

    def test_parameter_selector(self, harmonic):
        report = squeezing_report(harmonic, 1.0)

        assert report.parameter(SqueezingParameter.SN) == report.s_n
        assert report.parameter(SqueezingParameter.SPHI) == report.s_phi

    def test_uncertainty_relation(self, catalog_spec):
        reach = min(catalog_spec.radius, 3.0)
        for z in np.linspace(0.1, 0.9, 9) * reach:
            report = squeezing_report(catalog_spec, z)
            assert report.uncertainty_product >= report.commutator_mag ** 2 / 4.0 - 1e-9

    def test_outside_radius(self):
        with pytest.raises(DomainExceeded):
            squeezing_report(system_repo.make(CatalogId.HYDROGEN_LIKE), 1.0)

    def test_window_changes_commutator(self, harmonic):
        default = squeezing_report(harmonic, 1.0)
        shifted = squeezing_report(harmonic, 1.0, PhaseWindow(theta0=-0.5 * math.pi))

        assert shifted.commutator_mag != pytest.approx(default.commutator_mag, abs=1e-3)
        assert shifted.var_n == default.var_n


class TestScanGrid:
    """Tests for scan_grid."""

    def test_includes_upper_end(self):
        assert list(scan_grid(0.0, 1.0, 0.3)) == pytest.approx([0.0, 0.3, 0.6, 0.9, 1.0])

    def test_no_duplicate_end(self):
        assert list(scan_grid(0.05, 0.2, 0.05)) == pytest.approx([0.05, 0.1, 0.15, 0.2])


class TestCrossoverScan:
    """Tests for crossover_scan."""

    @pytest.mark.parametrize("system_id,params,z_lo,z_hi,sn_root,sphi_root", CROSSOVERS, ids=lambda v: getattr(v, "value", None))
    def test_number_squeezing_onset(self, system_id, params, z_lo, z_hi, sn_root, sphi_root):
        roots = crossover_scan(system_repo.make(system_id, params), "Sn", z_lo, z_hi, 0.05)

        assert roots == [pytest.approx(sn_root, abs=2e-3)]

    @pytest.mark.parametrize("system_id,params,z_lo,z_hi,sn_root,sphi_root", CROSSOVERS, ids=lambda v: getattr(v, "value", None))
    def test_phase_squeezing_onset(self, system_id, params, z_lo, z_hi, sn_root, sphi_root):
        roots = crossover_scan(system_repo.make(system_id, params), SqueezingParameter.SPHI, z_lo, z_hi, 0.05)

        assert roots == [pytest.approx(sphi_root, abs=2e-3)]

    def test_number_before_phase(self):
        for system_id, params, z_lo, z_hi, _, _ in CROSSOVERS:
            spec = system_repo.make(system_id, params)
            sn = crossover_scan(spec, "Sn", z_lo, z_hi, 0.05)
            sphi = crossover_scan(spec, "Sphi", z_lo, z_hi, 0.05)
            assert sn[0] < sphi[0]

    def test_root_is_sign_change(self):
        spec = system_repo.make(CatalogId.HYDROGEN_LIKE)
        (root,) = crossover_scan(spec, "Sn", 0.05, 0.95, 0.05)

        assert squeezing_report(spec, root - 1e-3).s_n < 0.0 < squeezing_report(spec, root + 1e-3).s_n

    def test_no_crossing_in_range(self, harmonic):
        assert crossover_scan(harmonic, "Sn", 1.0, 3.0, 0.1) == []

    def test_coarse_step_same_root(self):
        spec = system_repo.make(CatalogId.GILMORE_PERELOMOV)
        fine = crossover_scan(spec, "Sphi", 0.05, 0.95, 0.01)
        coarse = crossover_scan(spec, "Sphi", 0.05, 0.95, 0.3)

        assert coarse == [pytest.approx(fine[0], abs=3e-4)]

    @pytest.mark.parametrize("z_lo,z_hi,step", [
        (0.0, 0.5, 0.05),
        (0.5, 0.5, 0.05),
        (0.6, 0.5, 0.05),
        (0.1, 1.0, 0.05),
        (0.1, 0.5, 0.0),
    ])
    def test_invalid_range(self, z_lo, z_hi, step):
        spec = system_repo.make(CatalogId.GILMORE_PERELOMOV)

        with pytest.raises(InvalidParameter):
            crossover_scan(spec, "Sn", z_lo, z_hi, step)

    def test_unknown_parameter(self, harmonic):
        with pytest.raises(ValueError):
            crossover_scan(harmonic, "S_x", 0.1, 1.0, 0.1)


class TestSweep:
    """Tests for the concurrent sweep helpers."""

    def test_resolve_workers(self, monkeypatch):
        from cohphase.core.config import get_settings

        monkeypatch.setattr(get_settings(), "THREADS", 3)
        assert resolve_workers() == 3
        assert resolve_workers(5) == 5
        assert resolve_workers(0) == 1

    def test_map_points_keeps_order(self):
        assert map_points(lambda x: x * x, range(20), max_workers=4) == [x * x for x in range(20)]

    def test_map_points_serial(self):
        assert map_points(str, [1, 2], max_workers=1) == ["1", "2"]

    def test_sweep_matches_single_points(self):
        spec = system_repo.make(CatalogId.BARUT_GIRARDELLO)
        zs = list(np.linspace(0.1, 3.0, 12))

        rows = squeeze_sweep(spec, zs, max_workers=4)

        assert [row.z for row in rows] == zs
        assert [row.report for row in rows] == [squeezing_report(spec, z) for z in zs]

    def test_failed_points_are_kept(self, caplog):
        spec = system_repo.make(CatalogId.GILMORE_PERELOMOV)

        with caplog.at_level(logging.WARNING):
            rows = squeeze_sweep(spec, [0.5, 1.2, 0.7], max_workers=2)

        assert rows[0].report is not None and rows[2].report is not None
        assert rows[1].report is None
        assert isinstance(rows[1].error, DomainExceeded)
        assert "DomainExceeded" in caplog.text


class TestInvariantSuite:
    """Tests for the invariant suite."""

    def test_catalog_passes(self, catalog_spec):
        results = run_invariant_suite(catalog_spec)

        assert [r.name for r in results if not r.passed] == []

    def test_dual_path_only_for_spectra(self, catalog_spec):
        names = [r.name for r in run_invariant_suite(catalog_spec)]

        assert ("dual-path" in names) is (catalog_spec.kind.value == "spectrum")
        assert names[:7] == [
            "amplitude-normalization",
            "eigenvector",
            "nonlinearity-recovery",
            "distribution-normalization",
            "theta-symmetry",
            "closed-vs-amplitude-form",
            "uncertainty-relation",
        ]

    def test_worst_case_is_reported(self, harmonic):
        suite = InvariantSuite(harmonic)

        result = suite.run_check("linear", lambda z: (z, 2.0))

        assert not result.passed
        assert result.z == pytest.approx(2.7)
        assert result.value == pytest.approx(2.7)

    def test_numerical_failure_fails_check(self, harmonic):
        def check(z: float) -> tuple[float, float]:
            raise NotConverged(z, 8)

        result = InvariantSuite(harmonic).run_check("series", check)

        assert not result.passed
        assert result.value is None
        assert result.detail.startswith("NotConverged")

    def test_summary(self):
        summary = CheckSummary(system="x", results=[
            InvariantResult(name="a", passed=True, value=0.0, tolerance=1.0, z=0.9),
            InvariantResult(name="b", passed=False, value=2.0, tolerance=1.0, z=0.9),
        ])

        assert not summary.passed
        assert [r.name for r in summary.failures] == ["b"]
