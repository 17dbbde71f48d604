import math

import numpy as np
import pytest
from scipy import integrate

from ballcoord.convergence import (
    DEFAULT_DIMS,
    DEFAULT_T_GRID,
    DEFAULT_Z_GRID,
    ConvergenceReport,
    GofReport,
    build_report,
    cf_sup_distance,
    g_pdf,
    ks_test,
    normal_pdf,
    pdf_sup_distance,
)
from ballcoord.marginal import MarginalDist
from ballcoord.sampling import RngStream, SampleMethod, sample_coordinate


class TestGPdf:
    def test_one_dimension_center(self):
        assert g_pdf(1, 0.0) == pytest.approx(1.0 / (2.0 * math.sqrt(3.0)),
                                              rel=1e-12)

    def test_outside_support(self):
        for n in (1, 4, 25):
            assert g_pdf(n, math.sqrt(n + 2.0) + 0.1) == 0.0

    def test_disk_center(self):
        assert g_pdf(2, 0.0) == pytest.approx(1.0 / math.pi, rel=1e-12)

    def test_change_of_variables(self):
        for n in (1, 3, 12, 64):
            d = MarginalDist(n)
            s = math.sqrt(n + 2.0)
            for z in np.linspace(-s + 1e-9, s - 1e-9, 41):
                z = float(z)
                assert g_pdf(n, z) * s == pytest.approx(d.pdf(z / s), rel=1e-14)

    def test_normalization_by_quadrature(self):
        for n in range(1, 51):
            s = math.sqrt(n + 2.0)
            total, _ = integrate.quad(lambda z: g_pdf(n, z), -s, s,
                                      epsabs=1e-12, epsrel=1e-12, limit=200)
            assert total == pytest.approx(1.0, abs=1e-10)

    def test_unit_variance_of_rescaled_coordinate(self):
        for n in (1, 2, 17, 256, 2000):
            assert abs((n + 2) * MarginalDist(n).moment(2) - 1.0) <= 1e-12
        for n in (1, 3, 20):
            s = math.sqrt(n + 2.0)
            second, _ = integrate.quad(lambda z: z * z * g_pdf(n, z), -s, s,
                                       epsabs=1e-12, epsrel=1e-12, limit=200)
            assert second == pytest.approx(1.0, abs=1e-9)


class TestNormalPdf:
    def test_center(self):
        assert normal_pdf(0.0) == pytest.approx(0.3989422804014327, rel=1e-14)

    def test_even(self):
        assert normal_pdf(1.0) == normal_pdf(-1.0)

    def test_normalization(self):
        total, _ = integrate.quad(normal_pdf, -8.0, 8.0,
                                  epsabs=1e-13, epsrel=1e-13)
        assert total == pytest.approx(1.0, abs=1e-12)


class TestPdfSupDistance:
    def test_one_dimension_frozen_value(self):
        # max sits at the support edge z ~ sqrt(3), where g_1 jumps to 0;
        # independent scan of the same grid is the oracle
        zs = np.asarray(DEFAULT_Z_GRID)
        ln = math.lgamma(1.5) - math.lgamma(1.0) - 0.5 * math.log(math.pi)
        g = np.where(np.abs(zs) <= math.sqrt(3.0),
                     math.exp(ln) / math.sqrt(3.0), 0.0)
        ref = np.exp(-0.5 * zs * zs) / math.sqrt(2 * math.pi)
        oracle = float(np.max(np.abs(g - ref)))
        got = pdf_sup_distance(1)
        assert got == pytest.approx(oracle, rel=1e-12)
        assert got == pytest.approx(0.19934251, rel=1e-6)

    def test_monotone_decrease(self):
        assert pdf_sup_distance(4) > pdf_sup_distance(16) > pdf_sup_distance(64)

    def test_large_dimension_closed_form_only(self):
        val = pdf_sup_distance(10_000)
        assert val <= 1e-4
        assert val == pytest.approx(2.9916e-5, rel=1e-3)  # frozen regression

    def test_rejects_empty_grid(self):
        with pytest.raises(ValueError):
            pdf_sup_distance(3, grid=[])


class TestKsTest:
    def test_stratified_quantile_sample_passes_trivially(self):
        d = MarginalDist(4)
        size = 1000
        xs = [d.quantile((i + 0.5) / size) for i in range(size)]
        report = ks_test(xs, d, alpha=0.05)
        assert report.ks_stat <= 1.0 / size
        assert report.passed

    def test_end_to_end_positive_control(self):
        xs = sample_coordinate(3, SampleMethod.DIR_RADIUS, 100_000,
                               RngStream(101))
        report = ks_test(xs, MarginalDist(3), alpha=0.001)
        assert report.passed
        assert report.sample_size == 100_000
        assert report.critical_value == pytest.approx(
            1.949 / math.sqrt(100_000), rel=1e-12)

    def test_negative_control_detects_wrong_dimension(self):
        xs = sample_coordinate(3, SampleMethod.DIR_RADIUS, 100_000,
                               RngStream(101))
        report = ks_test(xs, MarginalDist(10), alpha=0.001)
        assert not report.passed

    def test_alpha_validation(self):
        with pytest.raises(ValueError):
            ks_test([0.1, 0.2], MarginalDist(2), alpha=0.2)

    def test_empty_sample(self):
        with pytest.raises(ValueError):
            ks_test([], MarginalDist(2), alpha=0.05)

    def test_report_invariant_enforced(self):
        with pytest.raises(ValueError):
            GofReport(n=2, sample_size=10, ks_stat=0.5,
                      critical_value=0.4, passed=True)


class TestBuildReport:
    def test_single_dimension(self):
        report = build_report([1])
        assert report.dims == (1,)
        assert report.pdf_sup_err[0] > 0.0 and math.isfinite(report.pdf_sup_err[0])
        assert report.cf_sup_err[0] > 0.0 and math.isfinite(report.cf_sup_err[0])

    def test_default_dims_strictly_decreasing(self):
        report = build_report()
        assert report.dims == DEFAULT_DIMS
        assert all(b < a for a, b in zip(report.pdf_sup_err,
                                         report.pdf_sup_err[1:]))
        assert all(b < a for a, b in zip(report.cf_sup_err,
                                         report.cf_sup_err[1:]))

    def test_collapse_of_unscaled_variance(self):
        assert MarginalDist(256).moment(2) == pytest.approx(1.0 / 258.0,
                                                            rel=1e-12)

    def test_grid_spec_mentions_defaults(self):
        report = build_report([2, 3])
        assert str(DEFAULT_Z_GRID.size) in report.grid_spec
        assert str(DEFAULT_T_GRID.size) in report.grid_spec

    def test_input_validation(self):
        with pytest.raises(ValueError):
            build_report([])
        with pytest.raises(ValueError):
            build_report([4, 2])
        with pytest.raises(ValueError):
            build_report([2, 2])

    def test_report_invariants_enforced(self):
        with pytest.raises(ValueError):
            ConvergenceReport(dims=(1, 2), pdf_sup_err=(0.1,),
                              cf_sup_err=(0.1, 0.2), grid_spec="")
        with pytest.raises(ValueError):
            ConvergenceReport(dims=(1,), pdf_sup_err=(-0.1,),
                              cf_sup_err=(0.1,), grid_spec="")


def test_cf_sup_distance_default_grid():
    assert cf_sup_distance(1000) <= 0.01
    assert cf_sup_distance(10) > cf_sup_distance(100) > cf_sup_distance(1000)
