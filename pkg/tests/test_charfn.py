import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ballcoord.charfn import (
    charfn_bessel,
    charfn_gauss_limit,
    charfn_hyp,
    charfn_quad,
)
from ballcoord.specialfn import log_gamma

SINC_SQRT3 = math.sin(math.sqrt(3.0)) / math.sqrt(3.0)

AGREEMENT_DIMS = (1, 2, 3, 5, 10, 20, 30)
AGREEMENT_TS = (0.25, 0.5, 1.0, 2.0, 3.0, 5.0)


class TestSeriesForm:
    def test_unity_at_zero(self):
        for n in (1, 2, 13, 400):
            assert charfn_hyp(n, 0.0) == 1.0

    def test_one_dimension_is_sinc(self):
        # n = 1 makes z uniform on [-sqrt(3), sqrt(3)]
        assert charfn_hyp(1, 1.0) == pytest.approx(SINC_SQRT3, abs=1e-13)

    def test_against_quadrature_oracle(self):
        assert charfn_hyp(10, 2.0) == pytest.approx(
            charfn_quad(10, 2.0), abs=1e-10)

    @given(t=st.floats(-10.0, 10.0), n=st.integers(1, 200))
    @settings(max_examples=80)
    def test_even_in_t(self, t, n):
        assert charfn_hyp(n, t) == charfn_hyp(n, -t)

    def test_bounded_by_one(self):
        for n in (1, 2, 5, 17, 50, 100):
            for t in np.linspace(0.0, 10.0, 81):
                assert abs(charfn_hyp(n, float(t))) <= 1.0


class TestBesselForm:
    def test_one_dimension_is_sinc(self):
        assert charfn_bessel(1, 1.0) == pytest.approx(SINC_SQRT3, abs=1e-12)

    def test_two_dimensions_prefactor_collapses(self):
        # at n = 2, t = 1 the value reduces to J_1(2)
        assert charfn_bessel(2, 1.0) == pytest.approx(
            charfn_quad(2, 1.0), abs=1e-10)

    def test_cross_representation(self):
        assert charfn_bessel(4, 0.5) == pytest.approx(
            charfn_hyp(4, 0.5), abs=1e-12)

    def test_singular_at_zero(self):
        with pytest.raises(ValueError):
            charfn_bessel(3, 0.0)

    def test_tiny_t_falls_back_to_series(self):
        t = 1e-9
        assert charfn_bessel(6, t) == charfn_hyp(6, t)

    def test_even_in_t(self):
        assert charfn_bessel(7, -2.0) == charfn_bessel(7, 2.0)

    def test_agreement_with_series_over_contract_range(self):
        for n in (1, 5, 20, 40, 60):
            for t in (0.1, 0.7, 2.0, 5.0, 10.0):
                assert abs(charfn_bessel(n, t) - charfn_hyp(n, t)) <= 1e-9


class TestQuadForm:
    def test_unity_at_zero(self):
        assert charfn_quad(5, 0.0) == pytest.approx(1.0, abs=1e-10)

    def test_one_dimension_is_sinc(self):
        assert charfn_quad(1, 1.0) == pytest.approx(SINC_SQRT3, abs=1e-10)

    def test_mutual_agreement_at_thirty(self):
        assert abs(charfn_quad(30, 3.0) - charfn_hyp(30, 3.0)) <= 1e-9

    def test_oracle_range_capped(self):
        with pytest.raises(ValueError):
            charfn_quad(51, 1.0)


class TestGaussLimit:
    def test_values(self):
        assert charfn_gauss_limit(0.0) == 1.0
        assert charfn_gauss_limit(1.0) == pytest.approx(
            0.6065306597126334, rel=1e-14)
        assert charfn_gauss_limit(3.0) == pytest.approx(
            math.exp(-4.5), rel=1e-14)


class TestThreeWayAgreement:
    def test_all_pairs(self):
        for n in AGREEMENT_DIMS:
            for t in AGREEMENT_TS:
                h = charfn_hyp(n, t)
                b = charfn_bessel(n, t)
                q = charfn_quad(n, t)
                assert abs(h - b) <= 1e-9, (n, t)
                assert abs(h - q) <= 1e-8, (n, t)


class TestGaussianConvergence:
    def test_error_decreases_with_dimension(self):
        ts = np.linspace(0.0, 3.0, 25)
        errs = {}
        for n in (10, 100, 1000):
            errs[n] = max(abs(charfn_hyp(n, float(t)) - charfn_gauss_limit(float(t)))
                          for t in ts)
        assert errs[10] > errs[100] > errs[1000]
        assert errs[1000] <= 0.01
        # measured values, frozen as regressions
        assert errs[10] == pytest.approx(5.0383e-2, rel=1e-3)
        assert errs[1000] == pytest.approx(5.4098e-4, rel=1e-3)

    def test_term_ratio_limit(self):
        # (n/2+1)^k Gamma(n/2+1) / Gamma(n/2+1+k) -> 1 as n grows
        for n in (100, 1000):
            b = n / 2 + 1
            for k in range(1, 7):
                ratio = math.exp(k * math.log(b) + log_gamma(b) - log_gamma(b + k))
                assert abs(ratio - 1.0) <= 2.0 * k * k / n
