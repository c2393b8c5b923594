import math

import pytest
from hypothesis import given, strategies as st

from cellecon.errors import DomainError, UnsupportedParameterError
from cellecon.spectral import (QuadratureConfig, SinrInefficiency, cell_capacity, q_factor,
                               shannon_capacity, spectral_efficiency,
                               spectral_efficiency_integrand)
from oracles import q_direct, simpson_spectral_efficiency

# fixed-step Simpson on [0, 80] with 80k intervals
FROZEN = {1: 2.148155, 2: 1.401165, 4: 0.954037, 8: 0.662082, 10: 0.589953}


class TestShannon:
    def test_values(self):
        assert shannon_capacity(1.0, 1.0) == 1.0
        assert shannon_capacity(5e6, 0.0) == 0.0
        assert shannon_capacity(20e6, 3.0) == pytest.approx(4.0e7)

    def test_rejects_negative(self):
        with pytest.raises(DomainError):
            shannon_capacity(-1.0, 1.0)
        with pytest.raises(DomainError):
            shannon_capacity(1.0, -0.5)


class TestQFactor:
    def test_values(self):
        assert q_factor(0.0) == 0.0
        assert q_factor(1.0) == pytest.approx(math.pi / 4, abs=1e-12)
        assert q_factor(3.0) == pytest.approx(q_direct(3.0), abs=1e-12)
        assert q_factor(3.0) == pytest.approx(3.19985, abs=1e-5)

    def test_alpha_other_than_four(self):
        with pytest.raises(UnsupportedParameterError):
            q_factor(1.0, alpha=3.0)

    def test_negative_zeta(self):
        with pytest.raises(DomainError):
            q_factor(-0.1)

    @given(st.floats(0.0, 60.0), st.floats(1e-6, 5.0))
    def test_monotone(self, z, dz):
        assert q_factor(z + dz) >= q_factor(z)


class TestSpectralEfficiency:
    def test_unit_mu(self):
        s = spectral_efficiency(SinrInefficiency(1.0))
        assert s.value == pytest.approx(2.14, abs=0.05)
        assert 0 < s.value <= 2.25

    @pytest.mark.parametrize("mu", sorted(FROZEN))
    def test_frozen_values(self, mu):
        assert spectral_efficiency(SinrInefficiency(mu)).value == pytest.approx(FROZEN[mu], abs=2e-6)

    @pytest.mark.parametrize("mu", [1, 8, 10])
    def test_against_simpson_oracle(self, mu):
        s = spectral_efficiency(SinrInefficiency(mu)).value
        assert abs(s - simpson_spectral_efficiency(mu, upper=40.0)) < 1e-3

    def test_strictly_decreasing_in_mu(self):
        values = [spectral_efficiency(SinrInefficiency(m)).value for m in (1, 2, 4, 8, 10)]
        assert all(a > b for a, b in zip(values, values[1:]))

    def test_tail_convergence(self):
        base = QuadratureConfig()
        doubled = QuadratureConfig(upper_limit=2 * base.upper_limit)
        a = spectral_efficiency(SinrInefficiency(1.0), base).value
        b = spectral_efficiency(SinrInefficiency(1.0), doubled).value
        assert abs(a - b) < base.abs_tolerance

    def test_integrand_at_origin(self):
        assert spectral_efficiency_integrand(0.0, 1.0) == 1.0

    def test_invalid_inputs(self):
        with pytest.raises(DomainError):
            SinrInefficiency(0.5)
        with pytest.raises(UnsupportedParameterError):
            SinrInefficiency(1.0, path_loss_exponent=3.5)
        with pytest.raises(DomainError):
            QuadratureConfig(upper_limit=0.0)
        with pytest.raises(DomainError):
            QuadratureConfig(abs_tolerance=-1.0)

    @given(st.floats(1.0, 20.0), st.floats(0.01, 5.0))
    def test_decreasing_property(self, mu, dmu):
        quad = QuadratureConfig(abs_tolerance=1e-8)
        hi = spectral_efficiency(SinrInefficiency(mu), quad).value
        lo = spectral_efficiency(SinrInefficiency(mu + dmu), quad).value
        assert lo < hi


class TestCellCapacity:
    def test_values(self):
        assert cell_capacity(20e6, 2.14) == pytest.approx(42.8e6)
        assert cell_capacity(5e6, 0.82) == pytest.approx(4.1e6)
        assert cell_capacity(7e6, 0.0) == 0.0

    def test_accepts_result_object(self):
        s = spectral_efficiency()
        assert cell_capacity(1e6, s) == pytest.approx(s.value * 1e6)

    def test_rejects_zero_bandwidth(self):
        with pytest.raises(DomainError):
            cell_capacity(0.0, 2.0)
