import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cellecon.errors import DomainError, OverloadError
from cellecon.power import (Deployment, PowerParams, annual_energy_per_cell,
                            annual_energy_per_km2, area_capacity, area_power, cell_power,
                            hex_cell_area, power_sweep)
from oracles import hex_area_from_triangles
from reference import AREA_CAPACITY_3G, AREA_CAPACITY_4G, POWER_3G, POWER_4G

P = PowerParams()


class TestHexArea:
    def test_values(self):
        assert hex_cell_area(0.5) == pytest.approx(0.2165, abs=1e-4)
        assert hex_cell_area(0.3) == pytest.approx(0.0779, abs=1e-4)
        assert hex_cell_area(1.0) == pytest.approx(math.sqrt(3) / 2)

    @given(st.floats(0.01, 10.0))
    def test_matches_triangle_decomposition(self, isd):
        assert hex_cell_area(isd) == pytest.approx(hex_area_from_triangles(isd), rel=1e-12)

    def test_rejects_zero(self):
        with pytest.raises(DomainError):
            hex_cell_area(0.0)


class TestDeployment:
    def test_consistent_isd(self):
        Deployment(4.6, inter_site_distance_km=0.5)
        Deployment(12.4, inter_site_distance_km=0.3)

    def test_inconsistent_isd_needs_flag(self):
        with pytest.raises(DomainError):
            Deployment(4.6, inter_site_distance_km=1.0)
        Deployment(4.6, inter_site_distance_km=1.0, allow_area_mismatch=True)

    def test_capacity_density(self):
        assert Deployment(4.6, capacity_cells_per_km2=4.62).capacity_density == 4.62
        assert Deployment(12.4).capacity_density == 12.4


class TestCellPower:
    def test_values(self):
        assert cell_power(P, 0.0) == 900.0
        assert cell_power(P, 5 / 198.66) == pytest.approx(961.10, abs=0.01)
        assert cell_power(P, 190 / 198.66) == pytest.approx(1276.67, abs=0.01)

    @pytest.mark.parametrize("load", [-0.01, 1.01])
    def test_load_bounds(self, load):
        with pytest.raises(DomainError):
            cell_power(P, load)

    def test_concave_increasing(self):
        loads = np.linspace(0, 1, 101)
        values = np.array([cell_power(P, x) for x in loads])
        assert np.all(np.diff(values) > 0)
        assert np.all(np.diff(values, 2) <= 1e-9)

    @given(st.integers(1, 8), st.floats(1.0, 1000.0))
    def test_zero_load_is_overhead(self, n, overhead):
        assert cell_power(PowerParams(n_antennas=n, overhead_plus_backhaul_w=overhead), 0.0) == n * overhead


class TestAreaPower:
    def test_area_capacity(self):
        assert area_capacity(Deployment(4.62), 43) == pytest.approx(AREA_CAPACITY_4G)
        assert area_capacity(Deployment(12.4), 16) == pytest.approx(AREA_CAPACITY_3G)
        assert area_capacity(Deployment(3.0), 0) == 0

    def test_point_values(self, profiles):
        p4, p3 = profiles["4g"], profiles["3g"]
        assert area_power(P, p4.deployment, 5, p4.area_capacity_mbps) == pytest.approx(4.42, abs=0.005)
        assert area_power(P, p4.deployment, 0, p4.area_capacity_mbps) == pytest.approx(4.14, abs=0.005)
        assert area_power(P, p3.deployment, 90, p3.area_capacity_mbps) == pytest.approx(14.37, abs=0.01)

    def test_overload(self):
        with pytest.raises(OverloadError) as info:
            area_power(P, Deployment(4.6), 200, 198.66)
        assert "200" in str(info.value) and "198.66" in str(info.value)

    @given(st.floats(0.1, 50.0), st.floats(0.0, 1.0))
    def test_linear_in_density(self, cells, load):
        a = area_power(P, Deployment(cells), load * 100, 100)
        b = area_power(P, Deployment(2 * cells), load * 100, 100)
        assert b == pytest.approx(2 * a, rel=1e-12)


class TestSweeps:
    def test_lte_reference_rows(self, profiles):
        p = profiles["4g"]
        rows = power_sweep(p.power, p.deployment, [r[0] for r in POWER_4G], p.cell_capacity_mbps)
        assert len(rows) == 21
        for row, (demand, cell_w, area_kw) in zip(rows, POWER_4G):
            assert row.demand_mbps_km2 == demand
            assert abs(row.cell_power_w - cell_w) <= 0.05
            assert abs(row.area_power_kw - area_kw) <= 0.01

    def test_hspa_reference_area_power(self, profiles):
        p = profiles["3g"]
        rows = power_sweep(p.power, p.deployment, [r[0] for r in POWER_3G], p.cell_capacity_mbps)
        assert len(rows) == 21
        for row, (_, _, area_kw) in zip(rows, POWER_3G):
            assert abs(row.area_power_kw - area_kw) <= 0.01

    def test_hspa_cell_power_uses_own_capacity(self, profiles):
        p = profiles["3g"]
        rows = power_sweep(p.power, p.deployment, [r[0] for r in POWER_3G], p.cell_capacity_mbps)
        for row in rows:
            assert row.capacity_mbps_km2 == pytest.approx(198.40)
            assert row.cell_power_w == pytest.approx(cell_power(P, row.demand_mbps_km2 / 198.40))
        # the lower capacity means a slightly higher load than the LTE rows at each demand
        assert rows[-1].cell_power_w == pytest.approx(1276.92, abs=0.005)

    def test_empty(self, profiles):
        assert power_sweep(P, profiles["4g"].deployment, [], 43) == []

    def test_order_preserved(self, profiles):
        rows = power_sweep(P, profiles["4g"].deployment, [30, 0, 10], 43)
        assert [r.demand_mbps_km2 for r in rows] == [30, 0, 10]

    def test_overload_propagates(self, profiles):
        with pytest.raises(OverloadError):
            power_sweep(P, profiles["3g"].deployment, [0, 250], 16)


class TestEnergy:
    def test_annual_energy_at_peak(self, profiles):
        for tech, printed in (("4g", 51_445), ("3g", 138_677)):
            p = profiles[tech]
            kw = area_power(P, p.deployment, 190, p.area_capacity_mbps)
            assert annual_energy_per_km2(kw) == pytest.approx(printed, rel=0.01)
            per_cell = annual_energy_per_cell(kw, p.deployment)
            assert per_cell * p.deployment.cells_per_km2 == pytest.approx(annual_energy_per_km2(kw))

    def test_zero(self):
        assert annual_energy_per_cell(0.0, Deployment(4.6)) == 0.0
