"""
Base station power consumption versus traffic load.

Per-cell power is N_a * (P_T / mu_RH * sqrt(load) + overhead) where the
overhead term lumps baseband, cooling, supply losses and backhaul.
"""
from dataclasses import dataclass
import math

from .errors import DomainError, OverloadError

HOURS_PER_DAY = 24
DAYS_PER_YEAR = 365

# Per-transceiver breakdown behind the 300 W overhead aggregate (W).
# Informational only; the model consumes ``overhead_plus_backhaul_w``.
COMPONENT_BREAKDOWN_W = {
    "main_supply": 18.6,
    "cooling": 22.1,
    "dc_dc": 13.7,
    "rf_trx": 13.0,
    "power_amplifier": 128.2,
    "baseband": 29.5,
    "backhaul": 75.0,
}


@dataclass(frozen=True)
class PowerParams:
    n_antennas: int = 3
    p_transmit_w: float = 39.8
    radio_head_efficiency: float = 0.31
    overhead_plus_backhaul_w: float = 300.0

    def __post_init__(self):
        if self.n_antennas < 1:
            raise DomainError("n_antennas must be >= 1")
        if not self.p_transmit_w > 0:
            raise DomainError("p_transmit_w must be positive")
        if not 0 < self.radio_head_efficiency <= 1:
            raise DomainError("radio_head_efficiency must lie in (0, 1]")
        if not self.overhead_plus_backhaul_w > 0:
            raise DomainError("overhead_plus_backhaul_w must be positive")


@dataclass(frozen=True)
class Deployment:
    """
    Homogeneous macro-cell deployment.

    ``cells_per_km2`` multiplies per-cell power and cost up to a km^2.
    ``capacity_cells_per_km2`` (defaults to the same value) sizes the area
    capacity; the two differ for the reference LTE plan, which uses 4.62
    cells/km^2 for capacity but 4.6 for power and cost aggregation.
    """

    cells_per_km2: float
    inter_site_distance_km: float = None
    capacity_cells_per_km2: float = None
    allow_area_mismatch: bool = False

    def __post_init__(self):
        if not self.cells_per_km2 > 0:
            raise DomainError("cells_per_km2 must be positive")
        if self.capacity_cells_per_km2 is not None and not self.capacity_cells_per_km2 > 0:
            raise DomainError("capacity_cells_per_km2 must be positive")
        if self.inter_site_distance_km is not None:
            implied = 1.0 / hex_cell_area(self.inter_site_distance_km)
            mismatch = abs(implied - self.cells_per_km2) / self.cells_per_km2
            if mismatch > 0.05 and not self.allow_area_mismatch:
                raise DomainError(
                    f"ISD {self.inter_site_distance_km} km implies {implied:.3f} cells/km2, "
                    f"{mismatch:.1%} away from cells_per_km2={self.cells_per_km2}"
                )

    @property
    def capacity_density(self):
        if self.capacity_cells_per_km2 is None:
            return self.cells_per_km2
        return self.capacity_cells_per_km2


@dataclass(frozen=True)
class PowerRow:
    p_transmit_w: float
    radio_head_efficiency: float
    demand_mbps_km2: float
    capacity_mbps_km2: float
    overhead_plus_backhaul_w: float
    cell_power_w: float
    area_power_kw: float


def hex_cell_area(isd_km):
    """Area of a hexagonal cell, (sqrt(3)/2) * ISD^2, in km^2."""
    if not isd_km > 0:
        raise DomainError(f"ISD must be positive, got {isd_km}")
    return math.sqrt(3.0) / 2.0 * isd_km ** 2


def cell_power(p, load):
    """Power drawn by one cell in W at a traffic load in [0, 1]."""
    if not 0.0 <= load <= 1.0:
        raise DomainError(f"load must lie in [0, 1], got {load}")
    return p.n_antennas * (p.p_transmit_w / p.radio_head_efficiency * math.sqrt(load)
                           + p.overhead_plus_backhaul_w)


def area_capacity(d, cell_capacity_mbps):
    """Capacity per km^2 in Mbit/s/km^2."""
    if cell_capacity_mbps < 0:
        raise DomainError("cell capacity must be non-negative")
    return d.capacity_density * cell_capacity_mbps


def area_power(p, d, demand_mbps_km2, area_capacity_mbps):
    """Power per km^2 in kW; raises OverloadError when demand exceeds capacity."""
    if demand_mbps_km2 < 0:
        raise DomainError(f"demand must be non-negative, got {demand_mbps_km2}")
    if demand_mbps_km2 > area_capacity_mbps:
        raise OverloadError(demand_mbps_km2, area_capacity_mbps)
    load = demand_mbps_km2 / area_capacity_mbps if demand_mbps_km2 else 0.0
    return d.cells_per_km2 * cell_power(p, load) / 1000.0


def annual_energy_per_cell(area_power_kw, d, hours=HOURS_PER_DAY, days=DAYS_PER_YEAR):
    """Annual energy of one cell in kWh from the per-km^2 power draw."""
    if area_power_kw < 0:
        raise DomainError("area power must be non-negative")
    return area_power_kw * hours * days / d.cells_per_km2


def annual_energy_per_km2(area_power_kw, hours=HOURS_PER_DAY, days=DAYS_PER_YEAR):
    return area_power_kw * hours * days


def power_sweep(p, d, demands, cell_capacity_mbps):
    """One PowerRow per demand, in input order."""
    cap = area_capacity(d, cell_capacity_mbps)
    rows = []
    for r in demands:
        kw = area_power(p, d, r, cap)
        rows.append(PowerRow(
            p_transmit_w=p.p_transmit_w,
            radio_head_efficiency=p.radio_head_efficiency,
            demand_mbps_km2=r,
            capacity_mbps_km2=cap,
            overhead_plus_backhaul_w=p.overhead_plus_backhaul_w,
            cell_power_w=kw * 1000.0 / d.cells_per_km2,
            area_power_kw=kw,
        ))
    return rows
