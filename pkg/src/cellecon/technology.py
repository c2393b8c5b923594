"""
Per-technology parameter bundles for LTE (4G) and HSPA (3G).

A profile carries everything the power, cost and profit chain needs for
one radio technology so a scenario can swap grids or prices in one place.
"""
from dataclasses import dataclass, field, replace

from .cost import CapexParams, OpexParams
from .errors import DomainError
from .power import Deployment, PowerParams


@dataclass(frozen=True)
class TechnologyProfile:
    """
    Attributes
    ----------
    name : str
        ``"4g"`` or ``"3g"``.
    spectral_efficiency : float
        Configured mean spectral efficiency in bits/s/Hz.
    bandwidth_mhz : float
        Carrier bandwidth used for cell capacity.
    per_user_cap_mhz : float
        Largest bandwidth a single user can be scheduled.
    cell_capacity_mbps : float
        Capacity per cell used to size the area capacity.  Kept separate
        from ``bandwidth_mhz * spectral_efficiency`` because planning uses
        rounded per-cell figures (43 and 16 Mbit/s).
    sinr_inefficiency : float
        Factor mu that the spectral-efficiency integral would use.
    """

    name: str
    spectral_efficiency: float
    bandwidth_mhz: float
    per_user_cap_mhz: float
    cell_capacity_mbps: float
    deployment: Deployment
    sinr_inefficiency: float = 1.0
    power: PowerParams = field(default_factory=PowerParams)
    capex: CapexParams = field(default_factory=CapexParams)
    opex: OpexParams = field(default_factory=OpexParams)

    def __post_init__(self):
        if not self.spectral_efficiency > 0:
            raise DomainError("spectral_efficiency must be positive")
        if not self.bandwidth_mhz > 0 or not self.per_user_cap_mhz > 0:
            raise DomainError("bandwidths must be positive")
        if not self.cell_capacity_mbps > 0:
            raise DomainError("cell_capacity_mbps must be positive")

    @property
    def area_capacity_mbps(self):
        return self.deployment.capacity_density * self.cell_capacity_mbps

    def with_changes(self, **changes):
        return replace(self, **changes)


def lte_profile():
    return TechnologyProfile(
        name="4g",
        spectral_efficiency=2.14,
        bandwidth_mhz=20.0,
        per_user_cap_mhz=20.0,
        cell_capacity_mbps=43.0,
        deployment=Deployment(cells_per_km2=4.6, inter_site_distance_km=0.5,
                              capacity_cells_per_km2=4.62),
        sinr_inefficiency=1.0,
    )


def hspa_profile():
    # CAPEX is treated as already repaid and no marketing is spent.
    return TechnologyProfile(
        name="3g",
        spectral_efficiency=0.82,
        bandwidth_mhz=5.0,
        per_user_cap_mhz=5.0,
        cell_capacity_mbps=16.0,
        deployment=Deployment(cells_per_km2=12.4, inter_site_distance_km=0.3),
        sinr_inefficiency=8.0,
        opex=OpexParams(marketing_fraction=0.0, amortize_capex=False),
    )


def default_profiles():
    return {"4g": lte_profile(), "3g": hspa_profile()}
