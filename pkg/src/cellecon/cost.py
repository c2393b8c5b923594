"""
Annual cost of a macro-cell network per km^2.

CAPEX per cell is the equipment, insertion, backhaul installation and a
spectrum share; it is turned into a yearly repayment by a loan annuity and
added to rent, backhaul rent, electricity, maintenance and marketing.
"""
from dataclasses import dataclass
import enum

from .errors import DomainError


class AnnuityMode(enum.Enum):
    """How a principal is turned into a yearly repayment.

    ``STANDARD`` is the usual level-payment loan factor
    i(1+i)^Y / ((1+i)^Y - 1).  ``PAPER_APPENDIX`` drops the denominator,
    i(1+i)^Y, which is the factor behind the published repayment figure
    of 12,553 GBP on a 139,795 GBP principal.
    """

    STANDARD = "standard"
    PAPER_APPENDIX = "paper_appendix"

    @classmethod
    def parse(cls, text):
        aliases = {"standard": cls.STANDARD, "paper": cls.PAPER_APPENDIX,
                   "paper_appendix": cls.PAPER_APPENDIX}
        try:
            return aliases[str(text).lower()]
        except KeyError:
            raise DomainError(f"unknown annuity mode {text!r}; use standard or paper") from None


@dataclass(frozen=True)
class CapexParams:
    cell_equipment_gbp: float = 28_000.0
    insertion_gbp: float = 100_000.0
    backhaul_install_gbp: float = 8_500.0
    total_spectrum_gbp: float = 790.8e6
    network_cell_count: int = 20_000

    def __post_init__(self):
        for name in ("cell_equipment_gbp", "insertion_gbp", "backhaul_install_gbp",
                     "total_spectrum_gbp"):
            if getattr(self, name) < 0:
                raise DomainError(f"{name} must be >= 0")
        if self.network_cell_count < 1:
            raise DomainError("network_cell_count must be >= 1")


@dataclass(frozen=True)
class OpexParams:
    site_rent_gbp: float = 10_800.0
    backhaul_rent_gbp: float = 7_500.0
    energy_price_gbp_per_kwh: float = 0.14
    maintenance_gbp: float = 3_900.0
    marketing_fraction: float = 0.0233
    interest_rate: float = 0.05
    loan_years: int = 12
    amortize_capex: bool = True

    def __post_init__(self):
        for name in ("site_rent_gbp", "backhaul_rent_gbp", "energy_price_gbp_per_kwh",
                     "maintenance_gbp"):
            if getattr(self, name) < 0:
                raise DomainError(f"{name} must be >= 0")
        if not 0 <= self.marketing_fraction < 1:
            raise DomainError("marketing_fraction must lie in [0, 1)")
        if not 0 < self.interest_rate < 1:
            raise DomainError("interest_rate must lie in (0, 1)")
        if self.loan_years < 1:
            raise DomainError("loan_years must be >= 1")


@dataclass(frozen=True)
class OpexBreakdown:
    """Per-cell yearly cost components in GBP."""

    electricity: float
    backhaul_rent: float
    site_rent: float
    maintenance: float
    marketing: float
    annuity: float

    @property
    def total(self):
        return (self.electricity + self.backhaul_rent + self.site_rent
                + self.maintenance + self.marketing + self.annuity)


@dataclass(frozen=True)
class OpexRow:
    demand_mbps_km2: float
    electricity_per_km2: float
    electricity_per_cell: float
    backhaul_rent: float
    site_rent: float
    maintenance: float
    marketing: float
    capex_per_cell: float
    annuity_per_cell: float
    total_per_km2: float


def spectrum_cost_per_cell(c, loan_years):
    """Spectrum licence cost carried by one cell: total / (years * cells)."""
    if loan_years < 1 or c.network_cell_count < 1:
        raise DomainError("loan_years and network_cell_count must be >= 1")
    return c.total_spectrum_gbp / (loan_years * c.network_cell_count)


def capex_per_cell(c, loan_years=12):
    return (c.cell_equipment_gbp + c.insertion_gbp + c.backhaul_install_gbp
            + spectrum_cost_per_cell(c, loan_years))


def annuity_payment(capex_gbp, i, y, mode=AnnuityMode.STANDARD):
    """Yearly repayment of ``capex_gbp`` over ``y`` years at rate ``i``."""
    if not i > 0:
        raise DomainError(f"interest rate must be positive, got {i}")
    if y < 1:
        raise DomainError(f"loan years must be >= 1, got {y}")
    growth = (1.0 + i) ** y
    if mode is AnnuityMode.STANDARD:
        return capex_gbp * i * growth / (growth - 1.0)
    if mode is AnnuityMode.PAPER_APPENDIX:
        return capex_gbp * i * growth
    raise DomainError(f"unknown annuity mode {mode!r}")


def opex_breakdown(o, capex_gbp, annual_energy_kwh_per_cell, mode=AnnuityMode.STANDARD):
    if annual_energy_kwh_per_cell < 0:
        raise DomainError(f"annual energy must be >= 0, got {annual_energy_kwh_per_cell}")
    annuity = 0.0
    if o.amortize_capex:
        annuity = annuity_payment(capex_gbp, o.interest_rate, o.loan_years, mode)
    return OpexBreakdown(
        electricity=annual_energy_kwh_per_cell * o.energy_price_gbp_per_kwh,
        backhaul_rent=o.backhaul_rent_gbp,
        site_rent=o.site_rent_gbp,
        maintenance=o.maintenance_gbp,
        marketing=o.marketing_fraction * capex_gbp,
        annuity=annuity,
    )


def opex_per_cell(o, capex_gbp, annual_energy_kwh_per_cell, mode=AnnuityMode.STANDARD):
    """Yearly running cost of one cell, including the CAPEX annuity when amortizing."""
    return opex_breakdown(o, capex_gbp, annual_energy_kwh_per_cell, mode).total


def total_annual_cost_per_km2(o, c, d, annual_energy_kwh_per_cell, mode=AnnuityMode.STANDARD):
    capex = capex_per_cell(c, o.loan_years)
    return d.cells_per_km2 * opex_per_cell(o, capex, annual_energy_kwh_per_cell, mode)


def opex_sweep(o, c, d, energies_by_demand, mode=AnnuityMode.STANDARD):
    """Cost rows for ``(demand, annual_energy_kwh_per_cell)`` pairs, in input order."""
    capex = capex_per_cell(c, o.loan_years)
    rows = []
    for demand, energy in energies_by_demand:
        b = opex_breakdown(o, capex, energy, mode)
        rows.append(OpexRow(
            demand_mbps_km2=demand,
            electricity_per_km2=b.electricity * d.cells_per_km2,
            electricity_per_cell=b.electricity,
            backhaul_rent=b.backhaul_rent,
            site_rent=b.site_rent,
            maintenance=b.maintenance,
            marketing=b.marketing,
            capex_per_cell=capex if o.amortize_capex else 0.0,
            annuity_per_cell=b.annuity,
            total_per_km2=b.total * d.cells_per_km2,
        ))
    return rows


def cost_ratio(rows_a, rows_b):
    """Per-demand ratio of total cost, a over b, on the demands both sweeps share."""
    totals_b = {r.demand_mbps_km2: r.total_per_km2 for r in rows_b}
    return [(r.demand_mbps_km2, r.total_per_km2 / totals_b[r.demand_mbps_km2])
            for r in rows_a if r.demand_mbps_km2 in totals_b]
