"""
Subscriber usage, tariff revenue and profit per km^2 for a 4G uptake mix.

Every user not on 4G is assumed to be on 3G.  Demanded area traffic is
split evenly over subscribers, converted to a monthly data volume, mapped
to a tariff step and priced.
"""
from dataclasses import dataclass, field
import csv
import math

from .cost import AnnuityMode, capex_per_cell, opex_per_cell
from .errors import DomainError, ParseError
from .power import area_power, annual_energy_per_cell
from .tariff import UNLIMITED, select_tariff

DEFAULT_USER_DENSITY = 3000
DEFAULT_DEMAND_GRID = (5.0,) + tuple(float(r) for r in range(10, 200, 10))
# 4G uptake steps; 3G takes the complement of each.
DEFAULT_UPTAKES = (0.03, 0.06, 0.09, 0.20, 0.40, 0.90)
EXTENDED_UPTAKES = (0.03, 0.06, 0.09, 0.20, 0.30, 0.40, 0.90)

KF_BINARY_GB = 1.0 / 1024.0
KF_BITS_TO_GB = 1.0 / 8192.0


@dataclass(frozen=True)
class UsageConversion:
    active_hours_per_day: float = 12.0
    days_per_month: float = 30.0
    seconds_per_hour: float = 3600.0
    k_f: float = KF_BINARY_GB

    def __post_init__(self):
        if self.k_f not in (KF_BINARY_GB, KF_BITS_TO_GB):
            raise DomainError(f"k_f must be 1/1024 or 1/8192, got {self.k_f}")
        if self.active_hours_per_day <= 0 or self.days_per_month <= 0:
            raise DomainError("active hours and days must be positive")

    @property
    def seconds_per_month(self):
        return self.seconds_per_hour * self.active_hours_per_day * self.days_per_month


@dataclass(frozen=True)
class UptakeScenario:
    uptake_fraction_4g: float
    user_density_per_km2: int = DEFAULT_USER_DENSITY
    demand_grid_mbps: tuple = DEFAULT_DEMAND_GRID

    def __post_init__(self):
        if not 0.0 <= self.uptake_fraction_4g <= 1.0:
            raise DomainError(f"uptake_fraction_4g must lie in [0, 1], got {self.uptake_fraction_4g}")
        if not self.user_density_per_km2 > 0:
            raise DomainError("user density must be positive")

    @property
    def uptake_fraction_3g(self):
        return 1.0 - self.uptake_fraction_4g


@dataclass(frozen=True)
class ProfitRow:
    technology: str
    uptake: float
    demand_mbps_km2: float
    subscribers: int
    rate_per_sub: float
    monthly_usage_mb: float
    monthly_usage_gb: float
    tariff_level: float
    tariff_charge: float
    annual_revenue: float
    annual_cost: float
    profit: float


@dataclass(frozen=True)
class ProfitPoint:
    """Both technologies at one demand; a row is None when it has no subscribers."""

    demand_mbps_km2: float
    row_4g: ProfitRow
    row_3g: ProfitRow

    @property
    def total_profit(self):
        return sum(r.profit for r in (self.row_4g, self.row_3g) if r is not None)


@dataclass
class CostOverride:
    """Externally supplied yearly cost per km^2 and optional monthly charges.

    ``costs`` is keyed by (technology, demand); ``charges`` by
    (technology, uptake percent, demand).
    """

    costs: dict = field(default_factory=dict)
    charges: dict = field(default_factory=dict)

    def cost(self, tech, demand):
        return self.costs.get((tech, float(demand)))

    def charge(self, tech, uptake, demand):
        return self.charges.get((tech, _uptake_pct(uptake), float(demand)))


def _uptake_pct(fraction):
    return round(fraction * 100.0, 6)


def subscribers(uptake, density):
    if not 0.0 <= uptake <= 1.0:
        raise DomainError(f"uptake must lie in [0, 1], got {uptake}")
    return int(math.floor(uptake * density + 0.5))


def per_subscriber_rate(demand_mbps_km2, n_subscribers):
    if n_subscribers < 1:
        raise DomainError("per-subscriber rate needs at least one subscriber")
    return demand_mbps_km2 / n_subscribers


def monthly_usage_mb(rate_mbps, conv=UsageConversion()):
    if rate_mbps < 0:
        raise DomainError("rate must be >= 0")
    return rate_mbps * conv.seconds_per_month


def monthly_usage_gb(rate_mbps, conv=UsageConversion()):
    return monthly_usage_mb(rate_mbps, conv) * conv.k_f


def annual_revenue(charge_gbp, n_subscribers):
    if charge_gbp < 0 or n_subscribers < 0:
        raise DomainError("charge and subscribers must be >= 0")
    return charge_gbp * n_subscribers * 12


def profit(revenue, cost):
    return revenue - cost


def modeled_cost_per_km2(profile, demand, mode=AnnuityMode.STANDARD):
    """Yearly cost per km^2 of serving ``demand`` with ``profile``."""
    kw = area_power(profile.power, profile.deployment, demand, profile.area_capacity_mbps)
    energy = annual_energy_per_cell(kw, profile.deployment)
    capex = capex_per_cell(profile.capex, profile.opex.loan_years)
    return profile.deployment.cells_per_km2 * opex_per_cell(profile.opex, capex, energy, mode)


def _row(tech, uptake, demand, n_subs, profile, tariff_model, override, conv, mode,
         overage_allowance_gb):
    rate = per_subscriber_rate(demand, n_subs)
    mb = monthly_usage_mb(rate, conv)
    gb = mb * conv.k_f
    level = select_tariff(gb, overage_allowance_gb)
    charge = None if override is None else override.charge(tech, uptake, demand)
    if charge is None:
        charge = tariff_model.charge(level)
    cost = None if override is None else override.cost(tech, demand)
    if cost is None:
        cost = modeled_cost_per_km2(profile, demand, mode)
    revenue = annual_revenue(charge, n_subs)
    return ProfitRow(tech, uptake, demand, n_subs, rate, mb, gb, level, charge,
                     revenue, cost, profit(revenue, cost))


def profit_sweep(scenario, profiles, tariff_models, cost_override=None,
                 conv=UsageConversion(), mode=AnnuityMode.STANDARD, overage_allowance_gb=0.0):
    """
    Profit of both technologies at every demand of the scenario grid.

    Parameters
    ----------
    scenario : UptakeScenario
    profiles : dict
        ``{"4g": TechnologyProfile, "3g": TechnologyProfile}``.
    tariff_models : dict
        ``{"4g": TariffModel, "3g": TariffModel}``.
    cost_override : CostOverride, optional
        Replaces the modeled cost (and charge, where given) cell by cell.

    Returns
    -------
    list of ProfitPoint
        In demand-grid order.
    """
    n4 = subscribers(scenario.uptake_fraction_4g, scenario.user_density_per_km2)
    n3 = scenario.user_density_per_km2 - n4
    points = []
    for demand in scenario.demand_grid_mbps:
        demand = float(demand)
        rows = {}
        for tech, label, n, uptake in (("4g", "4G", n4, scenario.uptake_fraction_4g),
                                       ("3g", "3G", n3, scenario.uptake_fraction_3g)):
            if n == 0:
                rows[tech] = None
                continue
            rows[tech] = _row(label, uptake, demand, n, profiles[tech], tariff_models[tech],
                              cost_override, conv, mode, overage_allowance_gb)
        points.append(ProfitPoint(demand, rows["4g"], rows["3g"]))
    return points


def load_cost_override(path):
    """Read an override CSV.

    Required columns are ``technology,demand,cost_gbp``; optional columns
    ``uptake_pct`` and ``charge_gbp`` pin the monthly charge for that
    uptake as well.
    """
    override = CostOverride()
    with open(path, newline="", encoding="utf-8") as f:
        reader = csv.DictReader(f)
        missing = {"technology", "demand", "cost_gbp"} - set(reader.fieldnames or [])
        if missing:
            raise ParseError(f"missing columns {sorted(missing)}", path, 1)
        for row in reader:
            line = reader.line_num
            try:
                tech = row["technology"].strip().upper()
                if tech not in ("3G", "4G"):
                    raise ValueError(f"unknown technology {row['technology']!r}")
                demand = float(row["demand"])
                cost = float(row["cost_gbp"])
                prev = override.costs.setdefault((tech, demand), cost)
                if prev != cost:
                    raise ValueError(f"conflicting cost for {tech} at {demand:g}")
                if row.get("charge_gbp") not in (None, ""):
                    if row.get("uptake_pct") in (None, ""):
                        raise ValueError("charge_gbp needs uptake_pct")
                    key = (tech, round(float(row["uptake_pct"]), 6), demand)
                    override.charges[key] = float(row["charge_gbp"])
            except ValueError as exc:
                raise ParseError(str(exc), path, line) from None
    return override


def breakeven_uptake(per_uptake_points):
    """Smallest uptake whose 4G profit is positive at every demand, or None."""
    for uptake in sorted(per_uptake_points):
        rows = [p.row_4g for p in per_uptake_points[uptake] if p.row_4g is not None]
        if rows and all(r.profit > 0 for r in rows):
            return uptake
    return None


def is_unlimited(level):
    return level == UNLIMITED
