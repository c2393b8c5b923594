"""
Scenario configuration: a flat JSON object whose absent keys take defaults.

The defaults reproduce the reference LTE/HSPA dense-urban baseline, so an
empty ``{}`` document is a complete scenario.
"""
from dataclasses import dataclass, field
import json
import math
import os

from .cost import AnnuityMode, CapexParams, OpexParams
from .errors import CelleconError, ConfigError
from .power import Deployment, PowerParams
from .profit import (DEFAULT_DEMAND_GRID, DEFAULT_UPTAKES, KF_BINARY_GB, KF_BITS_TO_GB,
                     UsageConversion)
from .tariff import NormalizationRules
from .technology import TechnologyProfile

_NUMBER = (int, float)


def _positive(x):
    return x > 0


def _non_negative(x):
    return x >= 0


def _fraction(x):
    return 0 <= x <= 1


def _open_fraction(x):
    return 0 < x < 1


def _uptakes(x):
    values = x if isinstance(x, list) else [x]
    return bool(values) and all(isinstance(v, _NUMBER) and not isinstance(v, bool)
                                and 0 <= v <= 1 for v in values)


def _demand_list(x):
    return bool(x) and all(isinstance(v, _NUMBER) and not isinstance(v, bool) and v >= 0
                           for v in x)


# key -> (accepted types, default, check, constraint text)
SCHEMA = {
    "spectral_efficiency_4g": (_NUMBER, 2.14, _positive, "must be > 0"),
    "spectral_efficiency_3g": (_NUMBER, 0.82, _positive, "must be > 0"),
    "bandwidth_mhz_4g": (_NUMBER, 20.0, _positive, "must be > 0"),
    "bandwidth_mhz_3g": (_NUMBER, 5.0, _positive, "must be > 0"),
    "per_user_cap_mhz_4g": (_NUMBER, 20.0, _positive, "must be > 0"),
    "per_user_cap_mhz_3g": (_NUMBER, 5.0, _positive, "must be > 0"),
    "cell_capacity_mbps_4g": (_NUMBER, 43.0, _positive, "must be > 0"),
    "cell_capacity_mbps_3g": (_NUMBER, 16.0, _positive, "must be > 0"),
    "cells_per_km2_4g": (_NUMBER, 4.6, _positive, "must be > 0"),
    "cells_per_km2_3g": (_NUMBER, 12.4, _positive, "must be > 0"),
    "capacity_cells_per_km2_4g": (_NUMBER + (type(None),), 4.62, None, "must be > 0 or null"),
    "capacity_cells_per_km2_3g": (_NUMBER + (type(None),), None, None, "must be > 0 or null"),
    "inter_site_distance_km_4g": (_NUMBER + (type(None),), 0.5, None, "must be > 0 or null"),
    "inter_site_distance_km_3g": (_NUMBER + (type(None),), 0.3, None, "must be > 0 or null"),
    "allow_area_mismatch": (bool, False, None, ""),
    "sinr_inefficiency_4g": (_NUMBER, 1.0, lambda x: x >= 1, "must be >= 1"),
    "sinr_inefficiency_3g": (_NUMBER, 8.0, lambda x: x >= 1, "must be >= 1"),
    "n_antennas": (int, 3, lambda x: x >= 1, "must be an integer >= 1"),
    "p_transmit_w": (_NUMBER, 39.8, _positive, "must be > 0"),
    "radio_head_efficiency": (_NUMBER, 0.31, lambda x: 0 < x <= 1, "must lie in (0, 1]"),
    "overhead_plus_backhaul_w": (_NUMBER, 300.0, _positive, "must be > 0"),
    "cell_equipment_gbp": (_NUMBER, 28_000.0, _non_negative, "must be >= 0"),
    "insertion_gbp": (_NUMBER, 100_000.0, _non_negative, "must be >= 0"),
    "backhaul_install_gbp": (_NUMBER, 8_500.0, _non_negative, "must be >= 0"),
    "total_spectrum_gbp": (_NUMBER, 790.8e6, _non_negative, "must be >= 0"),
    "network_cell_count": (int, 20_000, lambda x: x >= 1, "must be an integer >= 1"),
    "site_rent_gbp": (_NUMBER, 10_800.0, _non_negative, "must be >= 0"),
    "backhaul_rent_gbp": (_NUMBER, 7_500.0, _non_negative, "must be >= 0"),
    "energy_price_gbp_per_kwh": (_NUMBER, 0.14, _non_negative, "must be >= 0"),
    "maintenance_gbp": (_NUMBER, 3_900.0, _non_negative, "must be >= 0"),
    "marketing_fraction_4g": (_NUMBER, 0.0233, lambda x: 0 <= x < 1, "must lie in [0, 1)"),
    "marketing_fraction_3g": (_NUMBER, 0.0, lambda x: 0 <= x < 1, "must lie in [0, 1)"),
    "interest_rate": (_NUMBER, 0.05, _open_fraction, "must lie in (0, 1)"),
    "loan_years": (int, 12, lambda x: x >= 1, "must be an integer >= 1"),
    "amortize_capex_4g": (bool, True, None, ""),
    "amortize_capex_3g": (bool, False, None, ""),
    "annuity_mode": (str, "standard", lambda x: x in ("standard", "paper", "paper_appendix"),
                     "must be 'standard' or 'paper'"),
    "kf_denominator": (int, 1024, lambda x: x in (1024, 8192), "must be 1024 or 8192"),
    "active_hours_per_day": (_NUMBER, 12.0, lambda x: 0 < x <= 24, "must lie in (0, 24]"),
    "days_per_month": (_NUMBER, 30.0, _positive, "must be > 0"),
    "tariff_corpus_4g": ((str, type(None)), None, None, ""),
    "tariff_corpus_3g": ((str, type(None)), None, None, ""),
    "unlimited_minutes_value": (_NUMBER, 2000.0, _positive, "must be > 0"),
    "unlimited_data_gb": (_NUMBER, 25.0, _positive, "must be > 0"),
    "tariff_charge_minutes_4g": (_NUMBER + (type(None),), None, None, "must be >= 0 or null"),
    "tariff_charge_minutes_3g": (_NUMBER + (type(None),), None, None, "must be >= 0 or null"),
    "overage_allowance_gb": (_NUMBER, 0.0, _non_negative, "must be >= 0"),
    "uptake_fraction_4g": ((int, float, list), list(DEFAULT_UPTAKES), _uptakes,
                           "must be a number or list of numbers in [0, 1]"),
    "user_density_per_km2": (int, 3000, lambda x: x >= 1, "must be an integer >= 1"),
    "demand_grid": (list, list(DEFAULT_DEMAND_GRID), _demand_list,
                    "must be a non-empty list of numbers >= 0"),
    "power_demand_grid": (list, [0.0] + list(DEFAULT_DEMAND_GRID), _demand_list,
                          "must be a non-empty list of numbers >= 0"),
    "cost_override": ((str, type(None)), None, None, ""),
    "fuel_mix": ((str, type(None)), None, None, ""),
    "reference_cell_count": (int, 20_000, lambda x: x >= 1, "must be an integer >= 1"),
    "emission_demand": (_NUMBER, 190.0, _non_negative, "must be >= 0"),
    "max_users": (int, 7, lambda x: x >= 1, "must be an integer >= 1"),
    "mean_cell_rate_bps": (_NUMBER, 4.0e6, _positive, "must be > 0"),
    "workers": (int, 1, lambda x: x >= 1, "must be an integer >= 1"),
}

_FILE_KEYS = ("tariff_corpus_4g", "tariff_corpus_3g", "cost_override", "fuel_mix")
_NULLABLE_POSITIVE = ("capacity_cells_per_km2_4g", "capacity_cells_per_km2_3g",
                      "inter_site_distance_km_4g", "inter_site_distance_km_3g")
_NULLABLE_NON_NEGATIVE = ("tariff_charge_minutes_4g", "tariff_charge_minutes_3g")


@dataclass
class ScenarioConfig:
    values: dict = field(default_factory=dict)

    def __getitem__(self, key):
        return self.values[key]

    @property
    def uptakes(self):
        u = self.values["uptake_fraction_4g"]
        return [float(x) for x in (u if isinstance(u, list) else [u])]

    @property
    def annuity_mode(self):
        return AnnuityMode.parse(self.values["annuity_mode"])

    @property
    def conversion(self):
        kf = KF_BINARY_GB if self.values["kf_denominator"] == 1024 else KF_BITS_TO_GB
        return UsageConversion(active_hours_per_day=float(self.values["active_hours_per_day"]),
                               days_per_month=float(self.values["days_per_month"]), k_f=kf)

    @property
    def rules(self):
        return NormalizationRules(float(self.values["unlimited_minutes_value"]),
                                  float(self.values["unlimited_data_gb"]))

    def power_params(self):
        v = self.values
        return PowerParams(v["n_antennas"], float(v["p_transmit_w"]),
                           float(v["radio_head_efficiency"]), float(v["overhead_plus_backhaul_w"]))

    def capex_params(self):
        v = self.values
        return CapexParams(float(v["cell_equipment_gbp"]), float(v["insertion_gbp"]),
                           float(v["backhaul_install_gbp"]), float(v["total_spectrum_gbp"]),
                           v["network_cell_count"])

    def profile(self, tech):
        v = self.values
        s = "_" + tech
        deployment = Deployment(
            cells_per_km2=float(v["cells_per_km2" + s]),
            inter_site_distance_km=v["inter_site_distance_km" + s],
            capacity_cells_per_km2=v["capacity_cells_per_km2" + s],
            allow_area_mismatch=v["allow_area_mismatch"],
        )
        opex = OpexParams(
            site_rent_gbp=float(v["site_rent_gbp"]),
            backhaul_rent_gbp=float(v["backhaul_rent_gbp"]),
            energy_price_gbp_per_kwh=float(v["energy_price_gbp_per_kwh"]),
            maintenance_gbp=float(v["maintenance_gbp"]),
            marketing_fraction=float(v["marketing_fraction" + s]),
            interest_rate=float(v["interest_rate"]),
            loan_years=v["loan_years"],
            amortize_capex=v["amortize_capex" + s],
        )
        return TechnologyProfile(
            name=tech,
            spectral_efficiency=float(v["spectral_efficiency" + s]),
            bandwidth_mhz=float(v["bandwidth_mhz" + s]),
            per_user_cap_mhz=float(v["per_user_cap_mhz" + s]),
            cell_capacity_mbps=float(v["cell_capacity_mbps" + s]),
            deployment=deployment,
            sinr_inefficiency=float(v["sinr_inefficiency" + s]),
            power=self.power_params(),
            capex=self.capex_params(),
            opex=opex,
        )

    def profiles(self):
        return {"4g": self.profile("4g"), "3g": self.profile("3g")}


def _check_key(key, value):
    types, _, check, constraint = SCHEMA[key]
    if not isinstance(types, tuple):
        types = (types,)
    if isinstance(value, bool) and bool not in types:
        raise ConfigError(key, f"expected {_type_names(types)}, got bool")
    if not isinstance(value, types):
        raise ConfigError(key, f"expected {_type_names(types)}, got {type(value).__name__}")
    if isinstance(value, float) and not math.isfinite(value):
        raise ConfigError(key, "must be finite")
    if key in _NULLABLE_POSITIVE and value is not None and not value > 0:
        raise ConfigError(key, constraint)
    if key in _NULLABLE_NON_NEGATIVE and value is not None and not value >= 0:
        raise ConfigError(key, constraint)
    if check is not None and not check(value):
        raise ConfigError(key, constraint)


def _type_names(types):
    names = {"NoneType": "null", "str": "string", "int": "integer", "float": "number",
             "list": "list", "bool": "boolean"}
    return " or ".join(dict.fromkeys(names.get(t.__name__, t.__name__) for t in types))


def from_mapping(data, base_dir="."):
    """Validate a mapping and fill defaults; paths resolve against ``base_dir``."""
    if not isinstance(data, dict):
        raise ConfigError("<root>", "configuration must be a JSON object")
    values = {k: (list(d) if isinstance(d, list) else d) for k, (_, d, _, _) in SCHEMA.items()}
    for key, value in data.items():
        if key not in SCHEMA:
            raise ConfigError(key, "unknown configuration key")
        _check_key(key, value)
        values[key] = value
    for key in _FILE_KEYS:
        if values[key] is not None:
            path = os.path.join(base_dir, values[key])
            if not os.path.isfile(path):
                raise ConfigError(key, f"file not found: {path}")
            values[key] = path
    cfg = ScenarioConfig(values)
    # build every model object now so invalid combinations fail before any output
    for tech in ("4g", "3g"):
        try:
            cfg.profile(tech)
        except CelleconError as exc:
            raise ConfigError(f"technology_{tech}", str(exc)) from None
    return cfg


def load_config(path=None):
    """Read a JSON config file; ``None`` or an empty file gives the defaults."""
    if path is None:
        return from_mapping({})
    if not os.path.isfile(path):
        raise ConfigError("--config", f"file not found: {path}")
    with open(path, encoding="utf-8") as f:
        text = f.read()
    if not text.strip():
        data = {}
    else:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError("<root>", f"invalid JSON: {exc}") from None
    return from_mapping(data, os.path.dirname(os.path.abspath(path)))
