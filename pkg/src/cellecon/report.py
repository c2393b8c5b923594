"""
Full scenario run: every table computed in memory, then written together.

Nothing touches the output directory until all tables have been built, so
a failing module leaves no partial report behind.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
import math
import os

from . import csvio
from .cost import cost_ratio, opex_sweep
from .emissions import (effective_cell_count, load_fuel_mix, network_emissions,
                        total_emissions, uk_fuel_mix, weighted_intensity)
from .errors import CelleconError, ReportError
from .power import annual_energy_per_cell, annual_energy_per_km2, area_power, power_sweep
from .profit import UptakeScenario, breakeven_uptake, load_cost_override, profit_sweep
from .spectral import SinrInefficiency, spectral_efficiency
from .tariff import TariffModel, load_bundled_corpus, load_corpus
from .users import bw_gain_table, lambda_from_rate, prob_gain_exceeds_one

CAPACITY_COLUMNS = ["technology", "spectral_efficiency", "integral_spectral_efficiency",
                    "sinr_inefficiency", "bandwidth_mhz", "cell_capacity_mbps",
                    "planning_cell_capacity_mbps", "cells_per_km2", "area_capacity_mbps_km2"]
BW_GAIN_COLUMNS = ["n_users", "lte_bw_mhz", "hspa_bw_mhz", "gain", "probability"]
POWER_COLUMNS = ["P_T", "mu_RH", "R_km2", "C_km2", "P_OH_BH", "P_cell_W", "P_km2_kW"]
OPEX_COLUMNS = ["demand_mbps_km2", "electricity_per_km2", "electricity_per_cell",
                "backhaul_rent", "site_rent", "maintenance", "marketing", "capex_per_cell",
                "annuity_per_cell", "total_per_km2"]
PROFIT_COLUMNS = ["technology", "uptake_pct", "demand_mbps_km2", "subscribers", "rate_per_sub",
                  "monthly_usage_mb", "monthly_usage_gb", "tariff_gb", "tariff_charge",
                  "annual_revenue", "annual_cost", "profit", "total_profit"]
EMISSION_COLUMNS = ["technology", "fuel", "share", "g_per_kwh", "annual_energy_kwh_km2",
                    "tonnes_per_km2"]
NETWORK_COLUMNS = ["technology", "effective_cells", "tonnes"]
TARIFF_COLUMNS = ["technology", "b0", "b1", "b2", "b3", "b4", "charge_minutes",
                  "unlimited_charge"]


@dataclass
class ReportBundle:
    """Named CSV tables as (columns, rows) plus a markdown summary."""

    tables: dict = field(default_factory=dict)
    summary: str = ""
    metrics: dict = field(default_factory=dict)

    def csv_text(self, name):
        columns, rows = self.tables[name]
        return csvio.to_csv_text(columns, rows)


def capacity_rows(profiles):
    rows = []
    for tech, p in profiles.items():
        s = spectral_efficiency(SinrInefficiency(p.sinr_inefficiency))
        rows.append({
            "technology": tech,
            "spectral_efficiency": p.spectral_efficiency,
            "integral_spectral_efficiency": round(s.value, 6),
            "sinr_inefficiency": p.sinr_inefficiency,
            "bandwidth_mhz": p.bandwidth_mhz,
            "cell_capacity_mbps": p.bandwidth_mhz * p.spectral_efficiency,
            "planning_cell_capacity_mbps": p.cell_capacity_mbps,
            "cells_per_km2": p.deployment.cells_per_km2,
            "area_capacity_mbps_km2": p.area_capacity_mbps,
        })
    return rows


def bw_gain_rows(mean_cell_rate_bps, max_users):
    model = lambda_from_rate(mean_cell_rate_bps)
    return [vars(r) for r in bw_gain_table(model, max_users)], model


def power_rows(profile, demands):
    return [{
        "P_T": r.p_transmit_w, "mu_RH": r.radio_head_efficiency, "R_km2": r.demand_mbps_km2,
        "C_km2": r.capacity_mbps_km2, "P_OH_BH": r.overhead_plus_backhaul_w,
        "P_cell_W": r.cell_power_w, "P_km2_kW": r.area_power_kw,
    } for r in power_sweep(profile.power, profile.deployment, demands, profile.cell_capacity_mbps)]


def opex_for_profile(profile, demands, mode):
    pairs = []
    for r in power_sweep(profile.power, profile.deployment, demands, profile.cell_capacity_mbps):
        pairs.append((r.demand_mbps_km2, annual_energy_per_cell(r.area_power_kw, profile.deployment)))
    return opex_sweep(profile.opex, profile.capex, profile.deployment, pairs, mode)


def profit_rows(points):
    rows = []
    for p in points:
        present = [r for r in (p.row_4g, p.row_3g) if r is not None]
        for i, r in enumerate(present):
            rows.append({
                "technology": r.technology,
                "uptake_pct": round(r.uptake * 100.0, 6),
                "demand_mbps_km2": r.demand_mbps_km2,
                "subscribers": r.subscribers,
                "rate_per_sub": r.rate_per_sub,
                "monthly_usage_mb": r.monthly_usage_mb,
                "monthly_usage_gb": r.monthly_usage_gb,
                "tariff_gb": r.tariff_level,
                "tariff_charge": r.tariff_charge,
                "annual_revenue": r.annual_revenue,
                "annual_cost": r.annual_cost,
                "profit": r.profit,
                "total_profit": p.total_profit if i == len(present) - 1 else None,
            })
    return rows


def tariff_models(cfg):
    models = {}
    for tech in ("4g", "3g"):
        path = cfg["tariff_corpus_" + tech]
        records = load_corpus(path, tech.upper()) if path else load_bundled_corpus(tech.upper())
        models[tech] = TariffModel.from_records(records, cfg.rules,
                                                cfg["tariff_charge_minutes_" + tech])
    return models


def profit_table_name(uptake):
    pct = round(uptake * 100.0, 6)
    if pct == int(pct):
        return f"profit_uptake_{int(pct):02d}"
    return f"profit_uptake_{pct:g}"


def run_report(cfg, workers=None):
    """Compute every table for ``cfg``; raises ReportError naming failed tables."""
    workers = cfg["workers"] if workers is None else workers
    bundle = ReportBundle()
    failures = []

    def attempt(name, fn):
        try:
            return fn()
        except CelleconError as exc:
            failures.append((name, str(exc)))
        except (ValueError, ZeroDivisionError, OSError) as exc:
            failures.append((name, f"{type(exc).__name__}: {exc}"))
        return None

    profiles = cfg.profiles()
    mode = cfg.annuity_mode

    rows = attempt("capacity", lambda: capacity_rows(profiles))
    if rows is not None:
        bundle.tables["capacity"] = (CAPACITY_COLUMNS, rows)

    result = attempt("bw_gain", lambda: bw_gain_rows(cfg["mean_cell_rate_bps"], cfg["max_users"]))
    if result is not None:
        bundle.tables["bw_gain"] = (BW_GAIN_COLUMNS, result[0])
        bundle.metrics["prob_gain_exceeds_one"] = prob_gain_exceeds_one(result[1])

    opex = {}
    for tech, p in profiles.items():
        rows = attempt(f"power_{tech}", lambda p=p: power_rows(p, cfg["power_demand_grid"]))
        if rows is not None:
            bundle.tables[f"power_{tech}"] = (POWER_COLUMNS, rows)
        sweep = attempt(f"opex_{tech}", lambda p=p: opex_for_profile(p, cfg["demand_grid"], mode))
        if sweep is not None:
            opex[tech] = sweep
            bundle.tables[f"opex_{tech}"] = (OPEX_COLUMNS, csvio.rows_from_dataclasses(sweep))

    models = attempt("tariff", lambda: tariff_models(cfg))
    if models is not None:
        bundle.tables["tariff"] = (TARIFF_COLUMNS, [{
            "technology": tech, **vars(m.coefficients), "charge_minutes": m.charge_minutes,
            "unlimited_charge": m.charge(math.inf),
        } for tech, m in models.items()])

    override = None
    if cfg["cost_override"]:
        override = attempt("cost_override", lambda: load_cost_override(cfg["cost_override"]))

    per_uptake = {}
    if models is not None:
        def one(uptake):
            scenario = UptakeScenario(uptake, cfg["user_density_per_km2"],
                                      tuple(float(x) for x in cfg["demand_grid"]))
            return profit_sweep(scenario, profiles, models, override, cfg.conversion, mode,
                                cfg["overage_allowance_gb"])

        def guarded(uptake):
            try:
                return one(uptake), None
            except (CelleconError, ValueError, ZeroDivisionError) as exc:
                return None, str(exc)

        uptakes = cfg.uptakes
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(guarded, uptakes))
        else:
            results = [guarded(u) for u in uptakes]
        for uptake, (points, err) in zip(uptakes, results):
            name = profit_table_name(uptake)
            if err is not None:
                failures.append((name, err))
                continue
            per_uptake[uptake] = points
            bundle.tables[name] = (PROFIT_COLUMNS, profit_rows(points))

    emissions = attempt("emissions", lambda: emission_tables(cfg, profiles))
    if emissions is not None:
        bundle.tables["emissions"] = (EMISSION_COLUMNS, emissions[0])
        bundle.tables["network_emissions"] = (NETWORK_COLUMNS, emissions[1])
        bundle.metrics.update(emissions[2])

    if failures:
        raise ReportError(failures)

    bundle.metrics.update(headline_metrics(bundle, opex, per_uptake))
    bundle.summary = render_summary(bundle.metrics)
    return bundle


def emission_tables(cfg, profiles):
    mix = load_fuel_mix(cfg["fuel_mix"]) if cfg["fuel_mix"] else uk_fuel_mix()
    demand = float(cfg["emission_demand"])
    per_fuel, network, energy, totals = [], [], {}, {}
    for tech, p in profiles.items():
        kw = area_power(p.power, p.deployment, demand, p.area_capacity_mbps)
        energy[tech] = annual_energy_per_km2(kw)
        report = total_emissions(energy[tech], mix)
        totals[tech] = report.total_tonnes
        for entry, (fuel, tonnes) in zip(mix.entries, report.per_fuel_tonnes):
            per_fuel.append({"technology": tech, "fuel": fuel, "share": entry.share,
                             "g_per_kwh": entry.g_per_kwh,
                             "annual_energy_kwh_km2": energy[tech], "tonnes_per_km2": tonnes})
        per_fuel.append({"technology": tech, "fuel": "total", "share": 1.0,
                         "g_per_kwh": weighted_intensity(mix),
                         "annual_energy_kwh_km2": energy[tech],
                         "tonnes_per_km2": report.total_tonnes})
        d3, d4 = profiles["3g"].deployment, profiles["4g"].deployment
        network.append({
            "technology": tech,
            "effective_cells": effective_cell_count(cfg["reference_cell_count"], d3, d4, tech),
            "tonnes": network_emissions(report, cfg["reference_cell_count"], d3, d4, tech),
        })
    metrics = {"co2_reduction": 1.0 - totals["4g"] / totals["3g"],
               "energy_ratio": energy["4g"] / energy["3g"]}
    return per_fuel, network, metrics


def headline_metrics(bundle, opex, per_uptake):
    metrics = {}
    if "power_4g" in bundle.tables and "power_3g" in bundle.tables:
        p3 = {r["R_km2"]: r["P_km2_kW"] for r in bundle.tables["power_3g"][1]}
        ratios = [r["P_km2_kW"] / p3[r["R_km2"]] for r in bundle.tables["power_4g"][1]
                  if r["R_km2"] in p3]
        metrics["power_ratio"] = sum(ratios) / len(ratios)
    if "4g" in opex and "3g" in opex:
        ratios = [x for _, x in cost_ratio(opex["4g"], opex["3g"])]
        metrics["opex_ratio"] = sum(ratios) / len(ratios)
        metrics["opex_ratio_min"] = min(ratios)
        metrics["opex_ratio_max"] = max(ratios)
    metrics["breakeven_uptake"] = breakeven_uptake(per_uptake)
    return metrics


def _pct(x):
    return f"{x * 100:.0f}%"


def render_summary(m):
    lines = ["# Scenario summary", ""]
    if "power_ratio" in m:
        lines.append(f"- 4G/3G power per km2: {m['power_ratio']:.3f} "
                     f"({_pct(1 - m['power_ratio'])} less power for 4G)")
    if "opex_ratio" in m:
        lines.append(f"- 4G/3G annual cost per km2: {m['opex_ratio']:.3f} "
                     f"(range {m['opex_ratio_min']:.3f} to {m['opex_ratio_max']:.3f}; "
                     f"{_pct(1 - m['opex_ratio'])} lower OPEX for 4G)")
    if m.get("breakeven_uptake") is not None:
        lines.append(f"- 4G break-even uptake: {_pct(m['breakeven_uptake'])} "
                     "(smallest uptake with positive 4G profit at every demand)")
    else:
        lines.append("- 4G break-even uptake: not reached in the uptake list")
    if "co2_reduction" in m:
        lines.append(f"- CO2 reduction moving 3G to 4G: {_pct(m['co2_reduction'])}")
    if "prob_gain_exceeds_one" in m:
        lines.append(f"- P(LTE bandwidth gain > 1): {m['prob_gain_exceeds_one']:.3f}")
    return "\n".join(lines) + "\n"


def write_bundle(bundle, out_dir):
    os.makedirs(out_dir, exist_ok=True)
    written = []
    for name in sorted(bundle.tables):
        path = os.path.join(out_dir, name + ".csv")
        with open(path, "w", newline="", encoding="utf-8") as f:
            f.write(bundle.csv_text(name))
        written.append(path)
    path = os.path.join(out_dir, "summary.md")
    with open(path, "w", encoding="utf-8") as f:
        f.write(bundle.summary)
    written.append(path)
    return written
