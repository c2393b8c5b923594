"""Command line entry point: ``cellecon <subcommand> [options]``."""
import argparse
import math
import os
import sys

from . import csvio
from .config import from_mapping, load_config
from .emissions import load_fuel_mix, total_emissions, uk_fuel_mix
from .errors import CelleconError, ConfigError
from .power import area_power, annual_energy_per_km2
from .profit import EXTENDED_UPTAKES, UptakeScenario, load_cost_override, profit_sweep
from .report import (BW_GAIN_COLUMNS, CAPACITY_COLUMNS, EMISSION_COLUMNS, OPEX_COLUMNS,
                     POWER_COLUMNS, PROFIT_COLUMNS, TARIFF_COLUMNS, bw_gain_rows,
                     capacity_rows, opex_for_profile, power_rows, profit_rows,
                     profit_table_name, run_report, tariff_models, write_bundle)
from .tariff import UNLIMITED, predict

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_COMPUTE = 3


def parse_number_list(text):
    """``"a:b:step"`` (inclusive) or a comma list of numbers."""
    text = text.strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise argparse.ArgumentTypeError(f"range must be start:stop:step, got {text!r}")
        start, stop, step = (float(x) for x in parts)
        if step <= 0 or stop < start:
            raise argparse.ArgumentTypeError(f"bad range {text!r}")
        n = int(math.floor((stop - start) / step + 1e-9))
        return [start + i * step for i in range(n + 1)]
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number list: {text!r}") from None


def build_parser():
    parser = argparse.ArgumentParser(prog="cellecon", description=__doc__)
    parser.add_argument("--config", help="JSON scenario file")
    parser.add_argument("--out", help="output directory (single tables go to stdout if omitted)")
    parser.add_argument("--annuity", choices=["standard", "paper"],
                        help="CAPEX annuity factor")
    parser.add_argument("--kf", type=int, choices=[1024, 8192],
                        help="Mbit to GB conversion denominator")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("capacity", help="spectral efficiency and area capacity per technology")

    p = sub.add_parser("bw-gain", help="LTE bandwidth gain distribution")
    p.add_argument("--rate", type=float, help="mean cell rate in bit/s")
    p.add_argument("--max-users", type=int)

    for name, helptext in (("power-sweep", "power per cell and per km2 vs demand"),
                           ("opex-sweep", "annual cost per km2 vs demand")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--tech", choices=["3g", "4g"], required=True)
        p.add_argument("--demands", type=parse_number_list)

    p = sub.add_parser("tariff", help="tariff regression")
    tsub = p.add_subparsers(dest="tariff_command", required=True)
    tsub.add_parser("fit", help="print fitted coefficients")
    tp = tsub.add_parser("predict", help="monthly cost for an allowance")
    tp.add_argument("--tech", choices=["3g", "4g"], required=True)
    tp.add_argument("--minutes", type=float, required=True)
    tp.add_argument("--data-gb", required=True, help="GB or 'Unlimited'")

    p = sub.add_parser("profit-sweep", help="profit per km2 for a 4G uptake")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--uptake-4g", type=float)
    group.add_argument("--all-uptakes", action="store_true",
                       help="run every uptake step including the 30%% point")
    p.add_argument("--cost-override", help="CSV with technology,demand,cost_gbp[,uptake_pct,charge_gbp]")
    p.add_argument("--demands", type=parse_number_list)

    p = sub.add_parser("emissions", help="CO2 per km2 at one demand")
    p.add_argument("--tech", choices=["3g", "4g"], required=True)
    p.add_argument("--demand", type=float, default=190.0)
    p.add_argument("--mix", help="fuel mix CSV fuel,share,g_per_kwh")

    p = sub.add_parser("report", help="every table plus a markdown summary")
    p.add_argument("--jobs", type=int, help="worker threads for the profit sweeps")
    return parser


def _config(args):
    cfg = load_config(args.config)
    overrides = {}
    if args.annuity:
        overrides["annuity_mode"] = args.annuity
    if args.kf:
        overrides["kf_denominator"] = args.kf
    if overrides:
        values = {k: v for k, v in cfg.values.items()}
        values.update(overrides)
        cfg = from_mapping(values)
    return cfg


def _emit(args, name, columns, rows, stdout):
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        csvio.write_table(os.path.join(args.out, name + ".csv"), columns, rows)
    else:
        stdout.write(csvio.to_csv_text(columns, rows))


def _run(args, cfg, stdout):
    profiles = cfg.profiles()
    cmd = args.command
    if cmd == "capacity":
        _emit(args, "capacity", CAPACITY_COLUMNS, capacity_rows(profiles), stdout)
    elif cmd == "bw-gain":
        rate = args.rate if args.rate is not None else cfg["mean_cell_rate_bps"]
        n = args.max_users if args.max_users is not None else cfg["max_users"]
        _emit(args, "bw_gain", BW_GAIN_COLUMNS, bw_gain_rows(rate, n)[0], stdout)
    elif cmd == "power-sweep":
        demands = args.demands if args.demands is not None else cfg["power_demand_grid"]
        _emit(args, f"power_{args.tech}", POWER_COLUMNS,
              power_rows(profiles[args.tech], demands), stdout)
    elif cmd == "opex-sweep":
        demands = args.demands if args.demands is not None else cfg["demand_grid"]
        rows = opex_for_profile(profiles[args.tech], demands, cfg.annuity_mode)
        _emit(args, f"opex_{args.tech}", OPEX_COLUMNS, csvio.rows_from_dataclasses(rows), stdout)
    elif cmd == "tariff":
        models = tariff_models(cfg)
        if args.tariff_command == "fit":
            rows = [{"technology": t, **vars(m.coefficients), "charge_minutes": m.charge_minutes,
                     "unlimited_charge": m.charge(UNLIMITED)} for t, m in models.items()]
            _emit(args, "tariff", TARIFF_COLUMNS, rows, stdout)
        else:
            m = models[args.tech]
            gb = UNLIMITED if args.data_gb.lower() == "unlimited" else float(args.data_gb)
            gb = cfg.rules.unlimited_data_gb if math.isinf(gb) else gb
            value = predict(m.coefficients, args.minutes, gb * cfg.rules.gb_to_mb_factor)
            _emit(args, "tariff_predict", ["technology", "minutes", "data_gb", "cost_gbp"],
                  [{"technology": args.tech, "minutes": args.minutes, "data_gb": gb,
                    "cost_gbp": value}], stdout)
    elif cmd == "profit-sweep":
        if args.all_uptakes:
            uptakes = list(EXTENDED_UPTAKES)
        elif args.uptake_4g is not None:
            uptakes = [args.uptake_4g]
        else:
            uptakes = cfg.uptakes
        for u in uptakes:
            if not 0 <= u <= 1:
                raise ConfigError("uptake_fraction_4g", f"must lie in [0, 1], got {u}")
        override = load_cost_override(args.cost_override) if args.cost_override else None
        if override is None and cfg["cost_override"]:
            override = load_cost_override(cfg["cost_override"])
        demands = args.demands if args.demands is not None else cfg["demand_grid"]
        models = tariff_models(cfg)
        rows = []
        for u in uptakes:
            scenario = UptakeScenario(u, cfg["user_density_per_km2"], tuple(demands))
            points = profit_sweep(scenario, profiles, models, override, cfg.conversion,
                                  cfg.annuity_mode, cfg["overage_allowance_gb"])
            if args.out:
                _emit(args, profit_table_name(u), PROFIT_COLUMNS, profit_rows(points), stdout)
            else:
                rows.extend(profit_rows(points))
        if not args.out:
            stdout.write(csvio.to_csv_text(PROFIT_COLUMNS, rows))
    elif cmd == "emissions":
        mix = load_fuel_mix(args.mix) if args.mix else (
            load_fuel_mix(cfg["fuel_mix"]) if cfg["fuel_mix"] else uk_fuel_mix())
        p = profiles[args.tech]
        kw = area_power(p.power, p.deployment, args.demand, p.area_capacity_mbps)
        energy = annual_energy_per_km2(kw)
        report = total_emissions(energy, mix)
        rows = [{"technology": args.tech, "fuel": fuel, "share": e.share,
                 "g_per_kwh": e.g_per_kwh, "annual_energy_kwh_km2": energy,
                 "tonnes_per_km2": t}
                for e, (fuel, t) in zip(mix.entries, report.per_fuel_tonnes)]
        rows.append({"technology": args.tech, "fuel": "total", "share": 1.0,
                     "g_per_kwh": energy and report.total_tonnes * 1e6 / energy,
                     "annual_energy_kwh_km2": energy, "tonnes_per_km2": report.total_tonnes})
        _emit(args, f"emissions_{args.tech}", EMISSION_COLUMNS, rows, stdout)
    elif cmd == "report":
        bundle = run_report(cfg, args.jobs)
        out = args.out or "report"
        for path in write_bundle(bundle, out):
            stdout.write(path + "\n")


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
    except ConfigError as exc:
        stderr.write(f"config error: {exc}\n")
        return EXIT_CONFIG
    try:
        _run(args, cfg, stdout)
    except ConfigError as exc:
        stderr.write(f"config error: {exc}\n")
        return EXIT_CONFIG
    except (CelleconError, ValueError, OSError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_COMPUTE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
