import csv
import os
import sys

import pytest

HERE = os.path.dirname(__file__)
sys.path.insert(0, HERE)

DATA = os.path.join(HERE, "data")


@pytest.fixture(scope="session")
def profit_reference():
    with open(os.path.join(DATA, "reference_profit_tables.csv"), newline="") as f:
        rows = list(csv.DictReader(f))
    for r in rows:
        for k in ("share_pct", "subscribers"):
            r[k] = int(r[k])
        for k in ("demand", "rate", "mb_month", "gb_month", "charge", "revenue", "cost", "profit"):
            r[k] = float(r[k])
        r["total"] = float(r["total"]) if r["total"] else None
    return rows


@pytest.fixture(scope="session")
def profiles():
    from cellecon.technology import default_profiles
    return default_profiles()


@pytest.fixture(scope="session")
def tariff_models():
    from cellecon.tariff import bundled_tariff_model
    return {"4g": bundled_tariff_model("4G"), "3g": bundled_tariff_model("3G")}


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
