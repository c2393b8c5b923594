import io
import json
import os

import pytest

from cellecon.cli import EXIT_COMPUTE, EXIT_CONFIG, EXIT_OK, main, parse_number_list
from cellecon.csvio import read_table


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_number_lists():
    assert parse_number_list("0:20:10") == [0, 10, 20]
    assert parse_number_list("5,10, 20") == [5, 10, 20]
    assert parse_number_list("0:190:10")[-1] == 190


def test_power_sweep_columns():
    code, out, _ = run("power-sweep", "--tech", "4g", "--demands", "0:190:10")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "P_T,mu_RH,R_km2,C_km2,P_OH_BH,P_cell_W,P_km2_kW"
    assert len(lines) == 21


@pytest.mark.parametrize("argv", [["capacity"], ["bw-gain"], ["opex-sweep", "--tech", "3g"],
                                  ["tariff", "fit"],
                                  ["tariff", "predict", "--tech", "4g", "--minutes", "2000",
                                   "--data-gb", "Unlimited"],
                                  ["emissions", "--tech", "4g", "--demand", "190"],
                                  ["--kf", "8192", "profit-sweep", "--uptake-4g", "0.2"],
                                  ["--annuity", "paper", "opex-sweep", "--tech", "4g"]])
def test_subcommands_succeed(argv):
    code, out, err = run(*argv)
    assert code == EXIT_OK, err
    assert out.count("\n") >= 2


def test_annuity_flag_changes_costs():
    _, std, _ = run("opex-sweep", "--tech", "4g", "--demands", "5")
    _, alt, _ = run("--annuity", "paper", "opex-sweep", "--tech", "4g", "--demands", "5")
    assert std != alt and "12552.586755" in alt


def test_config_error_exit_code(tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"uptake_fraction_4g": 1.5}))
    code, _, err = run("--config", str(path), "capacity")
    assert code == EXIT_CONFIG
    assert "uptake_fraction_4g" in err


def test_bad_cli_uptake_is_config_error():
    code, _, err = run("profit-sweep", "--uptake-4g", "2")
    assert code == EXIT_CONFIG


def test_overload_is_computation_error():
    code, _, err = run("power-sweep", "--tech", "3g", "--demands", "500")
    assert code == EXIT_COMPUTE
    assert "exceeds" in err


def test_cost_override_file(tmp_path):
    path = tmp_path / "o.csv"
    path.write_text("technology,demand,cost_gbp\n4G,5,195152\n3G,5,294773\n")
    code, out, _ = run("profit-sweep", "--uptake-4g", "0.03", "--demands", "5",
                       "--cost-override", str(path))
    assert code == EXIT_OK
    assert "195152" in out and "294773" in out


def test_all_uptakes_writes_tables(tmp_path):
    code, _, _ = run("--out", str(tmp_path), "profit-sweep", "--all-uptakes")
    assert code == EXIT_OK
    assert len([f for f in os.listdir(tmp_path) if f.startswith("profit_uptake_")]) == 7


def test_report_twice_identical(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    assert run("--out", str(a), "report")[0] == EXIT_OK
    assert run("--out", str(b), "report", "--jobs", "3")[0] == EXIT_OK
    names = sorted(os.listdir(a))
    assert names == sorted(os.listdir(b))
    for n in names:
        assert (a / n).read_bytes() == (b / n).read_bytes()
        if n.endswith(".csv"):
            read_table(a / n)


def test_invalid_config_writes_nothing(tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"loan_years": 0}))
    out = tmp_path / "out"
    code, _, _ = run("--config", str(cfg), "--out", str(out), "report")
    assert code == EXIT_CONFIG
    assert not out.exists()


def test_failed_report_writes_nothing(tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"demand_grid": [5, 400]}))
    out = tmp_path / "out"
    code, _, err = run("--config", str(cfg), "--out", str(out), "report")
    assert code == EXIT_COMPUTE
    assert "opex_4g" in err
    assert not out.exists()
