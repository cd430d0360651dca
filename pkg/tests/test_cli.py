import json
import subprocess
import sys

import pytest

from storage_lcoe.cli import main

from conftest import ROOT, SCENARIOS

TABLE1 = str(SCENARIOS / "paper_table1")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_lcoe_worked_example(capsys):
    code, out, err = run(capsys, "lcoe", TABLE1)
    assert code == 0 and err == ""
    assert "formulation=eq3-simplified" in out
    assert "lcoe_usd_per_mwh=225.54" in out


def test_lcoe_six_hour_override_matches_oracle(capsys):
    code, out, _ = run(capsys, "lcoe", TABLE1, "--set", "charging_hours=6", "--set", "rated_energy=6", "--format", "json")
    assert code == 0
    assert json.loads(out)["lcoe_usd_per_mwh"] == pytest.approx(158183 / 657, rel=1e-9)


def test_forced_formulations_agree(capsys):
    _, eq3, _ = run(capsys, "lcoe", TABLE1, "--format", "json")
    _, eq2, _ = run(capsys, "lcoe", TABLE1, "--format", "json", "--formulation", "eq2")
    a, b = json.loads(eq3), json.loads(eq2)
    assert b["formulation"] == "eq2-storage"
    assert b["lcoe_usd_per_mwh"] == pytest.approx(a["lcoe_usd_per_mwh"], rel=1e-9)


def test_series_scenario_selects_eq2(capsys):
    _, out, _ = run(capsys, "lcoe", str(SCENARIOS / "paper_table1_series.toml"))
    assert "formulation=eq2-storage" in out and "lcoe_usd_per_mwh=225.54" in out


def test_generation_scenario_selects_eq1(capsys):
    code, out, _ = run(capsys, "lcoe", str(SCENARIOS / "gas_generator.toml"))
    assert code == 0 and "formulation=eq1-generation" in out


def test_wrong_forced_formulation(capsys):
    code, _, err = run(capsys, "lcoe", TABLE1, "--formulation", "eq1")
    assert code == 1 and "generation" in err


def test_parity_flags(capsys):
    code, out, _ = run(capsys, "parity", "--lcoe", "100", "--rate", "100")
    assert code == 0
    assert "at_parity=true margin=0.00" in out


def test_parity_from_scenario(capsys):
    code, out, _ = run(capsys, "parity", TABLE1)
    assert code == 0 and "at_parity=false" in out and "margin=-118.44" in out


def test_sweep_from_file_and_flags(capsys):
    code, out, _ = run(capsys, "sweep", str(SCENARIOS / "paper_sweeps.toml"), "--format", "json")
    assert code == 0
    assert [t["parameter"] for t in json.loads(out)] == ["charging_hours", "price", "efficiency"]
    code, out, _ = run(capsys, "sweep", TABLE1, "--parameter", "efficiency", "--start", "0.8", "--stop", "1", "--steps", "3", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["efficiency_fraction,lcoe_usd_per_mwh", "0.8,253.74", "0.9,225.54", "1,202.99"]


def test_sweep_missing_flags(capsys):
    code, _, err = run(capsys, "sweep", TABLE1, "--parameter", "price")
    assert code == 1 and "--start" in err


def test_compare(capsys):
    code, out, _ = run(capsys, "compare", str(SCENARIOS / "storage_technologies.toml"))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "technology,min_lcoe_usd_per_mwh,avg_lcoe_usd_per_mwh,max_lcoe_usd_per_mwh"
    assert [l.split(",")[0] for l in lines[1:]] == ["lead-acid", "NaS", "Li-ion", "NiCd"]


def test_out_file(capsys, tmp_path):
    target = tmp_path / "r.csv"
    code, out, _ = run(capsys, "lcoe", TABLE1, "--format", "csv", "--out", str(target))
    assert code == 0 and out == ""
    assert "lcoe_usd_per_mwh,225.54" in target.read_text()


@pytest.mark.parametrize(
    "argv, field",
    [
        (["lcoe", TABLE1, "--set", "roundtrip_efficiency=1.5"], "roundtrip_efficiency"),
        (["lcoe", TABLE1, "--set", "efficinecy=0.8"], "efficinecy"),
        (["lcoe", "does/not/exist.toml"], "does/not/exist.toml"),
        (["lcoe", TABLE1, "--formulation", "eq2", "--set", "rated_energy=10"], "rated_energy"),
        (["parity", "--lcoe", "-1", "--rate", "3"], "lcoe"),
    ],
)
def test_domain_errors_exit_1_and_name_field(capsys, argv, field):
    code, out, err = run(capsys, *argv)
    assert code == 1 and out == ""
    assert field in err
    assert "Traceback" not in err


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["bogus"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["lcoe", TABLE1, "--nope"])
    assert info.value.code == 2


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "storage_lcoe", "lcoe", TABLE1, "--format", "csv"]
    first = subprocess.run(cmd, capture_output=True, cwd=ROOT, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, cwd=ROOT, check=True).stdout
    assert first == second
    assert b"lcoe_usd_per_mwh,225.54\n" in first
