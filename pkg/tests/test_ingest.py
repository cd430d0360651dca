import json
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from storage_lcoe import (
    DispatchSchedule,
    GenerationAsset,
    LcoeResult,
    ParityVerdict,
    PriceSeries,
    StorageAsset,
    SweepSpec,
    SweepTable,
    TechnologyRange,
    canonical_schedule,
    grid_parity,
    lcoe_storage,
    lcoe_storage_simplified,
    sweep,
)
from storage_lcoe.cli import compute_lcoe
from storage_lcoe.ingest import (
    ScenarioError,
    from_dict,
    load_scenario,
    parse_price_csv,
    parse_scenario_text,
    parse_schedule_csv,
    read_csv,
    read_json,
    to_dict,
    write_price_csv,
    write_result,
    write_schedule_csv,
)

from strategies import costs, efficiencies, hours, powers, prices

TABLE1_TOML = """
[storage]
annualized_power_cost = "60000"
annualized_energy_cost = "30000"
rated_power = 1
rated_energy = 12
roundtrip_efficiency = 0.9
charging_hours = 12

[price]
daily_price = "107.1"
"""


def test_load_shipped_table1(scenarios_dir):
    sc = load_scenario(scenarios_dir / "paper_table1")
    assert sc.storage == StorageAsset(60000.0, 30000.0, 1.0, 12.0, 0.9, 12.0)
    assert sc.price == 107.1
    assert sc.days == 365
    assert sc.price_series == PriceSeries.flat(107.1, 365)
    assert sc.utility_rate == 107.1


def test_typo_key_named():
    with pytest.raises(ScenarioError) as info:
        parse_scenario_text(TABLE1_TOML.replace("roundtrip_efficiency", "efficinecy"))
    assert "efficinecy" in str(info.value)
    assert info.value.field == "storage.efficinecy"


def test_missing_key_named():
    with pytest.raises(ScenarioError) as info:
        parse_scenario_text(TABLE1_TOML.replace("rated_power = 1\n", ""))
    assert info.value.field == "storage.rated_power"
    assert "missing" in str(info.value)


def test_unknown_section():
    with pytest.raises(ScenarioError, match="unknown section"):
        parse_scenario_text(TABLE1_TOML + "\n[extras]\nx = 1\n")


def test_toml_syntax_error_has_location():
    with pytest.raises(ScenarioError, match="line 3"):
        parse_scenario_text("[storage]\nrated_power = 1\nrated_energy = = 2\n")


def test_validation_error_carries_section_and_field():
    with pytest.raises(ScenarioError) as info:
        parse_scenario_text(TABLE1_TOML.replace("0.9", "1.9"))
    assert info.value.field == "storage.roundtrip_efficiency"


def test_bad_decimal_string():
    with pytest.raises(ScenarioError, match="not a decimal"):
        parse_scenario_text(TABLE1_TOML.replace('"60000"', '"60,000"'))


def test_both_assets_rejected():
    gen = '\n[generation]\ninvestment_cost = 1\nfixed_om_per_year = 0\nvariable_om_per_mwh = 0\nfuel_cost_per_mwh = 0\nannual_energy = [1]\nlifetime_years = 1\n'
    with pytest.raises(ScenarioError, match="either"):
        parse_scenario_text(TABLE1_TOML + gen)


def test_decimal_strings_and_bare_numbers_agree():
    a = parse_scenario_text(TABLE1_TOML)
    b = parse_scenario_text(TABLE1_TOML.replace('"60000"', "60000").replace('"107.1"', "107.1"))
    assert a == b


def test_overrides_before_validation():
    sc = parse_scenario_text(TABLE1_TOML, overrides=["charging_hours=6", "storage.rated_energy=6"])
    assert sc.storage.charging_hours == 6.0 and sc.storage.rated_energy == 6.0
    sc = parse_scenario_text(TABLE1_TOML, overrides=["daily_price=50"])
    assert sc.price == 50.0
    with pytest.raises(ScenarioError):
        parse_scenario_text(TABLE1_TOML, overrides=["roundtrip_efficiency=0"])
    with pytest.raises(ScenarioError, match="unknown"):
        parse_scenario_text(TABLE1_TOML, overrides=["storage.colour=1"])
    storage_only = TABLE1_TOML.split("[price]")[0]
    with pytest.raises(ScenarioError, match="ambiguous"):
        parse_scenario_text(storage_only, overrides=["file=x.csv"])
    with pytest.raises(ScenarioError) as info:
        parse_scenario_text(TABLE1_TOML, overrides=["file=x.csv"])
    assert info.value.field == "price.file"
    with pytest.raises(ScenarioError, match="key=value"):
        parse_scenario_text(TABLE1_TOML, overrides=["charging_hours"])


def test_price_csv_roundtrip_and_checks():
    series = PriceSeries((100.0, 50.25, 200.0), 3)
    text = write_price_csv(series)
    assert text.splitlines()[0] == "day,price_usd_per_mwh"
    assert parse_price_csv(text) == series
    with pytest.raises(ScenarioError, match="header"):
        parse_price_csv("day,price\n1,2\n")
    with pytest.raises(ScenarioError, match="contiguous"):
        parse_price_csv("day,price_usd_per_mwh\n1,2\n3,4\n")
    with pytest.raises(ScenarioError, match="contiguous"):
        parse_price_csv("day,price_usd_per_mwh\n1,2\n1,4\n")
    with pytest.raises(ScenarioError):
        parse_price_csv("day,price_usd_per_mwh\n1,abc\n")


def test_schedule_csv_roundtrip():
    s = DispatchSchedule((12.0, 6.0), (10.8, 5.4))
    assert parse_schedule_csv(write_schedule_csv(s)) == s


def test_price_file_equivalent_to_scalar(scenarios_dir):
    scalar = load_scenario(scenarios_dir / "paper_table1.toml")
    series = load_scenario(scenarios_dir / "paper_table1_series.toml")
    assert isinstance(series.price, PriceSeries) and len(series.price) == 365
    a = lcoe_storage(scalar.storage, scalar.price_series, canonical_schedule(scalar.storage))
    b = compute_lcoe(series)
    assert b.formulation == "eq2-storage"
    assert b == a


def test_schedule_section(tmp_path):
    (tmp_path / "s.csv").write_text("day,charge_mwh,discharge_mwh\n1,12,10.8\n2,12,10.8\n3,12,10.8\n")
    text = TABLE1_TOML.replace('daily_price = "107.1"', "daily_price = [100, 50, 200]") + '\n[schedule]\nfile = "s.csv"\n'
    (tmp_path / "sc.toml").write_text(text)
    sc = load_scenario(tmp_path / "sc.toml")
    assert sc.days == 3
    assert compute_lcoe(sc).lcoe == pytest.approx(353500 / 27, rel=1e-9)


def test_schedule_length_must_match_series(tmp_path):
    text = TABLE1_TOML.replace('daily_price = "107.1"', "daily_price = [100, 50]") + "\n[schedule]\ndaily_charge = [1]\ndaily_discharge = [0.5]\n"
    with pytest.raises(ScenarioError, match="covers"):
        parse_scenario_text(text)


def test_missing_price_file(tmp_path):
    with pytest.raises(ScenarioError) as info:
        parse_scenario_text(TABLE1_TOML.replace('daily_price = "107.1"', 'file = "nope.csv"'), tmp_path)
    assert info.value.field == "price.file"


def test_sweeps_and_technologies_parsed(scenarios_dir):
    sc = load_scenario(scenarios_dir / "paper_sweeps.toml")
    assert [s.parameter.value for s in sc.sweeps] == ["charging_hours", "price", "efficiency"]
    sc = load_scenario(scenarios_dir / "storage_technologies.toml")
    assert [t.name for t in sc.technologies] == ["lead-acid", "NaS", "Li-ion", "NiCd"]
    assert sc.storage is None


def test_cost_ratio_config_uses_text_power_cost(scenarios_dir):
    sc = load_scenario(scenarios_dir / "paper_cost_ratio.toml")
    assert sc.storage.annualized_power_cost == 30000.0


# -- writing ------------------------------------------------------------------

def test_worked_example_csv(table1_asset):
    r = lcoe_storage_simplified(table1_asset, 107.1)
    text = write_result(r, "csv")
    lines = text.splitlines()
    assert lines[0] == "field,value"
    assert "formulation,eq3-simplified" in lines
    # exact value is 225.5449..., which rounds to 225.54 at cent precision
    assert "lcoe_usd_per_mwh,225.54" in lines
    assert "total_energy_mwh,3942" in lines
    assert text.endswith("\n") and not text.endswith("\n\n")


def test_sweep_csv_and_plot_data(table1_asset):
    table = sweep(SweepSpec("efficiency", 0.8, 1.0, 3, table1_asset, 107.1))
    csv_text = write_result(table, "csv")
    assert csv_text.splitlines()[0] == "efficiency_fraction,lcoe_usd_per_mwh"
    assert csv_text.splitlines()[2] == "0.9,225.54"
    plot = write_result(table, "plot-data").splitlines()
    assert plot[0].startswith("#") and plot[2:] == ["0.8,253.74", "0.9,225.54", "1,202.99"]


def test_efficiency_sweep_json_roundtrip(table1_asset):
    table = sweep(SweepSpec("efficiency", 0.6, 1.0, 9, table1_asset, 107.1))
    back = read_json(write_result(table, "json"))
    assert back.parameter_name == "efficiency"
    for (x0, y0), (x1, y1) in zip(table.points, back.points):
        assert x1 == pytest.approx(x0, rel=1e-9) and y1 == pytest.approx(y0, rel=1e-9)


def test_csv_reparse_at_cent_precision(table1_asset):
    r = lcoe_storage_simplified(table1_asset, 107.1)
    back = read_csv(write_result(r, "csv"))
    assert back.lcoe == pytest.approx(r.lcoe, abs=0.005)
    table = sweep(SweepSpec("price", 0.0, 200.0, 5, table1_asset, 107.1))
    back = read_csv(write_result(table, "csv"))
    assert back.parameter_name == "price"
    assert back.lcoes == pytest.approx(table.lcoes, abs=0.005)
    ranges = [TechnologyRange("a", 1.0, 2.0, 3.0), TechnologyRange("b", 4.0, 4.0, 4.0)]
    assert read_csv(write_result(ranges, "csv")) == ranges


def test_parity_text():
    assert write_result(grid_parity(100.0, 100.0), "text") == "lcoe=100.00 reference_rate=100.00 at_parity=true margin=0.00\n"


def test_json_is_unit_labelled(table1_asset):
    doc = json.loads(write_result(lcoe_storage_simplified(table1_asset, 107.1), "json"))
    assert list(doc) == ["type", "formulation", "lcoe_usd_per_mwh", "capital_cost_usd", "operating_cost_usd", "total_energy_mwh"]


def test_unknown_format(table1_asset):
    with pytest.raises(ValueError):
        write_result(lcoe_storage_simplified(table1_asset, 107.1), "xlsx")


def test_from_dict_errors():
    with pytest.raises(ScenarioError):
        from_dict({"type": "mystery"})
    with pytest.raises(ScenarioError):
        from_dict({"type": "lcoe_result"})


# -- round-trip property -----------------------------------------------------

finite = st.floats(min_value=-1e9, max_value=1e9, allow_nan=False)
positive = st.floats(min_value=1e-6, max_value=1e9)

storage_values = st.builds(StorageAsset, costs, costs, powers, powers, efficiencies, hours)
generation_values = st.integers(1, 10).flatmap(
    lambda n: st.builds(
        GenerationAsset, costs, costs, costs, costs,
        st.lists(st.floats(1e-3, 1e6), min_size=n, max_size=n).map(tuple), st.just(n),
        st.floats(0, 1),
    )
)
price_values = st.lists(prices, min_size=1, max_size=30).map(lambda v: PriceSeries(tuple(v), len(v)))
schedule_values = st.lists(st.tuples(st.floats(0, 100), st.floats(1e-3, 100)), min_size=1, max_size=30).map(
    lambda rows: DispatchSchedule(tuple(r[0] for r in rows), tuple(r[1] for r in rows))
)
result_values = st.builds(
    lambda cap, op, e, name: LcoeResult((cap + op) / e, cap, op, e, name),
    finite, finite, positive, st.sampled_from(["eq1-generation", "eq2-storage", "eq3-simplified"]),
)
sweep_values = st.lists(st.tuples(finite, finite), min_size=2, max_size=20, unique_by=lambda p: p[0]).map(
    lambda pts: SweepTable("price", tuple(sorted(pts)))
)
range_values = st.lists(finite, min_size=3, max_size=3).map(lambda v: TechnologyRange("tech", *sorted(v)))
parity_values = st.builds(ParityVerdict, prices, prices)

domain_values = st.one_of(
    storage_values, generation_values, price_values, schedule_values,
    result_values, sweep_values, range_values, parity_values,
)


@settings(max_examples=300)
@given(domain_values)
def test_json_roundtrip_identity(value):
    text = write_result(value, "json")
    back = read_json(text)
    assert type(back) is type(value)
    assert back == value
    assert write_result(back, "json") == text


@given(domain_values)
def test_to_dict_from_dict_identity(value):
    assert from_dict(to_dict(value)) == value
