from pathlib import Path

import pytest

from storage_lcoe import StorageAsset

ROOT = Path(__file__).resolve().parents[1]
SCENARIOS = ROOT / "scenarios"

# exact value of the worked example, 148183/657
TABLE1_LCOE = 225.544901065449


@pytest.fixture
def table1_asset():
    return StorageAsset(
        annualized_power_cost=60000.0,
        annualized_energy_cost=30000.0,
        rated_power=1.0,
        rated_energy=12.0,
        roundtrip_efficiency=0.9,
        charging_hours=12.0,
    )


@pytest.fixture
def scenarios_dir():
    return SCENARIOS
