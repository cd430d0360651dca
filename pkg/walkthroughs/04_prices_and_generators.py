# %% [markdown]
# # Time-varying prices and generator LCOE
#
# The explicit-schedule formulation accepts one grid price per day, and a
# caller-supplied dispatch schedule. Generators use the discounted form.

# %%
from pathlib import Path

import numpy as np

from storage_lcoe import (
    DispatchSchedule,
    GenerationAsset,
    PriceSeries,
    StorageAsset,
    canonical_schedule,
    grid_parity,
    lcoe_generation,
    lcoe_storage,
    lcoe_storage_simplified,
    load_scenario,
    write_result,
)

root = Path(__file__).resolve().parents[1] if "__file__" in globals() else Path.cwd()

# %% [markdown]
# ## Seasonal prices
# `scenarios/data/seasonal.csv` swings +-25 USD/MWh around 107.1 over the
# year. Charging every day at those prices:

# %%
scenario = load_scenario(root / "scenarios" / "seasonal_prices.toml")
asset = scenario.storage
prices = scenario.price
daily = lcoe_storage(asset, prices, canonical_schedule(asset, len(prices)))
print(write_result(daily, "text"))
print("closed form at the mean price:", lcoe_storage_simplified(asset, prices.average).lcoe)

# %% [markdown]
# ## Skipping expensive days
# Cycling only on the cheapest 250 days lowers the charging bill but spreads
# the annual capital over less energy.

# %%
rho = np.asarray(prices.daily_price)
cheap = np.argsort(rho)[:250]
charge = np.zeros(len(rho))
charge[cheap] = asset.rated_energy
schedule = DispatchSchedule(tuple(charge), tuple(asset.roundtrip_efficiency * charge))
selective = lcoe_storage(asset, prices, schedule)
print(f"every day : {daily.lcoe:.2f} USD/MWh")
print(f"250 days  : {selective.lcoe:.2f} USD/MWh")

# %% [markdown]
# ## A gas generator
# Investment in year 1, fixed O&M each year, per-MWh fuel and variable O&M,
# all discounted at 8 %. Energy is discounted the same way.

# %%
gen = load_scenario(root / "scenarios" / "gas_generator.toml").generation
result = lcoe_generation(gen)
print(write_result(result, "text"))
print(write_result(grid_parity(result.lcoe, 107.1), "text"))

# %% [markdown]
# With no discounting and a single year, the formula reduces to
# investment / energy + fuel cost.

# %%
simple = GenerationAsset(1_000, 0, 0, 7, (100,), 1, 0.0)
print(lcoe_generation(simple).lcoe, 1_000 / 100 + 7)
