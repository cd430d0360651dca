# %% [markdown]
# # Storage LCOE: the 1 MW / 12 MWh worked example
#
# A storage unit is treated like a generator whose "fuel" is the energy it
# buys from the grid and whose output is the energy it discharges. With
# annualized capital costs, one year of operation gives
#
#     LCOE = (CC_P * P_max + CC_E * E_max + sum_t price_t * charge_t) / sum_t discharge_t
#
# and, if the unit charges fully at rated power every day, the closed form
#
#     LCOE = (CC_P + CC_E * T_ch + price * T_ch * T) / (efficiency * T_ch * T)
#
# Run with `python walkthroughs/01_worked_example.py` from the repository root.

# %%
from pathlib import Path

from storage_lcoe import (
    StorageAsset,
    canonical_schedule,
    format_money,
    grid_parity,
    lcoe_storage,
    lcoe_storage_simplified,
    load_scenario,
)

# %% [markdown]
# ## Inputs
# 60,000 USD/MW-yr and 30,000 USD/MWh-yr annualized costs, 90 % round-trip
# efficiency, 12 hours of charging a day and an average grid price of
# 107.1 USD/MWh.

# %%
asset = StorageAsset(
    annualized_power_cost=60_000,
    annualized_energy_cost=30_000,
    rated_power=1,
    rated_energy=12,
    roundtrip_efficiency=0.9,
    charging_hours=12,
)
price = 107.1

# %% [markdown]
# ## Closed form

# %%
closed = lcoe_storage_simplified(asset, price, days=365)
print(f"closed form : {closed.lcoe:.6f} USD/MWh  (reported {format_money(closed.lcoe)})")
print(f"  capital   : {closed.capital_cost_component:,.0f} USD per MW-yr")
print(f"  charging  : {closed.operating_cost_component:,.0f} USD per MW-yr")
print(f"  delivered : {closed.total_energy:,.0f} MWh per MW-yr")

# %% [markdown]
# The exact value is 148183/657 = 225.5449... USD/MWh. Rounded to cents this
# is 225.54; the figure usually quoted for this example, 225.55, comes from
# rounding 225.545 a second time.

# %% [markdown]
# ## Same number from the explicit daily schedule
# 365 days of charging 12 MWh and discharging 10.8 MWh.

# %%
schedule = canonical_schedule(asset, 365)
explicit = lcoe_storage(asset, price, schedule)
print(f"explicit schedule: {explicit.lcoe:.6f} USD/MWh")
print(f"difference       : {abs(explicit.lcoe - closed.lcoe):.2e}")

# %% [markdown]
# ## Size does not matter
# Doubling or decupling the unit leaves the LCOE unchanged.

# %%
for k in (0.5, 2, 10):
    print(k, lcoe_storage_simplified(asset.scaled(k), price).lcoe)

# %% [markdown]
# ## Grid parity
# At 107.1 USD/MWh the storage unit is far from parity: each discharged MWh
# costs about 118 USD more than buying it from the grid.

# %%
verdict = grid_parity(closed.lcoe, price)
print(verdict.at_parity, format_money(verdict.margin))

# %% [markdown]
# ## From a scenario file
# The same inputs ship as `scenarios/paper_table1.toml`; the CLI equivalent
# is `storage-lcoe lcoe scenarios/paper_table1.toml`.

# %%
root = Path(__file__).resolve().parents[1] if "__file__" in globals() else Path.cwd()
scenario = load_scenario(root / "scenarios" / "paper_table1.toml")
print(lcoe_storage_simplified(scenario.storage, scenario.price, scenario.days).lcoe)
