# %% [markdown]
# # Sensitivity of storage LCOE
#
# Four one-dimensional sweeps around the worked example: charging hours,
# grid price, round-trip efficiency and the ratio of annualized energy cost
# to annualized power cost. Each sweep changes one input and holds the
# others at their base values.
#
# If matplotlib is installed the sweeps are also plotted to
# `walkthroughs/sweeps.png`.

# %%
import numpy as np

from storage_lcoe import StorageAsset, SweepSpec, sweep, write_result

base = StorageAsset(60_000, 30_000, 1, 12, 0.9, 12)
price = 107.1

# %% [markdown]
# ## Charging hours
# Rated energy follows rated power x charging hours at every point. Longer
# charging spreads the power-related cost over more energy, so LCOE falls.

# %%
hours = sweep(SweepSpec("charging_hours", 1, 24, 24, base, price))
print(write_result(hours, "csv"))

# %% [markdown]
# ## Grid price
# LCOE is affine in price with slope 1 / efficiency: every extra USD/MWh
# paid for charging costs 1/0.9 USD per discharged MWh.

# %%
prices = sweep(SweepSpec("price", 0, 200, 11, base, price))
slope = np.diff(prices.lcoes) / np.diff(prices.values)
print(write_result(prices, "csv"))
print("slope:", slope[0], "expected:", 1 / 0.9)

# %% [markdown]
# ## Efficiency
# LCOE is inversely proportional to efficiency, so efficiency x LCOE is
# constant along the sweep.

# %%
eff = sweep(SweepSpec("efficiency", 0.6, 1.0, 9, base, price))
print(write_result(eff, "csv"))
print("efficiency x LCOE:", {round(x * y, 6) for x, y in eff.points})

# %% [markdown]
# ## Energy-to-power cost ratio
# The power cost is held at 30,000 USD/MW-yr (the value used for this sweep
# in the source text, which differs from the 60,000 in the asset table) and
# the energy cost is ratio x power cost.

# %%
ratio_base = StorageAsset(30_000, 30_000, 1, 12, 0.9, 12)
ratio = sweep(SweepSpec("energy_to_power_cost_ratio", 0.1, 2.0, 20, ratio_base, price))
print(write_result(ratio, "csv"))

# %%
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, axes = plt.subplots(2, 2, figsize=(9, 7))
    for ax, table, label in zip(
        axes.flat,
        (hours, prices, eff, ratio),
        ("charging hours (h)", "grid price (USD/MWh)", "round-trip efficiency", "energy/power cost ratio (1/h)"),
    ):
        ax.plot(table.values, table.lcoes, marker="o", ms=3)
        ax.set_xlabel(label)
        ax.set_ylabel("LCOE (USD/MWh)")
    fig.tight_layout()
    from pathlib import Path

    out = Path(__file__).with_name("sweeps.png") if "__file__" in globals() else Path("sweeps.png")
    fig.savefig(out, dpi=100)
    print("wrote", out)
