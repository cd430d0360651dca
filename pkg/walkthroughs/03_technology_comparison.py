# %% [markdown]
# # Comparing storage technologies
#
# Each technology is described by a box of plausible inputs (min and max of
# each annualized cost, efficiency and charging hours). LCOE increases with
# both costs and decreases with efficiency and charging hours, so its
# extremes over the box sit on corners. The "average" reported is the LCOE
# at the midpoint of every range.
#
# The ranges in `scenarios/storage_technologies.toml` are illustrative
# placeholders; substitute figures from a cost survey.

# %%
from pathlib import Path

import numpy as np

from storage_lcoe import TechnologySpec, compare_technologies, load_scenario, write_result

root = Path(__file__).resolve().parents[1] if "__file__" in globals() else Path.cwd()
scenario = load_scenario(root / "scenarios" / "storage_technologies.toml")
ranges = compare_technologies(list(scenario.technologies))
print(write_result(ranges, "csv"))

# %% [markdown]
# ## Checking the corner shortcut
# A brute-force search over a 30-point grid on every axis finds the same
# extremes.

# %%
spec = scenario.technologies[2]
axes = [np.linspace(lo, hi, 30) for lo, hi in (
    spec.annualized_power_cost, spec.annualized_energy_cost, spec.roundtrip_efficiency, spec.charging_hours)]
cp, ce, eta, t = np.meshgrid(*axes, indexing="ij", sparse=True)
grid = (cp + ce * t + spec.price * t * spec.days) / (eta * t * spec.days)
print(spec.name, "grid:", grid.min(), grid.max())
print(spec.name, "corners:", ranges[2].min_lcoe, ranges[2].max_lcoe)

# %% [markdown]
# ## Ad-hoc technology
# Ranges can also be built in code. A scalar bound pins that input.

# %%
flow = TechnologySpec(
    name="flow battery",
    annualized_power_cost=(40_000, 55_000),
    annualized_energy_cost=(15_000, 25_000),
    roundtrip_efficiency=(0.65, 0.8),
    charging_hours=8,
    price=107.1,
)
print(write_result(compare_technologies([flow]), "text"))
