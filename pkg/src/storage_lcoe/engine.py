"""LCOE kernels for generation assets and energy storage.

Three formulations are provided:

* ``lcoe_generation`` -- discounted lifetime costs over discounted energy for
  a generator with capital, fixed O&M, variable O&M and fuel costs.
* ``lcoe_storage`` -- one year of storage operation over an explicit daily
  dispatch schedule and (possibly time-varying) grid prices. Charging energy
  plays the role of fuel; discharged energy is the product.
* ``lcoe_storage_simplified`` -- closed form of ``lcoe_storage`` for a
  storage unit that fully charges at rated power for ``charging_hours`` every
  day and discharges ``efficiency`` times that.

Storage costs are annualized, so the storage formulations carry no discount
rate.
"""
from __future__ import annotations

import math

import numpy as np

from .core import (
    DAYS_PER_YEAR,
    DispatchSchedule,
    GenerationAsset,
    LcoeResult,
    Money,
    NonPositiveValueError,
    ParityVerdict,
    PriceSeries,
    StorageAsset,
    ZeroEnergyError,
    _check_non_negative,
    as_price_series,
    check_assumption_i,
    validate_dispatch,
)

EQ1 = "eq1-generation"
EQ2 = "eq2-storage"
EQ3 = "eq3-simplified"


def discount_factors(discount_rate: float, years: int) -> np.ndarray:
    """Coefficients ``1 / (1 + d) ** (t - 1)`` for t = 1..years."""
    return 1.0 / (1.0 + discount_rate) ** np.arange(years)


def lcoe_generation(asset: GenerationAsset) -> LcoeResult:
    """Levelized cost of a generator in USD/MWh.

    Investment is incurred in year 1 (coefficient 1). Each year ``t`` adds
    fixed O&M plus per-MWh fuel and variable O&M on that year's output, and
    both costs and energy are discounted by ``1 / (1 + d) ** (t - 1)``.
    With ``d = 0`` this is plain total cost over total energy.
    """
    energy = np.asarray(asset.annual_energy, dtype=float)
    coef = discount_factors(asset.discount_rate, asset.lifetime_years)
    per_mwh = asset.fuel_cost_per_mwh + asset.variable_om_per_mwh
    yearly_cost = asset.fixed_om_per_year + per_mwh * energy
    operating = math.fsum(yearly_cost * coef)
    discounted_energy = math.fsum(energy * coef)
    if not discounted_energy > 0:
        raise ZeroEnergyError("annual_energy", "discounted energy is zero")
    capital = float(asset.investment_cost)
    return LcoeResult(
        lcoe=(capital + operating) / discounted_energy,
        capital_cost_component=capital,
        operating_cost_component=operating,
        total_energy=discounted_energy,
        formulation=EQ1,
    )


def lcoe_storage(
    asset: StorageAsset,
    prices: PriceSeries | float,
    schedule: DispatchSchedule,
) -> LcoeResult:
    """Storage LCOE over an explicit one-year schedule.

    ``(CC_P * P_max + CC_E * E_max + sum_t price_t * charge_t) / sum_t discharge_t``

    A scalar ``prices`` is expanded to a flat series matching the schedule.
    """
    prices = as_price_series(prices, len(schedule))
    validate_dispatch(schedule, asset, prices)
    charge = np.asarray(schedule.daily_charge)
    discharge = np.asarray(schedule.daily_discharge)
    rho = np.asarray(prices.daily_price)

    capital = asset.capital_cost
    charging_cost = math.fsum(rho * charge)
    delivered = math.fsum(discharge)
    if not delivered > 0:
        raise ZeroEnergyError("daily_discharge", "total discharged energy is zero")
    return LcoeResult(
        lcoe=(capital + charging_cost) / delivered,
        capital_cost_component=capital,
        operating_cost_component=charging_cost,
        total_energy=delivered,
        formulation=EQ2,
    )


def canonical_schedule(asset: StorageAsset, days: int = DAYS_PER_YEAR) -> DispatchSchedule:
    """Full daily cycle: charge ``rated_energy``, discharge ``efficiency * rated_energy``.

    Raises :class:`~storage_lcoe.core.AssumptionViolationError` unless
    ``rated_energy == rated_power * charging_hours``.
    """
    if isinstance(days, bool) or not isinstance(days, int) or days < 1:
        raise NonPositiveValueError("days", f"must be a positive integer, got {days!r}")
    check_assumption_i(asset)
    e_max = asset.rated_energy
    return DispatchSchedule(
        (e_max,) * days,
        (asset.roundtrip_efficiency * e_max,) * days,
    )


def lcoe_storage_simplified(
    asset: StorageAsset,
    average_price: Money,
    days: int = DAYS_PER_YEAR,
) -> LcoeResult:
    """Closed-form storage LCOE, independent of the unit's size.

    ``(CC_P + CC_E * T_ch + price * T_ch * days) / (efficiency * T_ch * days)``

    The breakdown is reported per MW of rated power, which is what the
    closed form's numerator and denominator represent.
    """
    _check_non_negative(average_price, "average_price")
    if isinstance(days, bool) or not isinstance(days, int) or days < 1:
        raise NonPositiveValueError("days", f"must be a positive integer, got {days!r}")
    t_ch = asset.charging_hours
    capital = asset.annualized_power_cost + asset.annualized_energy_cost * t_ch
    charging_cost = average_price * t_ch * days
    delivered = asset.roundtrip_efficiency * t_ch * days
    return LcoeResult(
        lcoe=(capital + charging_cost) / delivered,
        capital_cost_component=capital,
        operating_cost_component=charging_cost,
        total_energy=delivered,
        formulation=EQ3,
    )


def grid_parity(lcoe: Money, utility_rate: Money) -> ParityVerdict:
    """Compare an LCOE with the utility rate; a tie counts as parity."""
    for name, value in (("lcoe", lcoe), ("utility_rate", utility_rate)):
        _check_non_negative(value, name)
    return ParityVerdict(lcoe=float(lcoe), reference_rate=float(utility_rate))


__all__ = [
    "EQ1",
    "EQ2",
    "EQ3",
    "canonical_schedule",
    "discount_factors",
    "grid_parity",
    "lcoe_generation",
    "lcoe_storage",
    "lcoe_storage_simplified",
]
