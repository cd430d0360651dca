"""Domain types and validation shared by the engine, sweeps and file layer.

Monetary amounts are carried as ``float`` (USD) at full precision and rounded
to cents only when rendered; see :func:`round_money`. File input arrives as
decimal strings and is converted once at the boundary.
"""
from __future__ import annotations

import math
import numbers
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from collections.abc import Iterable
from typing import Sequence, Union

Money = float

DAYS_PER_YEAR = 365
ASSUMPTION_RTOL = 1e-9


class ValidationError(ValueError):
    """Base class for every rejected domain value.

    ``field`` names the offending attribute so callers (and the CLI) can
    report it without parsing the message.
    """

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


class NonFiniteValueError(ValidationError):
    pass


class NegativeValueError(ValidationError):
    pass


class NonPositiveValueError(ValidationError):
    pass


class EfficiencyOutOfRangeError(ValidationError):
    pass


class ChargingHoursOutOfRangeError(ValidationError):
    pass


class LifetimeError(ValidationError):
    pass


class LengthMismatchError(ValidationError):
    pass


class EmptySeriesError(ValidationError):
    pass


class ZeroEnergyError(ValidationError):
    """Raised when an LCOE denominator would be zero."""


class ChargeExceedsCapacityError(ValidationError):
    pass


class DischargeExceedsChargeError(ValidationError):
    pass


class AssumptionViolationError(ValidationError):
    """Rated energy is inconsistent with rated power times charging hours."""


class OrderingError(ValidationError):
    pass


def _check_finite(value: float, name: str) -> None:
    if isinstance(value, bool) or not isinstance(value, numbers.Real):
        raise NonFiniteValueError(name, f"expected a number, got {value!r}")
    if not math.isfinite(value):
        raise NonFiniteValueError(name, f"must be finite, got {value!r}")


def _check_non_negative(value: float, name: str) -> None:
    _check_finite(value, name)
    if value < 0:
        raise NegativeValueError(name, f"must be >= 0, got {value!r}")


def _check_positive(value: float, name: str) -> None:
    _check_finite(value, name)
    if value <= 0:
        raise NonPositiveValueError(name, f"must be > 0, got {value!r}")


def _as_float_tuple(values: Iterable[float], name: str) -> tuple:
    if isinstance(values, (str, bytes)) or not isinstance(values, Iterable):
        raise NonFiniteValueError(name, f"expected a sequence of numbers, got {values!r}")
    return tuple(
        float(v) if isinstance(v, numbers.Real) and not isinstance(v, bool) else v
        for v in values
    )


def _coerce_floats(obj: object, names: Iterable[str]) -> None:
    # numpy scalars in, plain floats out; non-numbers are left for validation to reject
    for name in names:
        value = getattr(obj, name)
        if isinstance(value, numbers.Real) and not isinstance(value, bool):
            object.__setattr__(obj, name, float(value))


def round_money(amount: float) -> Decimal:
    """Round a USD amount to cents, half away from zero."""
    return Decimal(repr(float(amount))).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP)


def format_money(amount: float) -> str:
    text = str(round_money(amount))
    return "0.00" if text == "-0.00" else text


@dataclass(frozen=True)
class GenerationAsset:
    """Cost structure and yearly output of a conventional generator.

    ``variable_om_per_mwh`` and ``fuel_cost_per_mwh`` are per-MWh rates;
    ``fixed_om_per_year`` is charged every year of ``lifetime_years``.
    """

    investment_cost: Money
    fixed_om_per_year: Money
    variable_om_per_mwh: Money
    fuel_cost_per_mwh: Money
    annual_energy: tuple[float, ...]
    lifetime_years: int
    discount_rate: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "annual_energy", _as_float_tuple(self.annual_energy, "annual_energy"))
        _coerce_floats(self, ("investment_cost", "fixed_om_per_year", "variable_om_per_mwh",
                              "fuel_cost_per_mwh", "discount_rate"))
        if isinstance(self.lifetime_years, numbers.Integral) and not isinstance(self.lifetime_years, bool):
            object.__setattr__(self, "lifetime_years", int(self.lifetime_years))
        validate(self)


@dataclass(frozen=True)
class StorageAsset:
    """Annualized cost and ratings of an energy storage system."""

    annualized_power_cost: Money  # USD per MW per year
    annualized_energy_cost: Money  # USD per MWh per year
    rated_power: float  # MW
    rated_energy: float  # MWh
    roundtrip_efficiency: float
    charging_hours: float  # hours per day

    def __post_init__(self) -> None:
        _coerce_floats(self, ("annualized_power_cost", "annualized_energy_cost", "rated_power",
                              "rated_energy", "roundtrip_efficiency", "charging_hours"))
        validate(self)

    @classmethod
    def from_power(
        cls,
        annualized_power_cost: Money,
        annualized_energy_cost: Money,
        rated_power: float,
        roundtrip_efficiency: float,
        charging_hours: float,
    ) -> StorageAsset:
        """Build an asset whose rated energy is ``rated_power * charging_hours``."""
        return cls(
            annualized_power_cost=annualized_power_cost,
            annualized_energy_cost=annualized_energy_cost,
            rated_power=rated_power,
            rated_energy=rated_power * charging_hours,
            roundtrip_efficiency=roundtrip_efficiency,
            charging_hours=charging_hours,
        )

    def scaled(self, k: float) -> StorageAsset:
        """Same technology, ``k`` times the power and energy rating."""
        return StorageAsset(
            self.annualized_power_cost,
            self.annualized_energy_cost,
            self.rated_power * k,
            self.rated_energy * k,
            self.roundtrip_efficiency,
            self.charging_hours,
        )

    @property
    def capital_cost(self) -> Money:
        return (
            self.annualized_power_cost * self.rated_power
            + self.annualized_energy_cost * self.rated_energy
        )


@dataclass(frozen=True)
class PriceSeries:
    """Grid price in USD/MWh for each day of one year."""

    daily_price: tuple[float, ...]
    days_per_year: int = DAYS_PER_YEAR

    def __post_init__(self) -> None:
        object.__setattr__(self, "daily_price", _as_float_tuple(self.daily_price, "daily_price"))
        if isinstance(self.days_per_year, numbers.Integral) and not isinstance(self.days_per_year, bool):
            object.__setattr__(self, "days_per_year", int(self.days_per_year))
        validate(self)

    @classmethod
    def flat(cls, price: Money, days: int = DAYS_PER_YEAR) -> PriceSeries:
        if isinstance(days, bool) or not isinstance(days, int) or days < 1:
            raise NonPositiveValueError("days_per_year", f"must be a positive integer, got {days!r}")
        return cls((float(price),) * days, days)

    @property
    def average(self) -> Money:
        return math.fsum(self.daily_price) / len(self.daily_price)

    def __len__(self) -> int:
        return len(self.daily_price)


@dataclass(frozen=True)
class DispatchSchedule:
    """Daily charged and discharged energy in MWh.

    Checks that need the companion asset or price series live in
    :func:`validate_dispatch`.
    """

    daily_charge: tuple[float, ...]
    daily_discharge: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "daily_charge", _as_float_tuple(self.daily_charge, "daily_charge"))
        object.__setattr__(self, "daily_discharge", _as_float_tuple(self.daily_discharge, "daily_discharge"))
        validate(self)

    def __len__(self) -> int:
        return len(self.daily_charge)


@dataclass(frozen=True)
class LcoeResult:
    lcoe: Money
    capital_cost_component: Money
    operating_cost_component: Money
    total_energy: float
    formulation: str = ""

    def __post_init__(self) -> None:
        _coerce_floats(self, ("lcoe", "capital_cost_component", "operating_cost_component", "total_energy"))
        validate(self)


@dataclass(frozen=True)
class SweepTable:
    parameter_name: str
    points: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        try:
            points = tuple((x, y) for x, y in self.points)
        except (TypeError, ValueError):
            raise OrderingError("points", "expected (value, lcoe) pairs") from None
        object.__setattr__(
            self, "points", tuple(tuple(_as_float_tuple(p, "points")) for p in points)
        )
        validate(self)

    @property
    def values(self) -> tuple[float, ...]:
        return tuple(x for x, _ in self.points)

    @property
    def lcoes(self) -> tuple[float, ...]:
        return tuple(y for _, y in self.points)


@dataclass(frozen=True)
class TechnologyRange:
    technology_name: str
    min_lcoe: Money
    avg_lcoe: Money
    max_lcoe: Money

    def __post_init__(self) -> None:
        _coerce_floats(self, ("min_lcoe", "avg_lcoe", "max_lcoe"))
        validate(self)


@dataclass(frozen=True)
class ParityVerdict:
    lcoe: Money
    reference_rate: Money
    at_parity: bool = field(init=False)
    margin: Money = field(init=False)

    def __post_init__(self) -> None:
        _check_non_negative(self.lcoe, "lcoe")
        _check_non_negative(self.reference_rate, "reference_rate")
        _coerce_floats(self, ("lcoe", "reference_rate"))
        object.__setattr__(self, "margin", self.reference_rate - self.lcoe)
        object.__setattr__(self, "at_parity", self.lcoe <= self.reference_rate)


DomainValue = Union[
    GenerationAsset,
    StorageAsset,
    PriceSeries,
    DispatchSchedule,
    LcoeResult,
    SweepTable,
    TechnologyRange,
]


def _validate_generation(asset: GenerationAsset) -> None:
    for name in ("investment_cost", "fixed_om_per_year", "variable_om_per_mwh", "fuel_cost_per_mwh"):
        _check_non_negative(getattr(asset, name), name)
    _check_non_negative(asset.discount_rate, "discount_rate")
    years = asset.lifetime_years
    if isinstance(years, bool) or not isinstance(years, int) or years < 1:
        raise LifetimeError("lifetime_years", f"must be an integer >= 1, got {years!r}")
    if len(asset.annual_energy) != years:
        raise LengthMismatchError(
            "annual_energy",
            f"has {len(asset.annual_energy)} entries but lifetime_years is {years}",
        )
    for i, energy in enumerate(asset.annual_energy):
        _check_non_negative(energy, f"annual_energy[{i}]")
    if not any(e > 0 for e in asset.annual_energy):
        raise ZeroEnergyError("annual_energy", "at least one year must produce energy")


def _validate_storage(asset: StorageAsset) -> None:
    _check_non_negative(asset.annualized_power_cost, "annualized_power_cost")
    _check_non_negative(asset.annualized_energy_cost, "annualized_energy_cost")
    _check_positive(asset.rated_power, "rated_power")
    _check_positive(asset.rated_energy, "rated_energy")
    _check_finite(asset.roundtrip_efficiency, "roundtrip_efficiency")
    if not 0 < asset.roundtrip_efficiency <= 1:
        raise EfficiencyOutOfRangeError(
            "roundtrip_efficiency",
            f"must lie in (0, 1], got {asset.roundtrip_efficiency!r}",
        )
    _check_finite(asset.charging_hours, "charging_hours")
    if not 0 < asset.charging_hours <= 24:
        raise ChargingHoursOutOfRangeError(
            "charging_hours", f"must lie in (0, 24], got {asset.charging_hours!r}"
        )


def _validate_prices(prices: PriceSeries) -> None:
    days = prices.days_per_year
    if isinstance(days, bool) or not isinstance(days, int) or days < 1:
        raise NonPositiveValueError("days_per_year", f"must be a positive integer, got {days!r}")
    if not prices.daily_price:
        raise EmptySeriesError("daily_price", "price series is empty")
    if len(prices.daily_price) != days:
        raise LengthMismatchError(
            "daily_price",
            f"has {len(prices.daily_price)} entries but days_per_year is {days}",
        )
    for i, p in enumerate(prices.daily_price):
        _check_non_negative(p, f"daily_price[{i}]")


def _validate_schedule(schedule: DispatchSchedule) -> None:
    if not schedule.daily_charge:
        raise EmptySeriesError("daily_charge", "schedule is empty")
    if len(schedule.daily_charge) != len(schedule.daily_discharge):
        raise LengthMismatchError(
            "daily_discharge",
            f"has {len(schedule.daily_discharge)} entries, daily_charge has {len(schedule.daily_charge)}",
        )
    for i, (c, d) in enumerate(zip(schedule.daily_charge, schedule.daily_discharge)):
        _check_non_negative(c, f"daily_charge[{i}]")
        _check_non_negative(d, f"daily_discharge[{i}]")
    if not math.fsum(schedule.daily_discharge) > 0:
        raise ZeroEnergyError("daily_discharge", "total discharged energy must be > 0")


def _validate_result(result: LcoeResult) -> None:
    for name in ("lcoe", "capital_cost_component", "operating_cost_component"):
        _check_finite(getattr(result, name), name)
    _check_positive(result.total_energy, "total_energy")
    expected = (result.capital_cost_component + result.operating_cost_component) / result.total_energy
    if not math.isclose(result.lcoe, expected, rel_tol=1e-9, abs_tol=1e-12):
        raise ValidationError(
            "lcoe", f"{result.lcoe!r} disagrees with its breakdown ({expected!r})"
        )


def _validate_sweep(table: SweepTable) -> None:
    if len(table.points) < 2:
        raise OrderingError("points", f"a sweep needs at least 2 points, got {len(table.points)}")
    for i, (x, y) in enumerate(table.points):
        _check_finite(x, f"points[{i}].value")
        _check_finite(y, f"points[{i}].lcoe")
    xs = [x for x, _ in table.points]
    for i in range(1, len(xs)):
        if not xs[i] > xs[i - 1]:
            raise OrderingError("points", f"parameter values must strictly increase (index {i})")


def _validate_range(rng: TechnologyRange) -> None:
    for name in ("min_lcoe", "avg_lcoe", "max_lcoe"):
        _check_finite(getattr(rng, name), name)
    if not rng.min_lcoe <= rng.avg_lcoe <= rng.max_lcoe:
        raise OrderingError(
            "avg_lcoe",
            f"expected min <= avg <= max, got {rng.min_lcoe!r}, {rng.avg_lcoe!r}, {rng.max_lcoe!r}",
        )


_VALIDATORS = {
    GenerationAsset: _validate_generation,
    StorageAsset: _validate_storage,
    PriceSeries: _validate_prices,
    DispatchSchedule: _validate_schedule,
    LcoeResult: _validate_result,
    SweepTable: _validate_sweep,
    TechnologyRange: _validate_range,
}


def validate(value: DomainValue) -> DomainValue:
    """Check every standalone invariant of ``value`` and return it unchanged.

    Raises a :class:`ValidationError` subclass naming the first offending
    field. Values are validated on construction, so calling this directly is
    only needed after bypassing ``__init__``.
    """
    try:
        check = _VALIDATORS[type(value)]
    except KeyError:
        raise TypeError(f"cannot validate {type(value).__name__}") from None
    check(value)
    return value


def validate_dispatch(
    schedule: DispatchSchedule,
    asset: StorageAsset,
    prices: PriceSeries | None = None,
) -> DispatchSchedule:
    """Check a schedule against the asset that runs it and its price series."""
    if prices is not None and len(schedule) != len(prices):
        raise LengthMismatchError(
            "daily_charge",
            f"schedule covers {len(schedule)} days, price series covers {len(prices)}",
        )
    eta = asset.roundtrip_efficiency
    cap = asset.rated_energy
    for i, (c, d) in enumerate(zip(schedule.daily_charge, schedule.daily_discharge)):
        if c > cap * (1 + ASSUMPTION_RTOL):
            raise ChargeExceedsCapacityError(
                f"daily_charge[{i}]", f"{c!r} MWh exceeds rated_energy {cap!r} MWh"
            )
        if d > eta * c * (1 + ASSUMPTION_RTOL) + 1e-12:
            raise DischargeExceedsChargeError(
                f"daily_discharge[{i}]",
                f"{d!r} MWh exceeds efficiency x charge = {eta * c!r} MWh",
            )
    return schedule


def check_assumption_i(asset: StorageAsset, rtol: float = ASSUMPTION_RTOL) -> None:
    """Require rated_energy == rated_power * charging_hours within ``rtol``."""
    implied = asset.rated_power * asset.charging_hours
    if not math.isclose(asset.rated_energy, implied, rel_tol=rtol, abs_tol=0.0):
        raise AssumptionViolationError(
            "rated_energy",
            f"rated_power x charging_hours = {implied!r} MWh but rated_energy is {asset.rated_energy!r} MWh",
        )


def as_price_series(prices: PriceSeries | float | Sequence[float], days: int = DAYS_PER_YEAR) -> PriceSeries:
    """Accept a series, a scalar (expanded flat over ``days``), or raw daily prices."""
    if isinstance(prices, PriceSeries):
        return prices
    if isinstance(prices, (int, float, Decimal)) and not isinstance(prices, bool):
        return PriceSeries.flat(float(prices), days)
    values = _as_float_tuple(prices, "daily_price")
    return PriceSeries(values, len(values))
