"""One-dimensional sweeps and min/avg/max ranges of the closed-form storage LCOE."""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

import numpy as np

from .core import (
    DAYS_PER_YEAR,
    Money,
    NonPositiveValueError,
    OrderingError,
    StorageAsset,
    TechnologyRange,
    SweepTable,
    ValidationError,
    _check_finite,
    _check_non_negative,
)
from .engine import lcoe_storage_simplified


class SweepParameter(str, enum.Enum):
    CHARGING_HOURS = "charging_hours"
    PRICE = "price"
    EFFICIENCY = "efficiency"
    ENERGY_TO_POWER_COST_RATIO = "energy_to_power_cost_ratio"


class SweepPointError(ValidationError):
    """A sweep point produced an invalid asset or price."""


@dataclass(frozen=True)
class SweepSpec:
    parameter: SweepParameter
    start: float
    stop: float
    steps: int
    base_asset: StorageAsset
    base_price: Money
    days: int = DAYS_PER_YEAR

    def __post_init__(self) -> None:
        try:
            object.__setattr__(self, "parameter", SweepParameter(self.parameter))
        except ValueError:
            choices = ", ".join(p.value for p in SweepParameter)
            raise ValidationError("parameter", f"unknown sweep parameter {self.parameter!r} (choose from {choices})") from None
        _check_finite(self.start, "start")
        _check_finite(self.stop, "stop")
        if not self.start < self.stop:
            raise OrderingError("stop", f"start ({self.start!r}) must be below stop ({self.stop!r})")
        if isinstance(self.steps, bool) or not isinstance(self.steps, int) or self.steps < 2:
            raise OrderingError("steps", f"must be an integer >= 2, got {self.steps!r}")
        _check_non_negative(self.base_price, "base_price")
        if isinstance(self.days, bool) or not isinstance(self.days, int) or self.days < 1:
            raise NonPositiveValueError("days", f"must be a positive integer, got {self.days!r}")

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.steps)


def _point(spec: SweepSpec, value: float) -> tuple[StorageAsset, float]:
    base = spec.base_asset
    price = spec.base_price
    p = spec.parameter
    if p is SweepParameter.CHARGING_HOURS:
        # keep rated_energy = rated_power * charging_hours at every point
        asset = StorageAsset.from_power(
            base.annualized_power_cost,
            base.annualized_energy_cost,
            base.rated_power,
            base.roundtrip_efficiency,
            value,
        )
    elif p is SweepParameter.EFFICIENCY:
        asset = StorageAsset(
            base.annualized_power_cost,
            base.annualized_energy_cost,
            base.rated_power,
            base.rated_energy,
            value,
            base.charging_hours,
        )
    elif p is SweepParameter.ENERGY_TO_POWER_COST_RATIO:
        asset = StorageAsset(
            base.annualized_power_cost,
            value * base.annualized_power_cost,
            base.rated_power,
            base.rated_energy,
            base.roundtrip_efficiency,
            base.charging_hours,
        )
    else:
        asset = base
        price = value
    return asset, price


def sweep(spec: SweepSpec) -> SweepTable:
    """Evaluate the closed-form LCOE at ``spec.steps`` evenly spaced values.

    All other inputs stay at their base values. For the cost-ratio sweep the
    power cost is held and ``energy cost = ratio * power cost``.
    """
    points = []
    for value in spec.values():
        value = float(value)
        try:
            asset, price = _point(spec, value)
            lcoe = lcoe_storage_simplified(asset, price, spec.days).lcoe
        except ValidationError as exc:
            raise SweepPointError(
                exc.field, f"{spec.parameter.value}={value!r}: {exc}"
            ) from exc
        points.append((value, lcoe))
    return SweepTable(spec.parameter.value, tuple(points))


@dataclass(frozen=True)
class TechnologySpec:
    """Parameter box for one storage technology; each bound is ``(min, max)``."""

    name: str
    annualized_power_cost: tuple[float, float]
    annualized_energy_cost: tuple[float, float]
    roundtrip_efficiency: tuple[float, float]
    charging_hours: tuple[float, float]
    price: Money
    days: int = DAYS_PER_YEAR

    def __post_init__(self) -> None:
        for name in _BOX_FIELDS:
            bounds = getattr(self, name)
            if isinstance(bounds, (int, float)):
                bounds = (bounds, bounds)
            if len(bounds) != 2:
                raise ValidationError(name, f"expected (min, max), got {bounds!r}")
            lo, hi = float(bounds[0]), float(bounds[1])
            _check_finite(lo, f"{name}.min")
            _check_finite(hi, f"{name}.max")
            if lo > hi:
                raise OrderingError(name, f"min {lo!r} exceeds max {hi!r}")
            object.__setattr__(self, name, (lo, hi))
        _check_non_negative(self.price, "price")
        if isinstance(self.days, bool) or not isinstance(self.days, int) or self.days < 1:
            raise NonPositiveValueError("days", f"must be a positive integer, got {self.days!r}")
        for corner in self.corners():
            _asset(*corner)

    def corners(self) -> list[tuple[float, float, float, float]]:
        return list(itertools.product(*(getattr(self, name) for name in _BOX_FIELDS)))

    def midpoint(self) -> tuple[float, float, float, float]:
        return tuple(0.5 * (lo + hi) for lo, hi in (getattr(self, n) for n in _BOX_FIELDS))


_BOX_FIELDS = (
    "annualized_power_cost",
    "annualized_energy_cost",
    "roundtrip_efficiency",
    "charging_hours",
)


def _asset(cc_p: float, cc_e: float, eta: float, t_ch: float) -> StorageAsset:
    # the closed form is size independent, so a 1 MW unit stands in for any size
    return StorageAsset.from_power(cc_p, cc_e, 1.0, eta, t_ch)


def technology_range(spec: TechnologySpec) -> TechnologyRange:
    """Minimum, average and maximum LCOE over a technology's parameter box.

    LCOE rises with both cost terms and falls with efficiency and (for a
    non-zero power cost) with charging hours, so the extremes sit on corners
    of the box; all 16 corners are evaluated. The average is the LCOE at the
    midpoint of every range, not the mean of min and max.
    """
    corner_lcoes = [
        lcoe_storage_simplified(_asset(*c), spec.price, spec.days).lcoe
        for c in spec.corners()
    ]
    avg = lcoe_storage_simplified(_asset(*spec.midpoint()), spec.price, spec.days).lcoe
    lo, hi = min(corner_lcoes), max(corner_lcoes)
    # flat directions (e.g. zero power cost vs charging hours) can leave avg an ulp outside
    avg = min(max(avg, lo), hi)
    return TechnologyRange(spec.name, lo, avg, hi)


def compare_technologies(specs: list[TechnologySpec]) -> list[TechnologyRange]:
    return [technology_range(s) for s in specs]
