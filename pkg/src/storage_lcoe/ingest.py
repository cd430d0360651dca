"""Scenario files, price/schedule CSVs and result serialization.

Scenario grammar (TOML)::

    # exactly one of [storage] or [generation]; [[technology]]-only files
    # are accepted for comparisons
    [storage]
    annualized_power_cost = "60000"    # USD per MW per year
    annualized_energy_cost = "30000"   # USD per MWh per year
    rated_power = 1                    # MW
    rated_energy = 12                  # MWh
    roundtrip_efficiency = 0.9         # fraction in (0, 1]
    charging_hours = 12                # hours per day in (0, 24]

    [generation]
    investment_cost = "1000"           # USD, incurred in year 1
    fixed_om_per_year = "100"          # USD per year
    variable_om_per_mwh = "0"          # USD per MWh
    fuel_cost_per_mwh = "0"            # USD per MWh
    annual_energy = [100, 100]         # MWh per year, one entry per year
    lifetime_years = 2
    discount_rate = 0.1                # optional, default 0

    [price]                            # one of daily_price (scalar or list) or file
    daily_price = "107.1"              # USD per MWh; a scalar means a flat year
    file = "prices.csv"                # header day,price_usd_per_mwh
    days_per_year = 365                # optional, default 365

    [schedule]                         # optional; file or both inline lists
    file = "schedule.csv"              # header day,charge_mwh,discharge_mwh
    daily_charge = [12, 12]
    daily_discharge = [10.8, 10.8]

    [grid]
    utility_rate = "107.1"             # USD per MWh, used by parity

    [[sweep]]
    parameter = "efficiency"           # charging_hours | price | efficiency | energy_to_power_cost_ratio
    start = 0.6
    stop = 1.0
    steps = 9

    [[technology]]
    name = "lead-acid"
    annualized_power_cost = ["20000", "40000"]   # [min, max]
    annualized_energy_cost = ["10000", "20000"]
    roundtrip_efficiency = [0.7, 0.9]
    charging_hours = [12, 12]
    price = "107.1"                    # optional, defaults to the scenario price

Numbers may be written bare or as quoted decimal strings; both are read as
decimals and converted to float once. Relative file paths resolve against
the scenario's directory.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence, Union

import tomli

from .core import (
    DAYS_PER_YEAR,
    DispatchSchedule,
    GenerationAsset,
    LcoeResult,
    ParityVerdict,
    PriceSeries,
    StorageAsset,
    SweepTable,
    TechnologyRange,
    ValidationError,
    format_money,
)
from .sensitivity import SweepParameter, SweepSpec, TechnologySpec


class ScenarioError(ValidationError):
    """Malformed scenario, CSV or serialized document."""


PRICE_CSV_HEADER = ("day", "price_usd_per_mwh")
SCHEDULE_CSV_HEADER = ("day", "charge_mwh", "discharge_mwh")

_STORAGE_KEYS = (
    "annualized_power_cost",
    "annualized_energy_cost",
    "rated_power",
    "rated_energy",
    "roundtrip_efficiency",
    "charging_hours",
)
_GENERATION_KEYS = (
    "investment_cost",
    "fixed_om_per_year",
    "variable_om_per_mwh",
    "fuel_cost_per_mwh",
    "annual_energy",
    "lifetime_years",
    "discount_rate",
)
_SECTIONS: dict[str, tuple[tuple[str, ...], tuple[str, ...]]] = {
    # section: (required keys, optional keys)
    "storage": (_STORAGE_KEYS, ()),
    "generation": (_GENERATION_KEYS[:-1], ("discount_rate",)),
    "price": ((), ("daily_price", "file", "days_per_year")),
    "schedule": ((), ("file", "daily_charge", "daily_discharge")),
    "grid": (("utility_rate",), ()),
}
_ARRAY_SECTIONS: dict[str, tuple[tuple[str, ...], tuple[str, ...]]] = {
    "sweep": (("parameter", "start", "stop", "steps"), ("days",)),
    "technology": (
        ("name", "annualized_power_cost", "annualized_energy_cost", "roundtrip_efficiency", "charging_hours"),
        ("price", "days"),
    ),
}

PARAMETER_UNITS = {
    "charging_hours": "h",
    "price": "usd_per_mwh",
    "efficiency": "fraction",
    "energy_to_power_cost_ratio": "per_h",
}


@dataclass(frozen=True)
class Scenario:
    """Validated contents of a scenario file.

    ``price`` is a float when the file gave a single value and a
    :class:`PriceSeries` when it gave one price per day.
    """

    storage: StorageAsset | None = None
    generation: GenerationAsset | None = None
    price: float | PriceSeries | None = None
    days: int = DAYS_PER_YEAR
    schedule: DispatchSchedule | None = None
    utility_rate: float | None = None
    sweeps: tuple[SweepSpec, ...] = ()
    technologies: tuple[TechnologySpec, ...] = ()
    source: str = field(default="<string>", compare=False)

    @property
    def price_series(self) -> PriceSeries | None:
        if self.price is None:
            return None
        if isinstance(self.price, PriceSeries):
            return self.price
        return PriceSeries.flat(self.price, self.days)

    @property
    def average_price(self) -> float | None:
        if self.price is None:
            return None
        if isinstance(self.price, PriceSeries):
            return self.price.average
        return self.price


# -- numbers ---------------------------------------------------------------

def _number(value: Any, key: str) -> float:
    if isinstance(value, bool):
        raise ScenarioError(key, f"expected a number, got {value!r}")
    if isinstance(value, (int, Decimal)):
        return float(value)
    if isinstance(value, float):
        return value
    if isinstance(value, str):
        try:
            d = Decimal(value.strip())
        except InvalidOperation:
            raise ScenarioError(key, f"not a decimal number: {value!r}") from None
        return float(d)
    raise ScenarioError(key, f"expected a number, got {value!r}")


def _integer(value: Any, key: str) -> int:
    number = _number(value, key)
    if not number.is_integer():
        raise ScenarioError(key, f"expected an integer, got {value!r}")
    return int(number)


def _numbers(value: Any, key: str) -> list[float]:
    if not isinstance(value, list):
        raise ScenarioError(key, f"expected a list of numbers, got {value!r}")
    return [_number(v, f"{key}[{i}]") for i, v in enumerate(value)]


def _bounds(value: Any, key: str) -> tuple[float, float]:
    if not isinstance(value, list):
        v = _number(value, key)
        return v, v
    if len(value) != 2:
        raise ScenarioError(key, f"expected [min, max], got {value!r}")
    return _number(value[0], f"{key}.min"), _number(value[1], f"{key}.max")


# -- CSV inputs ------------------------------------------------------------

def _read_rows(text: str, header: Sequence[str], what: str) -> list[list[str]]:
    rows = [r for r in csv.reader(io.StringIO(text)) if r and any(c.strip() for c in r)]
    if not rows:
        raise ScenarioError(what, "file is empty")
    got = tuple(c.strip() for c in rows[0])
    if got != tuple(header):
        raise ScenarioError(what, f"header must be {','.join(header)!r}, got {','.join(got)!r}")
    body = rows[1:]
    if not body:
        raise ScenarioError(what, "no data rows")
    for lineno, row in enumerate(body, start=2):
        if len(row) != len(header):
            raise ScenarioError(f"{what} line {lineno}", f"expected {len(header)} fields, got {len(row)}")
        try:
            day = int(row[0])
        except ValueError:
            raise ScenarioError(f"{what} line {lineno}", f"day must be an integer, got {row[0]!r}") from None
        if day != lineno - 1:
            raise ScenarioError(
                f"{what} line {lineno}",
                f"day indices must run 1..T contiguously; expected {lineno - 1}, got {day}",
            )
    return body


def parse_price_csv(text: str) -> PriceSeries:
    body = _read_rows(text, PRICE_CSV_HEADER, "price_csv")
    prices = [_number(r[1], f"price_csv day {i}") for i, r in enumerate(body, start=1)]
    return PriceSeries(tuple(prices), len(prices))


def parse_schedule_csv(text: str) -> DispatchSchedule:
    body = _read_rows(text, SCHEDULE_CSV_HEADER, "schedule_csv")
    charge = [_number(r[1], f"schedule_csv day {i} charge") for i, r in enumerate(body, start=1)]
    discharge = [_number(r[2], f"schedule_csv day {i} discharge") for i, r in enumerate(body, start=1)]
    return DispatchSchedule(tuple(charge), tuple(discharge))


def load_price_csv(path: str | Path) -> PriceSeries:
    return parse_price_csv(Path(path).read_text())


def load_schedule_csv(path: str | Path) -> DispatchSchedule:
    return parse_schedule_csv(Path(path).read_text())


def write_price_csv(prices: PriceSeries) -> str:
    lines = [",".join(PRICE_CSV_HEADER)]
    lines += [f"{day},{_full(p)}" for day, p in enumerate(prices.daily_price, start=1)]
    return "\n".join(lines) + "\n"


def write_schedule_csv(schedule: DispatchSchedule) -> str:
    lines = [",".join(SCHEDULE_CSV_HEADER)]
    lines += [
        f"{day},{_full(c)},{_full(d)}"
        for day, (c, d) in enumerate(zip(schedule.daily_charge, schedule.daily_discharge), start=1)
    ]
    return "\n".join(lines) + "\n"


# -- scenario --------------------------------------------------------------

def _parse_literal(text: str) -> Any:
    try:
        return tomli.loads(f"v = {text}", parse_float=Decimal)["v"]
    except tomli.TOMLDecodeError:
        return text


def apply_overrides(raw: dict[str, Any], overrides: Iterable[str]) -> dict[str, Any]:
    """Apply ``key=value`` overrides to a parsed scenario document.

    ``key`` is either ``section.key`` or a bare key, which is resolved to
    the single section that accepts it (preferring sections already present).
    """
    for item in overrides:
        key, sep, text = item.partition("=")
        key = key.strip()
        if not sep or not key:
            raise ScenarioError("--set", f"expected key=value, got {item!r}")
        if "." in key:
            section, _, name = key.partition(".")
        else:
            name = key
            candidates = [s for s, (req, opt) in _SECTIONS.items() if name in req + opt]
            present = [s for s in candidates if s in raw]
            if len(present) == 1 or (len(candidates) == 1 and not present):
                section = (present or candidates)[0]
            elif not candidates:
                raise ScenarioError(key, "unknown scenario key")
            else:
                raise ScenarioError(key, f"ambiguous key; qualify it as one of {', '.join(s + '.' + name for s in candidates)}")
        if section not in _SECTIONS:
            raise ScenarioError(key, f"unknown section {section!r}")
        req, opt = _SECTIONS[section]
        if name not in req + opt:
            raise ScenarioError(key, f"unknown key in [{section}]")
        target = raw.setdefault(section, {})
        target[name] = _parse_literal(text.strip())
        if section == "price" and name in ("daily_price", "file"):
            target.pop("file" if name == "daily_price" else "daily_price", None)
    return raw


def _check_keys(table: Any, section: str, required: Sequence[str], optional: Sequence[str]) -> dict:
    if not isinstance(table, dict):
        raise ScenarioError(section, "expected a table")
    for key in table:
        if key not in required and key not in optional:
            raise ScenarioError(f"{section}.{key}", "unknown key")
    for key in required:
        if key not in table:
            raise ScenarioError(f"{section}.{key}", "missing required key")
    return table


def _field_error(section: str, exc: ValidationError) -> ScenarioError:
    if isinstance(exc, ScenarioError):
        return exc
    return ScenarioError(f"{section}.{exc.field}", str(exc).partition(": ")[2] or str(exc))


def build_scenario(raw: Mapping[str, Any], base_dir: str | Path = ".", source: str = "<string>") -> Scenario:
    """Turn a parsed scenario document into validated domain values."""
    base_dir = Path(base_dir)
    for section in raw:
        if section not in _SECTIONS and section not in _ARRAY_SECTIONS:
            raise ScenarioError(section, "unknown section")
    if "storage" in raw and "generation" in raw:
        raise ScenarioError("generation", "a scenario holds either [storage] or [generation], not both")

    storage = generation = None
    if "storage" in raw:
        t = _check_keys(raw["storage"], "storage", *_SECTIONS["storage"])
        values = {k: _number(t[k], f"storage.{k}") for k in _STORAGE_KEYS}
        try:
            storage = StorageAsset(**values)
        except ValidationError as exc:
            raise _field_error("storage", exc) from exc
    if "generation" in raw:
        t = _check_keys(raw["generation"], "generation", *_SECTIONS["generation"])
        try:
            generation = GenerationAsset(
                investment_cost=_number(t["investment_cost"], "generation.investment_cost"),
                fixed_om_per_year=_number(t["fixed_om_per_year"], "generation.fixed_om_per_year"),
                variable_om_per_mwh=_number(t["variable_om_per_mwh"], "generation.variable_om_per_mwh"),
                fuel_cost_per_mwh=_number(t["fuel_cost_per_mwh"], "generation.fuel_cost_per_mwh"),
                annual_energy=tuple(_numbers(t["annual_energy"], "generation.annual_energy")),
                lifetime_years=_integer(t["lifetime_years"], "generation.lifetime_years"),
                discount_rate=_number(t.get("discount_rate", 0), "generation.discount_rate"),
            )
        except ValidationError as exc:
            raise _field_error("generation", exc) from exc

    price: float | PriceSeries | None = None
    days = DAYS_PER_YEAR
    if "price" in raw:
        t = _check_keys(raw["price"], "price", *_SECTIONS["price"])
        if "days_per_year" in t:
            days = _integer(t["days_per_year"], "price.days_per_year")
            if days < 1:
                raise ScenarioError("price.days_per_year", "must be >= 1")
        if ("daily_price" in t) == ("file" in t):
            raise ScenarioError("price.daily_price", "give exactly one of daily_price or file")
        try:
            if "file" in t:
                price = load_price_csv(base_dir / str(t["file"]))
            elif isinstance(t["daily_price"], list):
                values = _numbers(t["daily_price"], "price.daily_price")
                price = PriceSeries(tuple(values), len(values))
            else:
                price = _number(t["daily_price"], "price.daily_price")
                PriceSeries.flat(price, days)
        except OSError as exc:
            raise ScenarioError("price.file", str(exc)) from exc
        except ValidationError as exc:
            raise _field_error("price", exc) from exc
        if isinstance(price, PriceSeries):
            if "days_per_year" in t and days != len(price):
                raise ScenarioError(
                    "price.days_per_year", f"is {days} but the series has {len(price)} days"
                )
            days = len(price)

    schedule = None
    if "schedule" in raw:
        t = _check_keys(raw["schedule"], "schedule", *_SECTIONS["schedule"])
        try:
            if "file" in t:
                if "daily_charge" in t or "daily_discharge" in t:
                    raise ScenarioError("schedule.file", "give either file or inline lists, not both")
                schedule = load_schedule_csv(base_dir / str(t["file"]))
            else:
                for key in ("daily_charge", "daily_discharge"):
                    if key not in t:
                        raise ScenarioError(f"schedule.{key}", "missing required key")
                schedule = DispatchSchedule(
                    tuple(_numbers(t["daily_charge"], "schedule.daily_charge")),
                    tuple(_numbers(t["daily_discharge"], "schedule.daily_discharge")),
                )
        except OSError as exc:
            raise ScenarioError("schedule.file", str(exc)) from exc
        except ValidationError as exc:
            raise _field_error("schedule", exc) from exc
        if storage is None:
            raise ScenarioError("schedule", "a dispatch schedule needs a [storage] asset")
        if isinstance(price, PriceSeries) and len(price) != len(schedule):
            raise ScenarioError(
                "schedule", f"covers {len(schedule)} days but the price series covers {len(price)}"
            )
        if not isinstance(price, PriceSeries):
            days = len(schedule)

    utility_rate = None
    if "grid" in raw:
        t = _check_keys(raw["grid"], "grid", *_SECTIONS["grid"])
        utility_rate = _number(t["utility_rate"], "grid.utility_rate")
        if not math.isfinite(utility_rate) or utility_rate < 0:
            raise ScenarioError("grid.utility_rate", f"must be a finite number >= 0, got {utility_rate!r}")

    avg_price = None if price is None else (price.average if isinstance(price, PriceSeries) else price)

    sweeps = []
    for i, t in enumerate(_array(raw, "sweep")):
        where = f"sweep[{i}]"
        _check_keys(t, where, *_ARRAY_SECTIONS["sweep"])
        if storage is None or avg_price is None:
            raise ScenarioError(where, "sweeps need a [storage] asset and a [price]")
        try:
            sweeps.append(
                SweepSpec(
                    parameter=str(t["parameter"]),
                    start=_number(t["start"], f"{where}.start"),
                    stop=_number(t["stop"], f"{where}.stop"),
                    steps=_integer(t["steps"], f"{where}.steps"),
                    base_asset=storage,
                    base_price=avg_price,
                    days=_integer(t.get("days", days), f"{where}.days"),
                )
            )
        except ValidationError as exc:
            raise _field_error(where, exc) from exc

    technologies = []
    for i, t in enumerate(_array(raw, "technology")):
        where = f"technology[{i}]"
        _check_keys(t, where, *_ARRAY_SECTIONS["technology"])
        if "price" in t:
            tech_price = _number(t["price"], f"{where}.price")
        elif avg_price is not None:
            tech_price = avg_price
        else:
            raise ScenarioError(f"{where}.price", "missing; set it here or in [price]")
        try:
            technologies.append(
                TechnologySpec(
                    name=str(t["name"]),
                    annualized_power_cost=_bounds(t["annualized_power_cost"], f"{where}.annualized_power_cost"),
                    annualized_energy_cost=_bounds(t["annualized_energy_cost"], f"{where}.annualized_energy_cost"),
                    roundtrip_efficiency=_bounds(t["roundtrip_efficiency"], f"{where}.roundtrip_efficiency"),
                    charging_hours=_bounds(t["charging_hours"], f"{where}.charging_hours"),
                    price=tech_price,
                    days=_integer(t.get("days", days), f"{where}.days"),
                )
            )
        except ValidationError as exc:
            raise _field_error(where, exc) from exc

    if storage is None and generation is None and not technologies:
        raise ScenarioError("storage", "scenario needs a [storage] or [generation] section")

    return Scenario(
        storage=storage,
        generation=generation,
        price=price,
        days=days,
        schedule=schedule,
        utility_rate=utility_rate,
        sweeps=tuple(sweeps),
        technologies=tuple(technologies),
        source=source,
    )


def _array(raw: Mapping[str, Any], name: str) -> list:
    value = raw.get(name, [])
    if not isinstance(value, list):
        raise ScenarioError(name, f"use [[{name}]] array-of-tables syntax")
    return value


def parse_scenario_text(
    text: str,
    base_dir: str | Path = ".",
    overrides: Iterable[str] = (),
    source: str = "<string>",
) -> Scenario:
    try:
        raw = tomli.loads(text, parse_float=Decimal)
    except tomli.TOMLDecodeError as exc:
        raise ScenarioError(source, f"parse error: {exc}") from None
    raw = apply_overrides(raw, overrides)
    return build_scenario(raw, base_dir, source)


def load_scenario(path: str | Path, overrides: Iterable[str] = ()) -> Scenario:
    """Read, override and validate a scenario file.

    A path without a suffix also tries ``<path>.toml``.
    """
    path = Path(path)
    if not path.exists() and not path.suffix and path.with_suffix(".toml").exists():
        path = path.with_suffix(".toml")
    try:
        text = path.read_text()
    except OSError as exc:
        raise ScenarioError(str(path), f"cannot read scenario: {exc.strerror or exc}") from None
    return parse_scenario_text(text, path.parent, overrides, str(path))


# -- result serialization ----------------------------------------------------

Serializable = Union[
    LcoeResult,
    SweepTable,
    TechnologyRange,
    ParityVerdict,
    StorageAsset,
    GenerationAsset,
    PriceSeries,
    DispatchSchedule,
]

FORMATS = ("text", "csv", "json", "plot-data")


def _sig(x: float) -> str:
    return format(float(x), ".6g")


def _full(x: float) -> str:
    return repr(float(x))


def _sweep_x(table: SweepTable, x: float) -> str:
    return format_money(x) if table.parameter_name == "price" else _sig(x)


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _lcoe_rows(r: LcoeResult) -> list[tuple[str, str]]:
    return [
        ("formulation", r.formulation),
        ("lcoe_usd_per_mwh", format_money(r.lcoe)),
        ("capital_cost_usd", format_money(r.capital_cost_component)),
        ("operating_cost_usd", format_money(r.operating_cost_component)),
        ("total_energy_mwh", _sig(r.total_energy)),
    ]


def _parity_rows(v: ParityVerdict) -> list[tuple[str, str]]:
    return [
        ("lcoe", format_money(v.lcoe)),
        ("reference_rate", format_money(v.reference_rate)),
        ("at_parity", _bool(v.at_parity)),
        ("margin", format_money(v.margin)),
    ]


_RANGE_HEADER = ("technology", "min_lcoe_usd_per_mwh", "avg_lcoe_usd_per_mwh", "max_lcoe_usd_per_mwh")


def _range_row(r: TechnologyRange) -> list[str]:
    return [r.technology_name, format_money(r.min_lcoe), format_money(r.avg_lcoe), format_money(r.max_lcoe)]


def _csv(rows: Iterable[Sequence[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _sweep_header(table: SweepTable) -> tuple[str, str]:
    unit = PARAMETER_UNITS.get(table.parameter_name)
    x = f"{table.parameter_name}_{unit}" if unit else table.parameter_name
    return x, "lcoe_usd_per_mwh"


def to_dict(value: Serializable) -> dict[str, Any]:
    """Full-precision, unit-labelled mapping of a domain value."""
    if isinstance(value, LcoeResult):
        return {
            "type": "lcoe_result",
            "formulation": value.formulation,
            "lcoe_usd_per_mwh": value.lcoe,
            "capital_cost_usd": value.capital_cost_component,
            "operating_cost_usd": value.operating_cost_component,
            "total_energy_mwh": value.total_energy,
        }
    if isinstance(value, SweepTable):
        return {
            "type": "sweep_table",
            "parameter": value.parameter_name,
            "unit": PARAMETER_UNITS.get(value.parameter_name, ""),
            "points": [{"value": x, "lcoe_usd_per_mwh": y} for x, y in value.points],
        }
    if isinstance(value, TechnologyRange):
        return {
            "type": "technology_range",
            "technology": value.technology_name,
            "min_lcoe_usd_per_mwh": value.min_lcoe,
            "avg_lcoe_usd_per_mwh": value.avg_lcoe,
            "max_lcoe_usd_per_mwh": value.max_lcoe,
        }
    if isinstance(value, ParityVerdict):
        return {
            "type": "parity_verdict",
            "lcoe_usd_per_mwh": value.lcoe,
            "reference_rate_usd_per_mwh": value.reference_rate,
            "at_parity": value.at_parity,
            "margin_usd_per_mwh": value.margin,
        }
    if isinstance(value, StorageAsset):
        return {
            "type": "storage_asset",
            "annualized_power_cost_usd_per_mw_year": value.annualized_power_cost,
            "annualized_energy_cost_usd_per_mwh_year": value.annualized_energy_cost,
            "rated_power_mw": value.rated_power,
            "rated_energy_mwh": value.rated_energy,
            "roundtrip_efficiency": value.roundtrip_efficiency,
            "charging_hours_h": value.charging_hours,
        }
    if isinstance(value, GenerationAsset):
        return {
            "type": "generation_asset",
            "investment_cost_usd": value.investment_cost,
            "fixed_om_usd_per_year": value.fixed_om_per_year,
            "variable_om_usd_per_mwh": value.variable_om_per_mwh,
            "fuel_cost_usd_per_mwh": value.fuel_cost_per_mwh,
            "annual_energy_mwh": list(value.annual_energy),
            "lifetime_years": value.lifetime_years,
            "discount_rate": value.discount_rate,
        }
    if isinstance(value, PriceSeries):
        return {
            "type": "price_series",
            "days_per_year": value.days_per_year,
            "daily_price_usd_per_mwh": list(value.daily_price),
        }
    if isinstance(value, DispatchSchedule):
        return {
            "type": "dispatch_schedule",
            "daily_charge_mwh": list(value.daily_charge),
            "daily_discharge_mwh": list(value.daily_discharge),
        }
    raise TypeError(f"cannot serialize {type(value).__name__}")


def from_dict(data: Mapping[str, Any]) -> Serializable:
    """Inverse of :func:`to_dict`; the result is validated on construction."""
    try:
        kind = data["type"]
        if kind == "lcoe_result":
            return LcoeResult(
                lcoe=data["lcoe_usd_per_mwh"],
                capital_cost_component=data["capital_cost_usd"],
                operating_cost_component=data["operating_cost_usd"],
                total_energy=data["total_energy_mwh"],
                formulation=data["formulation"],
            )
        if kind == "sweep_table":
            return SweepTable(
                data["parameter"],
                tuple((p["value"], p["lcoe_usd_per_mwh"]) for p in data["points"]),
            )
        if kind == "technology_range":
            return TechnologyRange(
                data["technology"],
                data["min_lcoe_usd_per_mwh"],
                data["avg_lcoe_usd_per_mwh"],
                data["max_lcoe_usd_per_mwh"],
            )
        if kind == "parity_verdict":
            return ParityVerdict(data["lcoe_usd_per_mwh"], data["reference_rate_usd_per_mwh"])
        if kind == "storage_asset":
            return StorageAsset(
                data["annualized_power_cost_usd_per_mw_year"],
                data["annualized_energy_cost_usd_per_mwh_year"],
                data["rated_power_mw"],
                data["rated_energy_mwh"],
                data["roundtrip_efficiency"],
                data["charging_hours_h"],
            )
        if kind == "generation_asset":
            return GenerationAsset(
                data["investment_cost_usd"],
                data["fixed_om_usd_per_year"],
                data["variable_om_usd_per_mwh"],
                data["fuel_cost_usd_per_mwh"],
                tuple(data["annual_energy_mwh"]),
                data["lifetime_years"],
                data["discount_rate"],
            )
        if kind == "price_series":
            return PriceSeries(tuple(data["daily_price_usd_per_mwh"]), data["days_per_year"])
        if kind == "dispatch_schedule":
            return DispatchSchedule(tuple(data["daily_charge_mwh"]), tuple(data["daily_discharge_mwh"]))
    except KeyError as exc:
        raise ScenarioError(str(exc.args[0]), "missing key in serialized document") from None
    raise ScenarioError("type", f"unknown document type {data.get('type')!r}")


def write_result(value: Serializable | Sequence[Serializable], fmt: str = "csv") -> str:
    """Render a result (or a list of results) as text, csv, json or plot-data.

    csv, text and plot-data round money to cents and other numbers to six
    significant digits. json keeps full precision and parses back exactly
    with :func:`read_json`.
    """
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
    many = isinstance(value, (list, tuple))
    items = list(value) if many else [value]
    if fmt == "json":
        doc = [to_dict(v) for v in items] if many else to_dict(value)
        return json.dumps(doc, indent=2) + "\n"
    if items and all(isinstance(v, TechnologyRange) for v in items):
        if fmt == "plot-data":
            lines = ["# x: technology", "# y: min_lcoe,avg_lcoe,max_lcoe (usd_per_mwh)"]
            lines += [",".join(_range_row(r)) for r in items]
            return "\n".join(lines) + "\n"
        return _csv([_RANGE_HEADER, *(_range_row(r) for r in items)])
    return "\n".join(_write_one(v, fmt) for v in items)


def _write_one(value: Serializable, fmt: str) -> str:
    if isinstance(value, LcoeResult):
        rows = _lcoe_rows(value)
        if fmt == "text":
            return "".join(f"{k}={v}\n" for k, v in rows)
        if fmt == "plot-data":
            return f"# x: formulation\n# y: lcoe (usd_per_mwh)\n{value.formulation},{format_money(value.lcoe)}\n"
        return _csv([("field", "value"), *rows])
    if isinstance(value, ParityVerdict):
        rows = _parity_rows(value)
        if fmt == "text":
            return " ".join(f"{k}={v}" for k, v in rows) + "\n"
        if fmt == "plot-data":
            return f"# x: lcoe (usd_per_mwh)\n# y: reference_rate (usd_per_mwh)\n{rows[0][1]},{rows[1][1]}\n"
        return _csv([("field", "value"), *rows])
    if isinstance(value, SweepTable):
        header = _sweep_header(value)
        body = [(_sweep_x(value, x), format_money(y)) for x, y in value.points]
        if fmt == "plot-data":
            unit = PARAMETER_UNITS.get(value.parameter_name, "")
            lines = [f"# x: {value.parameter_name} ({unit})", "# y: lcoe (usd_per_mwh)"]
            return "\n".join(lines + [f"{x},{y}" for x, y in body]) + "\n"
        return _csv([header, *body])
    if isinstance(value, TechnologyRange):
        return write_result([value], fmt)
    if isinstance(value, PriceSeries):
        return write_price_csv(value)
    if isinstance(value, DispatchSchedule):
        return write_schedule_csv(value)
    raise TypeError(f"cannot write {type(value).__name__} as {fmt}")


def read_json(text: str) -> Serializable | list[Serializable]:
    data = json.loads(text)
    if isinstance(data, list):
        return [from_dict(d) for d in data]
    return from_dict(data)


def read_csv(text: str) -> LcoeResult | SweepTable | list[TechnologyRange]:
    """Parse a csv document produced by :func:`write_result` (cent precision)."""
    rows = [r for r in csv.reader(io.StringIO(text)) if r]
    if not rows:
        raise ScenarioError("csv", "empty document")
    header = tuple(rows[0])
    if header == ("field", "value"):
        fields = dict(rows[1:])
        if "formulation" in fields:
            capital = _number(fields["capital_cost_usd"], "capital_cost_usd")
            operating = _number(fields["operating_cost_usd"], "operating_cost_usd")
            energy = _number(fields["total_energy_mwh"], "total_energy_mwh")
            if not energy > 0:
                raise ScenarioError("total_energy_mwh", "must be > 0")
            # the rounded lcoe column need not match the rounded breakdown exactly
            return LcoeResult(
                lcoe=(capital + operating) / energy,
                capital_cost_component=capital,
                operating_cost_component=operating,
                total_energy=energy,
                formulation=fields["formulation"],
            )
        raise ScenarioError("csv", "unrecognized field/value document")
    if header == _RANGE_HEADER:
        return [
            TechnologyRange(r[0], *(_number(v, h) for v, h in zip(r[1:], _RANGE_HEADER[1:])))
            for r in rows[1:]
        ]
    if len(header) == 2 and header[1] == "lcoe_usd_per_mwh":
        name = header[0]
        for param, unit in PARAMETER_UNITS.items():
            if header[0] == f"{param}_{unit}":
                name = param
        return SweepTable(name, tuple((_number(x, name), _number(y, "lcoe")) for x, y in rows[1:]))
    raise ScenarioError("csv", f"unrecognized header {','.join(header)!r}")


def save(text: str, path: str | Path) -> None:
    Path(path).write_text(text)


__all__ = [
    "FORMATS",
    "PRICE_CSV_HEADER",
    "SCHEDULE_CSV_HEADER",
    "Scenario",
    "ScenarioError",
    "SweepParameter",
    "apply_overrides",
    "build_scenario",
    "from_dict",
    "load_price_csv",
    "load_scenario",
    "load_schedule_csv",
    "parse_price_csv",
    "parse_scenario_text",
    "parse_schedule_csv",
    "read_csv",
    "read_json",
    "save",
    "to_dict",
    "write_price_csv",
    "write_result",
    "write_schedule_csv",
]
