"""Command-line front end: ``storage-lcoe {lcoe,sweep,compare,parity}``.

Exit status is 0 on success, 1 for validation or scenario errors and 2 for
usage errors. Results go to stdout (or ``--out``); diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .core import ValidationError
from .engine import (
    canonical_schedule,
    grid_parity,
    lcoe_generation,
    lcoe_storage,
    lcoe_storage_simplified,
)
from .ingest import FORMATS, Scenario, ScenarioError, load_scenario, save, write_result
from .sensitivity import compare_technologies, sweep, SweepSpec


def compute_lcoe(scenario: Scenario, formulation: str | None = None):
    """Pick and run the formulation a scenario calls for.

    generation asset -> eq1; storage with a price series or an explicit
    schedule -> eq2; storage with a single price -> eq3.
    """
    if formulation is None:
        if scenario.generation is not None:
            formulation = "eq1"
        elif scenario.schedule is not None or not isinstance(scenario.price, (float, int)):
            formulation = "eq2"
        else:
            formulation = "eq3"

    if formulation == "eq1":
        if scenario.generation is None:
            raise ScenarioError("generation", "eq1 needs a [generation] section")
        return lcoe_generation(scenario.generation)

    if scenario.storage is None:
        raise ScenarioError("storage", f"{formulation} needs a [storage] section")
    if scenario.price is None:
        raise ScenarioError("price", f"{formulation} needs a [price] section")
    if formulation == "eq2":
        prices = scenario.price_series
        schedule = scenario.schedule or canonical_schedule(scenario.storage, len(prices))
        return lcoe_storage(scenario.storage, prices, schedule)
    return lcoe_storage_simplified(scenario.storage, scenario.average_price, scenario.days)


def _sweep_specs(scenario: Scenario, args: argparse.Namespace) -> list[SweepSpec]:
    if args.parameter is None:
        if not scenario.sweeps:
            raise ScenarioError("sweep", "no [[sweep]] in the scenario; pass --parameter/--start/--stop/--steps")
        return list(scenario.sweeps)
    missing = [f"--{n}" for n in ("start", "stop", "steps") if getattr(args, n) is None]
    if missing:
        raise ScenarioError("sweep", f"--parameter also needs {', '.join(missing)}")
    if scenario.storage is None or scenario.average_price is None:
        raise ScenarioError("storage", "sweeps need a [storage] asset and a [price]")
    return [
        SweepSpec(
            parameter=args.parameter,
            start=args.start,
            stop=args.stop,
            steps=args.steps,
            base_asset=scenario.storage,
            base_price=scenario.average_price,
            days=scenario.days,
        )
    ]


def _cmd_lcoe(args: argparse.Namespace) -> str:
    scenario = load_scenario(args.scenario, args.overrides)
    return write_result(compute_lcoe(scenario, args.formulation), args.format)


def _cmd_sweep(args: argparse.Namespace) -> str:
    scenario = load_scenario(args.scenario, args.overrides)
    tables = [sweep(spec) for spec in _sweep_specs(scenario, args)]
    return write_result(tables if len(tables) > 1 else tables[0], args.format)


def _cmd_compare(args: argparse.Namespace) -> str:
    scenario = load_scenario(args.scenario, args.overrides)
    if not scenario.technologies:
        raise ScenarioError("technology", "no [[technology]] entries in the scenario")
    return write_result(compare_technologies(list(scenario.technologies)), args.format)


def _cmd_parity(args: argparse.Namespace) -> str:
    if args.scenario is None:
        if args.lcoe is None or args.rate is None:
            raise ScenarioError("lcoe", "give a scenario or both --lcoe and --rate")
        return write_result(grid_parity(args.lcoe, args.rate), args.format)
    scenario = load_scenario(args.scenario, args.overrides)
    lcoe = args.lcoe if args.lcoe is not None else compute_lcoe(scenario, args.formulation).lcoe
    rate = args.rate if args.rate is not None else scenario.utility_rate
    if rate is None:
        rate = scenario.average_price
    if rate is None:
        raise ScenarioError("grid.utility_rate", "no utility rate: pass --rate or add [grid] utility_rate")
    return write_result(grid_parity(lcoe, rate), args.format)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="storage-lcoe",
        description="Levelized cost of energy for generation and energy storage.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="{lcoe,sweep,compare,parity}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--out", help="write to this file instead of stdout")
    common.add_argument(
        "--set", dest="overrides", action="append", default=[], metavar="KEY=VALUE",
        help="override a scenario key (bare or section.key) before validation",
    )
    common.add_argument("--formulation", choices=("eq1", "eq2", "eq3"), default=None,
                        help="force a formulation instead of choosing from the scenario")

    p = sub.add_parser("lcoe", parents=[common], help="compute the LCOE of a scenario")
    p.add_argument("scenario")
    p.set_defaults(func=_cmd_lcoe)

    p = sub.add_parser("sweep", parents=[common], help="one-dimensional sensitivity sweep")
    p.add_argument("scenario")
    p.add_argument("--parameter", choices=("charging_hours", "price", "efficiency", "energy_to_power_cost_ratio"))
    p.add_argument("--start", type=float)
    p.add_argument("--stop", type=float)
    p.add_argument("--steps", type=int)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("compare", parents=[common], help="min/avg/max LCOE per technology")
    p.add_argument("scenario")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("parity", parents=[common], help="compare an LCOE with the utility rate")
    p.add_argument("scenario", nargs="?")
    p.add_argument("--lcoe", type=float)
    p.add_argument("--rate", type=float)
    p.set_defaults(func=_cmd_parity)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = args.func(args)
    except ValidationError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.out:
        try:
            save(text, args.out)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc.strerror or exc}", file=sys.stderr)
            return 1
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
