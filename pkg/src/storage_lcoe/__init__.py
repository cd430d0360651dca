"""Levelized cost of energy for generation assets and energy storage."""
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
    round_money,
    validate,
    validate_dispatch,
)
from .engine import (
    canonical_schedule,
    grid_parity,
    lcoe_generation,
    lcoe_storage,
    lcoe_storage_simplified,
)
from .sensitivity import (
    SweepParameter,
    SweepSpec,
    TechnologySpec,
    compare_technologies,
    sweep,
    technology_range,
)
from .ingest import Scenario, ScenarioError, load_scenario, write_result

__version__ = "0.1.0"

__all__ = [
    "DAYS_PER_YEAR",
    "DispatchSchedule",
    "GenerationAsset",
    "LcoeResult",
    "ParityVerdict",
    "PriceSeries",
    "Scenario",
    "ScenarioError",
    "StorageAsset",
    "SweepParameter",
    "SweepSpec",
    "SweepTable",
    "TechnologyRange",
    "TechnologySpec",
    "ValidationError",
    "canonical_schedule",
    "compare_technologies",
    "format_money",
    "grid_parity",
    "lcoe_generation",
    "lcoe_storage",
    "lcoe_storage_simplified",
    "load_scenario",
    "round_money",
    "sweep",
    "technology_range",
    "validate",
    "validate_dispatch",
    "write_result",
]
