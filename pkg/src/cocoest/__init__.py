"""COCOMO I/II software cost estimation.

The package computes effort, schedule, staffing, and phase distributions
for the classic basic/intermediate/detailed models and the early-design /
post-architecture forms, driven by a replaceable rating catalog. Survey
statistics helpers, a scenario store, a CLI, and an HTTP service are built
on the same engine.

The HTTP service (:mod:`cocoest.service`) and the file-report writers
(:mod:`cocoest.report`) are imported on demand to keep library import
light; pull them in explicitly when needed.
"""

__version__ = "0.1.0"

from .catalog import (
    Calibration,
    DriverEntry,
    RatingCatalog,
    ScaleFactorEntry,
    builtin_default_catalog,
    catalog_to_mapping,
    load_catalog,
    load_catalog_file,
    lookup_effort_multiplier,
    lookup_scale_factor,
    resolve_catalog,
    serialize_catalog,
)
from .core import (
    duration_cocomo2,
    effort_adjustment_factor,
    estimate,
    estimate_basic,
    estimate_cocomo2,
    estimate_detailed,
    estimate_intermediate,
    infer_size_category,
    phase_table,
    scale_exponent,
)
from .errors import (
    CatalogError,
    CocoestError,
    EstimationWarning,
    LargeProjectWarning,
    NominalDefaultWarning,
    NotFoundError,
    RatingLookupError,
    StoreError,
    ValidationError,
)
from .model import (
    BasicEstimate,
    Cocomo1Variant,
    Cocomo2Estimate,
    Cocomo2Variant,
    ConstantsTable,
    CostDriverSet,
    DetailedEstimate,
    DevelopmentMode,
    DriverFamily,
    ModeConstants,
    ModelVariant,
    Phase,
    PhaseEstimate,
    PhasePercentTable,
    ProjectSpec,
    Rating,
    ScaleFactorSet,
    SizeCategory,
    family_for_variant,
)
from .output import estimate_payload, round2, stats_payload, sweep_rows
from .specio import spec_from_mapping, spec_to_mapping
from .stats import DescriptiveStats, LikertSample, describe, percent_breakdown
from .store import ScenarioRecord, ScenarioStore
from .surveys import BUNDLED_SURVEY, SurveyQuestion, get_question

__all__ = [
    "__version__",
    "BUNDLED_SURVEY",
    "BasicEstimate",
    "Calibration",
    "CatalogError",
    "Cocomo1Variant",
    "Cocomo2Estimate",
    "Cocomo2Variant",
    "CocoestError",
    "ConstantsTable",
    "CostDriverSet",
    "DescriptiveStats",
    "DetailedEstimate",
    "DevelopmentMode",
    "DriverEntry",
    "DriverFamily",
    "EstimationWarning",
    "LargeProjectWarning",
    "LikertSample",
    "ModeConstants",
    "ModelVariant",
    "NominalDefaultWarning",
    "NotFoundError",
    "Phase",
    "PhaseEstimate",
    "PhasePercentTable",
    "ProjectSpec",
    "Rating",
    "RatingCatalog",
    "RatingLookupError",
    "ScaleFactorEntry",
    "ScaleFactorSet",
    "ScenarioRecord",
    "ScenarioStore",
    "SizeCategory",
    "StoreError",
    "SurveyQuestion",
    "ValidationError",
    "builtin_default_catalog",
    "catalog_to_mapping",
    "describe",
    "duration_cocomo2",
    "effort_adjustment_factor",
    "estimate",
    "estimate_basic",
    "estimate_cocomo2",
    "estimate_detailed",
    "estimate_intermediate",
    "estimate_payload",
    "family_for_variant",
    "get_question",
    "infer_size_category",
    "load_catalog",
    "load_catalog_file",
    "lookup_effort_multiplier",
    "lookup_scale_factor",
    "percent_breakdown",
    "phase_table",
    "resolve_catalog",
    "round2",
    "scale_exponent",
    "serialize_catalog",
    "spec_from_mapping",
    "spec_to_mapping",
    "stats_payload",
    "sweep_rows",
]
