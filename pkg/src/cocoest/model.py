"""Domain types: modes, variants, ratings, project specs, and estimate records.

Everything here is an immutable value object. Validation lives either in
``__post_init__`` (structural rules that must always hold) or in
:meth:`ProjectSpec.validate` (rules that depend on the selected model).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping

from .errors import LargeProjectWarning, ValidationError


class _StrEnum(str, Enum):
    def __str__(self) -> str:
        return self.value


class DevelopmentMode(_StrEnum):
    ORGANIC = "organic"
    SEMIDETACHED = "semidetached"
    EMBEDDED = "embedded"


class Cocomo1Variant(_StrEnum):
    BASIC = "basic"
    INTERMEDIATE = "intermediate"
    DETAILED = "detailed"


class Cocomo2Variant(_StrEnum):
    EARLY_DESIGN = "early_design"
    POST_ARCHITECTURE = "post_architecture"


ModelVariant = Cocomo1Variant | Cocomo2Variant

#: All five selectable models, keyed by their CLI/API name.
MODEL_NAMES: dict[str, ModelVariant] = {
    **{v.value: v for v in Cocomo1Variant},
    **{v.value: v for v in Cocomo2Variant},
}


class Rating(_StrEnum):
    VERY_LOW = "very_low"
    LOW = "low"
    NOMINAL = "nominal"
    HIGH = "high"
    VERY_HIGH = "very_high"
    EXTRA_HIGH = "extra_high"


#: Canonical low-to-high ordering used for sweeps and catalog tables.
RATING_ORDER: tuple[Rating, ...] = (
    Rating.VERY_LOW,
    Rating.LOW,
    Rating.NOMINAL,
    Rating.HIGH,
    Rating.VERY_HIGH,
    Rating.EXTRA_HIGH,
)


class SizeCategory(_StrEnum):
    SMALL = "small"
    MEDIUM = "medium"
    LARGE = "large"
    EXTRA_LARGE = "extra_large"


class Phase(_StrEnum):
    PLANS_REQUIREMENTS = "plans_requirements"
    SYSTEM_DESIGN = "system_design"
    DETAILED_DESIGN = "detailed_design"
    MODULE_CODE_TEST = "module_code_test"
    INTEGRATION_TEST = "integration_test"


#: The four phases whose effort/schedule fractions each sum to 1.0.
#: Plans & requirements is an additive overhead on top of that 100%.
DEVELOPMENT_PHASES: tuple[Phase, ...] = (
    Phase.SYSTEM_DESIGN,
    Phase.DETAILED_DESIGN,
    Phase.MODULE_CODE_TEST,
    Phase.INTEGRATION_TEST,
)


class DriverFamily(_StrEnum):
    COCOMO81 = "cocomo81"
    COCOMO2_EARLY = "cocomo2_early"
    COCOMO2_POST = "cocomo2_post"


def family_for_variant(variant: ModelVariant) -> DriverFamily | None:
    """Driver family used by a model variant, or None for the basic model."""
    if variant is Cocomo1Variant.BASIC:
        return None
    if isinstance(variant, Cocomo1Variant):
        return DriverFamily.COCOMO81
    if variant is Cocomo2Variant.EARLY_DESIGN:
        return DriverFamily.COCOMO2_EARLY
    return DriverFamily.COCOMO2_POST


#: The five scale-factor ids, in canonical order.
SCALE_FACTOR_IDS: tuple[str, ...] = ("PREC", "FLEX", "RESL", "TEAM", "PMAT")

SCED_DRIVER_ID = "SCED"

SCED_PERCENT_MIN = 75.0
SCED_PERCENT_MAX = 160.0

#: Sizes beyond this are outside any published calibration range.
SIZE_WARN_THRESHOLD_KLOC = 10_000.0


@dataclass(frozen=True)
class ModeConstants:
    """Effort/duration constants for one development mode.

    effort = a * size**b, duration = c * effort**d.
    """

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self) -> None:
        if not self.a > 0:
            raise ValueError(f"a must be > 0 (got {self.a})")
        if not 1.0 <= self.b <= 1.5:
            raise ValueError(f"b must be within [1.0, 1.5] (got {self.b})")
        if not self.c > 0:
            raise ValueError(f"c must be > 0 (got {self.c})")
        if not 0 < self.d < 1:
            raise ValueError(f"d must be within (0, 1) (got {self.d})")


@dataclass(frozen=True)
class ConstantsTable:
    """Per-mode constants for one model variant."""

    organic: ModeConstants
    semidetached: ModeConstants
    embedded: ModeConstants

    def for_mode(self, mode: DevelopmentMode) -> ModeConstants:
        return getattr(self, mode.value)


@dataclass(frozen=True)
class CostDriverSet:
    """Cost-driver ratings for one driver family.

    May be sparse: drivers absent from ``ratings`` are treated as nominal by
    the effort-adjustment computation (with a warning to the caller).
    """

    family: DriverFamily
    ratings: Mapping[str, Rating] = field(default_factory=dict)

    def with_rating(self, driver: str, rating: Rating) -> "CostDriverSet":
        updated = dict(self.ratings)
        updated[driver] = rating
        return CostDriverSet(self.family, updated)


@dataclass(frozen=True)
class ScaleFactorSet:
    """Ratings for the five scale factors; all five must be rated."""

    ratings: Mapping[str, Rating] = field(default_factory=dict)

    @classmethod
    def nominal(cls) -> "ScaleFactorSet":
        return cls({fid: Rating.NOMINAL for fid in SCALE_FACTOR_IDS})


@dataclass(frozen=True)
class ProjectSpec:
    """Everything needed to estimate one project."""

    size_kloc: float
    variant: ModelVariant
    mode: DevelopmentMode | None = None
    drivers: CostDriverSet | None = None
    scale_factors: ScaleFactorSet | None = None
    sced_percent: float = 100.0
    size_category: SizeCategory | None = None

    def validate(self) -> None:
        """Raise :class:`ValidationError` naming the first offending field."""
        if not isinstance(self.size_kloc, (int, float)) or isinstance(self.size_kloc, bool):
            raise ValidationError("size_kloc must be a number", field="size_kloc")
        if not math.isfinite(self.size_kloc) or self.size_kloc <= 0:
            raise ValidationError(
                f"size_kloc must be a strictly positive finite number (got {self.size_kloc})",
                field="size_kloc",
            )
        if self.size_kloc > SIZE_WARN_THRESHOLD_KLOC:
            warnings.warn(
                f"size_kloc {self.size_kloc} exceeds {SIZE_WARN_THRESHOLD_KLOC:.0f} KLOC; "
                "estimates this far outside the calibration range are unreliable",
                LargeProjectWarning,
                stacklevel=2,
            )

        if isinstance(self.variant, Cocomo1Variant):
            if self.mode is None:
                raise ValidationError(
                    f"mode is required for the {self.variant.value} model", field="mode"
                )
            if self.variant is Cocomo1Variant.INTERMEDIATE and self.drivers is None:
                raise ValidationError(
                    "drivers are required for the intermediate model",
                    field="drivers",
                )
        else:
            if self.drivers is None:
                raise ValidationError(
                    f"drivers are required for the {self.variant.value} model",
                    field="drivers",
                )
            if self.scale_factors is None:
                raise ValidationError(
                    f"scale_factors are required for the {self.variant.value} model",
                    field="scale_factors",
                )
            if not SCED_PERCENT_MIN <= self.sced_percent <= SCED_PERCENT_MAX:
                raise ValidationError(
                    f"sced_percent must be within [{SCED_PERCENT_MIN:.0f}, "
                    f"{SCED_PERCENT_MAX:.0f}] (got {self.sced_percent})",
                    field="sced_percent",
                )

        expected_family = family_for_variant(self.variant)
        if self.drivers is not None and expected_family is not None:
            if self.drivers.family is not expected_family:
                raise ValidationError(
                    f"driver family {self.drivers.family.value} does not match the "
                    f"{self.variant.value} model (expected {expected_family.value})",
                    field="drivers",
                )


@dataclass(frozen=True)
class BasicEstimate:
    """Output of the basic/intermediate models (and the detailed base)."""

    effort_pm: float
    duration_months: float
    avg_staffing: float
    productivity_kloc_per_pm: float
    eaf: float


@dataclass(frozen=True)
class PhasePercentTable:
    """Effort and schedule fractions for the five lifecycle phases."""

    effort_fractions: Mapping[Phase, float]
    schedule_fractions: Mapping[Phase, float]


@dataclass(frozen=True)
class PhaseEstimate:
    phase: Phase
    effort_fraction: float
    schedule_fraction: float
    effort_pm: float
    schedule_months: float


@dataclass(frozen=True)
class DetailedEstimate:
    base: BasicEstimate
    size_category: SizeCategory
    phases: tuple[PhaseEstimate, ...]


@dataclass(frozen=True)
class Cocomo2Estimate:
    scale_exponent_b: float
    pm_nominal: float
    eaf: float
    pm_adjusted: float
    duration_months: float
    avg_staffing: float


def parse_enum(cls: type, value: str, field_name: str):
    """Parse a string into an enum member, listing valid values on failure."""
    if isinstance(value, cls):
        return value
    normalized = str(value).strip().lower().replace("-", "_")
    try:
        return cls(normalized)
    except ValueError:
        valid = ", ".join(member.value for member in cls)
        raise ValidationError(
            f"{field_name} must be one of: {valid} (got {value!r})", field=field_name
        ) from None
