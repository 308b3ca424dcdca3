"""The five estimation models, as pure functions of spec + catalog.

Effort/duration forms:

* basic/intermediate/detailed: effort = a * size**b (times EAF where drivers
  apply), duration = c * effort**d.
* early design / post architecture: PM_nominal = a2 * size**B with
  B = b0 + 0.01 * sum(scale-factor values); PM_adjusted = PM_nominal * EAF;
  duration = coeff * PM**(base + slope * (B - baseline)) * sced% / 100.

The PM fed to the duration power term excludes the SCED effort multiplier;
schedule compression enters only through the trailing sced% factor, so it is
never counted twice. The reported pm_adjusted always carries the full EAF.
"""

from __future__ import annotations

import warnings

from .catalog import (
    Calibration,
    RatingCatalog,
    lookup_effort_multiplier,
    lookup_scale_factor,
)
from .errors import NominalDefaultWarning, RatingLookupError, ValidationError
from .model import (
    SCED_DRIVER_ID,
    SCED_PERCENT_MAX,
    SCED_PERCENT_MIN,
    BasicEstimate,
    Cocomo1Variant,
    Cocomo2Estimate,
    Cocomo2Variant,
    ConstantsTable,
    CostDriverSet,
    DetailedEstimate,
    DevelopmentMode,
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

__all__ = [
    "estimate",
    "estimate_basic",
    "estimate_intermediate",
    "estimate_detailed",
    "estimate_cocomo2",
    "effort_adjustment_factor",
    "scale_exponent",
    "duration_cocomo2",
    "infer_size_category",
    "phase_table",
]


def _check_size(size_kloc: float) -> None:
    if not size_kloc > 0:
        raise ValidationError(
            f"size_kloc must be strictly positive (got {size_kloc})", field="size_kloc"
        )


def estimate_basic(
    mode: DevelopmentMode, size_kloc: float, constants: ConstantsTable
) -> BasicEstimate:
    """Effort/duration from size and mode alone; EAF is 1 by definition."""
    _check_size(size_kloc)
    row = constants.for_mode(mode)
    effort = row.a * size_kloc**row.b
    duration = row.c * effort**row.d
    return BasicEstimate(
        effort_pm=effort,
        duration_months=duration,
        avg_staffing=effort / duration,
        productivity_kloc_per_pm=size_kloc / effort,
        eaf=1.0,
    )


def effort_adjustment_factor(drivers: CostDriverSet, catalog: RatingCatalog) -> float:
    """Product of the catalog multipliers for the given ratings.

    Drivers the set does not rate default to nominal; a single
    :class:`NominalDefaultWarning` lists them.
    """
    table = catalog.em_tables[drivers.family]
    unknown = [driver for driver in drivers.ratings if driver not in table]
    if unknown:
        raise RatingLookupError(
            f"unknown cost driver {unknown[0]!r} for family {drivers.family.value}",
            field=unknown[0],
        )
    product = 1.0
    defaulted: list[str] = []
    for driver_id in table:
        rating = drivers.ratings.get(driver_id)
        if rating is None:
            defaulted.append(driver_id)
            rating = Rating.NOMINAL
        product *= lookup_effort_multiplier(catalog, drivers.family, driver_id, rating)
    if defaulted:
        warnings.warn(
            f"cost drivers defaulted to nominal: {', '.join(defaulted)}",
            NominalDefaultWarning,
            stacklevel=3,
        )
    return product


def estimate_intermediate(
    mode: DevelopmentMode,
    size_kloc: float,
    drivers: CostDriverSet,
    catalog: RatingCatalog,
) -> BasicEstimate:
    """Basic form scaled by the effort adjustment factor."""
    _check_size(size_kloc)
    eaf = effort_adjustment_factor(drivers, catalog)
    row = catalog.calibration.cocomo1[Cocomo1Variant.INTERMEDIATE].for_mode(mode)
    effort = row.a * size_kloc**row.b * eaf
    duration = row.c * effort**row.d
    return BasicEstimate(
        effort_pm=effort,
        duration_months=duration,
        avg_staffing=effort / duration,
        productivity_kloc_per_pm=size_kloc / effort,
        eaf=eaf,
    )


# Classic size classes; boundaries inclusive.
_SIZE_THRESHOLDS = (
    (2.0, SizeCategory.SMALL),
    (8.0, SizeCategory.MEDIUM),
    (32.0, SizeCategory.LARGE),
)


def infer_size_category(size_kloc: float) -> SizeCategory:
    _check_size(size_kloc)
    for bound, category in _SIZE_THRESHOLDS:
        if size_kloc <= bound:
            return category
    return SizeCategory.EXTRA_LARGE


def _fractions(
    plans: float, system: float, detail: float, code: float, integration: float
) -> dict[Phase, float]:
    return {
        Phase.PLANS_REQUIREMENTS: plans,
        Phase.SYSTEM_DESIGN: system,
        Phase.DETAILED_DESIGN: detail,
        Phase.MODULE_CODE_TEST: code,
        Phase.INTEGRATION_TEST: integration,
    }


# Phase distribution branches. Each mode has a reference size class with its
# own percentages; every other size class shares the mode's fallback row.
_PHASE_BRANCHES: dict[DevelopmentMode, dict[str, PhasePercentTable]] = {
    DevelopmentMode.ORGANIC: {
        "reference": PhasePercentTable(
            effort_fractions=_fractions(0.06, 0.16, 0.26, 0.42, 0.16),
            schedule_fractions=_fractions(0.10, 0.19, 0.24, 0.39, 0.18),
        ),
        "other": PhasePercentTable(
            effort_fractions=_fractions(0.06, 0.16, 0.24, 0.38, 0.22),
            schedule_fractions=_fractions(0.12, 0.19, 0.21, 0.34, 0.26),
        ),
    },
    DevelopmentMode.SEMIDETACHED: {
        "reference": PhasePercentTable(
            effort_fractions=_fractions(0.07, 0.17, 0.25, 0.33, 0.25),
            schedule_fractions=_fractions(0.20, 0.26, 0.21, 0.27, 0.26),
        ),
        "other": PhasePercentTable(
            effort_fractions=_fractions(0.07, 0.17, 0.24, 0.31, 0.28),
            schedule_fractions=_fractions(0.22, 0.27, 0.19, 0.25, 0.29),
        ),
    },
    DevelopmentMode.EMBEDDED: {
        "reference": PhasePercentTable(
            effort_fractions=_fractions(0.08, 0.18, 0.25, 0.26, 0.31),
            schedule_fractions=_fractions(0.36, 0.36, 0.18, 0.18, 0.28),
        ),
        "other": PhasePercentTable(
            effort_fractions=_fractions(0.08, 0.18, 0.24, 0.24, 0.34),
            schedule_fractions=_fractions(0.40, 0.38, 0.16, 0.16, 0.30),
        ),
    },
}

#: Size class that selects each mode's reference percentage row.
_REFERENCE_CATEGORY: dict[DevelopmentMode, SizeCategory] = {
    DevelopmentMode.ORGANIC: SizeCategory.SMALL,
    DevelopmentMode.SEMIDETACHED: SizeCategory.MEDIUM,
    DevelopmentMode.EMBEDDED: SizeCategory.LARGE,
}


def phase_table(mode: DevelopmentMode, category: SizeCategory) -> PhasePercentTable:
    """Phase percentage row for a mode and size class."""
    branch = "reference" if _REFERENCE_CATEGORY[mode] is category else "other"
    return _PHASE_BRANCHES[mode][branch]


def estimate_detailed(
    mode: DevelopmentMode,
    size_kloc: float,
    drivers: CostDriverSet | None,
    catalog: RatingCatalog,
    category: SizeCategory | None = None,
) -> DetailedEstimate:
    """Effort/duration plus the per-phase split.

    EAF is applied when drivers are supplied and skipped when they are absent.
    Each phase value is a single multiplication of the base estimate by the
    table fraction.
    """
    _check_size(size_kloc)
    eaf = 1.0 if drivers is None else effort_adjustment_factor(drivers, catalog)
    row = catalog.calibration.constants_for(Cocomo1Variant.DETAILED).for_mode(mode)
    effort = row.a * size_kloc**row.b * eaf
    duration = row.c * effort**row.d
    base = BasicEstimate(
        effort_pm=effort,
        duration_months=duration,
        avg_staffing=effort / duration,
        productivity_kloc_per_pm=size_kloc / effort,
        eaf=eaf,
    )
    resolved = category if category is not None else infer_size_category(size_kloc)
    table = phase_table(mode, resolved)
    phases = tuple(
        PhaseEstimate(
            phase=phase,
            effort_fraction=table.effort_fractions[phase],
            schedule_fraction=table.schedule_fractions[phase],
            effort_pm=effort * table.effort_fractions[phase],
            schedule_months=duration * table.schedule_fractions[phase],
        )
        for phase in Phase
    )
    return DetailedEstimate(base=base, size_category=resolved, phases=phases)


def scale_exponent(factors: ScaleFactorSet, catalog: RatingCatalog) -> float:
    """B = b0 + 0.01 * sum of the rated scale-factor values."""
    known = catalog.sf_table
    unknown = [fid for fid in factors.ratings if fid not in known]
    if unknown:
        raise RatingLookupError(
            f"unknown scale factor {unknown[0]!r}", field=unknown[0]
        )
    total = 0.0
    for fid in known:
        rating = factors.ratings.get(fid)
        if rating is None:
            raise RatingLookupError(
                f"scale factor {fid} is not rated; all of "
                f"{', '.join(known)} are required",
                field=fid,
            )
        total += lookup_scale_factor(catalog, fid, rating)
    return catalog.calibration.b0 + 0.01 * total


def duration_cocomo2(
    pm: float, b: float, sced_percent: float, calibration: Calibration
) -> float:
    """Schedule months for a given effort and scale exponent."""
    if not pm > 0:
        raise ValidationError(f"pm must be strictly positive (got {pm})", field="pm")
    if not SCED_PERCENT_MIN <= sced_percent <= SCED_PERCENT_MAX:
        raise ValidationError(
            f"sced_percent must be within [{SCED_PERCENT_MIN:.0f}, "
            f"{SCED_PERCENT_MAX:.0f}] (got {sced_percent})",
            field="sced_percent",
        )
    exponent = calibration.duration_exponent_base + calibration.duration_slope * (
        b - calibration.duration_baseline
    )
    return calibration.duration_coefficient * pm**exponent * sced_percent / 100.0


def estimate_cocomo2(
    variant: Cocomo2Variant, spec: ProjectSpec, catalog: RatingCatalog
) -> Cocomo2Estimate:
    """Early-design or post-architecture estimate from a full project spec."""
    _check_size(spec.size_kloc)
    if spec.drivers is None:
        raise ValidationError(
            f"drivers are required for the {variant.value} model", field="drivers"
        )
    expected_family = family_for_variant(variant)
    if spec.drivers.family is not expected_family:
        raise ValidationError(
            f"driver family {spec.drivers.family.value} does not match the "
            f"{variant.value} model (expected {expected_family.value})",
            field="drivers",
        )
    if spec.scale_factors is None:
        raise ValidationError(
            f"scale_factors are required for the {variant.value} model",
            field="scale_factors",
        )

    calibration = catalog.calibration
    b = scale_exponent(spec.scale_factors, catalog)
    eaf = effort_adjustment_factor(spec.drivers, catalog)
    pm_nominal = calibration.a2 * spec.size_kloc**b
    pm_adjusted = pm_nominal * eaf

    # Schedule: SCED's effort multiplier stays out of the PM power term.
    sced_entry = catalog.em_tables[spec.drivers.family].get(SCED_DRIVER_ID)
    eaf_sans_sced = eaf
    if sced_entry is not None:
        sced_rating = spec.drivers.ratings.get(SCED_DRIVER_ID, Rating.NOMINAL)
        eaf_sans_sced = eaf / sced_entry.multipliers[sced_rating]
    duration = duration_cocomo2(
        pm_nominal * eaf_sans_sced, b, spec.sced_percent, calibration
    )

    return Cocomo2Estimate(
        scale_exponent_b=b,
        pm_nominal=pm_nominal,
        eaf=eaf,
        pm_adjusted=pm_adjusted,
        duration_months=duration,
        avg_staffing=pm_adjusted / duration,
    )


def estimate(
    spec: ProjectSpec, catalog: RatingCatalog
) -> BasicEstimate | DetailedEstimate | Cocomo2Estimate:
    """Validate the spec and dispatch to the selected model."""
    spec.validate()
    variant: ModelVariant = spec.variant
    if variant is Cocomo1Variant.BASIC:
        table = catalog.calibration.cocomo1[Cocomo1Variant.BASIC]
        return estimate_basic(spec.mode, spec.size_kloc, table)
    if variant is Cocomo1Variant.INTERMEDIATE:
        return estimate_intermediate(spec.mode, spec.size_kloc, spec.drivers, catalog)
    if variant is Cocomo1Variant.DETAILED:
        return estimate_detailed(
            spec.mode, spec.size_kloc, spec.drivers, catalog, category=spec.size_category
        )
    return estimate_cocomo2(variant, spec, catalog)
