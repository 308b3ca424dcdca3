"""Project spec <-> plain-mapping conversion.

The CLI (JSON/TOML input), the HTTP service (request bodies), and the
scenario store all exchange specs as plain mappings with string keys.
This module is the single parser and serializer for that shape, so the
three surfaces cannot drift apart.

Mapping shape::

    {
        "model": "intermediate",
        "mode": "organic",              # cocomo1 models only
        "size_kloc": 32.0,
        "sced_percent": 100.0,          # cocomo2 models only
        "drivers": {"RELY": "high"},    # driver-bearing models
        "scale_factors": {"PREC": "nominal", ...},
        "size_category": "large",       # optional, detailed model only
    }
"""

from __future__ import annotations

import warnings
from typing import Any, Mapping

from .errors import NominalDefaultWarning, ValidationError
from .model import (
    SCALE_FACTOR_IDS,
    Cocomo1Variant,
    Cocomo2Variant,
    CostDriverSet,
    DevelopmentMode,
    ModelVariant,
    ProjectSpec,
    Rating,
    ScaleFactorSet,
    SizeCategory,
    family_for_variant,
    parse_enum,
)

_ALL_VARIANTS: dict[str, ModelVariant] = {
    **{v.value: v for v in Cocomo1Variant},
    **{v.value: v for v in Cocomo2Variant},
}


def parse_variant(value: Any) -> ModelVariant:
    try:
        return _ALL_VARIANTS[str(value)]
    except KeyError:
        valid = ", ".join(sorted(_ALL_VARIANTS))
        raise ValidationError(
            f"unknown model {value!r}; valid models: {valid}", field="model"
        ) from None


def _parse_rating_map(raw: Any, field: str) -> dict[str, Rating]:
    if not isinstance(raw, Mapping):
        raise ValidationError(f"{field} must be a mapping of id to rating", field=field)
    parsed: dict[str, Rating] = {}
    for key, value in raw.items():
        parsed[str(key)] = parse_enum(Rating, value, f"{field}.{key}")
    return parsed


def _number(raw: Any, field: str) -> float:
    if isinstance(raw, bool) or not isinstance(raw, (int, float)):
        raise ValidationError(f"{field} must be a number", field=field)
    return float(raw)


def spec_from_mapping(doc: Mapping[str, Any]) -> ProjectSpec:
    """Build and validate a ProjectSpec from its mapping form.

    Models that take cost drivers get an empty driver set when the mapping
    omits one (each driver then defaults to nominal downstream).  Missing
    scale factors are filled with nominal here, with a warning, because the
    exponent calculation itself requires every factor to be rated.
    """
    if not isinstance(doc, Mapping):
        raise ValidationError("spec must be a mapping")
    known = {
        "model",
        "mode",
        "size_kloc",
        "sced_percent",
        "drivers",
        "scale_factors",
        "size_category",
    }
    unknown = sorted(set(map(str, doc)) - known)
    if unknown:
        raise ValidationError(
            f"unknown spec field(s): {', '.join(unknown)}", field=unknown[0]
        )

    if "model" not in doc:
        raise ValidationError("spec is missing required field 'model'", field="model")
    variant = parse_variant(doc["model"])
    if "size_kloc" not in doc:
        raise ValidationError(
            "spec is missing required field 'size_kloc'", field="size_kloc"
        )
    size_kloc = _number(doc["size_kloc"], "size_kloc")

    mode = None
    if doc.get("mode") is not None:
        mode = parse_enum(DevelopmentMode, doc["mode"], "mode")

    family = family_for_variant(variant)
    drivers = None
    if family is not None:
        ratings = _parse_rating_map(doc.get("drivers") or {}, "drivers")
        drivers = CostDriverSet(family=family, ratings=ratings)
    elif doc.get("drivers"):
        raise ValidationError(
            f"model {variant} does not take cost drivers", field="drivers"
        )

    scale_factors = None
    if isinstance(variant, Cocomo2Variant):
        rated = _parse_rating_map(doc.get("scale_factors") or {}, "scale_factors")
        missing = [fid for fid in SCALE_FACTOR_IDS if fid not in rated]
        if missing:
            warnings.warn(
                "scale factor(s) defaulted to nominal: " + ", ".join(missing),
                NominalDefaultWarning,
                stacklevel=2,
            )
            for fid in missing:
                rated[fid] = Rating.NOMINAL
        scale_factors = ScaleFactorSet(ratings=rated)
    elif doc.get("scale_factors"):
        raise ValidationError(
            f"model {variant} does not take scale factors", field="scale_factors"
        )

    sced_percent = 100.0
    if doc.get("sced_percent") is not None:
        if not isinstance(variant, Cocomo2Variant):
            raise ValidationError(
                "sced_percent applies to cocomo2 models only", field="sced_percent"
            )
        sced_percent = _number(doc["sced_percent"], "sced_percent")

    size_category = None
    if doc.get("size_category") is not None:
        size_category = parse_enum(SizeCategory, doc["size_category"], "size_category")

    spec = ProjectSpec(
        size_kloc=size_kloc,
        variant=variant,
        mode=mode,
        drivers=drivers,
        scale_factors=scale_factors,
        sced_percent=sced_percent,
        size_category=size_category,
    )
    spec.validate()
    return spec


def spec_to_mapping(spec: ProjectSpec) -> dict[str, Any]:
    """Serialize a spec to its mapping form (inverse of spec_from_mapping)."""
    doc: dict[str, Any] = {
        "model": str(spec.variant),
        "size_kloc": spec.size_kloc,
    }
    if spec.mode is not None:
        doc["mode"] = str(spec.mode)
    if isinstance(spec.variant, Cocomo2Variant):
        doc["sced_percent"] = spec.sced_percent
    if spec.drivers is not None:
        doc["drivers"] = {k: str(v) for k, v in sorted(spec.drivers.ratings.items())}
    if spec.scale_factors is not None:
        doc["scale_factors"] = {
            k: str(v) for k, v in sorted(spec.scale_factors.ratings.items())
        }
    if spec.size_category is not None:
        doc["size_category"] = str(spec.size_category)
    return doc
