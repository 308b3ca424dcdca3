"""Rating catalog: data-driven effort multipliers, scale factors, calibration.

The catalog lives in a schema-versioned TOML document so organizations can
supply their own calibration without touching code. ``load_catalog`` never
returns a partially valid catalog: any parse or validation failure raises
:class:`CatalogError` and nothing is constructed.

Resolution order for the active catalog: explicit path argument (CLI flag),
then the ``COCOEST_CATALOG`` environment variable, then the built-in default.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Mapping

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .errors import CatalogError, RatingLookupError
from .model import (
    SCALE_FACTOR_IDS,
    Cocomo1Variant,
    ConstantsTable,
    DriverFamily,
    ModeConstants,
    Rating,
)

SUPPORTED_CATALOG_VERSION = "1"

ENV_CATALOG = "COCOEST_CATALOG"

#: Calibration switch values for the detailed model's constants.
DETAILED_CONSTANTS_CHOICES = ("detailed", "algorithm_literal")


@dataclass(frozen=True)
class DriverEntry:
    """One cost driver: display metadata plus its rating -> multiplier row.

    Ratings a driver does not define are simply absent from ``multipliers``.
    """

    driver_id: str
    name: str
    group: str
    multipliers: Mapping[Rating, float]


@dataclass(frozen=True)
class ScaleFactorEntry:
    factor_id: str
    name: str
    values: Mapping[Rating, float]


@dataclass(frozen=True)
class Calibration:
    """All numeric calibration constants, including the per-mode tables."""

    cocomo1: Mapping[Cocomo1Variant, ConstantsTable]
    detailed_constants: str
    a2: float
    b0: float
    duration_coefficient: float
    duration_exponent_base: float
    duration_slope: float
    duration_baseline: float

    def constants_for(self, variant: Cocomo1Variant) -> ConstantsTable:
        """Constants table used by one model variant.

        The detailed model follows its own table by default; the
        ``algorithm_literal`` switch makes it reuse the basic-model constants
        instead, which is what the classic phase-distribution procedure
        hard-codes.
        """
        if (
            variant is Cocomo1Variant.DETAILED
            and self.detailed_constants == "algorithm_literal"
        ):
            return self.cocomo1[Cocomo1Variant.BASIC]
        return self.cocomo1[variant]


@dataclass(frozen=True)
class RatingCatalog:
    catalog_version: str
    em_tables: Mapping[DriverFamily, Mapping[str, DriverEntry]]
    sf_table: Mapping[str, ScaleFactorEntry]
    calibration: Calibration

    def drivers(self, family: DriverFamily) -> tuple[str, ...]:
        return tuple(self.em_tables[family])


def lookup_effort_multiplier(
    catalog: RatingCatalog, family: DriverFamily, driver: str, rating: Rating
) -> float:
    """Multiplier for (driver, rating), exactly as stored in the catalog."""
    table = catalog.em_tables[family]
    entry = table.get(driver)
    if entry is None:
        raise RatingLookupError(
            f"unknown cost driver {driver!r} for family {family.value}", field=driver
        )
    try:
        return entry.multipliers[rating]
    except KeyError:
        raise RatingLookupError(
            f"driver {driver} does not define a {rating.value} rating", field=driver
        ) from None


def lookup_scale_factor(catalog: RatingCatalog, factor: str, rating: Rating) -> float:
    entry = catalog.sf_table.get(factor)
    if entry is None:
        raise RatingLookupError(f"unknown scale factor {factor!r}", field=factor)
    try:
        return entry.values[rating]
    except KeyError:
        raise RatingLookupError(
            f"scale factor {factor} does not define a {rating.value} rating",
            field=factor,
        ) from None


# ---------------------------------------------------------------------------
# Loading and validation
# ---------------------------------------------------------------------------

_RESERVED_ENTRY_KEYS = {"name", "group"}


def _require(doc: Mapping, key: str, path: str) -> object:
    if key not in doc:
        raise CatalogError(f"catalog entry {path or 'document'} is missing {key!r}")
    return doc[key]


def _as_number(value: object, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise CatalogError(f"{path} must be a number (got {value!r})")
    return float(value)


def _parse_rating_row(doc: Mapping, path: str) -> dict[Rating, float]:
    row: dict[Rating, float] = {}
    for key, raw in doc.items():
        if key in _RESERVED_ENTRY_KEYS:
            continue
        try:
            rating = Rating(key)
        except ValueError:
            raise CatalogError(f"{path}.{key} is not a rating level") from None
        row[rating] = _as_number(raw, f"{path}.{key}")
    return row


def _parse_driver(family: str, driver_id: str, doc: Mapping) -> DriverEntry:
    path = f"effort_multipliers.{family}.{driver_id}"
    if not isinstance(doc, Mapping):
        raise CatalogError(f"{path} must be a table")
    multipliers = _parse_rating_row(doc, path)
    nominal = multipliers.get(Rating.NOMINAL)
    if nominal is None:
        raise CatalogError(f"{path} must define a nominal rating")
    if nominal != 1.0:
        raise CatalogError(f"{path}.nominal multiplier must equal 1.0 (got {nominal})")
    for rating, value in multipliers.items():
        if value <= 0:
            raise CatalogError(f"{path}.{rating.value} must be > 0 (got {value})")
    return DriverEntry(
        driver_id=driver_id,
        name=str(doc.get("name", driver_id)),
        group=str(doc.get("group", "other")),
        multipliers=multipliers,
    )


def _parse_scale_factor(factor_id: str, doc: Mapping) -> ScaleFactorEntry:
    path = f"scale_factors.{factor_id}"
    if not isinstance(doc, Mapping):
        raise CatalogError(f"{path} must be a table")
    values = _parse_rating_row(doc, path)
    if Rating.NOMINAL not in values:
        raise CatalogError(f"{path} must define a nominal rating")
    for rating, value in values.items():
        if value < 0:
            raise CatalogError(f"{path}.{rating.value} must be >= 0 (got {value})")
    return ScaleFactorEntry(
        factor_id=factor_id, name=str(doc.get("name", factor_id)), values=values
    )


def _parse_mode_constants(doc: Mapping, path: str) -> ModeConstants:
    if not isinstance(doc, Mapping):
        raise CatalogError(f"{path} must be a table")
    values = {k: _as_number(_require(doc, k, path), f"{path}.{k}") for k in "abcd"}
    try:
        return ModeConstants(**values)
    except ValueError as exc:
        raise CatalogError(f"{path}: {exc}") from None


def _parse_constants_table(doc: Mapping, path: str) -> ConstantsTable:
    if not isinstance(doc, Mapping):
        raise CatalogError(f"{path} must be a table")
    rows = {}
    for mode in ("organic", "semidetached", "embedded"):
        rows[mode] = _parse_mode_constants(_require(doc, mode, path), f"{path}.{mode}")
    return ConstantsTable(**rows)


def _parse_calibration(doc: Mapping) -> Calibration:
    path = "calibration"
    if not isinstance(doc, Mapping):
        raise CatalogError(f"{path} must be a table")

    cocomo1_doc = _require(doc, "cocomo1", path)
    if not isinstance(cocomo1_doc, Mapping):
        raise CatalogError(f"{path}.cocomo1 must be a table")
    cocomo1 = {
        variant: _parse_constants_table(
            _require(cocomo1_doc, variant.value, f"{path}.cocomo1"),
            f"{path}.cocomo1.{variant.value}",
        )
        for variant in Cocomo1Variant
    }
    detailed_constants = str(cocomo1_doc.get("detailed_constants", "detailed"))
    if detailed_constants not in DETAILED_CONSTANTS_CHOICES:
        raise CatalogError(
            f"{path}.cocomo1.detailed_constants must be one of "
            f"{', '.join(DETAILED_CONSTANTS_CHOICES)} (got {detailed_constants!r})"
        )

    cocomo2_doc = _require(doc, "cocomo2", path)
    if not isinstance(cocomo2_doc, Mapping):
        raise CatalogError(f"{path}.cocomo2 must be a table")
    numbers = {}
    for key in (
        "a2",
        "b0",
        "duration_coefficient",
        "duration_exponent_base",
        "duration_slope",
        "duration_baseline",
    ):
        numbers[key] = _as_number(
            _require(cocomo2_doc, key, f"{path}.cocomo2"), f"{path}.cocomo2.{key}"
        )
        if numbers[key] <= 0:
            raise CatalogError(f"{path}.cocomo2.{key} must be > 0 (got {numbers[key]})")

    return Calibration(cocomo1=cocomo1, detailed_constants=detailed_constants, **numbers)


def load_catalog(text: str) -> RatingCatalog:
    """Parse and fully validate a catalog document.

    Raises :class:`CatalogError` with the offending entry (or the parser's
    line/column position) on any problem.
    """
    try:
        doc = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise CatalogError(f"catalog parse error: {exc}") from None

    version = doc.get("catalog_version")
    if version is None:
        raise CatalogError("catalog document is missing catalog_version")
    if str(version) != SUPPORTED_CATALOG_VERSION:
        raise CatalogError(
            f"unsupported catalog_version {version!r} "
            f"(this build reads version {SUPPORTED_CATALOG_VERSION!r})"
        )

    em_doc = _require(doc, "effort_multipliers", "")
    if not isinstance(em_doc, Mapping):
        raise CatalogError("effort_multipliers must be a table")
    em_tables: dict[DriverFamily, dict[str, DriverEntry]] = {}
    for family in DriverFamily:
        family_doc = _require(em_doc, family.value, "effort_multipliers")
        if not isinstance(family_doc, Mapping) or not family_doc:
            raise CatalogError(
                f"effort_multipliers.{family.value} must be a non-empty table"
            )
        em_tables[family] = {
            driver_id: _parse_driver(family.value, driver_id, entry)
            for driver_id, entry in family_doc.items()
        }

    sf_doc = _require(doc, "scale_factors", "")
    if not isinstance(sf_doc, Mapping):
        raise CatalogError("scale_factors must be a table")
    for fid in SCALE_FACTOR_IDS:
        if fid not in sf_doc:
            raise CatalogError(f"scale_factors is missing factor {fid}")
    for fid in sf_doc:
        if fid not in SCALE_FACTOR_IDS:
            raise CatalogError(f"scale_factors contains unknown factor {fid!r}")
    sf_table = {
        fid: _parse_scale_factor(fid, sf_doc[fid]) for fid in SCALE_FACTOR_IDS
    }

    calibration = _parse_calibration(_require(doc, "calibration", ""))

    return RatingCatalog(
        catalog_version=str(version),
        em_tables=em_tables,
        sf_table=sf_table,
        calibration=calibration,
    )


# ---------------------------------------------------------------------------
# Serialization (round-trips through load_catalog)
# ---------------------------------------------------------------------------

_BARE_KEY_RE = re.compile(r"^[A-Za-z0-9_-]+$")


def _toml_key(key: str) -> str:
    return key if _BARE_KEY_RE.match(key) else '"' + key.replace('"', '\\"') + '"'


def _toml_scalar(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, str):
        return '"' + value.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return repr(value)
    raise TypeError(f"cannot serialize {type(value).__name__} to TOML")


def _emit_tables(doc: Mapping, prefix: str, lines: list[str]) -> None:
    scalars = {k: v for k, v in doc.items() if not isinstance(v, Mapping)}
    tables = {k: v for k, v in doc.items() if isinstance(v, Mapping)}
    if scalars and prefix:
        lines.append(f"[{prefix}]")
    for key, value in scalars.items():
        lines.append(f"{_toml_key(key)} = {_toml_scalar(value)}")
    if scalars:
        lines.append("")
    for key, value in tables.items():
        child = f"{prefix}.{_toml_key(key)}" if prefix else _toml_key(key)
        if not value:
            lines.append(f"[{child}]")
            lines.append("")
            continue
        _emit_tables(value, child, lines)


def catalog_to_mapping(catalog: RatingCatalog) -> dict:
    """Plain-dict form of a catalog (JSON-compatible; also feeds the emitter)."""
    doc: dict = {"catalog_version": catalog.catalog_version}
    doc["calibration"] = {
        "cocomo1": {
            "detailed_constants": catalog.calibration.detailed_constants,
            **{
                variant.value: {
                    mode: {
                        "a": row.a,
                        "b": row.b,
                        "c": row.c,
                        "d": row.d,
                    }
                    for mode in ("organic", "semidetached", "embedded")
                    for row in [getattr(table, mode)]
                }
                for variant, table in catalog.calibration.cocomo1.items()
            },
        },
        "cocomo2": {
            "a2": catalog.calibration.a2,
            "b0": catalog.calibration.b0,
            "duration_coefficient": catalog.calibration.duration_coefficient,
            "duration_exponent_base": catalog.calibration.duration_exponent_base,
            "duration_slope": catalog.calibration.duration_slope,
            "duration_baseline": catalog.calibration.duration_baseline,
        },
    }
    doc["effort_multipliers"] = {
        family.value: {
            entry.driver_id: {
                "name": entry.name,
                "group": entry.group,
                **{rating.value: m for rating, m in entry.multipliers.items()},
            }
            for entry in table.values()
        }
        for family, table in catalog.em_tables.items()
    }
    doc["scale_factors"] = {
        entry.factor_id: {
            "name": entry.name,
            **{rating.value: v for rating, v in entry.values.items()},
        }
        for entry in catalog.sf_table.values()
    }
    return doc


def serialize_catalog(catalog: RatingCatalog) -> str:
    lines: list[str] = []
    _emit_tables(catalog_to_mapping(catalog), "", lines)
    return "\n".join(lines).rstrip() + "\n"


# ---------------------------------------------------------------------------
# Built-in default and resolution
# ---------------------------------------------------------------------------


@lru_cache(maxsize=1)
def builtin_default_catalog() -> RatingCatalog:
    """The catalog shipped with the package."""
    text = resources.files(__package__).joinpath("data/default_catalog.toml").read_text(
        encoding="utf-8"
    )
    return load_catalog(text)


def load_catalog_file(path: str | Path) -> RatingCatalog:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CatalogError(f"cannot read catalog file {path}: {exc}") from None
    return load_catalog(text)


def resolve_catalog(path: str | Path | None = None) -> RatingCatalog:
    """Active catalog: explicit path, else $COCOEST_CATALOG, else built-in."""
    if path is not None:
        return load_catalog_file(path)
    env_path = os.environ.get(ENV_CATALOG)
    if env_path:
        return load_catalog_file(env_path)
    return builtin_default_catalog()
