"""Result payloads and text renderers.

The JSON payload built here is the one exchange format: the CLI prints it,
the HTTP service returns it, and both are dict-equal to what the library
computes, at full float precision.  Rounding to two decimals happens only
in the human-facing table and CSV renderers.
"""

from __future__ import annotations

import csv
import io
from dataclasses import replace
from decimal import ROUND_HALF_UP, Decimal
from typing import Any

from .catalog import RatingCatalog
from .core import estimate
from .errors import RatingLookupError, ValidationError
from .model import (
    RATING_ORDER,
    BasicEstimate,
    Cocomo2Estimate,
    CostDriverSet,
    DetailedEstimate,
    ProjectSpec,
    family_for_variant,
)
from .stats import LikertSample, describe, percent_breakdown


def round2(value: float) -> float:
    """Round to 2 decimals, ties away from zero (so 1.005 -> 1.01)."""
    return float(Decimal(repr(value)).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def estimate_payload(
    spec: ProjectSpec, result: BasicEstimate | DetailedEstimate | Cocomo2Estimate
) -> dict[str, Any]:
    """Serializable result document for one estimate."""
    if isinstance(result, Cocomo2Estimate):
        return {
            "model": str(spec.variant),
            "size_kloc": spec.size_kloc,
            "sced_percent": spec.sced_percent,
            "scale_exponent_b": result.scale_exponent_b,
            "pm_nominal": result.pm_nominal,
            "eaf": result.eaf,
            "pm_adjusted": result.pm_adjusted,
            "duration_months": result.duration_months,
            "avg_staffing": result.avg_staffing,
        }
    if isinstance(result, DetailedEstimate):
        doc = _basic_payload(spec, result.base)
        doc["size_category"] = str(result.size_category)
        doc["phases"] = [
            {
                "phase": str(p.phase),
                "effort_fraction": p.effort_fraction,
                "schedule_fraction": p.schedule_fraction,
                "effort_pm": p.effort_pm,
                "schedule_months": p.schedule_months,
            }
            for p in result.phases
        ]
        return doc
    return _basic_payload(spec, result)


def _basic_payload(spec: ProjectSpec, result: BasicEstimate) -> dict[str, Any]:
    return {
        "model": str(spec.variant),
        "mode": str(spec.mode),
        "size_kloc": spec.size_kloc,
        "effort_pm": result.effort_pm,
        "duration_months": result.duration_months,
        "avg_staffing": result.avg_staffing,
        "productivity_kloc_per_pm": result.productivity_kloc_per_pm,
        "eaf": result.eaf,
    }


_SUMMARY_LABELS = {
    "model": "Model",
    "mode": "Mode",
    "size_kloc": "Size (KLOC)",
    "sced_percent": "Schedule (% of nominal)",
    "scale_exponent_b": "Scale exponent B",
    "pm_nominal": "Nominal effort (PM)",
    "eaf": "Effort adjustment factor",
    "pm_adjusted": "Adjusted effort (PM)",
    "effort_pm": "Effort (person-months)",
    "duration_months": "Duration (months)",
    "avg_staffing": "Average staffing",
    "productivity_kloc_per_pm": "Productivity (KLOC/PM)",
    "size_category": "Size category",
}


def _display(value: Any) -> str:
    if isinstance(value, float):
        return f"{round2(value):.2f}"
    return str(value)


def render_table(payload: dict[str, Any]) -> str:
    """Aligned label/value lines; numbers shown to two decimals."""
    rows = [
        (_SUMMARY_LABELS.get(key, key), _display(value))
        for key, value in payload.items()
        if key != "phases"
    ]
    width = max(len(label) for label, _ in rows)
    lines = [f"{label:<{width}}  {value}" for label, value in rows]
    phases = payload.get("phases")
    if phases:
        lines.append("")
        lines.append(
            f"{'Phase':<22}  {'Effort %':>9}  {'Effort PM':>10}  "
            f"{'Sched %':>8}  {'Sched mo':>9}"
        )
        for p in phases:
            lines.append(
                f"{p['phase']:<22}  {100 * p['effort_fraction']:>8.1f}%  "
                f"{round2(p['effort_pm']):>10.2f}  "
                f"{100 * p['schedule_fraction']:>7.1f}%  "
                f"{round2(p['schedule_months']):>9.2f}"
            )
    return "\n".join(lines)


def render_csv(payload: dict[str, Any]) -> str:
    """One header row and one value row; detailed results get phase rows too."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    scalar_keys = [k for k in payload if k != "phases"]
    writer.writerow(scalar_keys)
    writer.writerow([_display(payload[k]) for k in scalar_keys])
    phases = payload.get("phases")
    if phases:
        writer.writerow([])
        phase_keys = list(phases[0])
        writer.writerow(phase_keys)
        for p in phases:
            writer.writerow([_display(p[k]) for k in phase_keys])
    return buf.getvalue()


def render_rows_csv(rows: list[dict[str, Any]]) -> str:
    """CSV for a list of homogeneous row dicts (sweeps, survey stats)."""
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    keys = list(rows[0])
    writer.writerow(keys)
    for row in rows:
        writer.writerow([_display(row[k]) for k in keys])
    return buf.getvalue()


def sweep_rows(
    spec: ProjectSpec, driver_id: str, catalog: RatingCatalog
) -> list[dict[str, Any]]:
    """One estimate payload per rating the catalog defines for one driver.

    Rows run low to high with every other input held fixed, so a row's
    numbers equal a plain estimate of the same spec.  Detailed-model rows
    drop the phase list to stay flat.
    """
    family = family_for_variant(spec.variant)
    if family is None:
        raise ValidationError(
            f"model {spec.variant} does not take cost drivers", field="model"
        )
    entry = catalog.em_tables[family].get(driver_id)
    if entry is None:
        raise RatingLookupError(
            f"unknown cost driver {driver_id!r} for family {family.value}",
            field=driver_id,
        )
    base_drivers = spec.drivers if spec.drivers is not None else CostDriverSet(family)
    rows = []
    for rating in RATING_ORDER:
        if rating not in entry.multipliers:
            continue
        varied = replace(spec, drivers=base_drivers.with_rating(driver_id, rating))
        payload = estimate_payload(varied, estimate(varied, catalog))
        payload.pop("phases", None)
        rows.append({"driver": driver_id, "rating": str(rating), **payload})
    return rows


def stats_payload(sample: LikertSample) -> dict[str, Any]:
    """Serializable statistics document for one response sample."""
    stats = describe(sample)
    doc: dict[str, Any] = {
        "counts": list(sample.counts),
        "n": stats.n,
        "min": stats.min,
        "max": stats.max,
        "median": stats.median,
        "mean": stats.mean,
        "stddev": stats.stddev,
        "percentages": list(percent_breakdown(sample)),
    }
    if sample.labels is not None:
        doc["labels"] = list(sample.labels)
    return doc
