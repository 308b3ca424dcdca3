"""File reports: delimited data with rendered figures alongside.

Each writer fills a directory with CSV files and the matching PNG charts
and returns the paths it wrote. Figures render through the Agg backend,
so reports work on headless machines.
"""

from __future__ import annotations

from dataclasses import replace
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .catalog import RatingCatalog
from .core import estimate
from .model import ProjectSpec
from .output import (
    estimate_payload,
    render_csv,
    render_rows_csv,
    round2,
    stats_payload,
    sweep_rows,
)
from .surveys import BUNDLED_SURVEY, SurveyQuestion

_PIE_COLORS = ("#4c72b0", "#55a868", "#c44e52", "#8172b2", "#ccb974")


def _prepare(out_dir: str | Path) -> Path:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _save(fig, path: Path) -> None:
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_survey_report(
    out_dir: str | Path, questions: Sequence[SurveyQuestion] | None = None
) -> list[Path]:
    """Survey statistics CSV plus response pies and a means chart."""
    out = _prepare(out_dir)
    questions = tuple(questions) if questions is not None else BUNDLED_SURVEY

    rows = []
    for question in questions:
        doc = stats_payload(question.sample)
        row = {
            "question": question.slug,
            "prompt": question.prompt,
            "n": doc["n"],
            "counts": "/".join(str(c) for c in doc["counts"]),
            "min": doc["min"],
            "max": doc["max"],
            "median": doc["median"],
            "mean": doc["mean"],
            "stddev": doc["stddev"],
        }
        for i, pct in enumerate(doc["percentages"], start=1):
            row[f"pct_choice_{i}"] = pct
        rows.append(row)
    csv_path = out / "survey_stats.csv"
    csv_path.write_text(render_rows_csv(rows), encoding="utf-8")

    cols = 2
    grid_rows = (len(questions) + cols - 1) // cols
    fig, axes = plt.subplots(grid_rows, cols, figsize=(9, 3.2 * grid_rows))
    axes = [ax for row in (axes if grid_rows > 1 else [axes]) for ax in row]
    for ax, question in zip(axes, questions):
        labels = question.sample.labels or [
            f"choice {i}" for i in range(1, len(question.sample.counts) + 1)
        ]
        shown = [
            (count, label)
            for count, label in zip(question.sample.counts, labels)
            if count > 0
        ]
        ax.pie(
            [count for count, _ in shown],
            labels=[label for _, label in shown],
            autopct="%1.1f%%",
            colors=_PIE_COLORS[: len(shown)],
            textprops={"fontsize": 8},
        )
        ax.set_title(question.slug, fontsize=9)
    for ax in axes[len(questions) :]:
        ax.axis("off")
    fig.tight_layout()
    pies_path = out / "survey_responses.png"
    _save(fig, pies_path)

    fig, ax = plt.subplots(figsize=(8, 0.5 * len(questions) + 1.5))
    slugs = [q.slug for q in questions]
    means = [stats_payload(q.sample)["mean"] for q in questions]
    stddevs = [stats_payload(q.sample)["stddev"] for q in questions]
    positions = range(len(questions))
    ax.barh(positions, means, xerr=stddevs, color="#4c72b0", height=0.6)
    ax.set_yticks(list(positions))
    ax.set_yticklabels(slugs, fontsize=8)
    ax.invert_yaxis()
    ax.set_xlabel("mean response (1 = strongest agreement)")
    ax.set_xlim(0, max(len(q.sample.counts) for q in questions))
    fig.tight_layout()
    means_path = out / "survey_means.png"
    _save(fig, means_path)

    return [csv_path, pies_path, means_path]


def _effort_of(payload: dict) -> float:
    return payload.get("pm_adjusted", payload.get("effort_pm"))


def write_estimate_report(
    out_dir: str | Path, spec: ProjectSpec, catalog: RatingCatalog
) -> list[Path]:
    """One estimate as CSV, a size-sensitivity chart, and phase charts."""
    out = _prepare(out_dir)
    payload = estimate_payload(spec, estimate(spec, catalog))

    csv_path = out / "estimate.csv"
    csv_path.write_text(render_csv(payload), encoding="utf-8")
    written = [csv_path]

    points = 25
    sizes = [spec.size_kloc * (0.5 + 1.5 * i / (points - 1)) for i in range(points)]
    efforts = []
    durations = []
    for size in sizes:
        varied = replace(spec, size_kloc=size)
        p = estimate_payload(varied, estimate(varied, catalog))
        efforts.append(_effort_of(p))
        durations.append(p["duration_months"])
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(sizes, efforts, color="#4c72b0", label="effort (PM)")
    ax.set_xlabel("size (KLOC)")
    ax.set_ylabel("effort (person-months)", color="#4c72b0")
    twin = ax.twinx()
    twin.plot(sizes, durations, color="#c44e52", label="duration (months)")
    twin.set_ylabel("duration (months)", color="#c44e52")
    ax.axvline(spec.size_kloc, color="gray", linestyle=":", linewidth=1)
    ax.set_title(
        f"{payload['model']} sensitivity around {spec.size_kloc:g} KLOC "
        f"({round2(_effort_of(payload)):.2f} PM)"
    )
    fig.tight_layout()
    curve_path = out / "size_sensitivity.png"
    _save(fig, curve_path)
    written.append(curve_path)

    phases = payload.get("phases")
    if phases:
        phases_csv = out / "phases.csv"
        phases_csv.write_text(render_rows_csv(phases), encoding="utf-8")
        fig, (left, right) = plt.subplots(1, 2, figsize=(10, 4))
        names = [p["phase"] for p in phases]
        left.bar(names, [p["effort_pm"] for p in phases], color="#4c72b0")
        left.set_ylabel("effort (person-months)")
        left.tick_params(axis="x", rotation=30, labelsize=8)
        right.bar(names, [p["schedule_months"] for p in phases], color="#55a868")
        right.set_ylabel("schedule (months)")
        right.tick_params(axis="x", rotation=30, labelsize=8)
        fig.suptitle(f"phase distribution ({payload['size_category']} project)")
        fig.tight_layout()
        phases_png = out / "phases.png"
        _save(fig, phases_png)
        written.extend([phases_csv, phases_png])

    return written


def write_sweep_report(
    out_dir: str | Path, spec: ProjectSpec, driver_id: str, catalog: RatingCatalog
) -> list[Path]:
    """Driver sensitivity sweep as CSV plus an effort/duration chart."""
    out = _prepare(out_dir)
    rows = sweep_rows(spec, driver_id, catalog)

    csv_path = out / "sweep.csv"
    csv_path.write_text(render_rows_csv(rows), encoding="utf-8")

    ratings = [row["rating"] for row in rows]
    efforts = [_effort_of(row) for row in rows]
    durations = [row["duration_months"] for row in rows]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.bar(ratings, efforts, color="#4c72b0")
    ax.set_ylabel("effort (person-months)", color="#4c72b0")
    ax.set_xlabel(f"{driver_id} rating")
    twin = ax.twinx()
    twin.plot(ratings, durations, color="#c44e52", marker="o")
    twin.set_ylabel("duration (months)", color="#c44e52")
    ax.set_title(f"sensitivity to {driver_id}")
    fig.tight_layout()
    png_path = out / "sweep.png"
    _save(fig, png_path)

    return [csv_path, png_path]
