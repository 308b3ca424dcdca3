"""Command-line interface.

Exit codes: 0 on success, 2 for user input / validation / catalog problems,
1 for internal failures. Every handled error prints exactly one line to
stderr shaped ``cocoest: <CODE>: <message>``; warnings print as
``cocoest: warning: <message>``. Data goes to stdout only, so json/csv
output stays machine-readable even when warnings fire.
"""

from __future__ import annotations

import functools
import json
import socket
import sys
import warnings
from pathlib import Path

import click

from . import __version__
from .catalog import resolve_catalog, tomllib
from .core import estimate as run_estimate
from .errors import CocoestError, EstimationWarning, ValidationError
from .output import (
    estimate_payload,
    render_csv,
    render_rows_csv,
    render_table,
    round2,
    stats_payload,
    sweep_rows,
)
from .specio import spec_from_mapping
from .stats import LikertSample
from .store import DEFAULT_STORE_FILENAME, ENV_STORE, ScenarioStore
from .surveys import AGREEMENT_LABELS, get_question

_EXIT_BY_CODE = {"VALIDATION": 2, "NOT_FOUND": 2, "CATALOG": 2, "INTERNAL": 1}


def _print_warning(message, category, filename, lineno, file=None, line=None) -> None:
    click.echo(f"cocoest: warning: {message}", err=True)


def guarded(fn):
    """Run a command body under the error and warning contract."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            with warnings.catch_warnings():
                warnings.simplefilter("default", EstimationWarning)
                warnings.showwarning = _print_warning
                return fn(*args, **kwargs)
        except CocoestError as exc:
            click.echo(f"cocoest: {exc.code}: {exc}", err=True)
            sys.exit(_EXIT_BY_CODE.get(exc.code, 1))
        except (SystemExit, KeyboardInterrupt, click.ClickException, click.Abort):
            raise
        except Exception as exc:
            click.echo(f"cocoest: INTERNAL: {exc}", err=True)
            sys.exit(1)

    return wrapper


_SPEC_OPTIONS = [
    click.option(
        "--spec",
        "spec_file",
        type=click.Path(exists=True, dir_okay=False),
        help="TOML spec file; explicit flags override its fields.",
    ),
    click.option(
        "--model",
        help="basic | intermediate | detailed | early_design | post_architecture.",
    ),
    click.option("--mode", help="organic | semidetached | embedded."),
    click.option("--kloc", type=float, help="Project size in KLOC."),
    click.option(
        "--driver",
        "driver_flags",
        multiple=True,
        metavar="ID=RATING",
        help="Cost driver rating, e.g. RELY=high. Repeatable.",
    ),
    click.option(
        "--scale-factor",
        "sf_flags",
        multiple=True,
        metavar="ID=RATING",
        help="Scale factor rating, e.g. PREC=low. Repeatable.",
    ),
    click.option(
        "--sced", type=float, help="Required schedule as a percent of nominal (75-160)."
    ),
    click.option(
        "--category",
        help="Size class override for the detailed model: "
        "small | medium | large | extra_large.",
    ),
    click.option(
        "--catalog",
        "catalog_path",
        type=click.Path(exists=True, dir_okay=False),
        help="Rating catalog TOML; overrides $COCOEST_CATALOG and the built-in.",
    ),
]


def spec_options(fn):
    for option in reversed(_SPEC_OPTIONS):
        fn = option(fn)
    return fn


format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(["table", "json", "csv"]),
    default="table",
    show_default=True,
    help="Output format; json carries full precision, table/csv round to 2 decimals.",
)

out_option = click.option(
    "--out",
    "out_dir",
    type=click.Path(file_okay=False),
    default="cocoest-report",
    show_default=True,
    help="Directory the report files are written into.",
)


def _parse_assignments(pairs: tuple[str, ...], what: str) -> dict[str, str]:
    parsed: dict[str, str] = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key or not value:
            raise ValidationError(
                f"{what} expects ID=RATING (got {pair!r})", field=what
            )
        parsed[key] = value
    return parsed


def _build_spec_doc(
    spec_file, model, mode, kloc, driver_flags, sf_flags, sced, category
) -> dict:
    doc: dict = {}
    if spec_file:
        text = Path(spec_file).read_text(encoding="utf-8")
        try:
            doc = tomllib.loads(text)
        except tomllib.TOMLDecodeError as exc:
            raise ValidationError(
                f"spec file parse error: {exc}", field="spec"
            ) from None
    if model is not None:
        doc["model"] = model
    if mode is not None:
        doc["mode"] = mode
    if kloc is not None:
        doc["size_kloc"] = kloc
    if sced is not None:
        doc["sced_percent"] = sced
    if category is not None:
        doc["size_category"] = category
    if driver_flags:
        merged = dict(doc.get("drivers") or {})
        merged.update(_parse_assignments(driver_flags, "--driver"))
        doc["drivers"] = merged
    if sf_flags:
        merged = dict(doc.get("scale_factors") or {})
        merged.update(_parse_assignments(sf_flags, "--scale-factor"))
        doc["scale_factors"] = merged
    return doc


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        click.echo(json.dumps(payload, indent=2))
    elif fmt == "csv":
        click.echo(render_csv(payload), nl=False)
    else:
        click.echo(render_table(payload))


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(__version__, prog_name="cocoest")
def main() -> None:
    """COCOMO effort, schedule, and phase estimation."""


@main.command()
@spec_options
@format_option
@guarded
def estimate(
    spec_file, model, mode, kloc, driver_flags, sf_flags, sced, category,
    catalog_path, fmt,
):
    """Estimate effort, duration, and staffing for one project."""
    catalog = resolve_catalog(catalog_path)
    spec = spec_from_mapping(
        _build_spec_doc(spec_file, model, mode, kloc, driver_flags, sf_flags, sced, category)
    )
    _emit(estimate_payload(spec, run_estimate(spec, catalog)), fmt)


@main.command()
@spec_options
@format_option
@guarded
def phases(
    spec_file, model, mode, kloc, driver_flags, sf_flags, sced, category,
    catalog_path, fmt,
):
    """Phase-wise effort and schedule breakdown (detailed model)."""
    doc = _build_spec_doc(
        spec_file, model, mode, kloc, driver_flags, sf_flags, sced, category
    )
    doc.setdefault("model", "detailed")
    if doc["model"] != "detailed":
        raise ValidationError(
            f"the phases command uses the detailed model (got {doc['model']!r})",
            field="model",
        )
    catalog = resolve_catalog(catalog_path)
    spec = spec_from_mapping(doc)
    payload = estimate_payload(spec, run_estimate(spec, catalog))
    if fmt == "csv":
        click.echo(render_rows_csv(payload["phases"]), nl=False)
    else:
        _emit(payload, fmt)


def _render_sweep_table(rows: list[dict]) -> str:
    effort_key = "pm_adjusted" if "pm_adjusted" in rows[0] else "effort_pm"
    lines = [
        f"{'Rating':<12}  {'EAF':>7}  {'Effort PM':>11}  "
        f"{'Duration mo':>11}  {'Avg staff':>9}"
    ]
    for row in rows:
        lines.append(
            f"{row['rating']:<12}  {round2(row['eaf']):>7.2f}  "
            f"{round2(row[effort_key]):>11.2f}  "
            f"{round2(row['duration_months']):>11.2f}  "
            f"{round2(row['avg_staffing']):>9.2f}"
        )
    return "\n".join(lines)


@main.command()
@click.option(
    "--vary",
    required=True,
    metavar="DRIVER",
    help="Cost driver id swept across every rating its catalog entry defines.",
)
@spec_options
@format_option
@guarded
def sweep(
    vary, spec_file, model, mode, kloc, driver_flags, sf_flags, sced, category,
    catalog_path, fmt,
):
    """Re-estimate with one driver stepped through its ratings."""
    catalog = resolve_catalog(catalog_path)
    spec = spec_from_mapping(
        _build_spec_doc(spec_file, model, mode, kloc, driver_flags, sf_flags, sced, category)
    )
    rows = sweep_rows(spec, vary, catalog)
    if fmt == "json":
        click.echo(json.dumps(rows, indent=2))
    elif fmt == "csv":
        click.echo(render_rows_csv(rows), nl=False)
    else:
        click.echo(_render_sweep_table(rows))


def _render_stats_table(doc: dict) -> str:
    labels = doc.get("labels") or [
        f"choice {i}" for i in range(1, len(doc["counts"]) + 1)
    ]
    responses = " / ".join(
        f"{count} {label}" for count, label in zip(doc["counts"], labels)
    )
    breakdown = " / ".join(
        f"{label} {round2(pct):.2f}%"
        for label, pct in zip(labels, doc["percentages"])
    )
    rows = []
    if "question" in doc:
        rows.append(("Question", doc["question"]))
        rows.append(("Prompt", doc["prompt"]))
    rows += [
        ("Responses", responses),
        ("N", str(doc["n"])),
        ("Min", f"{doc['min']:g}"),
        ("Max", f"{doc['max']:g}"),
        ("Median", f"{round2(doc['median']):.2f}"),
        ("Mean", f"{round2(doc['mean']):.2f}"),
        ("Std dev", f"{round2(doc['stddev']):.2f}"),
        ("Breakdown", breakdown),
    ]
    width = max(len(label) for label, _ in rows)
    return "\n".join(f"{label:<{width}}  {value}" for label, value in rows)


def _stats_csv_row(doc: dict) -> dict:
    row = {}
    for i, count in enumerate(doc["counts"], start=1):
        row[f"count_{i}"] = count
    row.update(
        n=doc["n"], min=doc["min"], max=doc["max"], median=doc["median"],
        mean=doc["mean"], stddev=doc["stddev"],
    )
    for i, pct in enumerate(doc["percentages"], start=1):
        row[f"pct_{i}"] = pct
    return row


@main.command()
@click.option(
    "--counts",
    help="Comma-separated response counts, strongest agreement first (e.g. 6,10,4).",
)
@click.option(
    "--question",
    "question_slug",
    help="Slug of a bundled survey question, instead of --counts.",
)
@click.option(
    "--labels",
    help="Comma-separated choice labels; three-count samples default to the "
    "agreement scale.",
)
@format_option
@guarded
def stats(counts, question_slug, labels, fmt):
    """Descriptive statistics for a Likert-style response sample."""
    if (counts is None) == (question_slug is None):
        raise ValidationError(
            "provide exactly one of --counts or --question", field="counts"
        )
    doc: dict = {}
    if question_slug is not None:
        question = get_question(question_slug)
        sample = question.sample
        doc["question"] = question.slug
        doc["prompt"] = question.prompt
    else:
        try:
            parsed = tuple(int(part.strip()) for part in counts.split(","))
        except ValueError:
            raise ValidationError(
                f"counts must be comma-separated integers (got {counts!r})",
                field="counts",
            ) from None
        label_tuple = None
        if labels is not None:
            label_tuple = tuple(part.strip() for part in labels.split(","))
        elif len(parsed) == 3:
            label_tuple = AGREEMENT_LABELS
        sample = LikertSample(parsed, label_tuple)
    doc.update(stats_payload(sample))
    if fmt == "json":
        click.echo(json.dumps(doc, indent=2))
    elif fmt == "csv":
        click.echo(render_rows_csv([_stats_csv_row(doc)]), nl=False)
    else:
        click.echo(_render_stats_table(doc))


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True, help="Bind address.")
@click.option("--port", type=int, default=8000, show_default=True, help="Bind port.")
@click.option(
    "--store",
    "store_path",
    type=click.Path(dir_okay=False),
    help=f"Scenario store file [default: ${ENV_STORE} or ./{DEFAULT_STORE_FILENAME}].",
)
@click.option(
    "--catalog",
    "catalog_path",
    type=click.Path(exists=True, dir_okay=False),
    help="Rating catalog TOML; overrides $COCOEST_CATALOG and the built-in.",
)
@click.option(
    "--allow-origin",
    "allow_origins",
    multiple=True,
    metavar="ORIGIN",
    help="Extra CORS origin to allow (localhost is always allowed). Repeatable.",
)
@guarded
def serve(host, port, store_path, catalog_path, allow_origins):
    """Run the HTTP estimation service."""
    catalog = resolve_catalog(catalog_path)  # fail fast, before binding
    import uvicorn

    from .service import create_app

    app = create_app(
        catalog=catalog,
        store=ScenarioStore(store_path),
        allow_origins=allow_origins or None,
    )
    sock = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    sock.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
    try:
        sock.bind((host, port))
    except OSError as exc:
        sock.close()
        raise CocoestError(f"cannot bind {host}:{port}: {exc}") from None
    click.echo(f"cocoest service on http://{host}:{port}", err=True)
    server = uvicorn.Server(uvicorn.Config(app, host=host, port=port, log_level="info"))
    server.run(sockets=[sock])


@main.group()
def report() -> None:
    """Write CSV data files with rendered charts to a directory."""


@report.command("survey")
@out_option
@guarded
def report_survey(out_dir):
    """Bundled survey statistics with response and mean charts."""
    from .report import write_survey_report

    for path in write_survey_report(out_dir):
        click.echo(str(path))


@report.command("estimate")
@spec_options
@out_option
@guarded
def report_estimate(
    spec_file, model, mode, kloc, driver_flags, sf_flags, sced, category,
    catalog_path, out_dir,
):
    """One estimate with a size-sensitivity chart (and phase charts)."""
    from .report import write_estimate_report

    catalog = resolve_catalog(catalog_path)
    spec = spec_from_mapping(
        _build_spec_doc(spec_file, model, mode, kloc, driver_flags, sf_flags, sced, category)
    )
    for path in write_estimate_report(out_dir, spec, catalog):
        click.echo(str(path))


@report.command("sweep")
@click.option(
    "--vary", required=True, metavar="DRIVER", help="Cost driver id to sweep."
)
@spec_options
@out_option
@guarded
def report_sweep(
    vary, spec_file, model, mode, kloc, driver_flags, sf_flags, sced, category,
    catalog_path, out_dir,
):
    """Driver sensitivity sweep with an effort/duration chart."""
    from .report import write_sweep_report

    catalog = resolve_catalog(catalog_path)
    spec = spec_from_mapping(
        _build_spec_doc(spec_file, model, mode, kloc, driver_flags, sf_flags, sced, category)
    )
    for path in write_sweep_report(out_dir, spec, vary, catalog):
        click.echo(str(path))


if __name__ == "__main__":
    main()
