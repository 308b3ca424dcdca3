import csv

import pytest

from cocoest import spec_from_mapping
from cocoest.report import (
    write_estimate_report,
    write_survey_report,
    write_sweep_report,
)

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


def read_csv(path):
    with path.open(newline="", encoding="utf-8") as handle:
        return list(csv.reader(handle))


def assert_png(path):
    data = path.read_bytes()
    assert data[:8] == PNG_MAGIC
    assert len(data) > 1000


def test_survey_report_files(tmp_path):
    out = tmp_path / "survey"
    paths = write_survey_report(out)
    assert out.is_dir()
    names = {p.name for p in paths}
    assert names == {"survey_stats.csv", "survey_responses.png", "survey_means.png"}
    for path in paths:
        assert path.exists()

    rows = read_csv(out / "survey_stats.csv")
    header, body = rows[0], rows[1:]
    assert header[0] == "question"
    assert "mean" in header and "stddev" in header
    assert len(body) == 10
    by_slug = {row[0]: row for row in body}
    accurate = by_slug["accurate_cost_estimation"]
    assert accurate[header.index("mean")] == "1.90"
    assert accurate[header.index("stddev")] == "0.70"

    assert_png(out / "survey_responses.png")
    assert_png(out / "survey_means.png")


def test_estimate_report_basic(tmp_path, catalog):
    spec = spec_from_mapping({"model": "basic", "mode": "organic", "size_kloc": 32.0})
    out = tmp_path / "basic"
    paths = write_estimate_report(out, spec, catalog)
    names = {p.name for p in paths}
    assert names == {"estimate.csv", "size_sensitivity.png"}

    rows = read_csv(out / "estimate.csv")
    header, values = rows[0], rows[1]
    assert values[header.index("effort_pm")] == "91.33"
    assert_png(out / "size_sensitivity.png")


@pytest.mark.filterwarnings("ignore::cocoest.NominalDefaultWarning")
def test_estimate_report_detailed_adds_phase_files(tmp_path, catalog):
    spec = spec_from_mapping(
        {"model": "detailed", "mode": "embedded", "size_kloc": 100.0}
    )
    out = tmp_path / "detailed"
    paths = write_estimate_report(out, spec, catalog)
    names = {p.name for p in paths}
    assert names == {
        "estimate.csv",
        "size_sensitivity.png",
        "phases.csv",
        "phases.png",
    }
    phase_rows = read_csv(out / "phases.csv")
    assert len(phase_rows) == 6
    assert [r[0] for r in phase_rows[1:]] == [
        "plans_requirements",
        "system_design",
        "detailed_design",
        "module_code_test",
        "integration_test",
    ]
    assert_png(out / "phases.png")


@pytest.mark.filterwarnings("ignore::cocoest.NominalDefaultWarning")
def test_sweep_report(tmp_path, catalog):
    spec = spec_from_mapping(
        {"model": "intermediate", "mode": "organic", "size_kloc": 10.0}
    )
    out = tmp_path / "sweep"
    paths = write_sweep_report(out, spec, "CPLX", catalog)
    names = {p.name for p in paths}
    assert names == {"sweep.csv", "sweep.png"}

    rows = read_csv(out / "sweep.csv")
    header, body = rows[0], rows[1:]
    assert header[:2] == ["driver", "rating"]
    assert len(body) == 6
    assert [r[1] for r in body] == [
        "very_low", "low", "nominal", "high", "very_high", "extra_high",
    ]
    assert_png(out / "sweep.png")


def test_report_dirs_created_recursively(tmp_path, catalog):
    spec = spec_from_mapping({"model": "basic", "mode": "organic", "size_kloc": 4.0})
    nested = tmp_path / "a" / "b" / "c"
    write_estimate_report(nested, spec, catalog)
    assert (nested / "estimate.csv").exists()


def test_sweep_report_unknown_driver_raises(tmp_path, catalog):
    from cocoest.errors import RatingLookupError

    spec = spec_from_mapping(
        {"model": "intermediate", "mode": "organic", "size_kloc": 10.0}
    )
    with pytest.raises(RatingLookupError):
        write_sweep_report(tmp_path / "x", spec, "NOPE", catalog)
