"""Statistics fixtures.

Each bundled sample was reconstructed from the published per-question pie
percentages; the expected summary numbers below are the published ones.
Two published figures are internally inconsistent with their own counts and
are asserted as documented discrepancies rather than forced to match:

* the "prevent loss" summary prints mean 1.80 / stddev 0.60, but its own
  counts (5, 11, 4) give 1.95 / 0.67;
* the "development modes" pie prints 25.53% for the first slice, but
  4 of 17 responses is 23.53%.
"""

import pytest

import oracle
from cocoest import (
    BUNDLED_SURVEY,
    LikertSample,
    NotFoundError,
    ValidationError,
    describe,
    get_question,
    percent_breakdown,
    round2,
)


def as_rounded(sample):
    stats = describe(sample)
    return round2(stats.mean), round2(stats.stddev), round2(stats.median)


# slug -> (counts, published mean, published stddev, published median)
PUBLISHED_SUMMARIES = {
    "accurate_cost_estimation": ((6, 10, 4), 1.90, 0.70, 2.0),
    "project_effort": ((6, 12, 2), 1.80, 0.60, 2.0),
    "approximate_solutions": ((4, 11, 4), 2.00, 0.65, 2.0),
    "friendly_interface": ((7, 12, 1), 1.70, 0.56, 2.0),
    "effort_duration": ((4, 14, 2), 1.90, 0.54, 2.0),
    "model_understanding": ((4, 13, 3), 1.95, 0.59, 2.0),
    "development_modes": ((4, 10, 3), 1.94, 0.64, 2.0),
    "model_generations": ((11, 6, 3), 1.60, 0.73, 1.0),
    "rate_application": ((4, 11, 4), 2.00, 0.65, 2.0),
}


@pytest.mark.parametrize("slug", sorted(PUBLISHED_SUMMARIES))
def test_bundled_samples_reproduce_published_summaries(slug):
    counts, mean, stddev, median = PUBLISHED_SUMMARIES[slug]
    question = get_question(slug)
    assert question.sample.counts == counts
    got_mean, got_stddev, got_median = as_rounded(question.sample)
    assert got_mean == pytest.approx(mean, abs=0.005)
    assert got_stddev == pytest.approx(stddev, abs=0.005)
    assert got_median == pytest.approx(median, abs=0.005)


@pytest.mark.parametrize("slug", [q.slug for q in BUNDLED_SURVEY])
def test_bundled_samples_match_bruteforce_oracle(slug):
    sample = get_question(slug).sample
    expected = oracle.likert(sample.counts)
    stats = describe(sample)
    assert stats.n == expected["n"]
    assert stats.min == expected["min"]
    assert stats.max == expected["max"]
    assert stats.median == expected["median"]
    assert stats.mean == pytest.approx(expected["mean"], rel=1e-12)
    assert stats.stddev == pytest.approx(expected["stddev"], rel=1e-12)
    assert list(percent_breakdown(sample)) == pytest.approx(expected["percentages"])


def test_percentages_examples():
    assert [round2(p) for p in percent_breakdown(LikertSample((6, 10, 4)))] == [
        30.0,
        50.0,
        20.0,
    ]
    assert [round2(p) for p in percent_breakdown(LikertSample((4, 11, 4)))] == [
        21.05,
        57.89,
        21.05,
    ]


def test_prevent_loss_discrepancy_fixture():
    # The published summary for this question (mean 1.80, stddev 0.60) does
    # not follow from its own counts; the derived values do.
    sample = get_question("prevent_loss").sample
    assert sample.counts == (5, 11, 4)
    stats = describe(sample)
    assert round2(stats.mean) == 1.95
    assert round2(stats.stddev) == 0.67
    assert round2(stats.mean) != 1.80
    assert round2(stats.stddev) != 0.60
    assert stats.mean == pytest.approx(1.95, abs=1e-12)
    assert stats.stddev == pytest.approx(0.6689544080129826, rel=1e-9)


def test_development_modes_percentage_discrepancy_fixture():
    # 4/17 = 23.53%, although the published pie labels it 25.53%.
    sample = get_question("development_modes").sample
    assert sample.n == 17
    pct = [round2(p) for p in percent_breakdown(sample)]
    assert pct == [23.53, 58.82, 17.65]
    assert pct[0] != 25.53


def test_median_even_sample_is_midpoint_of_middle_two():
    # 10 responses: five 1s and five 3s -> middle two are 1 and 3.
    assert describe(LikertSample((5, 0, 5))).median == 2.0
    assert describe(LikertSample((5, 5, 0))).median == 1.5


def test_median_odd_sample():
    assert describe(LikertSample((1, 1, 1))).median == 2.0
    assert describe(LikertSample((3, 1, 1))).median == 1.0


def test_min_max_skip_zero_count_choices():
    stats = describe(LikertSample((0, 7, 0, 2)))
    assert stats.min == 2.0
    assert stats.max == 4.0


def test_population_stddev_convention():
    # (6,10,4): variance = (6*(1-1.9)^2 + 10*(2-1.9)^2 + 4*(3-1.9)^2)/20 = 0.49
    stats = describe(LikertSample((6, 10, 4)))
    assert stats.stddev == pytest.approx(0.7, abs=1e-12)


def test_rejects_empty_sample():
    with pytest.raises(ValidationError, match="empty"):
        LikertSample((0, 0, 0))


def test_rejects_negative_and_bool_counts():
    with pytest.raises(ValidationError):
        LikertSample((3, -1, 2))
    with pytest.raises(ValidationError):
        LikertSample((3, True, 2))


def test_rejects_single_choice():
    with pytest.raises(ValidationError, match="two"):
        LikertSample((5,))


def test_rejects_label_length_mismatch():
    with pytest.raises(ValidationError, match="labels"):
        LikertSample((1, 2, 3), labels=("a", "b"))


def test_bundled_survey_shape():
    assert len(BUNDLED_SURVEY) == 10
    slugs = [q.slug for q in BUNDLED_SURVEY]
    assert len(set(slugs)) == 10
    for question in BUNDLED_SURVEY:
        assert len(question.sample.counts) == 3
        assert question.sample.labels is not None


def test_get_question_unknown_slug():
    with pytest.raises(NotFoundError, match="no bundled survey question"):
        get_question("nonexistent")
