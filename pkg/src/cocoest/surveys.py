"""Bundled example survey: user-acceptance responses for an estimation app.

Ten questions on a 3-point agreement scale, collected from a small user
study of a cost-estimation tool. Counts were reconstructed from the study's
published per-question response percentages. The dataset feeds the ``stats``
CLI examples and the survey report.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotFoundError
from .stats import LikertSample

AGREEMENT_LABELS = ("strongly agree", "agree", "not agree")
QUALITY_LABELS = ("high quality", "good quality", "low quality")


@dataclass(frozen=True)
class SurveyQuestion:
    slug: str
    prompt: str
    sample: LikertSample


def _question(slug: str, prompt: str, counts: tuple[int, ...], labels=AGREEMENT_LABELS):
    return SurveyQuestion(slug=slug, prompt=prompt, sample=LikertSample(counts, labels))


BUNDLED_SURVEY: tuple[SurveyQuestion, ...] = (
    _question(
        "accurate_cost_estimation",
        "The app estimates software cost accurately",
        (6, 10, 4),
    ),
    _question(
        "project_effort",
        "The app supports calculating project effort",
        (6, 12, 2),
    ),
    _question(
        "prevent_loss",
        "The app helps prevent significant loss",
        (5, 11, 4),
    ),
    _question(
        "approximate_solutions",
        "The app is useful for finding approximate solutions",
        (4, 11, 4),
    ),
    _question(
        "friendly_interface",
        "The app has a friendly user interface",
        (7, 12, 1),
    ),
    _question(
        "effort_duration",
        "The app reports appropriate effort duration",
        (4, 14, 2),
    ),
    _question(
        "model_understanding",
        "The app improves understanding of the cost model",
        (4, 13, 3),
    ),
    _question(
        "development_modes",
        "The app is helpful across all development modes",
        (4, 10, 3),
    ),
    _question(
        "model_generations",
        "The app covers both model generations well",
        (11, 6, 3),
    ),
    _question(
        "rate_application",
        "Rate the overall quality of the application",
        (4, 11, 4),
        labels=QUALITY_LABELS,
    ),
)


def get_question(slug: str) -> SurveyQuestion:
    for question in BUNDLED_SURVEY:
        if question.slug == slug:
            return question
    known = ", ".join(q.slug for q in BUNDLED_SURVEY)
    raise NotFoundError(f"no bundled survey question {slug!r}; available: {known}")
