"""Descriptive statistics over Likert-style response counts.

Samples are stored as per-choice counts rather than raw response lists;
choice values are the integers 1..k. The standard deviation is the
population form (divide by n): that is the convention the summaries this
module reproduces were computed with, verified case by case. The median of
an even-sized sample is the mean of the two middle elements.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ValidationError


@dataclass(frozen=True)
class LikertSample:
    """Response counts per choice; counts[i] is the tally for choice i+1."""

    counts: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if len(self.counts) < 2:
            raise ValidationError(
                "counts must cover at least two choices", field="counts"
            )
        for value in self.counts:
            if isinstance(value, bool) or not isinstance(value, int) or value < 0:
                raise ValidationError(
                    f"counts must be non-negative integers (got {value!r})",
                    field="counts",
                )
        if sum(self.counts) == 0:
            raise ValidationError(
                "sample is empty: at least one count must be nonzero", field="counts"
            )
        if self.labels is not None and len(self.labels) != len(self.counts):
            raise ValidationError(
                f"labels must match counts in length ({len(self.labels)} labels "
                f"for {len(self.counts)} choices)",
                field="labels",
            )

    @property
    def n(self) -> int:
        return sum(self.counts)


@dataclass(frozen=True)
class DescriptiveStats:
    min: float
    max: float
    median: float
    mean: float
    stddev: float
    n: int


def describe(sample: LikertSample) -> DescriptiveStats:
    """Min/max/median/mean/population-stddev of the expanded responses."""
    n = sample.n
    choices = range(1, len(sample.counts) + 1)
    rated = [c for c, count in zip(choices, sample.counts) if count > 0]
    mean = sum(c * count for c, count in zip(choices, sample.counts)) / n
    variance = (
        sum(count * (c - mean) ** 2 for c, count in zip(choices, sample.counts)) / n
    )
    return DescriptiveStats(
        min=float(rated[0]),
        max=float(rated[-1]),
        median=_median_of_counts(sample.counts, n),
        mean=mean,
        stddev=math.sqrt(variance),
        n=n,
    )


def _median_of_counts(counts: tuple[int, ...], n: int) -> float:
    # Middle positions of the expanded sorted responses, 0-based.
    lo_pos, hi_pos = (n - 1) // 2, n // 2
    lo = hi = None
    cumulative = 0
    for choice, count in enumerate(counts, start=1):
        cumulative += count
        if lo is None and cumulative > lo_pos:
            lo = choice
        if hi is None and cumulative > hi_pos:
            hi = choice
            break
    return (lo + hi) / 2


def percent_breakdown(sample: LikertSample) -> tuple[float, ...]:
    """Per-choice share of responses, in percent, at full precision."""
    n = sample.n
    return tuple(count / n * 100.0 for count in sample.counts)
