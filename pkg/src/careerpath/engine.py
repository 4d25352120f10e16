"""Two-pass suggestion engine: simple-ratio match with partial-ratio fallback.

Every record's work position is scored against the normalized goal with the
simple ratio; records above the simple threshold contribute their remaining
education stages. Only when that first pass yields nothing does a second pass
rescore every record with the partial ratio at its own (higher) threshold.
Results are deduplicated by rendered path and ranked by descending score.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .dataset import CareerRecord, Dataset, Education, EducationStage, stages_after
from .matching import normalize, partial_ratio, simple_ratio

__all__ = [
    "DEFAULT_PARTIAL_THRESHOLD",
    "DEFAULT_SIMPLE_THRESHOLD",
    "EngineConfig",
    "MatchKind",
    "Query",
    "QueryError",
    "Suggestion",
    "dedup_and_rank",
    "render_path",
    "suggest",
]

DEFAULT_SIMPLE_THRESHOLD = 60.0
DEFAULT_PARTIAL_THRESHOLD = 80.0


class QueryError(ValueError):
    """Invalid query input, with a stable machine-readable ``code``."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


class MatchKind(Enum):
    """Which matching pass produced a suggestion."""

    SIMPLE = "simple"
    PARTIAL = "partial"


@dataclass(frozen=True)
class Query:
    """A career goal and the asker's current education level."""

    goal: str
    education: Education


@dataclass(frozen=True)
class EngineConfig:
    """Match thresholds (strict greater-than) and an optional result limit."""

    simple_threshold: float = DEFAULT_SIMPLE_THRESHOLD
    partial_threshold: float = DEFAULT_PARTIAL_THRESHOLD
    limit: int | None = None

    def __post_init__(self) -> None:
        for name in ("simple_threshold", "partial_threshold"):
            value = getattr(self, name)
            if not 0.0 <= value <= 100.0:
                raise ValueError(f"{name} must be between 0 and 100, got {value}")
        if self.limit is not None and self.limit < 1:
            raise ValueError(f"limit must be positive, got {self.limit}")


@dataclass(frozen=True)
class Suggestion:
    """One suggested education path with its match evidence."""

    segments: tuple[EducationStage, ...]
    rendered: str
    score: float
    match_kind: MatchKind
    matched_position: str
    source_record: str


def render_path(segments: Sequence[EducationStage]) -> str:
    """Render stages as ``Level, Stream`` segments joined by `` > ``."""
    if not segments:
        raise ValueError("cannot render an empty path")
    return " > ".join(f"{stage.level.value}, {stage.stream}" for stage in segments)


def dedup_and_rank(raw: Sequence[Suggestion], limit: int | None = None) -> list[Suggestion]:
    """Merge duplicate rendered paths (keeping the max score) and sort.

    Sorting is by descending score; ties keep the input (dataset) order of the
    suggestion that supplied the winning score. Equal scores for the same path
    keep the earliest suggestion.
    """
    kept: dict[str, tuple[int, Suggestion]] = {}
    for index, suggestion in enumerate(raw):
        current = kept.get(suggestion.rendered)
        if current is None or suggestion.score > current[1].score:
            kept[suggestion.rendered] = (index, suggestion)
    ranked = sorted(kept.values(), key=lambda pair: (-pair[1].score, pair[0]))
    items = [suggestion for _, suggestion in ranked]
    return items if limit is None else items[:limit]


def suggest(
    query: Query,
    dataset: Dataset,
    config: EngineConfig = EngineConfig(),
) -> list[Suggestion]:
    """Suggest ranked education paths toward the queried career goal.

    Raises QueryError when the education value is unknown or the goal is
    empty after normalization.
    """
    if not isinstance(query.education, Education):
        allowed = ", ".join(member.value for member in Education)
        raise QueryError("invalid_education", f"education must be one of: {allowed}")
    goal = normalize(query.goal)
    if not goal:
        raise QueryError("empty_goal", "career goal is empty after normalization")

    raw = _pass(query, dataset, goal, MatchKind.SIMPLE, config.simple_threshold)
    if not raw:
        raw = _pass(query, dataset, goal, MatchKind.PARTIAL, config.partial_threshold)
    return dedup_and_rank(raw, config.limit)


def _pass(
    query: Query,
    dataset: Dataset,
    goal: str,
    kind: MatchKind,
    threshold: float,
) -> list[Suggestion]:
    score_fn = simple_ratio if kind is MatchKind.SIMPLE else partial_ratio
    found: list[Suggestion] = []
    for record in dataset.records:
        score = score_fn(goal, normalize(record.work_position))
        if score <= threshold:
            continue
        segments = stages_after(record, query.education)
        if not segments:
            continue
        found.append(
            Suggestion(
                segments=segments,
                rendered=render_path(segments),
                score=score,
                match_kind=kind,
                matched_position=record.work_position,
                source_record=record.id,
            )
        )
    return found
