"""Career-path suggestions by fuzzy-matching a goal against work histories."""

from .dataset import (
    CareerRecord,
    Dataset,
    DatasetError,
    DatasetStats,
    Education,
    EducationStage,
    StageLevel,
    dataset_stats,
    dump_dataset,
    load_dataset,
    stages_after,
)
from .engine import (
    EngineConfig,
    MatchKind,
    Query,
    QueryError,
    Suggestion,
    dedup_and_rank,
    render_path,
    suggest,
)
from .matching import (
    MatchComputation,
    WindowAlignment,
    best_window_alignment,
    longest_common_block,
    match_count,
    normalize,
    partial_ratio,
    simple_ratio,
)
from .service import ServiceConfig, serve, suggest_response

__version__ = "0.1.0"

__all__ = [
    "CareerRecord",
    "Dataset",
    "DatasetError",
    "DatasetStats",
    "Education",
    "EducationStage",
    "EngineConfig",
    "MatchComputation",
    "MatchKind",
    "Query",
    "QueryError",
    "ServiceConfig",
    "StageLevel",
    "Suggestion",
    "WindowAlignment",
    "best_window_alignment",
    "dataset_stats",
    "dedup_and_rank",
    "dump_dataset",
    "load_dataset",
    "longest_common_block",
    "match_count",
    "normalize",
    "partial_ratio",
    "render_path",
    "serve",
    "simple_ratio",
    "stages_after",
    "suggest",
    "suggest_response",
    "__version__",
]
