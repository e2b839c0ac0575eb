"""attache: community-attachment survey analytics engine and service."""

from .domain import (
    ALL_YEARS,
    Community,
    CommunityRegistry,
    MetricId,
    RegionId,
    Selection,
    SelectionLevel,
    SurveyResponse,
    YearFilter,
    resolve_selection,
)
from .analytics import AnalyticsSnapshot, SummaryCell
from .ingestion import (
    ColumnMapping,
    build_snapshot,
    default_registry,
    derive_metric,
    load_mapping,
    load_registry,
    parse_survey_file,
    precomputed_mapping,
)

__version__ = "0.1.0"
