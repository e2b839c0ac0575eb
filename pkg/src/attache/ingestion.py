"""Survey-file parsing: column mapping, metric derivation, validation.

Input is delimiter-separated text with a header row. Rows that cannot be
used (unknown community, bad year, unparsable or out-of-range cells) are
rejected and counted, never fatal.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, Mapping, Optional, Sequence, Union

from .domain import (
    METRIC_DEFINITIONS,
    SURVEY_YEARS,
    AttacheError,
    Community,
    CommunityRegistry,
    EmptyInput,
    MetricDefinition,
    MetricId,
    MissingColumn,
    RegionId,
    ScaleViolation,
    SurveyResponse,
)

DEFAULT_MISSING_SENTINELS = ("", "NA", "REFUSED", "DK")


@dataclass(frozen=True)
class QuestionColumn:
    """One raw survey question feeding a derived metric."""

    column: str
    scale_min: float
    scale_max: float


@dataclass(frozen=True)
class MetricColumns:
    """How one metric is obtained from the file.

    Exactly one of `questions` (derive by averaging raw answers) or
    `precomputed` (ingest an already-derived column verbatim) is set.
    """

    questions: Optional[tuple[QuestionColumn, ...]] = None
    precomputed: Optional[str] = None

    def __post_init__(self) -> None:
        if (self.questions is None) == (self.precomputed is None):
            raise ValueError("set exactly one of questions / precomputed")

    def columns(self) -> tuple[str, ...]:
        if self.precomputed is not None:
            return (self.precomputed,)
        return tuple(q.column for q in self.questions)


@dataclass(frozen=True)
class ColumnMapping:
    """Maps every metric plus community and year onto file columns."""

    community_column: str
    year_column: str
    metrics: Mapping[MetricId, MetricColumns]
    delimiter: str = ","
    missing_sentinels: tuple[str, ...] = DEFAULT_MISSING_SENTINELS

    def __post_init__(self) -> None:
        missing = [m.value for m in MetricId if m not in self.metrics]
        if missing:
            raise ValueError(f"mapping does not cover metrics: {missing}")

    def required_columns(self) -> tuple[str, ...]:
        cols = [self.community_column, self.year_column]
        for mc in self.metrics.values():
            cols.extend(mc.columns())
        return tuple(dict.fromkeys(cols))


@dataclass(frozen=True)
class Provenance:
    source_digest: str
    rows_accepted: int
    rows_rejected: int


@dataclass(frozen=True)
class ResponseTable:
    responses: tuple[SurveyResponse, ...]
    registry: CommunityRegistry
    provenance: Provenance


def load_mapping(path: Union[str, Path]) -> ColumnMapping:
    """Read a ColumnMapping from its JSON config form.

    Schema: {"community_column", "year_column", "delimiter"?,
    "missing_sentinels"?, "metrics": {<metric slug>: either
    {"precomputed": <col>} or {"questions": [{"column", "scale_min",
    "scale_max"}, ...]}}}.
    """
    raw = json.loads(Path(path).read_text(encoding="utf-8"))
    metrics: dict[MetricId, MetricColumns] = {}
    for slug, entry in raw["metrics"].items():
        metric = MetricId.from_slug(slug)
        if "precomputed" in entry:
            metrics[metric] = MetricColumns(precomputed=entry["precomputed"])
        else:
            definition = METRIC_DEFINITIONS[metric]
            questions = tuple(
                QuestionColumn(
                    q["column"],
                    float(q.get("scale_min", definition.scale_min)),
                    float(q.get("scale_max", definition.scale_max)),
                )
                for q in entry["questions"]
            )
            metrics[metric] = MetricColumns(questions=questions)
    return ColumnMapping(
        community_column=raw["community_column"],
        year_column=raw["year_column"],
        metrics=metrics,
        delimiter=raw.get("delimiter", ","),
        missing_sentinels=tuple(raw.get("missing_sentinels", DEFAULT_MISSING_SENTINELS)),
    )


def precomputed_mapping(
    community_column: str = "community",
    year_column: str = "year",
    delimiter: str = ",",
) -> ColumnMapping:
    """Mapping for files whose columns are the metric slugs themselves."""
    return ColumnMapping(
        community_column=community_column,
        year_column=year_column,
        metrics={m: MetricColumns(precomputed=m.value) for m in MetricId},
        delimiter=delimiter,
    )


def load_registry(path: Union[str, Path]) -> CommunityRegistry:
    """Read the community registry from its CSV form.

    Columns: id, display_name, region, urbanicity, latitude, longitude,
    inferred (true/false).
    """
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        required = {"id", "display_name", "region", "urbanicity", "latitude", "longitude"}
        if reader.fieldnames is None or not required.issubset(reader.fieldnames):
            raise MissingColumn(
                f"registry file must have columns {sorted(required)}, "
                f"got {reader.fieldnames}"
            )
        communities = []
        for row in reader:
            communities.append(
                Community(
                    id=row["id"].strip(),
                    display_name=row["display_name"].strip(),
                    region=RegionId.from_slug(row["region"].strip()),
                    urbanicity=row["urbanicity"].strip(),
                    latitude=float(row["latitude"]),
                    longitude=float(row["longitude"]),
                    inferred_region=row.get("inferred", "false").strip().lower()
                    in ("true", "1", "yes"),
                )
            )
    if not communities:
        raise EmptyInput("registry file has no rows")
    return CommunityRegistry(tuple(communities))


def default_registry() -> CommunityRegistry:
    """The shipped 26-community registry."""
    return load_registry(Path(__file__).parent / "data" / "registry.csv")


def derive_metric(
    answers: Sequence[Optional[float]],
    definition: MetricDefinition,
    question_scales: Optional[Sequence[tuple[float, float]]] = None,
) -> Optional[float]:
    """Average a respondent's answers into one metric value.

    Returns the mean of the non-missing answers when at least half
    (ceiling) of the component questions were answered, otherwise None.
    Raises ScaleViolation for an answer outside its question scale.
    """
    k = len(definition.component_questions)
    if len(answers) != k:
        raise ValueError(
            f"{definition.id.value}: expected {k} answers, got {len(answers)}"
        )
    if question_scales is None:
        question_scales = [(definition.scale_min, definition.scale_max)] * k
    answered = []
    for value, (lo, hi) in zip(answers, question_scales):
        if value is None:
            continue
        if not (lo <= value <= hi):
            raise ScaleViolation(
                f"{definition.id.value}: answer {value} outside [{lo}, {hi}]"
            )
        answered.append(value)
    if len(answered) < (k + 1) // 2:
        return None
    return sum(answered) / len(answered)


def _parse_cell(text: str, sentinels: frozenset[str]) -> Optional[float]:
    """A cell is either a number or a missing-value sentinel.

    Raises ValueError for anything else (caller rejects the row).
    """
    stripped = text.strip()
    if stripped in sentinels:
        return None
    return float(stripped)


def parse_survey_file(
    stream: Union[IO[str], str, Path],
    mapping: ColumnMapping,
    registry: CommunityRegistry,
) -> ResponseTable:
    """Parse a survey export into validated responses.

    The community column may hold either registry ids or display names.
    Rows with an unknown community, a year outside the survey years, or
    an unparsable/out-of-range cell are rejected and counted.
    """
    if isinstance(stream, (str, Path)):
        text = Path(stream).read_text(encoding="utf-8")
    else:
        text = stream.read()
    digest = hashlib.sha256(text.encode("utf-8")).hexdigest()

    reader = csv.DictReader(io.StringIO(text), delimiter=mapping.delimiter)
    if reader.fieldnames is None:
        raise EmptyInput("survey file is empty")
    header = set(reader.fieldnames)
    absent = [c for c in mapping.required_columns() if c not in header]
    if absent:
        raise MissingColumn(f"mapping references absent columns: {absent}")

    name_to_id = {c.display_name: c.id for c in registry.communities}
    sentinels = frozenset(mapping.missing_sentinels)

    responses: list[SurveyResponse] = []
    rejected = 0
    rows_seen = 0
    for row in reader:
        rows_seen += 1
        try:
            responses.append(_parse_row(row, mapping, registry, name_to_id, sentinels))
        except (ValueError, AttacheError):
            rejected += 1
    if rows_seen == 0:
        raise EmptyInput("survey file has no data rows")

    return ResponseTable(
        responses=tuple(responses),
        registry=registry,
        provenance=Provenance(digest, len(responses), rejected),
    )


def _parse_row(
    row: Mapping[str, str],
    mapping: ColumnMapping,
    registry: CommunityRegistry,
    name_to_id: Mapping[str, str],
    sentinels: frozenset[str],
) -> SurveyResponse:
    raw_community = (row[mapping.community_column] or "").strip()
    community_id = name_to_id.get(raw_community, raw_community)
    if community_id not in registry:
        raise ValueError(f"unknown community {raw_community!r}")
    year = int((row[mapping.year_column] or "").strip())
    if year not in SURVEY_YEARS:
        raise ValueError(f"year {year} outside survey years")

    metrics: dict[MetricId, Optional[float]] = {}
    for metric, cols in mapping.metrics.items():
        definition = METRIC_DEFINITIONS[metric]
        if cols.precomputed is not None:
            value = _parse_cell(row[cols.precomputed] or "", sentinels)
            if value is not None and not definition.in_range(value):
                raise ValueError(f"{metric.value}={value} out of range")
            metrics[metric] = value
        else:
            answers = [_parse_cell(row[q.column] or "", sentinels) for q in cols.questions]
            scales = [(q.scale_min, q.scale_max) for q in cols.questions]
            metrics[metric] = derive_metric(answers, definition, scales)
    return SurveyResponse(community_id=community_id, year=year, metrics=metrics)


def build_snapshot(table: ResponseTable):
    """Turn a parsed table into the columnar analytics snapshot."""
    from .analytics import AnalyticsSnapshot

    return AnalyticsSnapshot.from_responses(table.responses, table.registry)
