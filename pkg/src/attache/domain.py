"""Shared data model: metrics, communities, regions, selections.

Everything here is an immutable value type, safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Optional


class AttacheError(Exception):
    """Base class for all domain/analytics errors."""

    code = "error"


class UnknownCommunity(AttacheError):
    code = "unknown_community"


class UnknownUrbanicity(AttacheError):
    code = "unknown_urbanicity"


class UnknownRegion(AttacheError):
    code = "unknown_region"


class UnknownMetric(AttacheError):
    code = "unknown_metric"


class EmptySelection(AttacheError):
    code = "empty_selection"


class NoData(AttacheError):
    code = "no_data"


class DegenerateSample(AttacheError):
    code = "degenerate_sample"


class ScaleViolation(AttacheError):
    code = "scale_violation"


class MissingColumn(AttacheError):
    code = "missing_column"


class EmptyInput(AttacheError):
    code = "empty_input"


class BadParameter(AttacheError):
    code = "bad_parameter"


class MetricId(Enum):
    """The 11 composite survey metrics.

    Enumeration order is the canonical display/profile order.
    COMMUNITY_ATTACHMENT is the outcome every correlation profile targets.
    """

    COMMUNITY_ATTACHMENT = "community_attachment"
    SOCIAL_OFFERINGS = "social_offerings"
    OPENNESS = "openness"
    AESTHETICS = "aesthetics"
    EDUCATION = "education"
    BASIC_SERVICES = "basic_services"
    LEADERSHIP = "leadership"
    ECONOMY = "economy"
    SAFETY = "safety"
    SOCIAL_CAPITAL = "social_capital"
    CIVIC_INVOLVEMENT = "civic_involvement"

    @property
    def display_name(self) -> str:
        return self.value.replace("_", " ").title()

    @classmethod
    def from_slug(cls, slug: str) -> "MetricId":
        try:
            return cls(slug)
        except ValueError:
            raise UnknownMetric(f"unknown metric: {slug!r}") from None


# Metrics other than the attachment outcome, in enumeration order.
PROFILE_METRICS = tuple(
    m for m in MetricId if m is not MetricId.COMMUNITY_ATTACHMENT
)


class RegionId(Enum):
    GREAT_PLAINS = "great_plains"
    WEST = "west"
    DEEP_SOUTH = "deep_south"
    SOUTHEAST = "southeast"
    RUST_BELT = "rust_belt"

    @property
    def display_name(self) -> str:
        return self.value.replace("_", " ").title()

    @classmethod
    def from_slug(cls, slug: str) -> "RegionId":
        try:
            return cls(slug)
        except ValueError:
            raise UnknownRegion(f"unknown region: {slug!r}") from None


@dataclass(frozen=True)
class MetricDefinition:
    """One metric: which survey questions feed it and its value scale."""

    id: MetricId
    component_questions: tuple[str, ...]
    scale_min: float
    scale_max: float

    def __post_init__(self) -> None:
        if not (2 <= len(self.component_questions) <= 6):
            raise ValueError(
                f"{self.id.value}: expected 2-6 component questions, "
                f"got {len(self.component_questions)}"
            )
        if self.scale_min >= self.scale_max:
            raise ValueError(f"{self.id.value}: empty scale")

    def in_range(self, value: float) -> bool:
        return self.scale_min <= value <= self.scale_max


def _std_definition(metric: MetricId, questions: tuple[str, ...]) -> MetricDefinition:
    # All metrics run 1-3 except the attachment composite, which runs 1-5.
    hi = 5.0 if metric is MetricId.COMMUNITY_ATTACHMENT else 3.0
    return MetricDefinition(metric, questions, 1.0, hi)


METRIC_DEFINITIONS: Mapping[MetricId, MetricDefinition] = {
    m: _std_definition(m, q)
    for m, q in {
        MetricId.COMMUNITY_ATTACHMENT: (
            "proud_to_live",
            "perfect_place",
            "overall_satisfaction",
            "recommend_to_friend",
            "five_year_outlook",
        ),
        MetricId.SOCIAL_OFFERINGS: (
            "vibrant_nightlife",
            "meet_people",
            "people_care",
        ),
        MetricId.OPENNESS: (
            "open_college_grads",
            "open_immigrants",
            "open_families",
            "open_gay_lesbian",
            "open_seniors",
        ),
        MetricId.AESTHETICS: ("parks_trails", "physical_beauty"),
        MetricId.EDUCATION: ("public_schools", "colleges_universities"),
        MetricId.BASIC_SERVICES: (
            "highway_system",
            "affordable_housing",
            "quality_healthcare",
        ),
        MetricId.LEADERSHIP: ("elected_officials", "leaders_represent"),
        MetricId.ECONOMY: (
            "job_opportunities",
            "economic_conditions_today",
            "economic_conditions_trend",
            "income_supports_family",
            "good_time_to_find_job",
            "job_satisfaction",
        ),
        MetricId.SAFETY: ("safe_walking_at_night", "crime_level"),
        MetricId.SOCIAL_CAPITAL: (
            "club_memberships",
            "close_friends_local",
            "family_local",
            "talk_to_neighbors",
        ),
        MetricId.CIVIC_INVOLVEMENT: (
            "volunteered",
            "attended_public_meeting",
            "voted_local_election",
            "worked_for_change",
        ),
    }.items()
}

SURVEY_YEARS = (2008, 2009, 2010)

# Continental US bounding box used to sanity-check registry coordinates.
US_LAT_RANGE = (24.0, 50.0)
US_LON_RANGE = (-125.0, -66.0)


@dataclass(frozen=True)
class Community:
    id: str
    display_name: str
    region: RegionId
    urbanicity: str
    latitude: float
    longitude: float
    inferred_region: bool = False

    def __post_init__(self) -> None:
        if not self.id or not self.urbanicity:
            raise ValueError("community id and urbanicity must be non-empty")
        if not (US_LAT_RANGE[0] <= self.latitude <= US_LAT_RANGE[1]):
            raise ValueError(f"{self.id}: latitude {self.latitude} outside continental US")
        if not (US_LON_RANGE[0] <= self.longitude <= US_LON_RANGE[1]):
            raise ValueError(f"{self.id}: longitude {self.longitude} outside continental US")


@dataclass(frozen=True)
class CommunityRegistry:
    """The fixed roster of surveyed communities."""

    communities: tuple[Community, ...]
    by_id: Mapping[str, Community] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        by_id = {c.id: c for c in self.communities}
        if len(by_id) != len(self.communities):
            raise ValueError("duplicate community ids in registry")
        object.__setattr__(self, "by_id", by_id)

    def __len__(self) -> int:
        return len(self.communities)

    def __contains__(self, community_id: str) -> bool:
        return community_id in self.by_id

    def get(self, community_id: str) -> Community:
        try:
            return self.by_id[community_id]
        except KeyError:
            raise UnknownCommunity(f"unknown community: {community_id!r}") from None

    def urbanicity_labels(self) -> frozenset[str]:
        return frozenset(c.urbanicity for c in self.communities)

    def ids(self) -> tuple[str, ...]:
        return tuple(c.id for c in self.communities)


class SelectionLevel(Enum):
    COMMUNITY = "community"
    URBANICITY = "urbanicity"
    REGION = "region"
    ALL = "all"


@dataclass(frozen=True)
class YearFilter:
    """A single survey year, or all three."""

    year: Optional[int] = None

    def __post_init__(self) -> None:
        if self.year is not None and self.year not in SURVEY_YEARS:
            raise BadParameter(f"year must be one of {SURVEY_YEARS}, got {self.year}")

    @classmethod
    def all_years(cls) -> "YearFilter":
        return cls(None)

    @classmethod
    def single(cls, year: int) -> "YearFilter":
        return cls(year)

    @classmethod
    def parse(cls, text: str) -> "YearFilter":
        if text == "all":
            return cls(None)
        try:
            return cls(int(text))
        except (ValueError, BadParameter):
            raise BadParameter(f"years must be 'all' or one of {SURVEY_YEARS}, got {text!r}") from None

    @property
    def is_all(self) -> bool:
        return self.year is None

    def __str__(self) -> str:
        return "all" if self.year is None else str(self.year)


ALL_YEARS = YearFilter.all_years()


@dataclass(frozen=True)
class Selection:
    """A filter over responses: scope level x year filter."""

    level: SelectionLevel
    key: Optional[str] = None
    years: YearFilter = ALL_YEARS

    def __post_init__(self) -> None:
        if self.level is SelectionLevel.ALL:
            if self.key is not None:
                raise BadParameter("ALL selection takes no key")
        elif self.key is None:
            raise BadParameter(f"{self.level.value} selection requires a key")

    @classmethod
    def all(cls, years: YearFilter = ALL_YEARS) -> "Selection":
        return cls(SelectionLevel.ALL, None, years)

    @classmethod
    def community(cls, community_id: str, years: YearFilter = ALL_YEARS) -> "Selection":
        return cls(SelectionLevel.COMMUNITY, community_id, years)

    @classmethod
    def urbanicity(cls, label: str, years: YearFilter = ALL_YEARS) -> "Selection":
        return cls(SelectionLevel.URBANICITY, label, years)

    @classmethod
    def region(cls, region: RegionId, years: YearFilter = ALL_YEARS) -> "Selection":
        return cls(SelectionLevel.REGION, region.value, years)


def resolve_selection(sel: Selection, registry: CommunityRegistry) -> frozenset[str]:
    """Expand a selection to the set of community ids it covers."""
    if sel.level is SelectionLevel.ALL:
        return frozenset(registry.ids())
    if sel.level is SelectionLevel.COMMUNITY:
        return frozenset((registry.get(sel.key).id,))
    if sel.level is SelectionLevel.URBANICITY:
        matches = frozenset(c.id for c in registry.communities if c.urbanicity == sel.key)
        if not matches:
            raise UnknownUrbanicity(f"unknown urbanicity label: {sel.key!r}")
        return matches
    region = RegionId.from_slug(sel.key)
    return frozenset(c.id for c in registry.communities if c.region is region)


@dataclass(frozen=True)
class SurveyResponse:
    """One respondent's derived metric values plus community and year."""

    community_id: str
    year: int
    metrics: Mapping[MetricId, Optional[float]]

    def __post_init__(self) -> None:
        if self.year not in SURVEY_YEARS:
            raise ValueError(f"year {self.year} outside survey years {SURVEY_YEARS}")
        for metric, value in self.metrics.items():
            if value is None:
                continue
            definition = METRIC_DEFINITIONS[metric]
            if not definition.in_range(value):
                raise ScaleViolation(
                    f"{metric.value}={value} outside [{definition.scale_min}, "
                    f"{definition.scale_max}]"
                )
