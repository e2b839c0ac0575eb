"""Statistics behind every panel: grouped means, rankings, correlation
profiles, 2-D binning, yearly series, parallel coordinates, densities.

All functions are pure reads of an immutable columnar snapshot, so they
are safe under unlimited concurrent callers and fully deterministic.
Group means pool individual responses (never community-of-community
means); correlations use pairwise deletion and a two-pass Pearson.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from .domain import (
    METRIC_DEFINITIONS,
    PROFILE_METRICS,
    SURVEY_YEARS,
    BadParameter,
    Community,
    CommunityRegistry,
    DegenerateSample,
    EmptySelection,
    MetricId,
    NoData,
    Selection,
    SelectionLevel,
    SurveyResponse,
    YearFilter,
    resolve_selection,
)

_METRIC_ORDER = tuple(MetricId)
_METRIC_COL = {m: i for i, m in enumerate(_METRIC_ORDER)}


@dataclass(frozen=True)
class AnalyticsSnapshot:
    """Column-oriented, immutable form of the ingested survey data.

    One row per respondent; metric values are float64 with NaN for
    missing. Communities are stored as integer codes into the registry's
    community tuple.
    """

    registry: CommunityRegistry
    community_codes: np.ndarray
    years: np.ndarray
    values: np.ndarray

    @classmethod
    def from_responses(
        cls, responses: Sequence[SurveyResponse], registry: CommunityRegistry
    ) -> "AnalyticsSnapshot":
        code_of = {c.id: i for i, c in enumerate(registry.communities)}
        n = len(responses)
        codes = np.empty(n, dtype=np.int32)
        years = np.empty(n, dtype=np.int32)
        values = np.full((n, len(_METRIC_ORDER)), np.nan)
        for i, resp in enumerate(responses):
            codes[i] = code_of[resp.community_id]
            years[i] = resp.year
            for metric, value in resp.metrics.items():
                if value is not None:
                    values[i, _METRIC_COL[metric]] = value
        codes.setflags(write=False)
        years.setflags(write=False)
        values.setflags(write=False)
        return cls(registry, codes, years, values)

    def __len__(self) -> int:
        return len(self.community_codes)

    @property
    def total_respondents(self) -> int:
        return len(self)

    def _code(self, community_id: str) -> int:
        community = self.registry.get(community_id)
        return self.registry.communities.index(community)

    def year_mask(self, years: YearFilter) -> np.ndarray:
        if years.is_all:
            return np.ones(len(self), dtype=bool)
        return self.years == years.year

    def selection_mask(self, sel: Selection) -> np.ndarray:
        mask = self.year_mask(sel.years)
        if sel.level is not SelectionLevel.ALL:
            ids = resolve_selection(sel, self.registry)
            codes = np.array(sorted(self._code(i) for i in ids), dtype=np.int32)
            mask &= np.isin(self.community_codes, codes)
        return mask

    def community_mask(self, community_id: str, years: YearFilter) -> np.ndarray:
        return (self.community_codes == self._code(community_id)) & self.year_mask(years)


@dataclass(frozen=True)
class SummaryCell:
    """Mean plus how many respondents did / did not answer the metric."""

    mean: Optional[float]
    n: int
    n_missing: int

    def __post_init__(self) -> None:
        if self.mean is not None and self.n < 1:
            raise ValueError("mean reported with n < 1")


@dataclass(frozen=True)
class CorrelationEntry:
    metric: MetricId
    r: Optional[float]
    n_pairs: int


@dataclass(frozen=True)
class DotPlotEntry:
    community: Community
    cell: SummaryCell


@dataclass(frozen=True)
class DotPlot:
    """Per-community means sorted descending; dataless communities listed
    separately."""

    entries: tuple[DotPlotEntry, ...]
    omitted: tuple[str, ...]


@dataclass(frozen=True)
class Bar:
    label: str
    level: SelectionLevel
    cell: SummaryCell


@dataclass(frozen=True)
class MapEntry:
    community: Community
    n: int
    cell: SummaryCell


@dataclass(frozen=True)
class Bin2D:
    x_edges: tuple[float, ...]
    y_edges: tuple[float, ...]
    counts: tuple[tuple[int, ...], ...]
    n_pairs: int


@dataclass(frozen=True)
class YearlySeriesEntry:
    community: Community
    by_year: Mapping[int, SummaryCell]
    aggregate_mean: Optional[float]


@dataclass(frozen=True)
class ParallelCoordinates:
    axes: tuple[MetricId, ...]
    lines: tuple[tuple[Community, tuple[Optional[float], ...]], ...]


@dataclass(frozen=True)
class DensityEstimate:
    grid: tuple[float, ...]
    density: tuple[float, ...]
    bandwidth: float
    n: int


def _cell(snap: AnalyticsSnapshot, metric: MetricId, mask: np.ndarray) -> SummaryCell:
    col = snap.values[mask, _METRIC_COL[metric]]
    present = np.isfinite(col)
    n = int(present.sum())
    mean = float(col[present].mean()) if n else None
    return SummaryCell(mean=mean, n=n, n_missing=int(col.size - n))


def mean_metric(snap: AnalyticsSnapshot, metric: MetricId, sel: Selection) -> SummaryCell:
    """Mean over all individual responses in the selection, skipping
    missing values."""
    cell = _cell(snap, metric, snap.selection_mask(sel))
    if cell.n == 0:
        raise EmptySelection(
            f"no respondent has {metric.value} in the selected scope"
        )
    return cell


def community_means(
    snap: AnalyticsSnapshot, metric: MetricId, years: YearFilter
) -> DotPlot:
    """One entry per community with data, sorted descending by mean;
    ties break ascending by display name."""
    entries = []
    omitted = []
    for community in snap.registry.communities:
        cell = _cell(snap, metric, snap.community_mask(community.id, years))
        if cell.n == 0:
            omitted.append(community.id)
        else:
            entries.append(DotPlotEntry(community, cell))
    entries.sort(key=lambda e: (-e.cell.mean, e.community.display_name))
    return DotPlot(entries=tuple(entries), omitted=tuple(omitted))


def top_k(
    snap: AnalyticsSnapshot, metric: MetricId, years: YearFilter, k: int
) -> tuple[DotPlotEntry, ...]:
    if k < 0:
        raise BadParameter("k must be >= 0")
    return community_means(snap, metric, years).entries[:k]


def rank_community(
    snap: AnalyticsSnapshot, metric: MetricId, years: YearFilter, community_id: str
) -> tuple[int, int, int]:
    """1-based (rank_from_best, rank_from_worst, total_ranked)."""
    snap.registry.get(community_id)
    ordered = community_means(snap, metric, years).entries
    for idx, entry in enumerate(ordered):
        if entry.community.id == community_id:
            total = len(ordered)
            return idx + 1, total - idx, total
    raise NoData(f"{community_id} has no {metric.value} data for years={years}")


def bar_chart_data(
    snap: AnalyticsSnapshot, metric: MetricId, years: YearFilter, community_id: str
) -> tuple[Bar, Bar, Bar, Bar]:
    """Four widening scopes: community, its urbanicity, its region, all.

    A scope with no data yields an n=0 cell rather than failing the
    whole chart.
    """
    community = snap.registry.get(community_id)
    scopes = (
        (community.display_name, SelectionLevel.COMMUNITY,
         Selection.community(community.id, years)),
        (community.urbanicity, SelectionLevel.URBANICITY,
         Selection.urbanicity(community.urbanicity, years)),
        (community.region.display_name, SelectionLevel.REGION,
         Selection.region(community.region, years)),
        ("All communities", SelectionLevel.ALL, Selection.all(years)),
    )
    return tuple(
        Bar(label, level, _cell(snap, metric, snap.selection_mask(sel)))
        for label, level, sel in scopes
    )


def _pearson(x: np.ndarray, y: np.ndarray) -> tuple[Optional[float], int]:
    """Two-pass Pearson r over pairwise-complete observations."""
    both = np.isfinite(x) & np.isfinite(y)
    n_pairs = int(both.sum())
    if n_pairs < 2:
        return None, n_pairs
    xv = x[both]
    yv = y[both]
    xc = xv - xv.mean()
    yc = yv - yv.mean()
    sxx = float(xc @ xc)
    syy = float(yc @ yc)
    if sxx == 0.0 or syy == 0.0:
        return None, n_pairs
    r = float(xc @ yc) / math.sqrt(sxx * syy)
    return max(-1.0, min(1.0, r)), n_pairs


def correlation_profile(
    snap: AnalyticsSnapshot, sel: Selection
) -> tuple[CorrelationEntry, ...]:
    """Pearson r of each non-attachment metric against the attachment
    composite, pairwise deletion, in stable metric order."""
    mask = snap.selection_mask(sel)
    attachment = snap.values[mask, _METRIC_COL[MetricId.COMMUNITY_ATTACHMENT]]
    entries = []
    for metric in PROFILE_METRICS:
        r, n_pairs = _pearson(snap.values[mask, _METRIC_COL[metric]], attachment)
        entries.append(CorrelationEntry(metric, r, n_pairs))
    return tuple(entries)


def reference_profile(
    snap: AnalyticsSnapshot, years: YearFilter
) -> tuple[CorrelationEntry, ...]:
    """The all-communities profile drawn as grey reference dots."""
    return correlation_profile(snap, Selection.all(years))


def map_summary(
    snap: AnalyticsSnapshot, metric: MetricId, years: YearFilter
) -> tuple[MapEntry, ...]:
    """Per-community dot data: n counts every respondent in the period,
    regardless of whether they answered the metric."""
    entries = []
    for community in snap.registry.communities:
        mask = snap.community_mask(community.id, years)
        entries.append(MapEntry(community, int(mask.sum()), _cell(snap, metric, mask)))
    return tuple(entries)


def bin2d(
    snap: AnalyticsSnapshot,
    x: MetricId,
    y: MetricId,
    sel: Selection,
    nx: int,
    ny: int,
) -> Bin2D:
    """Equal-width 2-D counts over each metric's full scale; the last bin
    is right-closed so scale-max responses are kept."""
    if nx < 1 or ny < 1:
        raise BadParameter("nx and ny must be >= 1")
    mask = snap.selection_mask(sel)
    xv = snap.values[mask, _METRIC_COL[x]]
    yv = snap.values[mask, _METRIC_COL[y]]
    both = np.isfinite(xv) & np.isfinite(yv)
    if not both.any():
        raise EmptySelection(f"no respondent has both {x.value} and {y.value}")
    xdef = METRIC_DEFINITIONS[x]
    ydef = METRIC_DEFINITIONS[y]
    x_edges = np.linspace(xdef.scale_min, xdef.scale_max, nx + 1)
    y_edges = np.linspace(ydef.scale_min, ydef.scale_max, ny + 1)
    counts, _, _ = np.histogram2d(xv[both], yv[both], bins=[x_edges, y_edges])
    return Bin2D(
        x_edges=tuple(float(e) for e in x_edges),
        y_edges=tuple(float(e) for e in y_edges),
        counts=tuple(tuple(int(c) for c in row) for row in counts),
        n_pairs=int(both.sum()),
    )


def yearly_series(
    snap: AnalyticsSnapshot, metric: MetricId, community_ids: Sequence[str]
) -> tuple[YearlySeriesEntry, ...]:
    """Per-year means for each community, sorted ascending by the
    community's all-years aggregated mean. Years without data are
    omitted from a community's map."""
    if not community_ids:
        raise BadParameter("communities list must be non-empty")
    entries = []
    for community_id in community_ids:
        community = snap.registry.get(community_id)
        by_year = {}
        for year in SURVEY_YEARS:
            cell = _cell(
                snap, metric, snap.community_mask(community_id, YearFilter.single(year))
            )
            if cell.n > 0:
                by_year[year] = cell
        aggregate = _cell(snap, metric, snap.community_mask(community_id, YearFilter.all_years()))
        entries.append(YearlySeriesEntry(community, by_year, aggregate.mean))
    entries.sort(
        key=lambda e: (
            e.aggregate_mean is None,
            e.aggregate_mean if e.aggregate_mean is not None else 0.0,
            e.community.display_name,
        )
    )
    return tuple(entries)


def parallel_coordinates(
    snap: AnalyticsSnapshot, years: YearFilter
) -> ParallelCoordinates:
    """Axis per metric, one polyline of per-community means per community.

    The attachment composite leads; the remaining axes are sorted
    descending by their pooled all-communities mean, falling back to
    enumeration order on ties (stable sort).
    """
    overall = {}
    for metric in PROFILE_METRICS:
        cell = _cell(snap, metric, snap.year_mask(years))
        overall[metric] = cell.mean if cell.mean is not None else -math.inf
    ordered = tuple(
        sorted(PROFILE_METRICS, key=lambda m: -overall[m])
    )
    axes = (MetricId.COMMUNITY_ATTACHMENT,) + ordered
    lines = []
    for community in snap.registry.communities:
        mask = snap.community_mask(community.id, years)
        lines.append(
            (community, tuple(_cell(snap, m, mask).mean for m in axes))
        )
    return ParallelCoordinates(axes=axes, lines=tuple(lines))


def density_estimate(
    snap: AnalyticsSnapshot,
    metric: MetricId,
    sel: Selection,
    grid_points: int,
) -> DensityEstimate:
    """Gaussian KDE with the classic rule-of-thumb bandwidth
    1.06 * sample std * n^(-1/5), evaluated on an even grid spanning the
    metric's full scale."""
    if grid_points < 16:
        raise BadParameter("grid_points must be >= 16")
    mask = snap.selection_mask(sel)
    col = snap.values[mask, _METRIC_COL[metric]]
    data = col[np.isfinite(col)]
    n = data.size
    if n < 2:
        raise DegenerateSample(f"need >= 2 values for a density, got {n}")
    std = float(data.std(ddof=1))
    if std == 0.0:
        raise DegenerateSample("zero variance sample")
    bandwidth = 1.06 * std * n ** (-0.2)
    definition = METRIC_DEFINITIONS[metric]
    grid = np.linspace(definition.scale_min, definition.scale_max, grid_points)
    density = evaluate_gaussian_kde(data, grid, bandwidth)
    return DensityEstimate(
        grid=tuple(float(g) for g in grid),
        density=tuple(float(d) for d in density),
        bandwidth=bandwidth,
        n=n,
    )


def evaluate_gaussian_kde(
    data: np.ndarray, grid: np.ndarray, bandwidth: float
) -> np.ndarray:
    """Direct-sum Gaussian kernel density at each grid point."""
    z = (grid[:, None] - data[None, :]) / bandwidth
    kernel = np.exp(-0.5 * z * z)
    return kernel.sum(axis=1) / (data.size * bandwidth * math.sqrt(2.0 * math.pi))
