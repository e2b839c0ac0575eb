"""File reports reproducing the headline tables and rank claims."""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Union

from . import analytics
from .analytics import AnalyticsSnapshot
from .domain import (
    ALL_YEARS,
    SURVEY_YEARS,
    BadParameter,
    MetricId,
    RegionId,
    Selection,
    YearFilter,
    resolve_selection,
)

REPORT_KINDS = ("openness_top5", "rustbelt_economy", "safety_ranks", "correlation_argmax")


def write_report(snap: AnalyticsSnapshot, kind: str, out_path: Union[str, Path]) -> Path:
    out_path = Path(out_path)
    try:
        rows = _REPORT_BUILDERS[kind](snap)
    except KeyError:
        raise BadParameter(f"unknown report kind: {kind!r}; choose from {REPORT_KINDS}") from None
    with open(out_path, "w", newline="", encoding="utf-8") as handle:
        csv.writer(handle).writerows(rows)
    return out_path


def _fmt(value) -> str:
    return "" if value is None else f"{value:.2f}"


def _openness_top5(snap: AnalyticsSnapshot) -> list:
    rows = [["community", "region", "urbanicity", "openness"]]
    for entry in analytics.top_k(snap, MetricId.OPENNESS, ALL_YEARS, 5):
        c = entry.community
        rows.append([c.display_name, c.region.display_name, c.urbanicity, _fmt(entry.cell.mean)])
    return rows


def _rustbelt_economy(snap: AnalyticsSnapshot) -> list:
    ids = sorted(resolve_selection(Selection.region(RegionId.RUST_BELT), snap.registry))
    series = analytics.yearly_series(snap, MetricId.ECONOMY, ids)
    rows = [["community"] + [str(y) for y in SURVEY_YEARS]]
    for entry in series:
        cells = [
            _fmt(entry.by_year[y].mean) if y in entry.by_year else ""
            for y in SURVEY_YEARS
        ]
        rows.append([entry.community.display_name] + cells)
    return rows


def _safety_ranks(snap: AnalyticsSnapshot) -> list:
    rows = [["community", "year", "mean", "rank_from_best", "rank_from_worst", "total_ranked"]]
    for year in SURVEY_YEARS:
        years = YearFilter.single(year)
        plot = analytics.community_means(snap, MetricId.SAFETY, years)
        for idx, entry in enumerate(plot.entries):
            total = len(plot.entries)
            rows.append(
                [
                    entry.community.display_name,
                    str(year),
                    _fmt(entry.cell.mean),
                    str(idx + 1),
                    str(total - idx),
                    str(total),
                ]
            )
    return rows


def _correlation_argmax(snap: AnalyticsSnapshot) -> list:
    rows = [["community", "top_metric", "r"]]
    for community in snap.registry.communities:
        profile = analytics.correlation_profile(snap, Selection.community(community.id))
        defined = [e for e in profile if e.r is not None]
        if not defined:
            rows.append([community.display_name, "", ""])
            continue
        best = max(defined, key=lambda e: e.r)
        rows.append([community.display_name, best.metric.value, _fmt(best.r)])
    return rows


_REPORT_BUILDERS = {
    "openness_top5": _openness_top5,
    "rustbelt_economy": _rustbelt_economy,
    "safety_ranks": _safety_ranks,
    "correlation_argmax": _correlation_argmax,
}
