import csv

import pytest

from attache import analytics
from attache.domain import ALL_YEARS, BadParameter, MetricId, Selection
from attache.reports import REPORT_KINDS, write_report
from conftest import make_registry, make_snapshot


def read_csv(path):
    with open(path, newline="") as handle:
        return list(csv.reader(handle))


def test_openness_top5_on_fixture(snap, tmp_path):
    rows = read_csv(write_report(snap, "openness_top5", tmp_path / "top5.csv"))
    assert rows[0] == ["community", "region", "urbanicity", "openness"]
    assert len(rows) == 6
    expected = analytics.top_k(snap, MetricId.OPENNESS, ALL_YEARS, 5)
    assert [r[0] for r in rows[1:]] == [e.community.display_name for e in expected]


def test_openness_top5_dominant_community(tmp_path):
    registry = make_registry(3)
    rows = []
    for i in range(3):
        value = 3.0 if i == 2 else 1.0
        rows += [(f"town-{i}", 2008, {MetricId.OPENNESS: value})] * 3
    snap = make_snapshot(rows, registry)
    report = read_csv(write_report(snap, "openness_top5", tmp_path / "r.csv"))
    assert report[1][0] == "Town C"


def test_rustbelt_economy_shape(snap, tmp_path):
    rows = read_csv(write_report(snap, "rustbelt_economy", tmp_path / "econ.csv"))
    assert rows[0] == ["community", "2008", "2009", "2010"]
    assert len(rows) == 8  # header + seven rust-belt communities
    aggregates = [
        e.aggregate_mean
        for e in analytics.yearly_series(
            snap,
            MetricId.ECONOMY,
            sorted(
                c.id for c in snap.registry.communities if c.region.value == "rust_belt"
            ),
        )
    ]
    assert aggregates == sorted(aggregates)


def test_safety_ranks_identity(snap, tmp_path):
    rows = read_csv(write_report(snap, "safety_ranks", tmp_path / "ranks.csv"))
    for row in rows[1:]:
        best, worst, total = int(row[3]), int(row[4]), int(row[5])
        assert best + worst == total + 1


def test_correlation_argmax_matches_oracle(snap, tmp_path):
    rows = read_csv(write_report(snap, "correlation_argmax", tmp_path / "argmax.csv"))
    assert len(rows) == 27
    for row in rows[1:]:
        display_name, top_metric = row[0], row[1]
        community = next(
            c for c in snap.registry.communities if c.display_name == display_name
        )
        profile = analytics.correlation_profile(snap, Selection.community(community.id))
        defined = [e for e in profile if e.r is not None]
        expected = max(defined, key=lambda e: e.r).metric.value if defined else ""
        assert top_metric == expected


def test_unknown_kind(snap, tmp_path):
    with pytest.raises(BadParameter):
        write_report(snap, "bogus", tmp_path / "x.csv")


def test_all_kinds_run(snap, tmp_path):
    for kind in REPORT_KINDS:
        path = write_report(snap, kind, tmp_path / f"{kind}.csv")
        assert path.exists()
