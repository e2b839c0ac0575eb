#!/usr/bin/env python3
"""Dump deterministic API payloads for the frontend test suite.

Builds the seeded fixture snapshot, serves it through the real app, and
writes the JSON responses (plus expected highlight sets computed with
resolve_selection) to frontend/tests/fixtures/. The frontend tests then
cross-check their client-side logic against the backend's answers.
"""

import io
import json
from pathlib import Path

from fastapi.testclient import TestClient

from attache.domain import RegionId, Selection, YearFilter, resolve_selection
from attache.fixtures import generate_survey_csv
from attache.ingestion import (
    build_snapshot,
    default_registry,
    parse_survey_file,
    precomputed_mapping,
)
from attache.service import create_app

OUT = Path(__file__).resolve().parent.parent / "frontend" / "tests" / "fixtures"

FOCUS = "st-paul-mn"


def main() -> None:
    registry = default_registry()
    csv_text = generate_survey_csv(n_rows=1000, registry=registry)
    table = parse_survey_file(io.StringIO(csv_text), precomputed_mapping(), registry)
    snapshot = build_snapshot(table)
    client = TestClient(create_app(snapshot))

    OUT.mkdir(parents=True, exist_ok=True)

    def dump(name: str, path: str) -> None:
        res = client.get(path)
        res.raise_for_status()
        (OUT / name).write_text(json.dumps(res.json(), indent=2) + "\n")

    dump("communities.json", "/api/communities")
    dump("map.json", "/api/map?metric=community_attachment&years=all")
    dump(
        "bars.json",
        f"/api/bars?community={FOCUS}&metric=community_attachment&years=all",
    )
    dump("dotplot.json", "/api/dotplot?metric=community_attachment&years=all")
    dump(
        "correlations.json",
        f"/api/correlations?level=community&id={FOCUS}&years=all",
    )

    years = YearFilter(None)
    focus = registry.get(FOCUS)
    expected = {
        "focus": FOCUS,
        "all": sorted(resolve_selection(Selection.all(years), registry)),
        "community": sorted(
            resolve_selection(Selection.community(FOCUS, years), registry)
        ),
        "urbanicity": sorted(
            resolve_selection(Selection.urbanicity(focus.urbanicity, years), registry)
        ),
        "region": sorted(
            resolve_selection(
                Selection.region(RegionId(focus.region), years), registry
            )
        ),
    }
    (OUT / "expected_highlights.json").write_text(
        json.dumps(expected, indent=2) + "\n"
    )
    print(f"wrote fixtures to {OUT}")


if __name__ == "__main__":
    main()
