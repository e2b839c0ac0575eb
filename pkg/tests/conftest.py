import io

import numpy as np
import pytest

from attache.analytics import AnalyticsSnapshot
from attache.domain import (
    Community,
    CommunityRegistry,
    MetricId,
    RegionId,
    SurveyResponse,
)
from attache.fixtures import generate_survey_csv
from attache.ingestion import (
    build_snapshot,
    default_registry,
    parse_survey_file,
    precomputed_mapping,
)


@pytest.fixture(scope="session")
def registry():
    return default_registry()


@pytest.fixture(scope="session")
def fixture_csv(registry):
    return generate_survey_csv(n_rows=1000, registry=registry)


@pytest.fixture(scope="session")
def fixture_table(fixture_csv, registry):
    return parse_survey_file(io.StringIO(fixture_csv), precomputed_mapping(), registry)


@pytest.fixture(scope="session")
def snap(fixture_table):
    return build_snapshot(fixture_table)


def make_registry(n=3, region=RegionId.WEST, urbanicity="Test urbanicity"):
    """Tiny synthetic registry for unit tests (coords inside the US box)."""
    communities = tuple(
        Community(
            id=f"town-{i}",
            display_name=f"Town {chr(ord('A') + i)}",
            region=region,
            urbanicity=urbanicity,
            latitude=35.0 + 0.1 * i,
            longitude=-100.0 + 0.1 * i,
        )
        for i in range(n)
    )
    return CommunityRegistry(communities)


def make_snapshot(rows, registry):
    """Snapshot from (community_id, year, {MetricId: value}) triples."""
    responses = [
        SurveyResponse(community_id=cid, year=year, metrics=metrics)
        for cid, year, metrics in rows
    ]
    return AnalyticsSnapshot.from_responses(responses, registry)


def raw_snapshot(registry, codes, years, values):
    """Snapshot straight from arrays, bypassing per-response validation.

    Used by property tests that need values outside the metric scales
    (e.g. affine-transformed copies).
    """
    return AnalyticsSnapshot(
        registry=registry,
        community_codes=np.asarray(codes, dtype=np.int32),
        years=np.asarray(years, dtype=np.int32),
        values=np.asarray(values, dtype=float),
    )
