"""Seeded synthetic survey generator for tests, demos, and benchmarks.

Produces delimiter-separated files in the precomputed-metric layout
(one column per metric slug, plus community and year), with optional
missing cells and malformed rows, so the full ingestion path is
exercised without the real survey export.
"""

from __future__ import annotations

import csv
import io
from typing import Optional

import numpy as np

from .domain import METRIC_DEFINITIONS, SURVEY_YEARS, CommunityRegistry, MetricId
from .ingestion import default_registry

DEFAULT_SEED = 20130823


def generate_survey_csv(
    n_rows: int = 1000,
    seed: int = DEFAULT_SEED,
    registry: Optional[CommunityRegistry] = None,
    missing_rate: float = 0.08,
    malformed_rate: float = 0.0,
) -> str:
    """Render a synthetic survey file as CSV text.

    Metric values are drawn per community around community-specific
    baselines, with the attachment composite loosely tracking the other
    metrics so correlation profiles are non-trivial. `malformed_rate`
    rows get an unknown community, an out-of-range year, or a garbage
    cell, in rotation.
    """
    registry = registry or default_registry()
    rng = np.random.default_rng(seed)
    metrics = tuple(MetricId)
    communities = registry.communities

    # Stable per-(community, metric) baselines in the middle of each scale.
    baselines = {}
    for ci, community in enumerate(communities):
        for mi, metric in enumerate(metrics):
            d = METRIC_DEFINITIONS[metric]
            span = d.scale_max - d.scale_min
            baselines[ci, mi] = d.scale_min + span * (0.3 + 0.4 * rng.random())

    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(["community", "year"] + [m.value for m in metrics])

    n_malformed = int(round(n_rows * malformed_rate))
    for i in range(n_rows):
        ci = int(rng.integers(len(communities)))
        year = int(rng.choice(SURVEY_YEARS))
        shared = rng.normal(0.0, 0.3)
        row = [communities[ci].id, str(year)]
        for mi, metric in enumerate(metrics):
            d = METRIC_DEFINITIONS[metric]
            value = baselines[ci, mi] + shared + rng.normal(0.0, 0.35)
            value = min(max(value, d.scale_min), d.scale_max)
            if rng.random() < missing_rate:
                row.append("" if rng.random() < 0.5 else "NA")
            else:
                row.append(repr(round(value, 4)))
        if i < n_malformed:
            kind = i % 3
            if kind == 0:
                row[0] = "atlantis"
            elif kind == 1:
                row[1] = "2011"
            else:
                row[2] = "oops"
        writer.writerow(row)
    return buffer.getvalue()
