"""Independent brute-force oracles used to check the analytics engine.

Everything here is deliberately naive: plain-Python per-row loops over
independently parsed CSV text, textbook two-pass Pearson, double-loop
binning, direct-sum KDE. No numpy, no imports from attache.analytics
internals beyond public data types.
"""

from __future__ import annotations

import csv
import io
import math

METRIC_SLUGS = [
    "community_attachment",
    "social_offerings",
    "openness",
    "aesthetics",
    "education",
    "basic_services",
    "leadership",
    "economy",
    "safety",
    "social_capital",
    "civic_involvement",
]

SENTINELS = {"", "NA", "REFUSED", "DK"}


def parse_rows(csv_text, known_ids):
    """Line-by-line parse of a precomputed-layout fixture file.

    Returns (accepted_rows, rejected_count); each accepted row is a dict
    {"community", "year", <metric slug>: float|None}.
    """
    rows = []
    rejected = 0
    for raw in csv.DictReader(io.StringIO(csv_text)):
        try:
            community = raw["community"].strip()
            if community not in known_ids:
                raise ValueError
            year = int(raw["year"])
            if year not in (2008, 2009, 2010):
                raise ValueError
            row = {"community": community, "year": year}
            for slug in METRIC_SLUGS:
                cell = raw[slug].strip()
                row[slug] = None if cell in SENTINELS else float(cell)
            rows.append(row)
        except (ValueError, KeyError):
            rejected += 1
    return rows, rejected


def select(rows, community_ids=None, year=None):
    out = []
    for row in rows:
        if community_ids is not None and row["community"] not in community_ids:
            continue
        if year is not None and row["year"] != year:
            continue
        out.append(row)
    return out


def mean(rows, slug):
    """(mean, n, n_missing) over a row subset; mean is None when n=0."""
    total = 0.0
    n = 0
    n_missing = 0
    for row in rows:
        value = row[slug]
        if value is None:
            n_missing += 1
        else:
            total += value
            n += 1
    return (total / n if n else None), n, n_missing


def pearson(rows, slug_x, slug_y):
    """Textbook two-pass Pearson with pairwise deletion."""
    pairs = [
        (row[slug_x], row[slug_y])
        for row in rows
        if row[slug_x] is not None and row[slug_y] is not None
    ]
    n = len(pairs)
    if n < 2:
        return None, n
    mx = sum(x for x, _ in pairs) / n
    my = sum(y for _, y in pairs) / n
    sxx = sum((x - mx) ** 2 for x, _ in pairs)
    syy = sum((y - my) ** 2 for _, y in pairs)
    if sxx == 0.0 or syy == 0.0:
        return None, n
    sxy = sum((x - mx) * (y - my) for x, y in pairs)
    return sxy / math.sqrt(sxx * syy), n


def bin2d(rows, slug_x, slug_y, x_lo, x_hi, y_lo, y_hi, nx, ny):
    """Naive double-loop equal-width binning, last bin right-closed."""
    counts = [[0] * ny for _ in range(nx)]
    n_pairs = 0
    for row in rows:
        x, y = row[slug_x], row[slug_y]
        if x is None or y is None:
            continue
        n_pairs += 1
        ix = min(int((x - x_lo) / (x_hi - x_lo) * nx), nx - 1)
        iy = min(int((y - y_lo) / (y_hi - y_lo) * ny), ny - 1)
        counts[ix][iy] += 1
    return counts, n_pairs


def kde(data, grid, bandwidth):
    """Direct-sum Gaussian KDE, one python loop per grid point."""
    norm = 1.0 / (len(data) * bandwidth * math.sqrt(2.0 * math.pi))
    out = []
    for g in grid:
        acc = 0.0
        for x in data:
            z = (g - x) / bandwidth
            acc += math.exp(-0.5 * z * z)
        out.append(acc * norm)
    return out
