"""HTTP/JSON query API over an immutable analytics snapshot.

GET-only: all dashboard state lives client-side, the server is a pure
query engine. Every handler reads the shared snapshot; nothing mutates
it, so identical requests return identical bodies.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from starlette.exceptions import HTTPException as StarletteHTTPException
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import analytics
from .analytics import AnalyticsSnapshot, CorrelationEntry, SummaryCell
from .domain import (
    AttacheError,
    BadParameter,
    Community,
    EmptySelection,
    DegenerateSample,
    MetricId,
    NoData,
    Selection,
    SelectionLevel,
    RegionId,
    UnknownCommunity,
    UnknownMetric,
    UnknownRegion,
    UnknownUrbanicity,
    YearFilter,
)
from .ingestion import load_mapping, load_registry, parse_survey_file, build_snapshot

_HTTP_STATUS = {
    BadParameter: 400,
    UnknownCommunity: 400,
    UnknownUrbanicity: 400,
    UnknownRegion: 400,
    UnknownMetric: 400,
    EmptySelection: 422,
    NoData: 422,
    DegenerateSample: 422,
}


@dataclass(frozen=True)
class ServiceConfig:
    data_path: Path
    mapping_path: Path
    registry_path: Path
    listen_host: str = "127.0.0.1"
    listen_port: int = 8787
    static_assets_path: Optional[Path] = None
    log_level: str = "info"

    def __post_init__(self) -> None:
        for path in (self.data_path, self.mapping_path, self.registry_path):
            if not Path(path).is_file():
                raise FileNotFoundError(f"not a readable file: {path}")
        if self.static_assets_path is not None and not Path(self.static_assets_path).is_dir():
            raise FileNotFoundError(f"assets path is not a directory: {self.static_assets_path}")
        if not (1 <= self.listen_port <= 65535):
            raise ValueError(f"port out of range: {self.listen_port}")

    @classmethod
    def from_env_and_args(cls, args) -> "ServiceConfig":
        """CLI flags win; ATTACHE_* environment variables fill gaps."""

        def pick(flag_value, env_name, default=None):
            if flag_value is not None:
                return flag_value
            return os.environ.get(env_name, default)

        assets = pick(args.assets, "ATTACHE_ASSETS")
        return cls(
            data_path=Path(pick(args.data, "ATTACHE_DATA")),
            mapping_path=Path(pick(args.mapping, "ATTACHE_MAPPING")),
            registry_path=Path(pick(args.registry, "ATTACHE_REGISTRY")),
            listen_host=pick(args.host, "ATTACHE_HOST", "127.0.0.1"),
            listen_port=int(pick(args.port, "ATTACHE_PORT", "8787")),
            static_assets_path=Path(assets) if assets else None,
            log_level=pick(args.log_level, "ATTACHE_LOG_LEVEL", "info"),
        )


def load_snapshot(config: ServiceConfig) -> AnalyticsSnapshot:
    registry = load_registry(config.registry_path)
    mapping = load_mapping(config.mapping_path)
    table = parse_survey_file(config.data_path, mapping, registry)
    return build_snapshot(table)


def _display(value: Optional[float]) -> Optional[float]:
    return None if value is None else round(value, 2)


def _cell_json(cell: SummaryCell) -> dict:
    return {
        "mean": cell.mean,
        "mean_display": _display(cell.mean),
        "n": cell.n,
        "n_missing": cell.n_missing,
    }


def _community_json(c: Community) -> dict:
    return {
        "id": c.id,
        "display_name": c.display_name,
        "region": c.region.value,
        "urbanicity": c.urbanicity,
        "latitude": c.latitude,
        "longitude": c.longitude,
        "inferred_region": c.inferred_region,
    }


def _profile_json(entries: Sequence[CorrelationEntry]) -> list:
    return [
        {
            "metric": e.metric.value,
            "r": e.r,
            "r_display": _display(e.r),
            "n_pairs": e.n_pairs,
        }
        for e in entries
    ]


def _parse_selection(level: str, key: Optional[str], years: YearFilter) -> Selection:
    if level == "all":
        return Selection.all(years)
    if key is None:
        raise BadParameter(f"level={level} requires an id parameter")
    if level == "community":
        return Selection.community(key, years)
    if level == "urbanicity":
        return Selection.urbanicity(key, years)
    if level == "region":
        return Selection.region(RegionId.from_slug(key), years)
    raise BadParameter(f"unknown selection level: {level!r}")


def _parse_count(text: str, name: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise BadParameter(f"{name} must be an integer, got {text!r}") from None


def create_app(
    snapshot: AnalyticsSnapshot,
    static_assets_path: Optional[Path] = None,
    cors_origins: Sequence[str] = ("*",),
) -> FastAPI:
    app = FastAPI(title="attache", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware, allow_origins=list(cors_origins), allow_methods=["GET"]
    )

    @app.exception_handler(AttacheError)
    async def attache_error_handler(request: Request, exc: AttacheError):
        status = _HTTP_STATUS.get(type(exc), 400)
        return JSONResponse(
            status_code=status, content={"code": exc.code, "message": str(exc)}
        )

    @app.exception_handler(RequestValidationError)
    async def validation_error_handler(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={"code": "bad_parameter", "message": str(exc.errors())},
        )

    @app.exception_handler(StarletteHTTPException)
    async def http_error_handler(request: Request, exc: StarletteHTTPException):
        code = "not_found" if exc.status_code == 404 else "http_error"
        return JSONResponse(
            status_code=exc.status_code, content={"code": code, "message": str(exc.detail)}
        )

    snap = snapshot
    registry = snapshot.registry

    @app.get("/api/health")
    def health():
        return {
            "status": "ok",
            "rows": snap.total_respondents,
            "build": {"name": "attache", "version": "0.1.0"},
        }

    @app.get("/api/communities")
    def communities():
        return {"communities": [_community_json(c) for c in registry.communities]}

    @app.get("/api/map")
    def map_endpoint(metric: str, years: str = "all"):
        m = MetricId.from_slug(metric)
        yf = YearFilter.parse(years)
        entries = analytics.map_summary(snap, m, yf)
        return {
            "metric": m.value,
            "years": str(yf),
            "entries": [
                {
                    "id": e.community.id,
                    "display_name": e.community.display_name,
                    "latitude": e.community.latitude,
                    "longitude": e.community.longitude,
                    "n": e.n,
                    "mean": e.cell.mean,
                    "mean_display": _display(e.cell.mean),
                    "n_metric": e.cell.n,
                    "n_missing": e.cell.n_missing,
                }
                for e in entries
            ],
        }

    @app.get("/api/bars")
    def bars(community: str, metric: str, years: str = "all"):
        m = MetricId.from_slug(metric)
        yf = YearFilter.parse(years)
        chart = analytics.bar_chart_data(snap, m, yf, community)
        return {
            "community": community,
            "metric": m.value,
            "years": str(yf),
            "bars": [
                {"label": b.label, "level": b.level.value, **_cell_json(b.cell)}
                for b in chart
            ],
        }

    @app.get("/api/dotplot")
    def dotplot(metric: str, years: str = "all"):
        m = MetricId.from_slug(metric)
        yf = YearFilter.parse(years)
        plot = analytics.community_means(snap, m, yf)
        return {
            "metric": m.value,
            "years": str(yf),
            "entries": [
                {
                    "id": e.community.id,
                    "display_name": e.community.display_name,
                    "region": e.community.region.value,
                    "urbanicity": e.community.urbanicity,
                    **_cell_json(e.cell),
                }
                for e in plot.entries
            ],
            "omitted": list(plot.omitted),
        }

    @app.get("/api/correlations")
    def correlations(level: str = "all", id: Optional[str] = None, years: str = "all"):
        yf = YearFilter.parse(years)
        sel = _parse_selection(level, id, yf)
        return {
            "level": level,
            "id": id,
            "years": str(yf),
            "profile": _profile_json(analytics.correlation_profile(snap, sel)),
            "reference": _profile_json(analytics.reference_profile(snap, yf)),
        }

    @app.get("/api/bin2d")
    def bin2d_endpoint(
        x: str,
        y: str,
        level: str = "all",
        id: Optional[str] = None,
        years: str = "all",
        nx: str = "10",
        ny: str = "10",
    ):
        mx = MetricId.from_slug(x)
        my = MetricId.from_slug(y)
        yf = YearFilter.parse(years)
        sel = _parse_selection(level, id, yf)
        grid = analytics.bin2d(
            snap, mx, my, sel, _parse_count(nx, "nx"), _parse_count(ny, "ny")
        )
        return {
            "x": mx.value,
            "y": my.value,
            "years": str(yf),
            "x_edges": list(grid.x_edges),
            "y_edges": list(grid.y_edges),
            "counts": [list(row) for row in grid.counts],
            "n_pairs": grid.n_pairs,
        }

    @app.get("/api/series")
    def series(metric: str, communities: str, years: str = "each"):
        m = MetricId.from_slug(metric)
        ids = [c for c in communities.split(",") if c]
        entries = analytics.yearly_series(snap, m, ids)
        return {
            "metric": m.value,
            "series": [
                {
                    "id": e.community.id,
                    "display_name": e.community.display_name,
                    "aggregate_mean": e.aggregate_mean,
                    "aggregate_mean_display": _display(e.aggregate_mean),
                    "by_year": {
                        str(year): _cell_json(cell) for year, cell in sorted(e.by_year.items())
                    },
                }
                for e in entries
            ],
        }

    @app.get("/api/parallel")
    def parallel(years: str = "all"):
        yf = YearFilter.parse(years)
        pc = analytics.parallel_coordinates(snap, yf)
        return {
            "years": str(yf),
            "axes": [m.value for m in pc.axes],
            "lines": [
                {
                    "id": community.id,
                    "display_name": community.display_name,
                    "values": list(values),
                }
                for community, values in pc.lines
            ],
        }

    @app.get("/api/density")
    def density(
        metric: str,
        level: str = "all",
        id: Optional[str] = None,
        years: str = "all",
        points: str = "128",
    ):
        m = MetricId.from_slug(metric)
        yf = YearFilter.parse(years)
        sel = _parse_selection(level, id, yf)
        est = analytics.density_estimate(snap, m, sel, _parse_count(points, "points"))
        return {
            "metric": m.value,
            "years": str(yf),
            "level": level,
            "id": id,
            "bandwidth": est.bandwidth,
            "n": est.n,
            "grid": list(est.grid),
            "density": list(est.density),
        }

    if static_assets_path is not None:
        app.mount("/", StaticFiles(directory=static_assets_path, html=True), name="assets")

    return app


def serve(config: ServiceConfig) -> None:
    """Ingest once, then serve the snapshot until interrupted."""
    import uvicorn

    snapshot = load_snapshot(config)
    app = create_app(snapshot, static_assets_path=config.static_assets_path)
    uvicorn.run(
        app, host=config.listen_host, port=config.listen_port, log_level=config.log_level
    )
