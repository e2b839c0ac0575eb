"""Command-line entry points: serve, report, validate."""

from __future__ import annotations

import argparse
import sys

from . import analytics
from .domain import MetricId, RegionId, Selection, YearFilter
from .ingestion import build_snapshot, load_mapping, load_registry, parse_survey_file
from .reports import REPORT_KINDS, write_report
from .service import ServiceConfig, serve


def _add_data_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--data", help="survey file (or ATTACHE_DATA)")
    parser.add_argument("--mapping", help="column-mapping JSON (or ATTACHE_MAPPING)")
    parser.add_argument("--registry", help="community registry CSV (or ATTACHE_REGISTRY)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="attache")
    sub = parser.add_subparsers(dest="command", required=True)

    p_serve = sub.add_parser("serve", help="ingest once, then serve the HTTP API")
    _add_data_flags(p_serve)
    p_serve.add_argument("--host", help="bind address (default 127.0.0.1)")
    p_serve.add_argument("--port", type=int, help="bind port (default 8787)")
    p_serve.add_argument("--assets", help="static dashboard assets directory")
    p_serve.add_argument("--log-level", dest="log_level", help="uvicorn log level")

    p_report = sub.add_parser("report", help="write a report CSV")
    _add_data_flags(p_report)
    p_report.add_argument("kind", choices=REPORT_KINDS)
    p_report.add_argument("--out", required=True, help="output CSV path")

    p_validate = sub.add_parser(
        "validate", help="ingest and print provenance + registry diagnostics"
    )
    _add_data_flags(p_validate)
    return parser


def _namespace_with_service_defaults(args: argparse.Namespace) -> argparse.Namespace:
    for attr in ("host", "port", "assets", "log_level"):
        if not hasattr(args, attr):
            setattr(args, attr, None)
    return args


def _load(args: argparse.Namespace):
    config = ServiceConfig.from_env_and_args(_namespace_with_service_defaults(args))
    registry = load_registry(config.registry_path)
    mapping = load_mapping(config.mapping_path)
    table = parse_survey_file(config.data_path, mapping, registry)
    return config, table


def _validate(args: argparse.Namespace) -> int:
    config, table = _load(args)
    prov = table.provenance
    registry = table.registry
    snap = build_snapshot(table)
    print(f"source digest: {prov.source_digest}")
    print(f"rows accepted: {prov.rows_accepted}")
    print(f"rows rejected: {prov.rows_rejected}")
    print(f"communities in registry: {len(registry)}")
    inferred = [c.id for c in registry.communities if c.inferred_region]
    if inferred:
        print(f"communities with inferred region assignment: {', '.join(inferred)}")
    print(f"urbanicity labels: {len(registry.urbanicity_labels())}")
    # Region aggregates both ways (respondent-pooled vs community-averaged)
    # so users can see how much the pooling choice matters.
    print("region means (pooled | community-averaged):")
    for metric in MetricId:
        for region in RegionId:
            try:
                pooled = analytics.mean_metric(
                    snap, metric, Selection.region(region)
                ).mean
            except Exception:
                continue
            plot = analytics.community_means(snap, metric, YearFilter.all_years())
            members = [
                e.cell.mean for e in plot.entries if e.community.region is region
            ]
            averaged = sum(members) / len(members) if members else float("nan")
            print(
                f"  {metric.value:20s} {region.value:14s} "
                f"{pooled:.4f} | {averaged:.4f}"
            )
    return 0


def _report(args: argparse.Namespace) -> int:
    _, table = _load(args)
    snap = build_snapshot(table)
    path = write_report(snap, args.kind, args.out)
    print(f"wrote {path}")
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        serve(ServiceConfig.from_env_and_args(args))
        return 0
    if args.command == "report":
        return _report(args)
    return _validate(args)


if __name__ == "__main__":
    sys.exit(main())
