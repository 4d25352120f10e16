"""Command-line entry point: suggest, stats, and serve subcommands."""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .dataset import Dataset, DatasetError, Education, dataset_stats, iter_warnings, load_dataset
from .engine import EngineConfig, Query, QueryError, suggest
from .matching import normalize
from .service import DEFAULT_PORT, ServiceConfig, serve, suggest_response

__all__ = ["main"]

DATA_ENV_VAR = "CAREERPATH_DATA"
PORT_ENV_VAR = "CAREERPATH_PORT"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="careerpath",
        description="Suggest education paths for a career goal from a work-history dataset.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    data_help = f"CSV dataset path (falls back to ${DATA_ENV_VAR})"

    suggest_parser = subparsers.add_parser("suggest", help="rank education paths for a goal")
    suggest_parser.add_argument("--data", help=data_help)
    suggest_parser.add_argument("--goal", required=True, help="career goal, e.g. 'data scientist'")
    suggest_parser.add_argument(
        "--education",
        required=True,
        choices=[member.value for member in Education],
        help="education already completed",
    )
    suggest_parser.add_argument("--limit", type=int, default=None, help="keep at most N suggestions")
    suggest_parser.add_argument(
        "--threshold-simple", type=float, default=EngineConfig().simple_threshold, metavar="SCORE"
    )
    suggest_parser.add_argument(
        "--threshold-partial", type=float, default=EngineConfig().partial_threshold, metavar="SCORE"
    )
    suggest_parser.add_argument("--format", choices=["text", "json"], default="text")

    stats_parser = subparsers.add_parser("stats", help="summarize a dataset and its load warnings")
    stats_parser.add_argument("--data", help=data_help)

    serve_parser = subparsers.add_parser("serve", help="run the HTTP API")
    serve_parser.add_argument("--data", help=data_help)
    serve_parser.add_argument("--port", type=int, default=None, help=f"listen port (falls back to ${PORT_ENV_VAR})")
    serve_parser.add_argument("--host", default="127.0.0.1")
    serve_parser.add_argument("--ui", default=None, metavar="DIR", help="also serve a static web UI from DIR")
    return parser


def _resolve_data(parser: argparse.ArgumentParser, args: argparse.Namespace) -> str:
    data = args.data or os.environ.get(DATA_ENV_VAR)
    if not data:
        parser.error(f"--data is required (or set ${DATA_ENV_VAR})")
    return data


def _load(data: str) -> Dataset:
    try:
        return load_dataset(data)
    except (DatasetError, OSError) as exc:
        print(f"careerpath: failed to load {data}: {exc}", file=sys.stderr)
        raise SystemExit(1) from exc


def _run_suggest(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    data = _resolve_data(parser, args)
    if not normalize(args.goal):
        parser.error("--goal must not be blank")
    try:
        config = EngineConfig(
            simple_threshold=args.threshold_simple,
            partial_threshold=args.threshold_partial,
            limit=args.limit,
        )
    except ValueError as exc:
        parser.error(str(exc))
    dataset = _load(data)
    query = Query(goal=args.goal, education=Education(args.education))
    try:
        suggestions = suggest(query, dataset, config)
    except QueryError as exc:
        parser.error(str(exc))

    if args.format == "json":
        print(json.dumps(suggest_response(query, suggestions), indent=2))
        return 0
    if not suggestions:
        print("No suggestions found.")
        return 0
    for rank, item in enumerate(suggestions, start=1):
        print(f"{rank}. {item.rendered}  ({item.score:.2f}, {item.match_kind.value})")
    return 0


def _run_stats(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    data = _resolve_data(parser, args)
    dataset = _load(data)
    stats = dataset_stats(dataset)
    print(f"records: {stats.records}")
    print(f"bachelors stages: {stats.bachelors}")
    print(f"masters stages: {stats.masters}")
    print(f"doctoral stages: {stats.doctoral}")
    print(f"distinct work positions: {stats.distinct_work_positions}")
    print(f"rejected rows: {dataset.rejected_count}")
    for line in iter_warnings(dataset):
        print(f"warning: {line}", file=sys.stderr)
    return 0


def _run_serve(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    data = _resolve_data(parser, args)
    port = args.port
    if port is None:
        raw = os.environ.get(PORT_ENV_VAR)
        if raw is not None:
            try:
                port = int(raw)
            except ValueError:
                parser.error(f"${PORT_ENV_VAR} must be an integer, got {raw!r}")
        else:
            port = DEFAULT_PORT
    config = ServiceConfig(data_path=data, port=port, host=args.host, ui_dir=args.ui)
    try:
        serve(config)
    except (DatasetError, OSError) as exc:
        print(f"careerpath: {exc}", file=sys.stderr)
        raise SystemExit(1) from exc
    except KeyboardInterrupt:
        pass
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "suggest":
        return _run_suggest(parser, args)
    if args.command == "stats":
        return _run_stats(parser, args)
    return _run_serve(parser, args)


if __name__ == "__main__":
    sys.exit(main())
