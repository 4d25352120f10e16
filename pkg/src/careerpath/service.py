"""HTTP JSON API over one immutable dataset, with optional static UI hosting.

Endpoints:
    GET /api/v1/health               -> {"status": "ok", "records": N}
    GET /api/v1/suggest?goal=&education=&limit=  -> suggestion document

Validation failures return status 400 and internal failures status 500, both
as ``{"error": <stable code>, "message": <text>}``. The dataset is loaded
once at startup and shared read-only across request threads.
"""

from __future__ import annotations

import json
import logging
import mimetypes
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from typing import Any
from urllib.parse import parse_qs, unquote, urlparse

from .dataset import Dataset, Education, load_dataset
from .engine import EngineConfig, Query, QueryError, Suggestion, suggest

__all__ = [
    "DEFAULT_PORT",
    "ServiceConfig",
    "create_server",
    "serve",
    "suggest_response",
]

DEFAULT_PORT = 8080

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ServiceConfig:
    """Where the data lives and how the service listens."""

    data_path: str | Path
    port: int = DEFAULT_PORT
    host: str = "127.0.0.1"
    engine: EngineConfig = field(default_factory=EngineConfig)
    log_level: str = "info"
    ui_dir: str | Path | None = None


def _segment_dict(suggestion: Suggestion) -> list[dict[str, Any]]:
    segments = []
    for stage in suggestion.segments:
        entry: dict[str, Any] = {"level": stage.level.value, "stream": stage.stream}
        if stage.university is not None:
            entry["university"] = stage.university
        if stage.duration_years is not None:
            entry["duration_years"] = stage.duration_years
        segments.append(entry)
    return segments


def suggest_response(query: Query, suggestions: list[Suggestion]) -> dict[str, Any]:
    """Serializable suggestion document; scores rounded to 2 decimals."""
    return {
        "query": {"goal": query.goal, "education": query.education.value},
        "suggestions": [
            {
                "path": item.rendered,
                "segments": _segment_dict(item),
                "score": round(item.score, 2),
                "match_kind": item.match_kind.value,
                "matched_position": item.matched_position,
                "source_record": item.source_record,
            }
            for item in suggestions
        ],
    }


class _RequestHandler(BaseHTTPRequestHandler):
    dataset: Dataset
    engine_config: EngineConfig
    ui_dir: Path | None = None
    protocol_version = "HTTP/1.1"

    def do_GET(self) -> None:  # noqa: N802 (http.server API)
        url = urlparse(self.path)
        if url.path == "/api/v1/health":
            self._send_json(200, {"status": "ok", "records": len(self.dataset.records)})
        elif url.path == "/api/v1/suggest":
            self._handle_suggest(parse_qs(url.query))
        elif url.path.startswith("/api/"):
            self._send_json(404, {"error": "not_found", "message": f"no such endpoint: {url.path}"})
        else:
            self._serve_static(url.path)

    def _handle_suggest(self, params: dict[str, list[str]]) -> None:
        goal = params.get("goal", [None])[0]
        if goal is None:
            self._send_json(400, {"error": "missing_goal", "message": "query parameter 'goal' is required"})
            return
        education_token = params.get("education", [None])[0]
        allowed = ", ".join(member.value for member in Education)
        if education_token is None:
            self._send_json(
                400,
                {"error": "missing_education", "message": f"query parameter 'education' is required ({allowed})"},
            )
            return
        try:
            education = Education(education_token)
        except ValueError:
            self._send_json(
                400,
                {"error": "invalid_education", "message": f"education must be one of: {allowed}"},
            )
            return
        limit_text = params.get("limit", [None])[0]
        config = self.engine_config
        if limit_text is not None:
            try:
                config = EngineConfig(
                    simple_threshold=config.simple_threshold,
                    partial_threshold=config.partial_threshold,
                    limit=int(limit_text),
                )
            except ValueError:
                self._send_json(
                    400,
                    {"error": "invalid_limit", "message": f"limit must be a positive integer, got {limit_text!r}"},
                )
                return

        query = Query(goal=goal, education=education)
        try:
            suggestions = suggest(query, self.dataset, config)
        except QueryError as exc:
            self._send_json(400, {"error": exc.code, "message": str(exc)})
            return
        except Exception:
            logger.exception("suggestion request failed")
            self._send_json(500, {"error": "internal", "message": "internal server error"})
            return
        self._send_json(200, suggest_response(query, suggestions))

    def _serve_static(self, raw_path: str) -> None:
        if self.ui_dir is None:
            self._send_json(404, {"error": "not_found", "message": f"no such endpoint: {raw_path}"})
            return
        relative = unquote(raw_path).lstrip("/") or "index.html"
        root = self.ui_dir.resolve()
        target = (root / relative).resolve()
        if root not in target.parents and target != root:
            self._send_json(404, {"error": "not_found", "message": "no such file"})
            return
        if target.is_dir():
            target = target / "index.html"
        if not target.is_file():
            self._send_json(404, {"error": "not_found", "message": f"no such file: {raw_path}"})
            return
        body = target.read_bytes()
        content_type = mimetypes.guess_type(target.name)[0] or "application/octet-stream"
        self.send_response(200)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _send_json(self, status: int, payload: dict[str, Any]) -> None:
        body = json.dumps(payload).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def log_message(self, format: str, *args: Any) -> None:
        logger.debug("%s %s", self.address_string(), format % args)


def create_server(dataset: Dataset, config: ServiceConfig) -> ThreadingHTTPServer:
    """Build the HTTP server for an already-loaded dataset (does not block)."""
    handler = type(
        "CareerPathHandler",
        (_RequestHandler,),
        {
            "dataset": dataset,
            "engine_config": config.engine,
            "ui_dir": Path(config.ui_dir) if config.ui_dir is not None else None,
        },
    )
    server = ThreadingHTTPServer((config.host, config.port), handler)
    server.daemon_threads = True
    return server


def serve(config: ServiceConfig) -> None:
    """Load the dataset and serve requests until interrupted.

    Load failures and port conflicts propagate to the caller before any
    request is accepted.
    """
    logging.basicConfig(level=getattr(logging, config.log_level.upper(), logging.INFO))
    dataset = load_dataset(config.data_path)
    server = create_server(dataset, config)
    host, port = server.server_address[:2]
    logger.info("serving %d records on http://%s:%s/", len(dataset.records), host, port)
    try:
        server.serve_forever()
    finally:
        server.server_close()
