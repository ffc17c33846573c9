"""A small HTTP service around the summarizer.

Endpoints:
  POST /v1/summarize   {text, function, alpha, r, budget} ->
                       {summary, selectedIndices, parameters, objectiveValue}
  GET  /health         liveness probe
  GET  / and assets    the bundled single-page UI, when a static
                       directory is configured

Requests are stateless: the handler only reads immutable shared
resources (lexicon, ontology) plus request-local state, so concurrent
identical requests produce identical responses.
"""

from __future__ import annotations

import json
import os
import threading
from dataclasses import dataclass
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .objectives import ObjectiveConfig, VARIANTS
from .opinion import AspectOntology, SentimentLexicon
from .optimizer import summarize
from .text import Document

MAX_BODY_BYTES = 1_048_576

_CONTENT_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".mjs": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".json": "application/json",
    ".map": "application/json",
    ".ico": "image/x-icon",
    ".svg": "image/svg+xml",
}

_PLACEHOLDER_PAGE = (
    "<!doctype html><html><head><title>osum</title></head><body>"
    "<h1>osum</h1><p>No UI bundle configured. POST to /v1/summarize.</p>"
    "</body></html>"
)


@dataclass(frozen=True)
class ServiceState:
    """Immutable resources shared by every request."""

    lexicon: SentimentLexicon
    ontology: AspectOntology
    defaults: ObjectiveConfig
    static_dir: str | None = None

    @classmethod
    def create(
        cls,
        lexicon_path: str | None = None,
        ontology_path: str | None = None,
        defaults: ObjectiveConfig | None = None,
        static_dir: str | None = None,
    ) -> "ServiceState":
        return cls(
            lexicon=SentimentLexicon.load(lexicon_path),
            ontology=AspectOntology.load(ontology_path),
            defaults=defaults or ObjectiveConfig(variant="a1"),
            static_dir=static_dir,
        )


class RequestError(Exception):
    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field


def parse_summarize_request(payload: object, defaults: ObjectiveConfig) -> tuple[str, ObjectiveConfig]:
    """Validate the /v1/summarize body; raises RequestError naming the
    offending field."""
    if not isinstance(payload, dict):
        raise RequestError("body must be a JSON object")
    text = payload.get("text")
    if not isinstance(text, str) or not text.strip():
        raise RequestError("text must be a non-empty string", field="text")

    function = payload.get("function", defaults.variant)
    if not isinstance(function, str) or function.lower() not in VARIANTS:
        raise RequestError("function must be one of a1..a5", field="function")

    alpha = payload.get("alpha", defaults.alpha)
    if not isinstance(alpha, (int, float)) or isinstance(alpha, bool) or not 0 <= alpha <= 1:
        raise RequestError("alpha must be a number in [0, 1]", field="alpha")

    r = payload.get("r", defaults.r)
    if not isinstance(r, (int, float)) or isinstance(r, bool) or r < 0:
        raise RequestError("r must be a number >= 0", field="r")

    budget = payload.get("budget", defaults.budget)
    if not isinstance(budget, int) or isinstance(budget, bool) or budget < 0:
        raise RequestError("budget must be an integer >= 0", field="budget")

    cfg = ObjectiveConfig(
        variant=function.lower(),
        alpha=float(alpha),
        r=float(r),
        budget=budget,
        gamma_sat=defaults.gamma_sat,
        lambda0=defaults.lambda0,
    )
    return text, cfg


def run_summarize(state: ServiceState, text: str, cfg: ObjectiveConfig) -> dict:
    doc = Document.from_text("request", text)
    summary = summarize(doc, cfg, state.lexicon, state.ontology)
    return {
        "summary": summary.text,
        "selectedIndices": list(summary.indices),
        "parameters": {
            "function": cfg.variant,
            "alpha": cfg.alpha,
            "r": cfg.r,
            "budget": cfg.budget,
        },
        "objectiveValue": summary.objective,
    }


def _make_handler(state: ServiceState):
    class Handler(BaseHTTPRequestHandler):
        server_version = "osum/0.1"

        def log_message(self, fmt, *args):  # quiet by default
            pass

        def _send_json(self, status: int, payload: dict) -> None:
            body = json.dumps(payload).encode("utf-8")
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(body)))
            self.end_headers()
            self.wfile.write(body)

        def _send_static(self, rel_path: str) -> None:
            if state.static_dir is None:
                if rel_path == "index.html":
                    body = _PLACEHOLDER_PAGE.encode("utf-8")
                    self.send_response(200)
                    self.send_header("Content-Type", "text/html; charset=utf-8")
                    self.send_header("Content-Length", str(len(body)))
                    self.end_headers()
                    self.wfile.write(body)
                    return
                self._send_json(404, {"error": "not found"})
                return
            root = os.path.realpath(state.static_dir)
            full = os.path.realpath(os.path.join(root, rel_path))
            if not full.startswith(root + os.sep) and full != root:
                self._send_json(404, {"error": "not found"})
                return
            if os.path.isdir(full):
                full = os.path.join(full, "index.html")
            if not os.path.isfile(full):
                self._send_json(404, {"error": "not found"})
                return
            ext = os.path.splitext(full)[1].lower()
            ctype = _CONTENT_TYPES.get(ext, "application/octet-stream")
            with open(full, "rb") as fh:
                body = fh.read()
            self.send_response(200)
            self.send_header("Content-Type", ctype)
            self.send_header("Content-Length", str(len(body)))
            self.end_headers()
            self.wfile.write(body)

        def do_GET(self):
            path = self.path.split("?", 1)[0]
            if path in ("/health", "/v1/health"):
                self._send_json(200, {"status": "ok"})
                return
            if path == "/":
                self._send_static("index.html")
                return
            self._send_static(path.lstrip("/"))

        def _drain(self, length: int) -> None:
            # Read the unused body so the client can finish writing before
            # it sees the error status (avoids resetting its upload).
            left = min(length, 8 * MAX_BODY_BYTES)
            while left > 0:
                chunk = self.rfile.read(min(left, 65536))
                if not chunk:
                    break
                left -= len(chunk)

        def do_POST(self):
            path = self.path.split("?", 1)[0]
            if path != "/v1/summarize":
                self._send_json(404, {"error": "not found"})
                return
            length = int(self.headers.get("Content-Length", 0) or 0)
            if length > MAX_BODY_BYTES:
                self._drain(length)
                self._send_json(413, {"error": "request body too large"})
                return
            raw = self.rfile.read(length)
            try:
                payload = json.loads(raw.decode("utf-8"))
            except (UnicodeDecodeError, json.JSONDecodeError):
                self._send_json(400, {"error": "body is not valid JSON"})
                return
            try:
                text, cfg = parse_summarize_request(payload, state.defaults)
            except RequestError as exc:
                error: dict = {"error": str(exc)}
                if exc.field:
                    error["field"] = exc.field
                self._send_json(400, error)
                return
            try:
                self._send_json(200, run_summarize(state, text, cfg))
            except Exception:  # no internals in responses
                self._send_json(500, {"error": "internal error"})

    return Handler


def build_server(state: ServiceState, port: int = 8080, host: str = "127.0.0.1") -> ThreadingHTTPServer:
    """Create (but do not start) the HTTP server."""
    return ThreadingHTTPServer((host, port), _make_handler(state))


def serve_forever(state: ServiceState, port: int = 8080, host: str = "127.0.0.1") -> None:
    server = build_server(state, port, host)
    actual_port = server.server_address[1]
    print(f"listening on http://{host}:{actual_port}", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:  # pragma: no cover
        pass
    finally:
        server.server_close()


def start_in_thread(state: ServiceState, port: int = 0, host: str = "127.0.0.1"):
    """Start the server on a background thread; returns (server, port)."""
    server = build_server(state, port, host)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    return server, server.server_address[1]
