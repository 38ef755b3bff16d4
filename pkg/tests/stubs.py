"""Tiny configurable HTTP servers standing in for model/translator endpoints."""

from __future__ import annotations

import json
import threading
import time
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from typing import Callable

# A behavior maps the parsed request body to (status, response). The response
# may be a dict (sent as JSON) or raw bytes (sent as-is, e.g. broken JSON).
Behavior = Callable[[dict], tuple[int, object]]


class StubServer:
    def __init__(self, behavior: Behavior, delay_s: float = 0.0):
        self.behavior = behavior
        self.delay_s = delay_s
        outer = self

        class Handler(BaseHTTPRequestHandler):
            def do_POST(self):  # noqa: N802 (http.server API)
                length = int(self.headers.get("Content-Length", 0))
                raw = self.rfile.read(length)
                try:
                    payload = json.loads(raw) if raw else {}
                except ValueError:
                    payload = {}
                if outer.delay_s:
                    time.sleep(outer.delay_s)
                status, response = outer.behavior(payload)
                body = response if isinstance(response, bytes) else json.dumps(response).encode()
                self.send_response(status)
                self.send_header("Content-Type", "application/json")
                self.send_header("Content-Length", str(len(body)))
                self.end_headers()
                self.wfile.write(body)

            def log_message(self, *args):
                pass

        self._server = ThreadingHTTPServer(("127.0.0.1", 0), Handler)
        self._thread = threading.Thread(target=self._server.serve_forever, daemon=True)

    @property
    def url(self) -> str:
        return f"http://127.0.0.1:{self._server.server_port}/"

    def __enter__(self) -> "StubServer":
        self._thread.start()
        return self

    def __exit__(self, *exc) -> None:
        self._server.shutdown()
        self._server.server_close()


def echo_model(payload: dict) -> tuple[int, object]:
    return 200, {"simplified": payload.get("text", "")}


def constant_model(text: str) -> Behavior:
    return lambda payload: (200, {"simplified": text})


def uppercase_model(payload: dict) -> tuple[int, object]:
    return 200, {"simplified": payload.get("text", "").upper()}


def echo_translator(payload: dict) -> tuple[int, object]:
    return 200, {"translation": payload.get("text", "")}


def tagging_translator(tag: str) -> Behavior:
    """Appends a marker so stage order is observable."""
    return lambda payload: (200, {"translation": payload.get("text", "") + tag})
