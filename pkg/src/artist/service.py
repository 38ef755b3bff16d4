"""HTTP API (v1) over the workbench: simplify, assess, evaluate, ratings.

All responses render through the canonical serializer, so fixed inputs with
deterministic backends yield byte-identical bodies (latency fields aside).
Error bodies carry {code, message, detail}; the code maps one-to-one onto
the HTTP status.
"""

from __future__ import annotations

import json
import threading
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware

from .config import Workbench
from .diagnostics import run_diagnostics
from .errors import (
    ArtistError,
    BackendTimeoutError,
    StageFailedError,
    UnknownTopicError,
)
from .evalmetrics import RatingRecord, aggregate_ratings
from .evaluation import EvaluationRequest, evaluate_corpus
from .pipeline import probe_backend, simplify
from .readability import assess
from .serialize import (
    aggregate_payload,
    canonical_json,
    evaluation_payload,
    finding_payload,
    report_payload,
    result_payload,
)

API_PREFIX = "/v1"

_STATUS_BY_CODE = {
    "bad_request": 400,
    "backend_unavailable": 502,
    "backend_timeout": 504,
    "not_found": 404,
    "internal": 500,
}


class ApiError(ArtistError):
    def __init__(self, code: str, message: str, detail: object = None):
        super().__init__(message)
        self.code = code
        self.detail = detail

    @property
    def status(self) -> int:
        return _STATUS_BY_CODE[self.code]


def _classify(exc: Exception) -> ApiError:
    if isinstance(exc, ApiError):
        return exc
    if isinstance(exc, StageFailedError):
        code = "backend_timeout" if isinstance(exc.cause, BackendTimeoutError) else "backend_unavailable"
        return ApiError(code, str(exc), detail={"stage": exc.stage_name})
    if isinstance(exc, BackendTimeoutError):
        return ApiError("backend_timeout", str(exc))
    from .errors import BackendError

    if isinstance(exc, BackendError):
        return ApiError("backend_unavailable", str(exc))
    if isinstance(exc, UnknownTopicError):
        return ApiError("not_found", str(exc))
    if isinstance(exc, (ArtistError, ValueError)):
        return ApiError("bad_request", str(exc))
    return ApiError("internal", f"unexpected error: {exc}")


def _json_response(payload: object, status: int = 200) -> Response:
    return Response(
        content=canonical_json(payload), status_code=status, media_type="application/json"
    )


def _error_response(exc: Exception) -> Response:
    api_error = _classify(exc)
    payload = {"code": api_error.code, "message": str(api_error), "detail": api_error.detail}
    return _json_response(payload, api_error.status)


class RatingsStore:
    """Appends ratings to a JSONL file (or memory only) behind a lock."""

    def __init__(self, path: str | None):
        self._path = Path(path) if path else None
        self._lock = threading.Lock()
        self._records: list[RatingRecord] = []
        if self._path and self._path.exists():
            with open(self._path, "r", encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    raw = json.loads(line)
                    self._records.append(
                        RatingRecord(
                            topic_id=raw["topic_id"],
                            rater_id=raw["rater_id"],
                            simplicity=raw["simplicity"],
                            fluency=raw["fluency"],
                            adequacy=raw["adequacy"],
                            backend_id=raw.get("backend_id", ""),
                        )
                    )

    def add(self, record: RatingRecord) -> int:
        with self._lock:
            self._records.append(record)
            if self._path:
                with open(self._path, "a", encoding="utf-8") as fh:
                    fh.write(
                        json.dumps(
                            {
                                "record_type": "rating",
                                "topic_id": record.topic_id,
                                "rater_id": record.rater_id,
                                "backend_id": record.backend_id,
                                "simplicity": record.simplicity,
                                "fluency": record.fluency,
                                "adequacy": record.adequacy,
                            },
                            ensure_ascii=False,
                        )
                        + "\n"
                    )
            return len(self._records)

    def records(self) -> list[RatingRecord]:
        with self._lock:
            return list(self._records)


async def _body(request: Request) -> dict:
    try:
        payload = await request.json()
    except ValueError:
        raise ApiError("bad_request", "request body is not valid JSON") from None
    if not isinstance(payload, dict):
        raise ApiError("bad_request", "request body must be a JSON object")
    return payload


def _require_str(payload: dict, key: str) -> str:
    value = payload.get(key)
    if not isinstance(value, str) or not value.strip():
        raise ApiError("bad_request", f"field {key!r} must be a non-empty string")
    return value


def create_app(workbench: Workbench) -> FastAPI:
    app = FastAPI(title="artist", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    store = RatingsStore(workbench.config.ratings_path)
    config = workbench.config

    @app.exception_handler(ArtistError)
    async def artist_error_handler(request: Request, exc: ArtistError) -> Response:
        return _error_response(exc)

    @app.exception_handler(ValueError)
    async def value_error_handler(request: Request, exc: ValueError) -> Response:
        return _error_response(exc)

    def _backend(backend_id: str):
        backend = config.backends.get(backend_id)
        if backend is None:
            raise ApiError("bad_request", f"unknown backend_id: {backend_id}")
        return backend

    def _assess_or_none(text: str, language: str, metrics: list[str]):
        if not metrics:
            return None
        return assess(
            text, language, metrics, familiar=workbench.familiar, table=workbench.avi_table
        )

    @app.post(f"{API_PREFIX}/simplify")
    async def simplify_endpoint(request: Request) -> Response:
        payload = await _body(request)
        text = _require_str(payload, "text")
        backend = _backend(_require_str(payload, "backend_id"))
        metrics = payload.get("metrics", [])
        if not isinstance(metrics, list):
            raise ApiError("bad_request", "field 'metrics' must be a list")
        want_diagnostics = bool(payload.get("diagnostics", False))

        result = simplify(text, backend, workbench.deps)
        language = config.language
        source_report = _assess_or_none(text, language, metrics)
        simplified_report = _assess_or_none(result.simplified, language, metrics)
        findings = (
            run_diagnostics(text, result.simplified, workbench.freq, config.diagnostics)
            if want_diagnostics
            else []
        )
        return _json_response(
            {
                "result": result_payload(result),
                "source_report": report_payload(source_report) if source_report else None,
                "simplified_report": (
                    report_payload(simplified_report) if simplified_report else None
                ),
                "findings": [finding_payload(f) for f in findings],
            }
        )

    @app.post(f"{API_PREFIX}/assess")
    async def assess_endpoint(request: Request) -> Response:
        payload = await _body(request)
        text = _require_str(payload, "text")
        language = payload.get("language", config.language)
        if language not in ("nl", "en"):
            raise ApiError("bad_request", f"language must be nl or en, got {language!r}")
        metrics = payload.get("metrics")
        if not isinstance(metrics, list) or not metrics:
            raise ApiError("bad_request", "field 'metrics' must be a non-empty list")
        report = assess(
            text, language, metrics, familiar=workbench.familiar, table=workbench.avi_table
        )
        return _json_response(report_payload(report))

    @app.post(f"{API_PREFIX}/evaluate")
    async def evaluate_endpoint(request: Request) -> Response:
        payload = await _body(request)
        corpus_id = _require_str(payload, "corpus_id")
        corpus = workbench.corpora.get(corpus_id)
        if corpus is None:
            raise ApiError("not_found", f"unknown corpus: {corpus_id}")
        backend = _backend(_require_str(payload, "backend_id"))
        metric = payload.get("metric", "bleu")
        if metric not in ("bleu", "sari"):
            raise ApiError("bad_request", f"metric must be bleu or sari, got {metric!r}")
        mode = payload.get("mode", "pooled")
        if mode not in ("pooled", "mean_of_pairs"):
            raise ApiError("bad_request", f"mode must be pooled or mean_of_pairs, got {mode!r}")
        top_k = payload.get("top_k", 5)
        if not isinstance(top_k, int) or top_k < 1:
            raise ApiError("bad_request", "top_k must be a positive integer")
        eval_request = EvaluationRequest(
            backend=backend,
            complex_level=payload.get("complex_level", "upper_secondary"),
            simple_level=payload.get("simple_level", "lower_secondary"),
            metric=metric,
            mode=mode,
            top_k=top_k,
        )
        rows, failed = evaluate_corpus(corpus, eval_request, workbench.deps)
        return _json_response(evaluation_payload(rows, failed))

    @app.post(f"{API_PREFIX}/ratings")
    async def post_rating(request: Request) -> Response:
        payload = await _body(request)
        try:
            record = RatingRecord(
                topic_id=_require_str(payload, "topic_id"),
                rater_id=_require_str(payload, "rater_id"),
                simplicity=payload.get("simplicity"),
                fluency=payload.get("fluency"),
                adequacy=payload.get("adequacy"),
                backend_id=str(payload.get("backend_id", "")),
            )
        except (TypeError, ValueError) as exc:
            raise ApiError("bad_request", str(exc)) from None
        stored_id = store.add(record)
        return _json_response({"id": stored_id})

    @app.get(f"{API_PREFIX}/ratings")
    async def get_ratings(request: Request) -> Response:
        topic_id = request.query_params.get("topic_id")
        if not topic_id:
            raise ApiError("bad_request", "query parameter 'topic_id' is required")
        backend_filter = request.query_params.get("backend_id")
        records = [
            r
            for r in store.records()
            if r.topic_id == topic_id
            and (backend_filter is None or r.backend_id == backend_filter)
        ]
        if not records:
            raise ApiError("not_found", f"no ratings for topic {topic_id}")
        aggregates = aggregate_ratings(records)
        return _json_response(
            {
                "aggregates": [
                    aggregate_payload(topic, backend, aggregate)
                    for (topic, backend), aggregate in aggregates.items()
                ]
            }
        )

    @app.get(f"{API_PREFIX}/health")
    async def health() -> Response:
        backends = [
            {"backend_id": backend_id, "reachable": probe_backend(backend)}
            for backend_id, backend in sorted(config.backends.items())
        ]
        return _json_response({"status": "ok", "backends": backends})

    return app
