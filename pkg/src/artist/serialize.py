"""Canonical JSON payloads shared by the service and the CLI.

Both surfaces build the same dict payloads and render them with
:func:`canonical_json`, so a CLI ``--format json`` body is byte-identical to
the corresponding HTTP response body.
"""

from __future__ import annotations

import json

from .diagnostics import Finding
from .evalmetrics import CorpusEvalRow, RatingAggregate
from .pipeline import SimplificationResult
from .readability import ReadabilityReport


def canonical_json(payload: object) -> str:
    """Deterministic rendering: sorted keys, compact, UTF-8, one trailing newline."""
    return json.dumps(payload, ensure_ascii=False, sort_keys=True, separators=(",", ":")) + "\n"


def report_payload(report: ReadabilityReport) -> dict:
    return {
        "language": report.language,
        "text_scores": dict(report.text_scores),
        "sentence_scores": (
            [[index, score] for index, score in report.sentence_scores]
            if report.sentence_scores is not None
            else None
        ),
        "warnings": list(report.warnings),
    }


def finding_payload(finding: Finding) -> dict:
    return {
        "check_id": finding.check_id,
        "severity": finding.severity,
        "message": finding.message,
        "source_span": list(finding.source_span) if finding.source_span else None,
        "simplified_span": list(finding.simplified_span) if finding.simplified_span else None,
    }


def result_payload(result: SimplificationResult) -> dict:
    return {
        "source": result.source,
        "simplified": result.simplified,
        "backend_id": result.backend_id,
        "stage_outputs": [[name, text] for name, text in result.stage_outputs],
        "substitutions": [
            {
                "original": sub.original,
                "replacement": sub.replacement,
                "source_span": list(sub.source_span),
            }
            for sub in result.substitutions
        ],
        "considered": [
            {"word": word, "source_span": list(span)} for word, span in result.considered
        ],
        "latency_ms": result.latency_ms,
    }


def row_payload(row: CorpusEvalRow) -> dict:
    return {"topic_id": row.topic_id, "backend_id": row.backend_id, "bleu": row.bleu}


def evaluation_payload(rows: list[CorpusEvalRow], failed: list[str]) -> dict:
    return {"rows": [row_payload(row) for row in rows], "failed": list(failed)}


def aggregate_payload(topic_id: str, backend_id: str, aggregate: RatingAggregate) -> dict:
    return {
        "topic_id": topic_id,
        "backend_id": backend_id,
        "count": aggregate.count,
        "simplicity": aggregate.simplicity,
        "fluency": aggregate.fluency,
        "adequacy": aggregate.adequacy,
        "display": aggregate.display(),
    }
