"""Corpus evaluation: simplify every aligned pair, score, and rank topics.

BLEU supports two article-level aggregations: ``pooled`` (n-gram counts and
lengths pooled across a topic's paragraph pairs, the default) and
``mean_of_pairs``. SARI is always averaged over pairs and its 0-100 overall
is normalized to [0, 1] so ranking rows share one scale.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Literal

from .corpus import AlignedPair, Corpus, get_pairs
from .errors import BackendError, EmptyInputError
from .evalmetrics import BleuOptions, CorpusEvalRow, CorpusMode, corpus_bleu_table, sari
from .pipeline import BackendConfig, BackendDeps, simplify

EvalMetric = Literal["bleu", "sari"]


@dataclass(frozen=True)
class EvaluationRequest:
    backend: BackendConfig
    complex_level: str = "upper_secondary"
    simple_level: str = "lower_secondary"
    metric: EvalMetric = "bleu"
    mode: CorpusMode = "pooled"
    top_k: int = 5
    jobs: int = 1


def _simplify_pairs(
    pairs: list[AlignedPair], backend: BackendConfig, deps: BackendDeps, jobs: int
) -> tuple[list[tuple[AlignedPair, str]], list[str]]:
    """Run the backend over every pair; a failing pair fails its whole topic."""

    def run(pair: AlignedPair) -> tuple[AlignedPair, str | None]:
        try:
            return pair, simplify(pair.complex_text, backend, deps).simplified
        except BackendError:
            return pair, None

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(run, pairs))
    else:
        outcomes = [run(pair) for pair in pairs]

    failed_topics = sorted({pair.topic_id for pair, candidate in outcomes if candidate is None})
    kept = [
        (pair, candidate)
        for pair, candidate in outcomes
        if candidate is not None and pair.topic_id not in failed_topics
    ]
    return kept, failed_topics


def _sari_rows(
    scored: list[tuple[AlignedPair, str]], backend_id: str, top_k: int
) -> tuple[list[CorpusEvalRow], list[str]]:
    grouped: dict[str, list[float]] = {}
    failed: list[str] = []
    for pair, candidate in scored:
        try:
            score = sari(pair.complex_text, candidate, [pair.simple_text]).overall / 100.0
        except (EmptyInputError, BackendError):
            failed.append(pair.topic_id)
            continue
        grouped.setdefault(pair.topic_id, []).append(score)
    rows = [
        CorpusEvalRow(topic_id, backend_id, sum(scores) / len(scores))
        for topic_id, scores in grouped.items()
        if topic_id not in failed
    ]
    rows.sort(key=lambda row: (-row.bleu, row.topic_id))
    return rows[:top_k], sorted(set(failed))


def evaluate_corpus(
    corpus: Corpus, request: EvaluationRequest, deps: BackendDeps | None = None
) -> tuple[list[CorpusEvalRow], list[str]]:
    """Evaluate one backend over one level combination of a corpus."""
    pairs = get_pairs(corpus, request.complex_level, request.simple_level)
    if not pairs:
        raise EmptyInputError(
            f"no aligned pairs for {request.complex_level} -> {request.simple_level}"
        )
    deps = deps or BackendDeps()
    scored, failed = _simplify_pairs(pairs, request.backend, deps, request.jobs)

    if request.metric == "sari":
        rows, sari_failed = _sari_rows(scored, request.backend.backend_id, request.top_k)
        return rows, sorted(set(failed) | set(sari_failed))

    triples = [
        (pair.topic_id, candidate, [pair.simple_text]) for pair, candidate in scored
    ]
    if not triples:
        return [], failed
    rows, bleu_failed = corpus_bleu_table(
        triples,
        backend_id=request.backend.backend_id,
        opts=BleuOptions(),
        top_k=request.top_k,
        mode=request.mode,
    )
    return rows, sorted(set(failed) | set(bleu_failed))
