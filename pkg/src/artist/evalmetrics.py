"""Simplification-quality scoring: BLEU, SARI, ranking tables, ratings.

Scoring conventions (documented because the classic definitions leave them
open, and the test oracles mirror them):

* BLEU n-gram orders the candidate is too short for are excluded from the
  geometric mean, so an identical candidate scores 1.0 at any length.
* The brevity penalty uses the reference length closest to the candidate
  length, ties resolved toward the shorter reference.
* SARI component precision/recall treat an empty candidate-side set as 1
  when the reference-side set is empty too (nothing needed, nothing done),
  otherwise 0.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from typing import Iterable, Literal, Sequence

from .errors import (
    BackendError,
    EmptyCandidateError,
    EmptyInputError,
    EmptyScopeError,
    NoReferencesError,
)
from .segmentation import tokenize

Smoothing = Literal["none", "add_one_on_zero"]
CorpusMode = Literal["pooled", "mean_of_pairs"]

NGram = tuple[str, ...]


@dataclass(frozen=True)
class BleuOptions:
    max_n: int = 4
    smoothing: Smoothing = "none"
    case_fold: bool = True

    def __post_init__(self) -> None:
        if not 1 <= self.max_n <= 9:
            raise ValueError(f"max_n must be in 1..9, got {self.max_n}")


@dataclass(frozen=True)
class SariScore:
    add_f1: float
    keep_f1: float
    del_precision: float
    overall: float


@dataclass(frozen=True)
class RatingRecord:
    topic_id: str
    rater_id: str
    simplicity: int
    fluency: int
    adequacy: int
    backend_id: str = ""

    def __post_init__(self) -> None:
        for name in ("simplicity", "fluency", "adequacy"):
            value = getattr(self, name)
            if value not in (1, 2, 3, 4, 5):
                raise ValueError(f"{name} must be in 1..5, got {value}")


@dataclass(frozen=True)
class RatingAggregate:
    """Unrounded means plus half-up 1-decimal values for display."""

    count: int
    simplicity: float
    fluency: float
    adequacy: float

    def display(self) -> dict[str, float]:
        def half_up(value: float) -> float:
            return float(Decimal(str(value)).quantize(Decimal("0.1"), rounding=ROUND_HALF_UP))

        return {
            "simplicity": half_up(self.simplicity),
            "fluency": half_up(self.fluency),
            "adequacy": half_up(self.adequacy),
        }


@dataclass(frozen=True)
class CorpusEvalRow:
    topic_id: str
    backend_id: str
    bleu: float


def eval_tokens(text: str, case_fold: bool = True) -> list[str]:
    """Token surfaces for metric computation (case-folded by default)."""
    surfaces = [t.surface for t in tokenize(text)]
    return [s.lower() for s in surfaces] if case_fold else surfaces


def _ngrams(tokens: Sequence[str], n: int) -> Counter[NGram]:
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def clipped_ngram_precision(
    candidate: Sequence[str], references: Sequence[Sequence[str]], n: int
) -> tuple[int, int]:
    """Modified n-gram precision counts: (clipped matches, candidate n-grams)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    cand_counts = _ngrams(candidate, n)
    total = sum(cand_counts.values())
    if total == 0:
        return 0, 0
    ref_max: Counter[NGram] = Counter()
    for ref in references:
        for gram, count in _ngrams(ref, n).items():
            if count > ref_max[gram]:
                ref_max[gram] = count
    matched = sum(min(count, ref_max[gram]) for gram, count in cand_counts.items())
    return matched, total


def brevity_penalty(candidate_len: int, reference_lens: Sequence[int]) -> float:
    """min(1, exp(1 - r/c)) with r the closest reference length (ties: shorter)."""
    if candidate_len < 1:
        raise EmptyCandidateError("candidate has no tokens")
    if not reference_lens:
        raise NoReferencesError("no references")
    r = min(reference_lens, key=lambda rl: (abs(rl - candidate_len), rl))
    return min(1.0, math.exp(1.0 - r / candidate_len))


def _geometric_bleu(
    matched_totals: Sequence[tuple[int, int]], smoothing: Smoothing, bp: float
) -> float:
    log_sum = 0.0
    orders = 0
    for matched, total in matched_totals:
        if total == 0:
            continue
        if matched == 0:
            if smoothing == "none":
                return 0.0
            precision = (matched + 1) / (total + 1)
        else:
            precision = matched / total
        log_sum += math.log(precision)
        orders += 1
    if orders == 0:
        return 0.0
    return bp * math.exp(log_sum / orders)


def bleu(candidate: str, references: Sequence[str], opts: BleuOptions = BleuOptions()) -> float:
    """Sentence/paragraph BLEU in [0, 1]."""
    cand_tokens = eval_tokens(candidate, opts.case_fold)
    if not cand_tokens:
        raise EmptyCandidateError("candidate is empty")
    if not references:
        raise NoReferencesError("no references given")
    ref_tokens = [eval_tokens(ref, opts.case_fold) for ref in references]
    for i, ref in enumerate(ref_tokens):
        if not ref:
            raise NoReferencesError(f"reference {i} is empty")
    counts = [
        clipped_ngram_precision(cand_tokens, ref_tokens, n) for n in range(1, opts.max_n + 1)
    ]
    bp = brevity_penalty(len(cand_tokens), [len(r) for r in ref_tokens])
    return _geometric_bleu(counts, opts.smoothing, bp)


# --- SARI --------------------------------------------------------------------


def _fractional_minus(a: dict[NGram, float], b: dict[NGram, float]) -> dict[NGram, float]:
    out = {}
    for gram, count in a.items():
        rest = count - b.get(gram, 0.0)
        if rest > 1e-12:
            out[gram] = rest
    return out


def _fractional_intersect(a: dict[NGram, float], b: dict[NGram, float]) -> dict[NGram, float]:
    out = {}
    for gram, count in a.items():
        low = min(count, b.get(gram, 0.0))
        if low > 1e-12:
            out[gram] = low
    return out


def _set_size(a: dict[NGram, float]) -> float:
    return sum(a.values())


def _precision_recall(
    cand_set: dict[NGram, float], ref_set: dict[NGram, float]
) -> tuple[float, float]:
    matched = _set_size(_fractional_intersect(cand_set, ref_set))
    cand_size = _set_size(cand_set)
    ref_size = _set_size(ref_set)
    precision = matched / cand_size if cand_size > 0 else (1.0 if ref_size == 0 else 0.0)
    recall = matched / ref_size if ref_size > 0 else (1.0 if cand_size == 0 else 0.0)
    return precision, recall


def _f1(precision: float, recall: float) -> float:
    if precision + recall == 0:
        return 0.0
    return 2 * precision * recall / (precision + recall)


def sari(
    source: str,
    candidate: str,
    references: Sequence[str],
    max_n: int = 4,
    case_fold: bool = True,
) -> SariScore:
    """SARI with components on the 0-100 scale and overall their mean.

    Reference n-gram counts are averaged over the reference set; ADD and
    KEEP are F1 scores, DEL is precision only.
    """
    source_tokens = eval_tokens(source, case_fold)
    cand_tokens = eval_tokens(candidate, case_fold)
    if not source_tokens or not cand_tokens:
        raise EmptyInputError("source and candidate must be non-empty")
    if not references:
        raise NoReferencesError("no references given")
    ref_tokens = [eval_tokens(ref, case_fold) for ref in references]
    if any(not ref for ref in ref_tokens):
        raise NoReferencesError("empty reference")

    add_total = keep_total = del_total = 0.0
    for n in range(1, max_n + 1):
        s: dict[NGram, float] = dict(_ngrams(source_tokens, n))
        c: dict[NGram, float] = dict(_ngrams(cand_tokens, n))
        r_sum: Counter[NGram] = Counter()
        for ref in ref_tokens:
            r_sum.update(_ngrams(ref, n))
        r = {gram: count / len(ref_tokens) for gram, count in r_sum.items()}

        add_total += _f1(*_precision_recall(_fractional_minus(c, s), _fractional_minus(r, s)))
        keep_total += _f1(
            *_precision_recall(_fractional_intersect(c, s), _fractional_intersect(s, r))
        )
        del_precision, _ = _precision_recall(_fractional_minus(s, c), _fractional_minus(s, r))
        del_total += del_precision

    add_f1 = 100.0 * add_total / max_n
    keep_f1 = 100.0 * keep_total / max_n
    del_precision_score = 100.0 * del_total / max_n
    overall = (add_f1 + keep_f1 + del_precision_score) / 3.0
    return SariScore(add_f1, keep_f1, del_precision_score, overall)


# --- Corpus-level tables ------------------------------------------------------


@dataclass(frozen=True)
class EvalPair:
    """One scored unit: a candidate with its references, keyed by topic."""

    topic_id: str
    candidate: str
    references: tuple[str, ...]


def _pooled_topic_bleu(pairs: Sequence[EvalPair], opts: BleuOptions) -> float:
    """Corpus-style BLEU over a topic's pairs: n-gram counts and lengths pooled."""
    matched_totals = [[0, 0] for _ in range(opts.max_n)]
    cand_len_sum = 0
    ref_len_sum = 0
    for pair in pairs:
        cand_tokens = eval_tokens(pair.candidate, opts.case_fold)
        if not cand_tokens:
            raise EmptyCandidateError(f"candidate for topic {pair.topic_id} is empty")
        if not pair.references:
            raise NoReferencesError(f"no references for topic {pair.topic_id}")
        ref_tokens = [eval_tokens(ref, opts.case_fold) for ref in pair.references]
        if any(not ref for ref in ref_tokens):
            raise NoReferencesError(f"empty reference for topic {pair.topic_id}")
        for n in range(1, opts.max_n + 1):
            matched, total = clipped_ngram_precision(cand_tokens, ref_tokens, n)
            matched_totals[n - 1][0] += matched
            matched_totals[n - 1][1] += total
        cand_len = len(cand_tokens)
        cand_len_sum += cand_len
        ref_len_sum += min(
            (len(r) for r in ref_tokens), key=lambda rl: (abs(rl - cand_len), rl)
        )
    bp = min(1.0, math.exp(1.0 - ref_len_sum / cand_len_sum))
    return _geometric_bleu([(m, t) for m, t in matched_totals], opts.smoothing, bp)


def corpus_bleu_table(
    pairs: Iterable[tuple[str, str, Sequence[str]]],
    backend_id: str,
    opts: BleuOptions = BleuOptions(),
    top_k: int = 5,
    mode: CorpusMode = "pooled",
) -> tuple[list[CorpusEvalRow], list[str]]:
    """Rank topics by BLEU, best first, ties broken by topic id.

    Returns the top-k rows plus the topic ids whose scoring failed (failed
    topics are excluded from the ranking, never from the report).
    """
    grouped: dict[str, list[EvalPair]] = {}
    for topic_id, candidate, references in pairs:
        grouped.setdefault(topic_id, []).append(
            EvalPair(topic_id, candidate, tuple(references))
        )
    if not grouped:
        raise EmptyInputError("no pairs to evaluate")
    if top_k < 1:
        raise ValueError(f"top_k must be >= 1, got {top_k}")

    rows: list[CorpusEvalRow] = []
    failed: list[str] = []
    for topic_id in sorted(grouped):
        topic_pairs = grouped[topic_id]
        try:
            if mode == "pooled":
                score = _pooled_topic_bleu(topic_pairs, opts)
            else:
                per_pair = [bleu(p.candidate, p.references, opts) for p in topic_pairs]
                score = sum(per_pair) / len(per_pair)
        except (EmptyCandidateError, NoReferencesError, BackendError):
            failed.append(topic_id)
            continue
        rows.append(CorpusEvalRow(topic_id, backend_id, score))
    rows.sort(key=lambda row: (-row.bleu, row.topic_id))
    return rows[:top_k], failed


def aggregate_ratings(
    records: Iterable[RatingRecord],
) -> dict[tuple[str, str], RatingAggregate]:
    """Mean ratings per (topic_id, backend_id) scope."""
    grouped: dict[tuple[str, str], list[RatingRecord]] = {}
    for record in records:
        grouped.setdefault((record.topic_id, record.backend_id), []).append(record)
    if not grouped:
        raise EmptyScopeError("no rating records")
    out: dict[tuple[str, str], RatingAggregate] = {}
    for scope in sorted(grouped):
        scoped = grouped[scope]
        n = len(scoped)
        out[scope] = RatingAggregate(
            count=n,
            simplicity=sum(r.simplicity for r in scoped) / n,
            fluency=sum(r.fluency for r in scoped) / n,
            adequacy=sum(r.adequacy for r in scoped) / n,
        )
    return out
