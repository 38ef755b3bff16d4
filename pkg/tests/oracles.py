"""Naive brute-force scorers used as independent oracles.

These enumerate n-grams by slicing and count them with ``list.count`` — no
code shared with the production implementations. Slow on purpose; only small
instances go through them.
"""

from __future__ import annotations

import math


def ngram_list(tokens: list[str], n: int) -> list[tuple[str, ...]]:
    return [tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1)]


def clipped_precision_oracle(
    candidate: list[str], references: list[list[str]], n: int
) -> tuple[int, int]:
    cand_grams = ngram_list(candidate, n)
    total = len(cand_grams)
    matched = 0
    for gram in sorted(set(cand_grams)):
        in_candidate = cand_grams.count(gram)
        best_in_refs = 0
        for ref in references:
            count = ngram_list(ref, n).count(gram)
            if count > best_in_refs:
                best_in_refs = count
        matched += min(in_candidate, best_in_refs)
    return matched, total


def bleu_oracle(
    candidate: list[str],
    references: list[list[str]],
    max_n: int = 4,
    smoothing: str = "none",
) -> float:
    """BLEU with orders the candidate is too short for excluded from the mean."""
    log_precisions = []
    for n in range(1, max_n + 1):
        matched, total = clipped_precision_oracle(candidate, references, n)
        if total == 0:
            continue
        if matched == 0:
            if smoothing == "none":
                return 0.0
            precision = (matched + 1) / (total + 1)
        else:
            precision = matched / total
        log_precisions.append(math.log(precision))
    c_len = len(candidate)
    r_len = min((len(r) for r in references), key=lambda rl: (abs(rl - c_len), rl))
    brevity = min(1.0, math.exp(1.0 - r_len / c_len))
    return brevity * math.exp(sum(log_precisions) / len(log_precisions))


def _multiset(grams: list[tuple[str, ...]]) -> dict[tuple[str, ...], float]:
    out: dict[tuple[str, ...], float] = {}
    for gram in grams:
        out[gram] = out.get(gram, 0.0) + 1.0
    return out


def _avg_multiset(gram_lists: list[list[tuple[str, ...]]]) -> dict[tuple[str, ...], float]:
    out: dict[tuple[str, ...], float] = {}
    for grams in gram_lists:
        for gram, count in _multiset(grams).items():
            out[gram] = out.get(gram, 0.0) + count
    return {gram: count / len(gram_lists) for gram, count in out.items()}


def _minus(a: dict, b: dict) -> dict:
    out = {}
    for gram, count in a.items():
        remainder = count - b.get(gram, 0.0)
        if remainder > 1e-12:
            out[gram] = remainder
    return out


def _intersect(a: dict, b: dict) -> dict:
    out = {}
    for gram, count in a.items():
        both = min(count, b.get(gram, 0.0))
        if both > 1e-12:
            out[gram] = both
    return out


def _size(a: dict) -> float:
    return sum(a.values())


def _pr(cand_set: dict, ref_set: dict) -> tuple[float, float]:
    """Precision/recall with the empty-set convention: an empty side scores 1
    exactly when the other side is empty too."""
    matched = _size(_intersect(cand_set, ref_set))
    if _size(cand_set) > 0:
        precision = matched / _size(cand_set)
    else:
        precision = 1.0 if _size(ref_set) == 0 else 0.0
    if _size(ref_set) > 0:
        recall = matched / _size(ref_set)
    else:
        recall = 1.0 if _size(cand_set) == 0 else 0.0
    return precision, recall


def _f1(p: float, r: float) -> float:
    return 2 * p * r / (p + r) if p + r > 0 else 0.0


def sari_oracle(
    source: list[str],
    candidate: list[str],
    references: list[list[str]],
    max_n: int = 4,
) -> tuple[float, float, float, float]:
    """Returns (add_f1, keep_f1, del_precision, overall) on the 0-100 scale."""
    add_scores, keep_scores, del_scores = [], [], []
    for n in range(1, max_n + 1):
        s = _multiset(ngram_list(source, n))
        c = _multiset(ngram_list(candidate, n))
        r = _avg_multiset([ngram_list(ref, n) for ref in references])

        add_scores.append(_f1(*_pr(_minus(c, s), _minus(r, s))))
        keep_scores.append(_f1(*_pr(_intersect(c, s), _intersect(s, r))))
        del_p, _ = _pr(_minus(s, c), _minus(s, r))
        del_scores.append(del_p)

    add = 100.0 * sum(add_scores) / max_n
    keep = 100.0 * sum(keep_scores) / max_n
    deletion = 100.0 * sum(del_scores) / max_n
    return add, keep, deletion, (add + keep + deletion) / 3.0
