"""Faithfulness and guideline checks over a (source, simplified) pair.

The preservation checks (numbers, entities, compression) compare the two
texts; the guideline checks (acronyms, sentence length, rare words) look at
the simplified text alone. Entity detection is a capitalization heuristic,
not NER, so recall is limited by design: generalizations that drop
lower-case content words (detail loss) are not detectable here.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Literal

from .errors import EmptyTextError
from .segmentation import (
    TOKEN_NUMBER,
    TOKEN_WORD,
    FrequencyList,
    Sentence,
    split_sentences,
    tokenize,
)

CHECK_NUMBER_MUTATION = "number_mutation"
CHECK_NUMBER_DROPPED = "number_dropped"
CHECK_ENTITY_DROPPED = "entity_dropped"
CHECK_ACRONYM_UNEXPANDED = "acronym_unexpanded"
CHECK_SENTENCE_TOO_LONG = "sentence_too_long"
CHECK_LOW_FREQUENCY_WORD = "low_frequency_word"
CHECK_AGGRESSIVE_COMPRESSION = "aggressive_compression"

# Report order; also the sort order of merged findings.
CHECK_ORDER = (
    CHECK_NUMBER_MUTATION,
    CHECK_NUMBER_DROPPED,
    CHECK_ENTITY_DROPPED,
    CHECK_ACRONYM_UNEXPANDED,
    CHECK_SENTENCE_TOO_LONG,
    CHECK_LOW_FREQUENCY_WORD,
    CHECK_AGGRESSIVE_COMPRESSION,
)

SEVERITY_INFO = "info"
SEVERITY_WARNING = "warning"
SEVERITY_ERROR = "error"

Severity = Literal["info", "warning", "error"]
Span = tuple[int, int]


@dataclass(frozen=True)
class Finding:
    check_id: str
    severity: Severity
    message: str
    source_span: Span | None = None
    simplified_span: Span | None = None


@dataclass(frozen=True)
class DiagnosticsConfig:
    max_sentence_words: int = 15
    min_sentence_words: int = 10
    freq_threshold: float = 1e-5
    compression_ratio_floor: float = 0.4
    acronym_pattern: str = r"[A-Z]{2,6}"

    def __post_init__(self) -> None:
        if self.min_sentence_words > self.max_sentence_words:
            raise ValueError("min_sentence_words must not exceed max_sentence_words")
        if self.freq_threshold <= 0 or self.compression_ratio_floor <= 0:
            raise ValueError("thresholds must be positive")


_ORDINAL_SUFFIX_RE = re.compile(r"(ste|de|e)$")
_THOUSANDS_RE = re.compile(r"\d{1,3}(?:\.\d{3})+$")


def normalize_number(surface: str) -> str:
    """Strip ordinal suffixes ("18e" -> "18") and thousands dots ("1.000" -> "1000")."""
    value = _ORDINAL_SUFFIX_RE.sub("", surface)
    if _THOUSANDS_RE.fullmatch(value):
        value = value.replace(".", "")
    return value


def _numbers_with_spans(text: str) -> list[tuple[str, Span]]:
    return [
        (normalize_number(t.surface), t.char_span)
        for t in tokenize(text)
        if t.kind == TOKEN_NUMBER
    ]


def extract_numbers(text: str) -> Counter[str]:
    """Multiset of normalized number strings appearing in the text."""
    return Counter(value for value, _ in _numbers_with_spans(text))


def _is_year(value: str) -> bool:
    return bool(re.fullmatch(r"\d{4}", value)) and 1000 <= int(value) <= 2999


def _magnitude_class(value: str) -> str:
    if _is_year(value):
        return "year"
    if re.fullmatch(r"\d+", value):
        return "integer"
    return "decimal"


def _unmatched_occurrences(
    own: list[tuple[str, Span]], other: Counter[str]
) -> list[tuple[str, Span]]:
    """Occurrences left over after cancelling counts present in the other text."""
    budget = Counter(other)
    leftover = []
    for value, span in own:
        if budget[value] > 0:
            budget[value] -= 1
        else:
            leftover.append((value, span))
    return leftover


def check_number_preservation(source: str, simplified: str) -> list[Finding]:
    """Flag changed numbers (error) and dropped numbers (warning).

    A simplified-only number pairs with a source-only number of the same
    magnitude class (year with year, integer with integer) to form a
    mutation; numbers the simplifier invented without a counterpart are not
    flagged.
    """
    source_occ = _numbers_with_spans(source)
    simp_occ = _numbers_with_spans(simplified)
    source_only = _unmatched_occurrences(source_occ, extract_numbers(simplified))
    simp_only = _unmatched_occurrences(simp_occ, extract_numbers(source))

    findings: list[Finding] = []
    consumed: set[int] = set()
    for simp_value, simp_span in simp_only:
        simp_class = _magnitude_class(simp_value)
        for idx, (src_value, src_span) in enumerate(source_only):
            if idx in consumed or _magnitude_class(src_value) != simp_class:
                continue
            consumed.add(idx)
            findings.append(
                Finding(
                    check_id=CHECK_NUMBER_MUTATION,
                    severity=SEVERITY_ERROR,
                    message=f"number changed: {src_value} became {simp_value}",
                    source_span=src_span,
                    simplified_span=simp_span,
                )
            )
            break
    for idx, (src_value, src_span) in enumerate(source_only):
        if idx in consumed:
            continue
        findings.append(
            Finding(
                check_id=CHECK_NUMBER_DROPPED,
                severity=SEVERITY_WARNING,
                message=f"number dropped: {src_value}",
                source_span=src_span,
            )
        )
    return findings


def _capitalized(token_surface: str) -> bool:
    return token_surface[:1].isupper()


def _entity_runs(text: str) -> list[tuple[tuple[str, ...], Span]]:
    """Maximal runs of capitalized word tokens, sentence-initial word excluded."""
    entities: list[tuple[tuple[str, ...], Span]] = []
    for sentence in split_sentences(text):
        word_positions = [
            i for i, t in enumerate(sentence.tokens) if t.kind == TOKEN_WORD
        ]
        first_word = word_positions[0] if word_positions else None
        run: list[int] = []

        def flush(run_idx: list[int]) -> None:
            if run_idx and run_idx[0] == first_word:
                run_idx = run_idx[1:]
            if run_idx:
                toks = [sentence.tokens[i] for i in run_idx]
                span = (toks[0].char_span[0], toks[-1].char_span[1])
                entities.append((tuple(t.surface for t in toks), span))

        for i, token in enumerate(sentence.tokens):
            if token.kind == TOKEN_WORD and _capitalized(token.surface):
                if run and run[-1] != i - 1:
                    flush(run)
                    run = []
                run.append(i)
            else:
                flush(run)
                run = []
        flush(run)
    return entities


def check_entity_retention(source: str, simplified: str) -> list[Finding]:
    """Flag source entities none of whose tokens survive in the simplified text."""
    simplified_words = {
        t.surface.casefold() for t in tokenize(simplified) if t.kind == TOKEN_WORD
    }
    findings = []
    seen: set[tuple[str, ...]] = set()
    for surfaces, span in _entity_runs(source):
        key = tuple(s.casefold() for s in surfaces)
        if key in seen:
            continue
        seen.add(key)
        if not any(word in simplified_words for word in key):
            findings.append(
                Finding(
                    check_id=CHECK_ENTITY_DROPPED,
                    severity=SEVERITY_WARNING,
                    message=f"entity dropped: {' '.join(surfaces)}",
                    source_span=span,
                )
            )
    return findings


def _initials_match(words: list[str], acronym: str) -> bool:
    if len(words) != len(acronym) or len(words) < 2:
        return False
    return "".join(w[0].upper() for w in words) == acronym.upper()


def _expansion_nearby(tokens: list, idx: int, acronym: str) -> bool:
    need = len(acronym)
    # Capitalized phrase before the acronym, optionally across one "(".
    j = idx - 1
    if j >= 0 and tokens[j].surface == "(":
        j -= 1
    before: list[str] = []
    while j >= 0 and len(before) < need:
        t = tokens[j]
        if t.kind == TOKEN_WORD and _capitalized(t.surface) and t.surface != acronym:
            before.append(t.surface)
            j -= 1
        else:
            break
    if _initials_match(list(reversed(before)), acronym):
        return True
    # Parenthesized (or plain) capitalized phrase after the acronym.
    j = idx + 1
    if j < len(tokens) and tokens[j].surface == "(":
        j += 1
    after: list[str] = []
    while j < len(tokens) and len(after) < need:
        t = tokens[j]
        if t.kind == TOKEN_WORD and _capitalized(t.surface) and t.surface != acronym:
            after.append(t.surface)
            j += 1
        else:
            break
    return _initials_match(after, acronym)


def check_acronym_expansion(
    simplified: str, cfg: DiagnosticsConfig = DiagnosticsConfig()
) -> list[Finding]:
    """Flag acronyms whose first use lacks a matching expansion phrase."""
    pattern = re.compile(cfg.acronym_pattern)
    tokens = tokenize(simplified)
    findings = []
    seen: set[str] = set()
    for idx, token in enumerate(tokens):
        if token.kind != TOKEN_WORD or token.surface in seen:
            continue
        if not pattern.fullmatch(token.surface):
            continue
        seen.add(token.surface)
        if not _expansion_nearby(tokens, idx, token.surface):
            findings.append(
                Finding(
                    check_id=CHECK_ACRONYM_UNEXPANDED,
                    severity=SEVERITY_WARNING,
                    message=f"acronym not expanded at first use: {token.surface}",
                    simplified_span=token.char_span,
                )
            )
    return findings


Target = Literal["source", "simplified"]


def _word_count(sentence: Sentence) -> int:
    return sum(1 for t in sentence.tokens if t.kind in (TOKEN_WORD, TOKEN_NUMBER))


def check_sentence_length(
    text: str, cfg: DiagnosticsConfig = DiagnosticsConfig(), target: Target = "simplified"
) -> list[Finding]:
    """One warning per sentence longer than the configured word budget."""
    findings = []
    for sentence in split_sentences(text):
        count = _word_count(sentence)
        if count > cfg.max_sentence_words:
            span = sentence.char_span
            findings.append(
                Finding(
                    check_id=CHECK_SENTENCE_TOO_LONG,
                    severity=SEVERITY_WARNING,
                    message=f"sentence has {count} words (budget {cfg.max_sentence_words})",
                    source_span=span if target == "source" else None,
                    simplified_span=span if target == "simplified" else None,
                )
            )
    return findings


def check_low_frequency_words(
    text: str,
    freq: FrequencyList,
    cfg: DiagnosticsConfig = DiagnosticsConfig(),
    target: Target = "simplified",
) -> list[Finding]:
    """One info finding per distinct word under the relative-frequency floor."""
    findings = []
    flagged: set[str] = set()
    for token in tokenize(text):
        if token.kind != TOKEN_WORD:
            continue
        word = token.surface.lower()
        if word in flagged:
            continue
        if freq.relative_frequency(word) < cfg.freq_threshold:
            flagged.add(word)
            findings.append(
                Finding(
                    check_id=CHECK_LOW_FREQUENCY_WORD,
                    severity=SEVERITY_INFO,
                    message=f"low-frequency word: {token.surface}",
                    source_span=token.char_span if target == "source" else None,
                    simplified_span=token.char_span if target == "simplified" else None,
                )
            )
    return findings


def _total_words(text: str) -> int:
    return sum(1 for t in tokenize(text) if t.kind in (TOKEN_WORD, TOKEN_NUMBER))


def check_compression(
    source: str, simplified: str, cfg: DiagnosticsConfig = DiagnosticsConfig()
) -> list[Finding]:
    source_words = _total_words(source)
    simplified_words = _total_words(simplified)
    if source_words == 0:
        return []
    ratio = simplified_words / source_words
    if ratio < cfg.compression_ratio_floor:
        return [
            Finding(
                check_id=CHECK_AGGRESSIVE_COMPRESSION,
                severity=SEVERITY_WARNING,
                message=(
                    f"simplification keeps {ratio:.2f} of the source words "
                    f"(floor {cfg.compression_ratio_floor})"
                ),
            )
        ]
    return []


def _sort_key(finding: Finding) -> tuple:
    src = finding.source_span[0] if finding.source_span else -1
    simp = finding.simplified_span[0] if finding.simplified_span else -1
    return (CHECK_ORDER.index(finding.check_id), src, simp, finding.message)


def run_diagnostics(
    source: str,
    simplified: str,
    freq: FrequencyList | None = None,
    cfg: DiagnosticsConfig = DiagnosticsConfig(),
) -> list[Finding]:
    """All checks over the pair, in fixed deterministic order.

    The rare-word check only runs when a frequency list is supplied.
    """
    if not source.strip() or not simplified.strip():
        raise EmptyTextError("diagnostics need non-empty source and simplified texts")
    findings: list[Finding] = []
    findings.extend(check_number_preservation(source, simplified))
    findings.extend(check_entity_retention(source, simplified))
    findings.extend(check_acronym_expansion(simplified, cfg))
    findings.extend(check_sentence_length(simplified, cfg))
    if freq is not None:
        findings.extend(check_low_frequency_words(simplified, freq, cfg))
    findings.extend(check_compression(source, simplified, cfg))
    findings.sort(key=_sort_key)
    return findings
