"""Readability formulas over the segmentation census.

Text-level metrics (Flesch reading ease, Flesch-Kincaid grade, the Douma
recalibration for Dutch, SMOG, KPC/AVI lookup) plus the Spache grade per
sentence. All formula coefficients live in the constants ledger below; no
score is clamped, and sample-size caveats surface as report warnings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from importlib import resources
from typing import IO, Iterable

from .errors import DegenerateStatsError, EmptyTableError, ParseError, UnknownMetricError
from .segmentation import (
    TOKEN_NUMBER,
    TOKEN_WORD,
    FrequencyList,
    Language,
    Sentence,
    TextStats,
    split_sentences,
    text_stats,
)

# --- Coefficient ledger -----------------------------------------------------
# Flesch reading ease, as recalculated by Kincaid et al. (1975).
FLESCH_BASE = 206.835
FLESCH_SENTENCE_WEIGHT = 1.015
FLESCH_SYLLABLE_WEIGHT = 84.6
# Flesch-Kincaid grade level, Kincaid et al. (1975).
FK_SENTENCE_WEIGHT = 0.39
FK_SYLLABLE_WEIGHT = 11.8
FK_OFFSET = 15.59
# Douma (1960) recalibration of Flesch reading ease for Dutch.
DOUMA_BASE = 206.84
DOUMA_SENTENCE_WEIGHT = 0.93
DOUMA_SYLLABLE_WEIGHT = 77.0
# SMOG grade, McLaughlin (1969); designed for 30-sentence samples.
SMOG_COEFFICIENT = 1.0430
SMOG_OFFSET = 3.1291
SMOG_SAMPLE_SIZE = 30
# Spache (1974) original coefficients, applied per sentence.
SPACHE_ASL_WEIGHT = 0.141
SPACHE_PDW_WEIGHT = 0.086
SPACHE_OFFSET = 0.839

METRIC_FLESCH_READING_EASE = "flesch_reading_ease"
METRIC_FLESCH_KINCAID_GRADE = "flesch_kincaid_grade"
METRIC_FLESCH_DOUMA = "flesch_douma"
METRIC_SMOG = "smog"
METRIC_KPC_AVI = "kpc_avi"
METRIC_SPACHE = "spache"

ALL_METRICS = frozenset(
    {
        METRIC_FLESCH_READING_EASE,
        METRIC_FLESCH_KINCAID_GRADE,
        METRIC_FLESCH_DOUMA,
        METRIC_SMOG,
        METRIC_KPC_AVI,
        METRIC_SPACHE,
    }
)

_METRIC_ALIASES = {
    "fre": METRIC_FLESCH_READING_EASE,
    "flesch": METRIC_FLESCH_READING_EASE,
    "fk": METRIC_FLESCH_KINCAID_GRADE,
    "fkgl": METRIC_FLESCH_KINCAID_GRADE,
    "flesch_kincaid": METRIC_FLESCH_KINCAID_GRADE,
    "douma": METRIC_FLESCH_DOUMA,
    "kpc": METRIC_KPC_AVI,
    "avi": METRIC_KPC_AVI,
}


def resolve_metric(name: str) -> str:
    """Map a metric name or alias to its canonical id."""
    metric = name.strip().lower()
    metric = _METRIC_ALIASES.get(metric, metric)
    if metric not in ALL_METRICS:
        raise UnknownMetricError(f"unknown metric: {name!r}")
    return metric


@dataclass(frozen=True)
class AviRow:
    max_avg_syllables_per_word: float
    max_avg_words_per_sentence: float
    avi_level: int


@dataclass(frozen=True)
class AviTable:
    """Threshold ladder assigning a text to an AVI reading level."""

    rows: tuple[AviRow, ...]

    def __post_init__(self) -> None:
        if not self.rows:
            raise EmptyTableError("AVI table has no rows")
        levels = [row.avi_level for row in self.rows]
        if levels != sorted(levels) or len(set(levels)) != len(levels):
            raise ParseError("AVI levels must be strictly ascending", 0)
        syll = [row.max_avg_syllables_per_word for row in self.rows]
        words = [row.max_avg_words_per_sentence for row in self.rows]
        if syll != sorted(syll) or words != sorted(words):
            raise ParseError("AVI thresholds must be non-decreasing", 0)

    @property
    def max_level(self) -> int:
        return self.rows[-1].avi_level


@dataclass
class ReadabilityReport:
    language: Language
    text_scores: dict[str, float]
    sentence_scores: list[tuple[int, float]] | None = None
    warnings: list[str] = field(default_factory=list)


def _require(stats: TextStats) -> None:
    if stats.n_sentences < 1 or stats.n_words < 1:
        raise DegenerateStatsError(
            f"need at least one sentence and one word, got {stats.n_sentences}/{stats.n_words}"
        )


def flesch_reading_ease(stats: TextStats) -> float:
    _require(stats)
    return (
        FLESCH_BASE
        - FLESCH_SENTENCE_WEIGHT * (stats.n_words / stats.n_sentences)
        - FLESCH_SYLLABLE_WEIGHT * (stats.n_syllables / stats.n_words)
    )


def flesch_kincaid_grade(stats: TextStats) -> float:
    _require(stats)
    return (
        FK_SENTENCE_WEIGHT * (stats.n_words / stats.n_sentences)
        + FK_SYLLABLE_WEIGHT * (stats.n_syllables / stats.n_words)
        - FK_OFFSET
    )


def flesch_douma(stats: TextStats) -> float:
    """Dutch reading ease; meaningful for language="nl" (assess warns otherwise)."""
    _require(stats)
    return (
        DOUMA_BASE
        - DOUMA_SENTENCE_WEIGHT * (stats.n_words / stats.n_sentences)
        - DOUMA_SYLLABLE_WEIGHT * (stats.n_syllables / stats.n_words)
    )


def smog(stats: TextStats) -> float:
    """SMOG grade; unreliable below 30 sentences (assess adds the warning)."""
    if stats.n_sentences < 1:
        raise DegenerateStatsError("SMOG needs at least one sentence")
    return SMOG_COEFFICIENT * math.sqrt(SMOG_SAMPLE_SIZE * stats.n_polysyllables / stats.n_sentences) + SMOG_OFFSET


def spache(sentence: Sentence, familiar: frozenset[str] | set[str]) -> float:
    """Spache grade for one sentence; numbers always count as familiar."""
    words = [t for t in sentence.tokens if t.kind in (TOKEN_WORD, TOKEN_NUMBER)]
    if not words:
        raise DegenerateStatsError("sentence has no word tokens")
    unfamiliar = sum(
        1 for t in words if t.kind == TOKEN_WORD and t.surface.lower() not in familiar
    )
    asl = len(words)
    pdw = 100.0 * unfamiliar / len(words)
    return SPACHE_ASL_WEIGHT * asl + SPACHE_PDW_WEIGHT * pdw + SPACHE_OFFSET


def kpc_avi(stats: TextStats, table: AviTable) -> int:
    """Smallest AVI level whose thresholds both hold; table max when none do."""
    _require(stats)
    avg_syll = stats.n_syllables / stats.n_words
    avg_words = stats.n_words / stats.n_sentences
    for row in table.rows:
        if avg_syll <= row.max_avg_syllables_per_word and avg_words <= row.max_avg_words_per_sentence:
            return row.avi_level
    return table.max_level


def _avi_above_table(stats: TextStats, table: AviTable) -> bool:
    avg_syll = stats.n_syllables / stats.n_words
    avg_words = stats.n_words / stats.n_sentences
    return not any(
        avg_syll <= row.max_avg_syllables_per_word and avg_words <= row.max_avg_words_per_sentence
        for row in table.rows
    )


def assess(
    text: str,
    language: Language,
    metrics: Iterable[str],
    familiar: frozenset[str] | set[str] = frozenset(),
    table: AviTable | None = None,
) -> ReadabilityReport:
    """Compute the requested metrics over one census of ``text``.

    Metric names may be aliases; results are keyed by canonical id. Spache
    adds one grade per sentence; everything else is a text-level score.
    """
    requested = {resolve_metric(m) for m in metrics}
    if not requested:
        raise UnknownMetricError("no metrics requested")

    stats = text_stats(text, language)
    report = ReadabilityReport(language=language, text_scores={})

    if METRIC_FLESCH_READING_EASE in requested:
        report.text_scores[METRIC_FLESCH_READING_EASE] = flesch_reading_ease(stats)
    if METRIC_FLESCH_KINCAID_GRADE in requested:
        report.text_scores[METRIC_FLESCH_KINCAID_GRADE] = flesch_kincaid_grade(stats)
    if METRIC_FLESCH_DOUMA in requested:
        report.text_scores[METRIC_FLESCH_DOUMA] = flesch_douma(stats)
        if language != "nl":
            report.warnings.append("flesch_douma is calibrated for Dutch; language is not nl")
    if METRIC_SMOG in requested:
        report.text_scores[METRIC_SMOG] = smog(stats)
        if stats.n_sentences < SMOG_SAMPLE_SIZE:
            report.warnings.append(
                f"fewer than {SMOG_SAMPLE_SIZE} sentences: SMOG unreliable"
            )
    if METRIC_KPC_AVI in requested:
        avi_table = table if table is not None else default_avi_table()
        report.text_scores[METRIC_KPC_AVI] = float(kpc_avi(stats, avi_table))
        if _avi_above_table(stats, avi_table):
            report.warnings.append("text exceeds every AVI row: above table")
    if METRIC_SPACHE in requested:
        report.sentence_scores = []
        for idx, sentence in enumerate(split_sentences(text, language)):
            if not any(t.kind in (TOKEN_WORD, TOKEN_NUMBER) for t in sentence.tokens):
                continue
            report.sentence_scores.append((idx, spache(sentence, familiar)))
    return report


def load_avi_table(stream: IO[str] | Iterable[str]) -> AviTable:
    """Load the AVI threshold TSV (header row required)."""
    rows: list[AviRow] = []
    header_seen = False
    for line_no, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not header_seen:
            expected = ["max_syll_per_word", "max_words_per_sentence", "avi_level"]
            if [c.strip() for c in line.split("\t")] != expected:
                raise ParseError(f"expected header {expected}", line_no)
            header_seen = True
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise ParseError(f"expected 3 columns, got {len(parts)}", line_no)
        try:
            rows.append(AviRow(float(parts[0]), float(parts[1]), int(parts[2])))
        except ValueError as exc:
            raise ParseError(str(exc), line_no) from None
    if not rows:
        raise EmptyTableError("AVI table file has no rows")
    return AviTable(tuple(rows))


def default_avi_table() -> AviTable:
    """The packaged AVI ladder. Illustrative thresholds: the KPC cutoffs are
    not published in a citable form, so deployments should load their own."""
    ref = resources.files("artist.data").joinpath("avi_table_default.tsv")
    with ref.open("r", encoding="utf-8") as fh:
        return load_avi_table(fh)


def load_familiar_words(stream: IO[str] | Iterable[str]) -> frozenset[str]:
    """Load a one-word-per-line familiar-word list (case-folded)."""
    words = set()
    for raw in stream:
        word = raw.strip()
        if word and not word.startswith("#"):
            words.add(word.lower())
    return frozenset(words)


def familiar_words_from_frequency(freq: FrequencyList, top_n: int = 1000) -> frozenset[str]:
    """Familiar set = the top-N most frequent words; the Dutch stand-in for
    Spache's English word list."""
    ranked = sorted(freq.entries.items(), key=lambda kv: (-kv[1], kv[0]))
    return frozenset(word for word, _ in ranked[:top_n])
