"""Three-level topic corpus with paragraph-aligned pairs, stored as JSONL.

Topics carry their paragraphs per reading level; alignment records pair a
complex paragraph with its simpler counterpart by index. Alignments are
validated against topics after the whole file is read, so record order in
the file does not matter. Multiple alignments may reference the same
paragraph (many-to-one pairings are allowed).
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import IO, Iterable

from .errors import AlignmentIndexError, IoError, ParseError, UnknownTopicError
from .evalmetrics import CorpusEvalRow, RatingRecord

LEVELS = ("primary", "lower_secondary", "upper_secondary")


@dataclass(frozen=True)
class CorpusTopic:
    topic_id: str
    title: str
    levels: dict[str, tuple[str, ...]]


@dataclass(frozen=True)
class AlignedPair:
    topic_id: str
    complex_level: str
    simple_level: str
    complex_paragraph_idx: int
    simple_paragraph_idx: int
    complex_text: str
    simple_text: str


@dataclass(frozen=True)
class Corpus:
    topics: dict[str, CorpusTopic]
    pairs: tuple[AlignedPair, ...]


def _parse_topic(record: dict, line_no: int) -> CorpusTopic:
    try:
        topic_id = record["topic_id"]
        title = record["title"]
        raw_levels = record["levels"]
    except KeyError as exc:
        raise ParseError(f"topic record missing field {exc}", line_no) from None
    if not isinstance(topic_id, str) or not topic_id:
        raise ParseError("topic_id must be a non-empty string", line_no)
    levels: dict[str, tuple[str, ...]] = {}
    for level, paragraphs in raw_levels.items():
        if level not in LEVELS:
            raise ParseError(f"unknown level: {level!r}", line_no)
        if not isinstance(paragraphs, list) or not paragraphs:
            raise ParseError(f"level {level} needs at least one paragraph", line_no)
        if any(not isinstance(p, str) or not p.strip() for p in paragraphs):
            raise ParseError(f"level {level} has an empty paragraph", line_no)
        levels[level] = tuple(paragraphs)
    return CorpusTopic(topic_id=topic_id, title=title, levels=levels)


def _parse_alignment(record: dict, line_no: int) -> tuple[str, str, str, int, int, int]:
    try:
        return (
            record["topic_id"],
            record["complex_level"],
            record["simple_level"],
            int(record["complex_idx"]),
            int(record["simple_idx"]),
            line_no,
        )
    except KeyError as exc:
        raise ParseError(f"alignment record missing field {exc}", line_no) from None
    except (TypeError, ValueError):
        raise ParseError("alignment indices must be integers", line_no) from None


def load_corpus(stream: IO[str] | Iterable[str]) -> Corpus:
    """Parse all records, register topics, then validate alignments."""
    topics: dict[str, CorpusTopic] = {}
    raw_alignments: list[tuple[str, str, str, int, int, int]] = []
    for line_no, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            record = json.loads(line)
        except ValueError:
            raise ParseError("invalid JSON", line_no) from None
        if not isinstance(record, dict):
            raise ParseError("record must be a JSON object", line_no)
        record_type = record.get("record_type")
        if record_type == "topic":
            topic = _parse_topic(record, line_no)
            if topic.topic_id in topics:
                raise ParseError(f"duplicate topic_id: {topic.topic_id}", line_no)
            topics[topic.topic_id] = topic
        elif record_type == "alignment":
            raw_alignments.append(_parse_alignment(record, line_no))
        else:
            raise ParseError(f"unknown record_type: {record_type!r}", line_no)

    pairs: list[AlignedPair] = []
    for topic_id, complex_level, simple_level, complex_idx, simple_idx, line_no in raw_alignments:
        topic = topics.get(topic_id)
        if topic is None:
            raise UnknownTopicError(topic_id)
        if complex_level == simple_level:
            raise ParseError("complex_level and simple_level must differ", line_no)
        for level, idx in ((complex_level, complex_idx), (simple_level, simple_idx)):
            if level not in topic.levels:
                raise AlignmentIndexError(
                    f"line {line_no}: topic {topic_id} has no level {level}"
                )
            if not 0 <= idx < len(topic.levels[level]):
                raise AlignmentIndexError(
                    f"line {line_no}: paragraph index {idx} out of range for {topic_id}/{level}"
                )
        pairs.append(
            AlignedPair(
                topic_id=topic_id,
                complex_level=complex_level,
                simple_level=simple_level,
                complex_paragraph_idx=complex_idx,
                simple_paragraph_idx=simple_idx,
                complex_text=topic.levels[complex_level][complex_idx],
                simple_text=topic.levels[simple_level][simple_idx],
            )
        )
    pairs.sort(
        key=lambda p: (p.topic_id, p.complex_level, p.simple_level, p.complex_paragraph_idx, p.simple_paragraph_idx)
    )
    return Corpus(topics=topics, pairs=tuple(pairs))


def save_corpus(corpus: Corpus, stream: IO[str]) -> None:
    """Write a corpus back to JSONL; load(save(x)) == x."""
    for topic_id in sorted(corpus.topics):
        topic = corpus.topics[topic_id]
        stream.write(
            json.dumps(
                {
                    "record_type": "topic",
                    "topic_id": topic.topic_id,
                    "title": topic.title,
                    "levels": {level: list(paragraphs) for level, paragraphs in topic.levels.items()},
                },
                ensure_ascii=False,
            )
            + "\n"
        )
    for pair in corpus.pairs:
        stream.write(
            json.dumps(
                {
                    "record_type": "alignment",
                    "topic_id": pair.topic_id,
                    "complex_level": pair.complex_level,
                    "simple_level": pair.simple_level,
                    "complex_idx": pair.complex_paragraph_idx,
                    "simple_idx": pair.simple_paragraph_idx,
                },
                ensure_ascii=False,
            )
            + "\n"
        )


def get_pairs(corpus: Corpus, complex_level: str, simple_level: str) -> list[AlignedPair]:
    """All pairs for one level combination, ordered by topic and paragraph."""
    return [
        pair
        for pair in corpus.pairs
        if pair.complex_level == complex_level and pair.simple_level == simple_level
    ]


def save_eval_results(
    path: str | os.PathLike,
    rows: Iterable[CorpusEvalRow] = (),
    ratings: Iterable[RatingRecord] = (),
) -> None:
    """Persist evaluation rows and ratings as JSONL (full float precision)."""
    try:
        with open(path, "w", encoding="utf-8") as fh:
            for row in rows:
                fh.write(
                    json.dumps(
                        {
                            "record_type": "eval_row",
                            "topic_id": row.topic_id,
                            "backend_id": row.backend_id,
                            "bleu": row.bleu,
                        },
                        ensure_ascii=False,
                    )
                    + "\n"
                )
            for rating in ratings:
                fh.write(
                    json.dumps(
                        {
                            "record_type": "rating",
                            "topic_id": rating.topic_id,
                            "rater_id": rating.rater_id,
                            "backend_id": rating.backend_id,
                            "simplicity": rating.simplicity,
                            "fluency": rating.fluency,
                            "adequacy": rating.adequacy,
                        },
                        ensure_ascii=False,
                    )
                    + "\n"
                )
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc


def load_eval_results(path: str | os.PathLike) -> tuple[list[CorpusEvalRow], list[RatingRecord]]:
    rows: list[CorpusEvalRow] = []
    ratings: list[RatingRecord] = []
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for line_no, raw in enumerate(fh, start=1):
                line = raw.strip()
                if not line:
                    continue
                try:
                    record = json.loads(line)
                except ValueError:
                    raise ParseError("invalid JSON", line_no) from None
                record_type = record.get("record_type")
                if record_type == "eval_row":
                    rows.append(
                        CorpusEvalRow(record["topic_id"], record["backend_id"], record["bleu"])
                    )
                elif record_type == "rating":
                    ratings.append(
                        RatingRecord(
                            topic_id=record["topic_id"],
                            rater_id=record["rater_id"],
                            simplicity=record["simplicity"],
                            fluency=record["fluency"],
                            adequacy=record["adequacy"],
                            backend_id=record.get("backend_id", ""),
                        )
                    )
                else:
                    raise ParseError(f"unknown record_type: {record_type!r}", line_no)
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}") from exc
    return rows, ratings
