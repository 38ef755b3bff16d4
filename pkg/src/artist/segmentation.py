"""Deterministic tokenization, sentence splitting, and syllable counting.

Everything here is rule-based so the readability formulas built on top are
reproducible: the same text always yields the same census. Offsets are
character offsets into the text that was segmented, using half-open
``[start, end)`` spans, and every token surface equals the source substring
at its span.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass, field
from typing import IO, Iterable, Literal

from .errors import EmptyTextError, ParseError

Language = Literal["nl", "en"]

TOKEN_WORD = "word"
TOKEN_NUMBER = "number"
TOKEN_PUNCTUATION = "punctuation"
TOKEN_SYMBOL = "symbol"

TokenKind = Literal["word", "number", "punctuation", "symbol"]

# Dutch abbreviations that must not terminate a sentence. Configurable per
# call; sentence counts feed SMOG and Spache directly, so this list matters.
DEFAULT_ABBREVIATIONS = frozenset(
    {
        "bijv.",
        "blz.",
        "ca.",
        "dhr.",
        "dr.",
        "drs.",
        "enz.",
        "etc.",
        "ir.",
        "jl.",
        "jr.",
        "mevr.",
        "mr.",
        "nl.",
        "nr.",
        "o.a.",
        "prof.",
        "st.",
        "t.o.v.",
        "vgl.",
        "zgn.",
    }
)

_APOSTROPHES = "'’"

# Digits with optional decimal/thousands groups and an optional Dutch ordinal
# suffix ("18e", "2de", "1ste") that must not run into a following letter.
_NUMBER_RE = re.compile(r"\d+(?:[.,]\d+)*(?:(?:ste|de|e)(?![^\W\d_]))?")

# Letter runs with internal apostrophes/hyphens ("auto's", "douane-unie").
_WORD_CORE_RE = re.compile(rf"[^\W\d_]+(?:[{_APOSTROPHES}\-][^\W\d_]+)*")


@dataclass(frozen=True)
class Token:
    surface: str
    char_span: tuple[int, int]
    kind: TokenKind


@dataclass(frozen=True)
class Sentence:
    """A sentence with its tokens; spans index the original document."""

    text: str
    tokens: tuple[Token, ...]
    char_span: tuple[int, int]


@dataclass(frozen=True)
class TextStats:
    """Counts feeding every readability formula.

    Words are tokens of kind word or number; numbers count one syllable each.
    """

    n_sentences: int
    n_words: int
    n_syllables: int
    n_polysyllables: int
    language: Language


@dataclass(frozen=True)
class FrequencyList:
    """Word occurrence counts loaded from a corpus frequency TSV."""

    entries: dict[str, int]
    total: int
    source_name: str = ""

    def relative_frequency(self, word: str) -> float:
        """Relative frequency of ``word`` (case-folded); absent words are 0."""
        if self.total == 0:
            return 0.0
        return self.entries.get(word.lower(), 0) / self.total

    def count(self, word: str) -> int:
        return self.entries.get(word.lower(), 0)


def _clitic_length(text: str, pos: int) -> int:
    """Length of the first letter segment after an apostrophe at ``pos``.

    Dutch clitics ('s, 't, 'n) keep their leading apostrophe; longer runs
    treat the apostrophe as quotation punctuation.
    """
    m = _WORD_CORE_RE.match(text, pos + 1)
    if m is None:
        return 0
    first_segment = re.match(r"[^\W\d_]+", m.group(0))
    assert first_segment is not None
    return len(first_segment.group(0))


def tokenize(text: str, language: Language = "nl") -> list[Token]:
    """Split ``text`` into word/number/punctuation/symbol tokens.

    Maximal letter runs (with internal apostrophes and hyphens, plus the
    Dutch clitic apostrophe as in "'s-Gravenhage") become words, maximal
    digit runs with an optional ordinal suffix become numbers, and every
    other non-whitespace character becomes a single punctuation or symbol
    token.
    """
    tokens: list[Token] = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        m = _NUMBER_RE.match(text, pos)
        if m is not None:
            tokens.append(Token(m.group(0), (pos, m.end()), TOKEN_NUMBER))
            pos = m.end()
            continue
        if ch in _APOSTROPHES and 1 <= _clitic_length(text, pos) <= 2:
            m = _WORD_CORE_RE.match(text, pos + 1)
            assert m is not None
            tokens.append(Token(text[pos : m.end()], (pos, m.end()), TOKEN_WORD))
            pos = m.end()
            continue
        m = _WORD_CORE_RE.match(text, pos)
        if m is not None:
            tokens.append(Token(m.group(0), (pos, m.end()), TOKEN_WORD))
            pos = m.end()
            continue
        kind = TOKEN_PUNCTUATION if unicodedata.category(ch).startswith("P") else TOKEN_SYMBOL
        tokens.append(Token(ch, (pos, pos + 1), kind))
        pos += 1
    return tokens


_TERMINATORS = ".!?"


def _token_before(text: str, end: int) -> str:
    """The whitespace-delimited chunk ending at ``end`` (terminator included)."""
    m = re.search(r"\S+$", text[max(0, end - 40) : end])
    return m.group(0) if m else ""


def split_sentences(
    text: str,
    language: Language = "nl",
    abbreviations: frozenset[str] = DEFAULT_ABBREVIATIONS,
) -> list[Sentence]:
    """Split ``text`` into sentences with document-relative spans.

    A split happens after ``.!?`` when followed by whitespace and then a
    capital letter or digit, or at end of text. Configured abbreviations do
    not split; decimal points never match the whitespace requirement. A
    trailing fragment without terminator forms a final sentence.
    """
    tokens = tokenize(text, language)
    if not tokens:
        return []

    boundaries: list[int] = []  # exclusive end offset of each sentence
    for i, ch in enumerate(text):
        if ch not in _TERMINATORS:
            continue
        rest = text[i + 1 :]
        at_end = rest.strip() == ""
        nxt = re.match(r"\s+(\S)", rest)
        follows = nxt is not None and (nxt.group(1).isupper() or nxt.group(1).isdigit())
        if not (at_end or follows):
            continue
        if ch == "." and _token_before(text, i + 1).lower() in abbreviations:
            continue
        boundaries.append(i + 1)

    last_token_end = tokens[-1].char_span[1]
    if not boundaries or boundaries[-1] < last_token_end:
        boundaries.append(last_token_end)

    sentences: list[Sentence] = []
    tok_idx = 0
    cursor = 0
    for bound in boundaries:
        sent_tokens: list[Token] = []
        while tok_idx < len(tokens) and tokens[tok_idx].char_span[1] <= bound:
            sent_tokens.append(tokens[tok_idx])
            tok_idx += 1
        if not sent_tokens:
            continue
        start = sent_tokens[0].char_span[0]
        end = sent_tokens[-1].char_span[1]
        sentences.append(Sentence(text[start:end], tuple(sent_tokens), (start, end)))
        cursor = end
    return sentences


_VOWELS_NL = set("aeiouyáéíóúàèìòùäëïöü")
_VOWELS_EN = set("aeiouyáéíóú")

# U+0133 stands in for the "ij" digraph so it scans as one vowel unit.
_IJ_STANDIN = "ĳ"


def _vowel_groups(word: str, vowels: set[str]) -> int:
    groups = 0
    in_group = False
    for ch in word:
        if ch in vowels:
            if not in_group:
                groups += 1
                in_group = True
        else:
            in_group = False
    return groups


def count_syllables(word: str, language: Language = "nl") -> int:
    """Count syllables as maximal vowel groups under language rules.

    Dutch treats "ij" as a single vowel unit; digraphs and diphthongs fall
    inside one vowel group and so count once. English drops a silent final
    "e" and counts "le" after a consonant. Words always count at least one
    syllable.
    """
    if not any(ch.isalpha() for ch in word):
        raise EmptyTextError(f"word without letters: {word!r}")
    # Non-letters (hyphens, apostrophes) break vowel groups: "douane-unie"
    # scans as dou-a-ne + u-nie, not with "eu" merged across the hyphen.
    w = word.lower()

    if language == "nl":
        w = w.replace("ij", _IJ_STANDIN)
        vowels = _VOWELS_NL | {_IJ_STANDIN}
        return max(1, _vowel_groups(w, vowels))

    count = 0
    if len(w) >= 3 and w.endswith("le") and w[-3].isalpha() and w[-3] not in _VOWELS_EN:
        count += 1
        w = w[:-2]
    elif len(w) >= 2 and w.endswith("e") and w[-2].isalpha():
        w = w[:-1]
    count += _vowel_groups(w, _VOWELS_EN)
    return max(1, count)


def text_stats(text: str, language: Language = "nl") -> TextStats:
    """Census a text: sentences, words, syllables, polysyllables.

    Raises :class:`EmptyTextError` when the text holds no word or number
    tokens, so every returned census satisfies n_words >= n_sentences >= 1.
    """
    if not text.strip():
        raise EmptyTextError("empty text")
    sentences = split_sentences(text, language)
    n_words = 0
    n_syllables = 0
    n_polysyllables = 0
    for sentence in sentences:
        for token in sentence.tokens:
            if token.kind == TOKEN_WORD:
                # Word tokens without alphabetic characters (exotic
                # alphanumerics) census like numbers: one syllable.
                if any(c.isalpha() for c in token.surface):
                    syl = count_syllables(token.surface, language)
                else:
                    syl = 1
                n_words += 1
                n_syllables += syl
                if syl >= 3:
                    n_polysyllables += 1
            elif token.kind == TOKEN_NUMBER:
                n_words += 1
                n_syllables += 1
    if n_words == 0:
        raise EmptyTextError("text contains no words")
    return TextStats(
        n_sentences=len(sentences),
        n_words=n_words,
        n_syllables=n_syllables,
        n_polysyllables=n_polysyllables,
        language=language,
    )


def load_frequency_list(stream: IO[str] | Iterable[str], source_name: str = "") -> FrequencyList:
    """Load a "word<TAB>count" frequency list; merges case-folded duplicates.

    Lines starting with ``#`` and blank lines are skipped. Counts below one
    and malformed lines raise :class:`ParseError` with the line number.
    """
    entries: dict[str, int] = {}
    for line_no, raw in enumerate(stream, start=1):
        line = raw.rstrip("\n").rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ParseError(f"expected 'word<TAB>count', got {line!r}", line_no)
        word, count_text = parts[0].strip(), parts[1].strip()
        if not word:
            raise ParseError("empty word", line_no)
        try:
            count = int(count_text)
        except ValueError:
            raise ParseError(f"count is not an integer: {count_text!r}", line_no) from None
        if count < 1:
            raise ParseError(f"count must be >= 1, got {count}", line_no)
        key = word.lower()
        entries[key] = entries.get(key, 0) + count
    return FrequencyList(entries=entries, total=sum(entries.values()), source_name=source_name)
