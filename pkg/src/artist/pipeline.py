"""Simplification backends and their orchestration.

Generative models live behind a small HTTP JSON contract and are never
linked in-process: the model endpoint takes ``{"text", "params"}`` and
returns ``{"simplified"}``; translators take ``{"text", "source_lang",
"target_lang"}`` and return ``{"translation"}``. The mock backend supports a
few named deterministic transforms so tests and fixtures need no network.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace
from typing import IO, Callable, Iterable, Literal

import requests

from .errors import (
    BackendBadResponseError,
    BackendTimeoutError,
    BackendUnavailableError,
    ConfigError,
    EmptyTextError,
    ParseError,
    StageFailedError,
)
from .segmentation import TOKEN_WORD, FrequencyList, split_sentences

BackendKind = Literal["external_model", "round_trip", "lexical", "mock"]

Span = tuple[int, int]

# A stage client: text in, text out, typed backend errors on failure.
TextClient = Callable[[str], str]


@dataclass(frozen=True)
class LexicalParams:
    freq_threshold: float = 1e-5
    max_substitutions_per_sentence: int = 3

    def __post_init__(self) -> None:
        if self.freq_threshold <= 0:
            raise ConfigError("freq_threshold must be positive")
        if self.max_substitutions_per_sentence < 1:
            raise ConfigError("max_substitutions_per_sentence must be >= 1")


@dataclass(frozen=True)
class BackendConfig:
    backend_id: str
    kind: BackendKind
    endpoint_url: str | None = None
    timeout_ms: int = 10_000
    model_params: dict[str, str] = field(default_factory=dict)
    translator_urls: tuple[str, str] | None = None
    lexical_params: LexicalParams | None = None
    inner: "BackendConfig | None" = None

    def __post_init__(self) -> None:
        if self.timeout_ms <= 0:
            raise ConfigError("timeout_ms must be positive")
        if self.kind == "external_model" and not self.endpoint_url:
            raise ConfigError(f"backend {self.backend_id}: external_model needs endpoint_url")
        if self.kind == "round_trip":
            if not self.translator_urls or len(self.translator_urls) != 2:
                raise ConfigError(
                    f"backend {self.backend_id}: round_trip needs forward and backward translator URLs"
                )
            if self.inner is None:
                raise ConfigError(f"backend {self.backend_id}: round_trip needs an inner simplifier")


@dataclass(frozen=True)
class Substitution:
    original: str
    replacement: str
    source_span: Span


@dataclass(frozen=True)
class SimplificationResult:
    source: str
    simplified: str
    backend_id: str
    stage_outputs: tuple[tuple[str, str], ...] = ()
    substitutions: tuple[Substitution, ...] = ()
    considered: tuple[tuple[str, Span], ...] = ()
    latency_ms: int = 0


@dataclass(frozen=True)
class SynonymLexicon:
    entries: dict[str, tuple[str, ...]]

    def __post_init__(self) -> None:
        for word, synonyms in self.entries.items():
            if word in synonyms:
                raise ConfigError(f"lexicon maps {word!r} to itself")


def load_lexicon(stream: IO[str] | Iterable[str]) -> SynonymLexicon:
    """Load a "word<TAB>syn1,syn2" lexicon; multi-word synonyms are rejected
    so substitution stays one-for-one."""
    entries: dict[str, tuple[str, ...]] = {}
    for line_no, raw in enumerate(stream, start=1):
        line = raw.rstrip("\n").rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ParseError(f"expected 'word<TAB>synonyms', got {line!r}", line_no)
        word = parts[0].strip().lower()
        if not word:
            raise ParseError("empty word", line_no)
        synonyms = []
        for synonym in parts[1].split(","):
            synonym = synonym.strip().lower()
            if not synonym:
                continue
            if " " in synonym or "\t" in synonym:
                raise ParseError(f"multi-word synonym not allowed: {synonym!r}", line_no)
            if synonym != word and synonym not in synonyms:
                synonyms.append(synonym)
        if synonyms:
            merged = list(entries.get(word, ()))
            merged.extend(s for s in synonyms if s not in merged)
            entries[word] = tuple(merged)
    return SynonymLexicon(entries=entries)


# --- HTTP clients --------------------------------------------------------------


def _post_json(url: str, payload: dict, timeout_ms: int) -> dict:
    try:
        response = requests.post(url, json=payload, timeout=timeout_ms / 1000.0)
    except requests.Timeout as exc:
        raise BackendTimeoutError(f"no answer from {url} within {timeout_ms} ms") from exc
    except requests.RequestException as exc:
        raise BackendUnavailableError(f"cannot reach {url}: {exc}") from exc
    if response.status_code != 200:
        raise BackendUnavailableError(f"{url} answered HTTP {response.status_code}")
    try:
        body = response.json()
    except ValueError as exc:
        raise BackendBadResponseError(f"{url} returned non-JSON body") from exc
    if not isinstance(body, dict):
        raise BackendBadResponseError(f"{url} returned a non-object JSON body")
    return body


def call_external_model(endpoint: str, text: str, params: dict[str, str], timeout_ms: int) -> str:
    """POST the model contract and return the simplified text."""
    body = _post_json(endpoint, {"text": text, "params": dict(params)}, timeout_ms)
    simplified = body.get("simplified")
    if not isinstance(simplified, str) or not simplified:
        raise BackendBadResponseError(f"{endpoint} returned no 'simplified' text")
    return simplified


def call_translator(
    endpoint: str, text: str, source_lang: str, target_lang: str, timeout_ms: int
) -> str:
    body = _post_json(
        endpoint,
        {"text": text, "source_lang": source_lang, "target_lang": target_lang},
        timeout_ms,
    )
    translation = body.get("translation")
    if not isinstance(translation, str) or not translation:
        raise BackendBadResponseError(f"{endpoint} returned no 'translation' text")
    return translation


# --- Round trip ----------------------------------------------------------------

STAGE_FORWARD = "forward_translate"
STAGE_SIMPLIFY = "simplify"
STAGE_BACKWARD = "back_translate"


def round_trip(
    text: str,
    forward: TextClient,
    simplifier: TextClient,
    backward: TextClient,
    backend_id: str = "round_trip",
) -> SimplificationResult:
    """Translate, simplify in the pivot language, translate back.

    Every stage's output is recorded; the first failing stage aborts the
    chain with its name on the error.
    """
    stages: list[tuple[str, str]] = []
    current = text
    for stage_name, client in (
        (STAGE_FORWARD, forward),
        (STAGE_SIMPLIFY, simplifier),
        (STAGE_BACKWARD, backward),
    ):
        try:
            current = client(current)
        except StageFailedError:
            raise
        except (BackendTimeoutError, BackendUnavailableError, BackendBadResponseError) as exc:
            raise StageFailedError(stage_name, exc) from exc
        if not current:
            raise StageFailedError(
                stage_name, BackendBadResponseError(f"stage {stage_name} produced empty text")
            )
        stages.append((stage_name, current))
    return SimplificationResult(
        source=text,
        simplified=current,
        backend_id=backend_id,
        stage_outputs=tuple(stages),
    )


# --- Lexical backend -----------------------------------------------------------


def _match_case(original: str, replacement: str) -> str:
    if original[:1].isupper():
        return replacement[:1].upper() + replacement[1:]
    return replacement


def lexical_simplify(
    text: str,
    freq: FrequencyList,
    lexicon: SynonymLexicon,
    params: LexicalParams = LexicalParams(),
    backend_id: str = "lexical",
) -> SimplificationResult:
    """Replace rare words with their most frequent strictly-more-frequent synonym.

    One-for-one substitutions only, leftmost-first, capped per sentence.
    Rare words that could not be substituted (no synonym gains frequency, or
    the sentence budget ran out) are reported in ``considered``.
    """
    if not text.strip():
        raise EmptyTextError("empty text")
    if not freq.entries or not lexicon.entries:
        raise ConfigError("lexical backend needs a non-empty frequency list and lexicon")

    substitutions: list[Substitution] = []
    considered: list[tuple[str, Span]] = []
    for sentence in split_sentences(text):
        applied = 0
        for token in sentence.tokens:
            if token.kind != TOKEN_WORD:
                continue
            word = token.surface.lower()
            if freq.relative_frequency(word) >= params.freq_threshold:
                continue
            own_count = freq.count(word)
            candidates = [s for s in lexicon.entries.get(word, ()) if freq.count(s) > own_count]
            if not candidates:
                considered.append((token.surface, token.char_span))
                continue
            if applied >= params.max_substitutions_per_sentence:
                considered.append((token.surface, token.char_span))
                continue
            best = max(candidates, key=lambda s: (freq.count(s), s))
            substitutions.append(
                Substitution(token.surface, _match_case(token.surface, best), token.char_span)
            )
            applied += 1

    pieces: list[str] = []
    cursor = 0
    for sub in substitutions:
        start, end = sub.source_span
        pieces.append(text[cursor:start])
        pieces.append(sub.replacement)
        cursor = end
    pieces.append(text[cursor:])
    return SimplificationResult(
        source=text,
        simplified="".join(pieces),
        backend_id=backend_id,
        substitutions=tuple(substitutions),
        considered=tuple(considered),
    )


# --- Mock backend ---------------------------------------------------------------


def _transform_identity(text: str, params: dict[str, str]) -> str:
    return text


def _transform_upper(text: str, params: dict[str, str]) -> str:
    return text.upper()


def _transform_drop_every_second_word(text: str, params: dict[str, str]) -> str:
    words = text.split()
    return " ".join(words[::2])


def _transform_replace(text: str, params: dict[str, str]) -> str:
    return text.replace(params.get("replace_from", ""), params.get("replace_to", ""))


_MOCK_TRANSFORMS = {
    "identity": _transform_identity,
    "upper": _transform_upper,
    "drop_every_second_word": _transform_drop_every_second_word,
    "replace": _transform_replace,
}


def mock_simplify(text: str, params: dict[str, str]) -> str:
    name = params.get("transform", "identity")
    transform = _MOCK_TRANSFORMS.get(name)
    if transform is None:
        raise ConfigError(f"unknown mock transform: {name}")
    return transform(text, params)


# --- Dispatch -------------------------------------------------------------------


@dataclass
class BackendDeps:
    """Shared resources some backends need (lexical: both fields)."""

    freq: FrequencyList | None = None
    lexicon: SynonymLexicon | None = None


def _client_for(cfg: BackendConfig, deps: BackendDeps | None) -> TextClient:
    return lambda text: simplify(text, cfg, deps).simplified


def simplify(
    text: str, cfg: BackendConfig, deps: BackendDeps | None = None
) -> SimplificationResult:
    """Dispatch one simplification call to the configured backend."""
    if not text.strip():
        raise EmptyTextError("empty text")
    started = time.monotonic()
    if cfg.kind == "mock":
        result = SimplificationResult(
            source=text,
            simplified=mock_simplify(text, cfg.model_params),
            backend_id=cfg.backend_id,
        )
    elif cfg.kind == "external_model":
        assert cfg.endpoint_url is not None
        simplified = call_external_model(cfg.endpoint_url, text, cfg.model_params, cfg.timeout_ms)
        result = SimplificationResult(source=text, simplified=simplified, backend_id=cfg.backend_id)
    elif cfg.kind == "round_trip":
        assert cfg.translator_urls is not None and cfg.inner is not None
        source_lang = cfg.model_params.get("source_lang", "nl")
        pivot_lang = cfg.model_params.get("pivot_lang", "en")
        forward_url, backward_url = cfg.translator_urls

        def forward(t: str) -> str:
            return call_translator(forward_url, t, source_lang, pivot_lang, cfg.timeout_ms)

        def backward(t: str) -> str:
            return call_translator(backward_url, t, pivot_lang, source_lang, cfg.timeout_ms)

        result = round_trip(text, forward, _client_for(cfg.inner, deps), backward, cfg.backend_id)
    elif cfg.kind == "lexical":
        if deps is None or deps.freq is None or deps.lexicon is None:
            raise ConfigError(f"backend {cfg.backend_id}: lexical needs a frequency list and lexicon")
        result = lexical_simplify(
            text, deps.freq, deps.lexicon, cfg.lexical_params or LexicalParams(), cfg.backend_id
        )
    else:
        raise ConfigError(f"unknown backend kind: {cfg.kind}")
    if not result.simplified:
        raise BackendBadResponseError(f"backend {cfg.backend_id} produced empty output")
    latency_ms = int((time.monotonic() - started) * 1000)
    return replace(result, latency_ms=latency_ms)


def probe_backend(cfg: BackendConfig, timeout_ms: int = 1000) -> bool:
    """Best-effort reachability check; in-process backends are always up."""
    if cfg.kind in ("mock", "lexical"):
        return True
    urls: list[str] = []
    if cfg.kind == "external_model" and cfg.endpoint_url:
        urls = [cfg.endpoint_url]
    elif cfg.kind == "round_trip" and cfg.translator_urls:
        urls = list(cfg.translator_urls)
        if cfg.inner is not None and cfg.inner.endpoint_url:
            urls.append(cfg.inner.endpoint_url)
    for url in urls:
        try:
            # Any HTTP answer counts as reachable; only transport failures don't.
            requests.get(url, timeout=timeout_ms / 1000.0)
        except requests.RequestException:
            return False
    return True
