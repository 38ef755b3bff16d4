"""Workbench configuration: one JSON file describing backends and resources.

Paths inside the file resolve relative to the file's directory. Environment
variables override exactly two things: ``ARTIST_LISTEN_ADDR`` (listen
address) and ``ARTIST_BACKEND_<ID>_URL`` (a backend's endpoint URL).
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass, field
from pathlib import Path

from .corpus import Corpus, load_corpus
from .diagnostics import DiagnosticsConfig
from .errors import ConfigError
from .pipeline import BackendConfig, BackendDeps, LexicalParams, SynonymLexicon, load_lexicon
from .readability import AviTable, default_avi_table, load_avi_table, load_familiar_words
from .segmentation import FrequencyList, Language, load_frequency_list

ENV_LISTEN_ADDR = "ARTIST_LISTEN_ADDR"
ENV_BACKEND_URL_TEMPLATE = "ARTIST_BACKEND_{id}_URL"


@dataclass
class ServerConfig:
    listen_addr: str = "127.0.0.1:8040"
    language: Language = "nl"
    corpora: dict[str, str] = field(default_factory=dict)
    ratings_path: str | None = None
    frequency_list: str | None = None
    familiar_words: str | None = None
    lexicon: str | None = None
    avi_table: str | None = None
    diagnostics: DiagnosticsConfig = field(default_factory=DiagnosticsConfig)
    backends: dict[str, BackendConfig] = field(default_factory=dict)


def _env_backend_url(backend_id: str) -> str | None:
    key = ENV_BACKEND_URL_TEMPLATE.format(id=re.sub(r"[^A-Za-z0-9]", "_", backend_id).upper())
    return os.environ.get(key)


def _parse_backend(backend_id: str, raw: dict) -> BackendConfig:
    if not isinstance(raw, dict):
        raise ConfigError(f"backend {backend_id}: expected an object")
    kind = raw.get("kind")
    if kind not in ("external_model", "round_trip", "lexical", "mock"):
        raise ConfigError(f"backend {backend_id}: unknown kind {kind!r}")
    translator_urls = raw.get("translator_urls")
    if translator_urls is not None:
        if not isinstance(translator_urls, (list, tuple)) or len(translator_urls) != 2:
            raise ConfigError(f"backend {backend_id}: translator_urls needs [forward, backward]")
        translator_urls = (str(translator_urls[0]), str(translator_urls[1]))
    lexical_params = None
    if raw.get("lexical_params") is not None:
        lp = raw["lexical_params"]
        lexical_params = LexicalParams(
            freq_threshold=float(lp.get("freq_threshold", 1e-5)),
            max_substitutions_per_sentence=int(lp.get("max_substitutions_per_sentence", 3)),
        )
    inner = None
    if raw.get("inner") is not None:
        inner = _parse_backend(f"{backend_id}.inner", raw["inner"])
    endpoint_url = _env_backend_url(backend_id) or raw.get("endpoint_url")
    return BackendConfig(
        backend_id=backend_id,
        kind=kind,
        endpoint_url=endpoint_url,
        timeout_ms=int(raw.get("timeout_ms", 10_000)),
        model_params={str(k): str(v) for k, v in raw.get("model_params", {}).items()},
        translator_urls=translator_urls,
        lexical_params=lexical_params,
        inner=inner,
    )


def load_config(path: str | os.PathLike) -> ServerConfig:
    base = Path(path).parent
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except ValueError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError("config root must be an object")

    def resolve(value: str | None) -> str | None:
        if value is None:
            return None
        return str((base / value).resolve()) if not os.path.isabs(value) else value

    language = raw.get("language", "nl")
    if language not in ("nl", "en"):
        raise ConfigError(f"language must be nl or en, got {language!r}")

    diagnostics_raw = raw.get("diagnostics", {})
    try:
        diagnostics = DiagnosticsConfig(**diagnostics_raw)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bad diagnostics block: {exc}") from exc

    backends = {
        backend_id: _parse_backend(backend_id, spec)
        for backend_id, spec in raw.get("backends", {}).items()
    }
    return ServerConfig(
        listen_addr=os.environ.get(ENV_LISTEN_ADDR, raw.get("listen_addr", "127.0.0.1:8040")),
        language=language,
        corpora={cid: resolve(p) for cid, p in raw.get("corpora", {}).items()},
        ratings_path=resolve(raw.get("ratings_path")),
        frequency_list=resolve(raw.get("frequency_list")),
        familiar_words=resolve(raw.get("familiar_words")),
        lexicon=resolve(raw.get("lexicon")),
        avi_table=resolve(raw.get("avi_table")),
        diagnostics=diagnostics,
        backends=backends,
    )


@dataclass
class Workbench:
    """Loaded runtime: config plus every file-backed resource, ready to use."""

    config: ServerConfig
    corpora: dict[str, Corpus]
    freq: FrequencyList | None
    familiar: frozenset[str]
    avi_table: AviTable
    lexicon: SynonymLexicon | None

    @property
    def deps(self) -> BackendDeps:
        return BackendDeps(freq=self.freq, lexicon=self.lexicon)

    @classmethod
    def from_config(cls, config: ServerConfig) -> "Workbench":
        corpora = {}
        for corpus_id, corpus_path in config.corpora.items():
            with open(corpus_path, "r", encoding="utf-8") as fh:
                corpora[corpus_id] = load_corpus(fh)
        freq = None
        if config.frequency_list:
            with open(config.frequency_list, "r", encoding="utf-8") as fh:
                freq = load_frequency_list(fh, source_name=config.frequency_list)
        familiar: frozenset[str] = frozenset()
        if config.familiar_words:
            with open(config.familiar_words, "r", encoding="utf-8") as fh:
                familiar = load_familiar_words(fh)
        if config.avi_table:
            with open(config.avi_table, "r", encoding="utf-8") as fh:
                avi_table = load_avi_table(fh)
        else:
            avi_table = default_avi_table()
        lexicon = None
        if config.lexicon:
            with open(config.lexicon, "r", encoding="utf-8") as fh:
                lexicon = load_lexicon(fh)
        return cls(
            config=config,
            corpora=corpora,
            freq=freq,
            familiar=familiar,
            avi_table=avi_table,
            lexicon=lexicon,
        )


def load_workbench(path: str | os.PathLike) -> Workbench:
    return Workbench.from_config(load_config(path))
