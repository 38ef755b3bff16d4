import json
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from artist.config import ServerConfig, Workbench
from artist.pipeline import BackendConfig
from artist.service import create_app

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"

CORPUS_PATH = FIXTURES / "corpus_fixture.jsonl"
FREQ_PATH = FIXTURES / "frequency_nl.tsv"
LEXICON_PATH = FIXTURES / "lexicon_nl.tsv"
FAMILIAR_PATH = FIXTURES / "familiar_nl.txt"


def default_backends() -> dict[str, BackendConfig]:
    return {
        "mock": BackendConfig(backend_id="mock", kind="mock"),
        "dropper": BackendConfig(
            backend_id="dropper",
            kind="mock",
            model_params={"transform": "drop_every_second_word"},
        ),
        "lexical": BackendConfig(backend_id="lexical", kind="lexical"),
    }


def make_workbench(tmp_path, extra_backends: dict[str, BackendConfig] | None = None) -> Workbench:
    backends = default_backends()
    if extra_backends:
        backends.update(extra_backends)
    config = ServerConfig(
        language="nl",
        corpora={"cvn_fixture": str(CORPUS_PATH)},
        ratings_path=str(tmp_path / "ratings.jsonl"),
        frequency_list=str(FREQ_PATH),
        familiar_words=str(FAMILIAR_PATH),
        lexicon=str(LEXICON_PATH),
        backends=backends,
    )
    return Workbench.from_config(config)


@pytest.fixture
def workbench(tmp_path) -> Workbench:
    return make_workbench(tmp_path)


@pytest.fixture
def client(workbench) -> TestClient:
    return TestClient(create_app(workbench), raise_server_exceptions=False)


def write_cli_config(tmp_path, extra_backends: dict[str, dict] | None = None) -> Path:
    """A config file equivalent to the test workbench, for CLI runs."""
    backends: dict[str, dict] = {
        "mock": {"kind": "mock"},
        "dropper": {"kind": "mock", "model_params": {"transform": "drop_every_second_word"}},
        "lexical": {"kind": "lexical"},
    }
    if extra_backends:
        backends.update(extra_backends)
    config = {
        "language": "nl",
        "corpora": {"cvn_fixture": str(CORPUS_PATH)},
        "ratings_path": str(tmp_path / "ratings.jsonl"),
        "frequency_list": str(FREQ_PATH),
        "familiar_words": str(FAMILIAR_PATH),
        "lexicon": str(LEXICON_PATH),
        "backends": backends,
    }
    path = tmp_path / "config.json"
    path.write_text(json.dumps(config), encoding="utf-8")
    return path


@pytest.fixture
def cli_config(tmp_path) -> Path:
    return write_cli_config(tmp_path)
