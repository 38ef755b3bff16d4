"""Batch command line: assess files, simplify files, evaluate corpora.

Exit codes: 0 success, 1 usage, 2 data error, 3 backend error. Data goes to
stdout, logs and findings to stderr, and ``--format json`` bodies are byte
for byte the same as the matching service endpoint's response.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from .config import Workbench, load_workbench
from .diagnostics import run_diagnostics
from .errors import ArtistError, BackendError, UnknownMetricError
from .evaluation import EvaluationRequest, evaluate_corpus
from .corpus import load_corpus
from .pipeline import BackendConfig, simplify as run_simplify
from .readability import assess as run_assess, load_avi_table, load_familiar_words
from .serialize import canonical_json, evaluation_payload, finding_payload, report_payload

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_BACKEND = 3


def _read_text(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


@click.group(name="artist")
def cli() -> None:
    """Text simplification workbench."""


@cli.command(name="assess")
@click.option("--lang", "language", type=click.Choice(["nl", "en"]), default="nl", show_default=True)
@click.option("--metrics", "metrics_csv", required=True, help="Comma-separated metric names.")
@click.option("--format", "fmt", type=click.Choice(["tsv", "json"]), default="tsv", show_default=True)
@click.option("--familiar", "familiar_path", type=click.Path(exists=True), default=None,
              help="Familiar-word list for Spache (one word per line).")
@click.option("--avi-table", "avi_path", type=click.Path(exists=True), default=None,
              help="AVI threshold table TSV; packaged default otherwise.")
@click.argument("file", type=click.Path(exists=True))
def assess_command(language, metrics_csv, fmt, familiar_path, avi_path, file) -> None:
    """Score FILE with the requested readability metrics."""
    metrics = [m for m in (part.strip() for part in metrics_csv.split(",")) if m]
    if not metrics:
        raise UnknownMetricError("no metrics requested")
    familiar = frozenset()
    if familiar_path:
        with open(familiar_path, "r", encoding="utf-8") as fh:
            familiar = load_familiar_words(fh)
    table = None
    if avi_path:
        with open(avi_path, "r", encoding="utf-8") as fh:
            table = load_avi_table(fh)
    report = run_assess(_read_text(file), language, metrics, familiar=familiar, table=table)
    if fmt == "json":
        sys.stdout.write(canonical_json(report_payload(report)))
    else:
        for metric_id in sorted(report.text_scores):
            click.echo(f"{metric_id}\t{report.text_scores[metric_id]}")
        if report.sentence_scores is not None:
            for index, score in report.sentence_scores:
                click.echo(f"spache:{index}\t{score}")
    for warning in report.warnings:
        click.echo(f"warning: {warning}", err=True)


@cli.command(name="simplify")
@click.option("--backend", "backend_id", required=True)
@click.option("--config", "config_path", required=True, type=click.Path(exists=True))
@click.option("--diagnostics", "with_diagnostics", is_flag=True)
@click.argument("file", type=click.Path(exists=True))
def simplify_command(backend_id, config_path, with_diagnostics, file) -> None:
    """Simplify FILE with a configured backend; findings go to stderr as JSON."""
    workbench = load_workbench(config_path)
    backend = workbench.config.backends.get(backend_id)
    if backend is None:
        raise click.UsageError(f"unknown backend: {backend_id}")
    text = _read_text(file)
    result = run_simplify(text, backend, workbench.deps)
    sys.stdout.write(result.simplified if result.simplified.endswith("\n") else result.simplified + "\n")
    if with_diagnostics:
        findings = run_diagnostics(
            text, result.simplified, workbench.freq, workbench.config.diagnostics
        )
        sys.stderr.write(canonical_json([finding_payload(f) for f in findings]))


def _builtin_backends() -> dict[str, BackendConfig]:
    # Without a config file only the identity mock is available.
    return {"mock": BackendConfig(backend_id="mock", kind="mock")}


@cli.command(name="eval")
@click.option("--corpus", "corpus_path", required=True, type=click.Path(exists=True))
@click.option("--backend", "backend_id", required=True)
@click.option("--config", "config_path", type=click.Path(exists=True), default=None,
              help="Workbench config with the backend registry.")
@click.option("--metric", type=click.Choice(["bleu", "sari"]), default="bleu", show_default=True)
@click.option("--mode", type=click.Choice(["pooled", "mean_of_pairs"]), default="pooled", show_default=True)
@click.option("--top", "top_k", type=int, default=5, show_default=True)
@click.option("--complex-level", default="upper_secondary", show_default=True)
@click.option("--simple-level", default="lower_secondary", show_default=True)
@click.option("--jobs", type=int, default=1, show_default=True,
              help="Parallel backend calls; output order is fixed by the final sort.")
@click.option("--format", "fmt", type=click.Choice(["tsv", "json"]), default="tsv", show_default=True)
def eval_command(
    corpus_path, backend_id, config_path, metric, mode, top_k, complex_level, simple_level, jobs, fmt
) -> None:
    """Rank corpus topics by simplification quality under one backend."""
    if config_path:
        workbench = load_workbench(config_path)
        backends = workbench.config.backends
        deps = workbench.deps
    else:
        workbench = None
        backends = _builtin_backends()
        deps = None
    backend = backends.get(backend_id)
    if backend is None:
        raise click.UsageError(f"unknown backend: {backend_id}")
    with open(corpus_path, "r", encoding="utf-8") as fh:
        corpus = load_corpus(fh)
    request = EvaluationRequest(
        backend=backend,
        complex_level=complex_level,
        simple_level=simple_level,
        metric=metric,
        mode=mode,
        top_k=top_k,
        jobs=jobs,
    )
    rows, failed = evaluate_corpus(corpus, request, deps)
    if fmt == "json":
        sys.stdout.write(canonical_json(evaluation_payload(rows, failed)))
    else:
        click.echo("topic\tscore")
        for row in rows:
            click.echo(f"{row.topic_id}\t{row.bleu:.3f}")
        for topic_id in failed:
            click.echo(f"failed: {topic_id}", err=True)


@cli.command(name="serve")
@click.option("--config", "config_path", required=True, type=click.Path(exists=True))
def serve_command(config_path) -> None:
    """Run the HTTP service."""
    import uvicorn

    from .service import create_app

    workbench = load_workbench(config_path)
    host, _, port = workbench.config.listen_addr.partition(":")
    uvicorn.run(create_app(workbench), host=host or "127.0.0.1", port=int(port or 8040))


def run(argv: list[str] | None = None) -> int:
    """Dispatch with the documented exit-code mapping."""
    try:
        cli.main(args=argv, standalone_mode=False)
        return EXIT_OK
    except click.UsageError as exc:
        exc.show(file=sys.stderr)
        return EXIT_USAGE
    except click.ClickException as exc:
        exc.show(file=sys.stderr)
        return EXIT_USAGE
    except click.exceptions.Abort:
        return EXIT_USAGE
    except UnknownMetricError as exc:
        click.echo(f"error: {exc}", err=True)
        click.echo("usage: artist assess --lang <nl|en> --metrics <csv> [--format tsv|json] <file>", err=True)
        return EXIT_USAGE
    except BackendError as exc:
        click.echo(f"backend error: {exc}", err=True)
        return EXIT_BACKEND
    except ArtistError as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_DATA
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_DATA


def main() -> None:
    sys.exit(run())
