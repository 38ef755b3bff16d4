"""Typed errors raised across the workbench.

Everything derives from :class:`ArtistError` so callers can catch the whole
family. The service layer maps these onto HTTP statuses; the CLI maps them
onto exit codes.
"""

from __future__ import annotations


class ArtistError(Exception):
    """Base class for all workbench errors."""


class EmptyTextError(ArtistError):
    """Input text is empty (or contains no words to census)."""


class DegenerateStatsError(ArtistError):
    """Text statistics violate a metric's preconditions (e.g. zero words)."""


class ParseError(ArtistError):
    """A line-oriented input file is malformed."""

    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class EmptyTableError(ArtistError):
    """A reading-level threshold table has no rows."""


class UnknownMetricError(ArtistError):
    """A requested readability metric id is not recognised."""


class EmptyCandidateError(ArtistError):
    """BLEU candidate text is empty."""


class NoReferencesError(ArtistError):
    """An evaluation was requested without any reference texts."""


class EmptyInputError(ArtistError):
    """A required evaluation input (source/candidate) is empty."""


class EmptyScopeError(ArtistError):
    """Rating aggregation was requested over an empty record set."""


class UnknownTopicError(ArtistError):
    """An alignment record references a topic id absent from the corpus."""

    def __init__(self, topic_id: str):
        super().__init__(f"unknown topic: {topic_id}")
        self.topic_id = topic_id


class AlignmentIndexError(ArtistError):
    """An alignment record's paragraph index is outside the level's range."""


class BackendError(ArtistError):
    """Base class for simplification-backend failures."""


class BackendUnavailableError(BackendError):
    """Backend endpoint refused the connection or answered non-2xx."""


class BackendTimeoutError(BackendError):
    """Backend did not answer within the configured timeout."""


class BackendBadResponseError(BackendError):
    """Backend answered with a payload that violates its contract."""


class StageFailedError(BackendError):
    """A round-trip chain stage failed; carries the stage name and cause."""

    def __init__(self, stage_name: str, cause: BackendError):
        super().__init__(f"stage {stage_name!r} failed: {cause}")
        self.stage_name = stage_name
        self.cause = cause


class ConfigError(ArtistError):
    """Workbench configuration file is invalid."""


class IoError(ArtistError):
    """Reading or writing a results file failed."""
