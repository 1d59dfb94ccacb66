"""Error hierarchy shared across the package.

Every error carries a short machine-parseable ``code`` plus a human
message; the CLI maps the class to its exit code.
"""

from __future__ import annotations


class KwsimError(Exception):
    """Base class for all package errors."""

    code = "error"
    exit_code = 2

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class UsageError(KwsimError):
    """Bad invocation: unknown names, invalid flag combinations."""

    code = "usage"
    exit_code = 1


class ConfigError(UsageError):
    """Benchmark/extract configuration is inconsistent or incomplete."""

    code = "config"


class DataError(KwsimError):
    """Input data is malformed or unusable."""

    code = "data"
    exit_code = 2


class ParseError(DataError):
    """Malformed XML input; message names the byte offset."""

    code = "parse"


class EmptyDocumentError(DataError):
    """Document contains no extractable text after stripping."""

    code = "empty-document"


class EmptyTextError(DataError):
    """An extractor requiring non-empty input received none."""

    code = "empty-text"


class TrainingError(DataError):
    """Training set unusable (empty, single class, missing labels)."""

    code = "training"


class EmbeddingLoadError(DataError):
    """Embedding table file is malformed."""

    code = "embedding-load"


class PartialFailure(KwsimError):
    """Some inputs processed, some failed."""

    code = "partial"
    exit_code = 3
