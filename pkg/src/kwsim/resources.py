"""Loaders for the line-oriented resource files bundled with the package.

All lists are config-overridable: each loader accepts an optional path
pointing at a user-supplied replacement file in the same format
(UTF-8, one entry per line, ``#`` comments ignored).
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources as importlib_resources
from pathlib import Path


def _package_file(name: str) -> str:
    ref = importlib_resources.files("kwsim").joinpath("resources", name)
    return ref.read_text(encoding="utf-8")


def data_path(*parts: str) -> Path:
    """Absolute path of a bundled data file (mini-corpus, embeddings, ...)."""
    ref = importlib_resources.files("kwsim").joinpath("data", *parts)
    return Path(str(ref))


def _read_lines(name: str, override: str | Path | None) -> list[str]:
    if override is not None:
        text = Path(override).read_text(encoding="utf-8")
    else:
        text = _package_file(name)
    out = []
    for line in text.splitlines():
        if line.startswith("#"):
            continue
        line = line.strip()
        if line:
            out.append(line)
    return out


@lru_cache(maxsize=None)
def _default_stopwords() -> frozenset[str]:
    return frozenset(_read_lines("stopwords.txt", None))


def stopwords(path: str | Path | None = None) -> frozenset[str]:
    if path is None:
        return _default_stopwords()
    return frozenset(_read_lines("stopwords.txt", path))


@lru_cache(maxsize=None)
def _default_negation_cues() -> frozenset[str]:
    return frozenset(_read_lines("negation_cues.txt", None))


def negation_cues(path: str | Path | None = None) -> frozenset[str]:
    if path is None:
        return _default_negation_cues()
    return frozenset(_read_lines("negation_cues.txt", path))


@lru_cache(maxsize=None)
def _default_abbreviations() -> tuple[str, ...]:
    # Keep trailing periods: entries are matched against text suffixes.
    entries = []
    for line in _package_file("abbreviations.txt").splitlines():
        if line.startswith("#") or not line.strip():
            continue
        entries.append(line.strip())
    return tuple(entries)


def abbreviations(path: str | Path | None = None) -> tuple[str, ...]:
    if path is None:
        return _default_abbreviations()
    entries = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if line.startswith("#") or not line.strip():
            continue
        entries.append(line.strip())
    return tuple(entries)


@lru_cache(maxsize=None)
def _default_char_substitutions() -> tuple[tuple[str, str], ...]:
    return _parse_subst(_package_file("char_substitutions.tsv"))


def _parse_subst(text: str) -> tuple[tuple[str, str], ...]:
    pairs = []
    for line in text.splitlines():
        if line.startswith("#") or not line.strip("\n"):
            continue
        src, _, dst = line.partition("\t")
        if src:
            pairs.append((src, dst))
    return tuple(pairs)


def char_substitutions(path: str | Path | None = None) -> tuple[tuple[str, str], ...]:
    if path is None:
        return _default_char_substitutions()
    return _parse_subst(Path(path).read_text(encoding="utf-8"))
