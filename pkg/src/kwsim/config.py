"""Runtime configuration.

Config files are flat ``key = value`` text (``#`` comments allowed);
command-line flags override file values, which override the defaults
below.  Keys may be namespaced per extractor, e.g. ``yake.n_max``.

Recognized keys:

  n_max               candidate phrase length cap (default 3)
  damping             PageRank damping factor (default 0.85)
  tol                 PageRank convergence tolerance (default 1e-8)
  max_iter            PageRank iteration cap (default 200)
  hac_threshold       topic clustering similarity threshold (default 0.25)
  k                   keywords requested per extractor (default 30)
  repeats             timing repetitions (default 5)
  yake.n_max          per-extractor n_max override (likewise for the others)
  yake.dedup_threshold  near-duplicate suppression threshold (default 0.75)
  kpminer.lasf        least allowable seen frequency (default 3)
  kpminer.lasf_short  lasf for documents under short_doc_words (default 2)
  kpminer.short_doc_words  short-document boundary in words (default 450)
  kpminer.cutoff      first-occurrence word-offset cap (default 400)
  kpminer.sigma       boosting divisor (default 3.0)
  kpminer.sigma_max   boosting clamp (default 3.0)
  multipartite.alpha  first-candidate edge boost (default 1.1)
  nb.bins             Naive Bayes discretization bins (default 5)
  nb.laplace          Laplace smoothing constant (default 1.0)
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from pathlib import Path

from .errors import UsageError

DEFAULTS: dict[str, float | int] = {
    "n_max": 3,
    "damping": 0.85,
    "tol": 1e-8,
    "max_iter": 200,
    "hac_threshold": 0.25,
    "k": 30,
    "repeats": 5,
    "yake.dedup_threshold": 0.75,
    "kpminer.lasf": 3,
    "kpminer.lasf_short": 2,
    "kpminer.short_doc_words": 450,
    "kpminer.cutoff": 400,
    "kpminer.sigma": 3.0,
    "kpminer.sigma_max": 3.0,
    "multipartite.alpha": 1.1,
    "nb.bins": 5,
    "nb.laplace": 1.0,
}

_INT_KEYS = {
    "n_max", "max_iter", "k", "repeats", "kpminer.lasf", "kpminer.lasf_short",
    "kpminer.short_doc_words", "kpminer.cutoff", "nb.bins",
}


@dataclass(frozen=True)
class Config:
    values: dict[str, float | int] = field(default_factory=dict)

    def get(self, key: str, extractor: str | None = None) -> float | int:
        """Look up ``key``, preferring an ``extractor.key`` override."""
        if extractor is not None:
            scoped = f"{extractor}.{key}"
            if scoped in self.values:
                return self.values[scoped]
            if scoped in DEFAULTS:
                return DEFAULTS[scoped]
        if key in self.values:
            return self.values[key]
        if key in DEFAULTS:
            return DEFAULTS[key]
        raise KeyError(key)

    def with_overrides(self, overrides: dict[str, float | int]) -> "Config":
        merged = dict(self.values)
        merged.update(overrides)
        return replace(self, values=merged)


def _coerce(key: str, raw: str) -> float | int:
    base = key.split(".")[-1]
    try:
        if key in _INT_KEYS or base in {k.split(".")[-1] for k in _INT_KEYS}:
            return int(raw)
        return float(raw)
    except ValueError as exc:
        raise UsageError(f"config key {key!r}: cannot parse value {raw!r}") from exc


def load_config(path: str | Path | None = None) -> Config:
    """Parse a flat key/value config file; None yields pure defaults."""
    values: dict[str, float | int] = {}
    if path is not None:
        for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise UsageError(f"config line {lineno}: expected 'key = value', got {line!r}")
            key, _, raw = line.partition("=")
            key = key.strip()
            values[key] = _coerce(key, raw.strip())
    return Config(values=values)
