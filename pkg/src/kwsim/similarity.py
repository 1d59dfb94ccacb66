"""Similarity indexes between keyword sets: token-set Jaccard,
bag-of-words cosine, and cosine over averaged word vectors."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import EmbeddingLoadError
from .extract.base import KeywordSet
from .textcore import tokenize


@dataclass
class TokenBag:
    counts: dict[str, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def add(self, token: str, n: int = 1) -> None:
        self.counts[token] = self.counts.get(token, 0) + n


def keywords_to_tokens(ks: KeywordSet) -> tuple[set[str], TokenBag]:
    """Split phrases into word-level tokens; the set feeds Jaccard, the
    bag feeds cosine.  No stopword filtering here: scoring happens on
    exactly the words the phrases contain."""
    token_set: set[str] = set()
    bag = TokenBag()
    for phrase, _ in ks.entries:
        for tok in tokenize(phrase):
            token_set.add(tok.surface)
            bag.add(tok.surface)
    return token_set, bag


def jaccard(a: set[str], b: set[str]) -> float:
    """|A n B| / |A u B|; 1.0 when both sides are empty, 0.0 when
    exactly one is."""
    if not a and not b:
        return 1.0
    if not a or not b:
        return 0.0
    return len(a & b) / len(a | b)


def bow_cosine(a: TokenBag, b: TokenBag) -> float:
    """Cosine over term-count vectors on the union vocabulary; an empty
    bag on either side scores 0.0."""
    if not a.counts or not b.counts:
        return 0.0
    dot = sum(n * b.counts.get(t, 0) for t, n in a.counts.items())
    norm_a = math.sqrt(sum(n * n for n in a.counts.values()))
    norm_b = math.sqrt(sum(n * n for n in b.counts.values()))
    return dot / (norm_a * norm_b)


@dataclass
class EmbeddingTable:
    dim: int
    vectors: dict[str, np.ndarray]
    duplicate_count: int = 0

    def __contains__(self, token: str) -> bool:
        return token in self.vectors


def load_embeddings(path: str | Path) -> EmbeddingTable:
    """Parse ``token v1 v2 ... vd`` lines; the first line fixes the
    dimension, duplicate tokens keep the last definition."""
    path = Path(path)
    dim = 0
    vectors: dict[str, np.ndarray] = {}
    duplicates = 0
    with path.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            parts = line.split()
            if not parts:
                continue
            token, values = parts[0], parts[1:]
            try:
                vec = np.array([float(v) for v in values], dtype=np.float64)
            except ValueError as exc:
                raise EmbeddingLoadError(
                    f"{path}:{lineno}: non-numeric vector component") from exc
            if dim == 0:
                dim = len(vec)
                if dim == 0:
                    raise EmbeddingLoadError(f"{path}:{lineno}: no vector components")
            elif len(vec) != dim:
                raise EmbeddingLoadError(
                    f"{path}:{lineno}: expected {dim} components, got {len(vec)}")
            if token in vectors:
                duplicates += 1
            vectors[token] = vec
    if not vectors:
        raise EmbeddingLoadError(f"{path}: empty embedding file")
    return EmbeddingTable(dim=dim, vectors=vectors, duplicate_count=duplicates)


def centroid(tokens: set[str], emb: EmbeddingTable) -> tuple[np.ndarray | None, int]:
    """Mean vector over in-vocabulary tokens and the skipped-token count;
    (None, len(tokens)) when nothing is in vocabulary."""
    in_vocab = sorted(t for t in tokens if t in emb.vectors)
    skipped = len(tokens) - len(in_vocab)
    if not in_vocab:
        return None, skipped
    acc = np.zeros(emb.dim)
    for t in in_vocab:
        acc += emb.vectors[t]
    return acc / len(in_vocab), skipped


def wv_cosine(a: set[str], b: set[str], emb: EmbeddingTable) -> float:
    score, _ = wv_cosine_flags(a, b, emb)
    return score


def wv_cosine_flags(a: set[str], b: set[str],
                    emb: EmbeddingTable) -> tuple[float, list[str]]:
    """Cosine of the two token-set centroids; a fully out-of-vocabulary
    side forces 0.0 and raises the ``oov`` flag."""
    ca, _ = centroid(a, emb)
    cb, _ = centroid(b, emb)
    if ca is None or cb is None:
        return 0.0, ["oov"]
    norm = float(np.linalg.norm(ca) * np.linalg.norm(cb))
    if norm == 0.0:
        # Degenerate zero centroid: cosine undefined, score conventionally 0.
        return 0.0, []
    return float(np.dot(ca, cb) / norm), []
