"""Shared text statistics and algorithms used by the extractors.

Tokenization, stopword-aware n-gram candidate generation, corpus
document frequencies, weighted PageRank, and average-linkage
agglomerative clustering under token-overlap similarity.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

# Word cores with internal hyphens survive as one token ("non-faradaic");
# digits embedded in alphanumerics survive too ("MnO2").  Underscore is
# treated as punctuation.
_TOKEN_RE = re.compile(r"[^\W_]+(?:-[^\W_]+)*", re.UNICODE)


@dataclass(frozen=True)
class Token:
    surface: str          # lowercased
    position: int         # word offset in document
    sentence_index: int
    raw: str = ""         # original surface, for casing-sensitive features

    def __post_init__(self):
        if not self.surface:
            raise ValueError("empty token surface")


def tokenize(text: str, sentence_index: int = 0, start_position: int = 0) -> list[Token]:
    """Split one block of text into lowercased tokens with word offsets."""
    tokens = []
    pos = start_position
    for m in _TOKEN_RE.finditer(text):
        raw = m.group(0)
        tokens.append(Token(surface=raw.lower(), position=pos,
                            sentence_index=sentence_index, raw=raw))
        pos += 1
    return tokens


def tokenize_sentences(sentences: Sequence[str]) -> list[Token]:
    """Tokenize a sentence sequence with document-wide running positions."""
    tokens: list[Token] = []
    pos = 0
    for si, sent in enumerate(sentences):
        sent_tokens = tokenize(sent, sentence_index=si, start_position=pos)
        tokens.extend(sent_tokens)
        pos += len(sent_tokens)
    return tokens


@dataclass
class CandidatePhrase:
    tokens: list[str]
    occurrences: list[tuple[int, int]]   # (position, sentence_index)
    frequency: int
    first_offset: int

    @property
    def phrase(self) -> str:
        return " ".join(self.tokens)

    @property
    def token_set(self) -> frozenset[str]:
        return frozenset(self.tokens)


def ngram_candidates(tokens: Sequence[Token], n_max: int,
                     stopwords: frozenset[str] | set[str]) -> list[CandidatePhrase]:
    """Contiguous 1..n_max-gram windows that stay inside one sentence and
    neither begin nor end with a stopword; identical token sequences are
    merged into a single candidate."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    by_phrase: dict[tuple[str, ...], list[tuple[int, int]]] = {}
    # Consecutive same-sentence runs; tokens arrive in document order.
    i = 0
    n = len(tokens)
    while i < n:
        j = i
        while j < n and tokens[j].sentence_index == tokens[i].sentence_index:
            j += 1
        sent = tokens[i:j]
        for start in range(len(sent)):
            if sent[start].surface in stopwords:
                continue
            for length in range(1, n_max + 1):
                end = start + length
                if end > len(sent):
                    break
                if sent[end - 1].surface in stopwords:
                    continue
                key = tuple(t.surface for t in sent[start:end])
                by_phrase.setdefault(key, []).append(
                    (sent[start].position, sent[start].sentence_index))
        i = j
    candidates = []
    for key, occ in by_phrase.items():
        occ.sort()
        candidates.append(CandidatePhrase(
            tokens=list(key), occurrences=occ,
            frequency=len(occ), first_offset=occ[0][0]))
    candidates.sort(key=lambda c: (c.first_offset, c.tokens))
    return candidates


@dataclass
class CorpusStats:
    n_docs: int
    doc_freq: dict[str, int] = field(default_factory=dict)


def build_corpus_stats(token_streams: Iterable[Sequence[Token]], n_max: int,
                       stopwords: frozenset[str] | set[str]) -> CorpusStats:
    """Document frequencies over unigram terms and candidate phrases."""
    doc_freq: dict[str, int] = {}
    n_docs = 0
    for tokens in token_streams:
        n_docs += 1
        seen = {t.surface for t in tokens}
        seen.update(c.phrase for c in ngram_candidates(tokens, n_max, stopwords))
        for term in seen:
            doc_freq[term] = doc_freq.get(term, 0) + 1
    return CorpusStats(n_docs=n_docs, doc_freq=doc_freq)


def tfidf(term: str, tf: int, doc_len: int, stats: CorpusStats) -> float:
    """(tf / doc_len) * log2(n_docs / doc_freq); unseen terms use doc_freq 1."""
    if doc_len == 0:
        raise ValueError("tfidf: doc_len must be positive")
    df = stats.doc_freq.get(term, 1)
    return (tf / doc_len) * math.log2(stats.n_docs / df)


class WeightedGraph:
    """Finite non-negative edge weights, no self-loops; undirected unless
    flagged directed.  Node ids may be any hashable."""

    def __init__(self, nodes: Iterable, directed: bool = False):
        self.nodes = list(nodes)
        self.directed = directed
        self._index = {n: i for i, n in enumerate(self.nodes)}
        if len(self._index) != len(self.nodes):
            raise ValueError("duplicate node ids")
        self.edges: dict[tuple, float] = {}

    def _key(self, a, b) -> tuple:
        if self.directed:
            return (a, b)
        return (a, b) if self._index[a] <= self._index[b] else (b, a)

    def add_weight(self, a, b, w: float) -> None:
        if a == b:
            raise ValueError("self-loops not allowed")
        if not (math.isfinite(w) and w >= 0):
            raise ValueError(f"edge weight must be finite and non-negative, got {w}")
        key = self._key(a, b)
        self.edges[key] = self.edges.get(key, 0.0) + w

    def weight(self, a, b) -> float:
        return self.edges.get(self._key(a, b), 0.0)

    def __len__(self) -> int:
        return len(self.nodes)


def pagerank(g: WeightedGraph, damping: float = 0.85, tol: float = 1e-8,
             max_iter: int = 200) -> dict:
    """Weighted PageRank by power iteration.

    Scores sum to 1 within tol; dangling nodes redistribute uniformly;
    iteration stops when the L1 change drops below tol or at max_iter.
    """
    if not 0 < damping < 1:
        raise ValueError("damping must be in (0, 1)")
    n = len(g)
    if n == 0:
        raise ValueError("pagerank: empty graph")
    idx = {node: i for i, node in enumerate(g.nodes)}
    # Row-stochastic transition matrix over out-edges.
    w = np.zeros((n, n))
    for (a, b), weight in g.edges.items():
        w[idx[a], idx[b]] += weight
        if not g.directed:
            w[idx[b], idx[a]] += weight
    out_sum = w.sum(axis=1)
    dangling = out_sum == 0
    trans = np.zeros_like(w)
    nonzero = ~dangling
    trans[nonzero] = w[nonzero] / out_sum[nonzero, None]

    p = np.full(n, 1.0 / n)
    teleport = (1.0 - damping) / n
    for _ in range(max_iter):
        dangling_mass = p[dangling].sum()
        p_next = teleport + damping * (trans.T @ p + dangling_mass / n)
        if np.abs(p_next - p).sum() < tol:
            p = p_next
            break
        p = p_next
    return {node: float(p[idx[node]]) for node in g.nodes}


def token_jaccard(a: frozenset[str] | set[str], b: frozenset[str] | set[str]) -> float:
    """Set-overlap similarity used for clustering and dedup; 1.0 when both empty."""
    if not a and not b:
        return 1.0
    union = len(a | b)
    return len(a & b) / union


def hac_cluster(items: Sequence[CandidatePhrase], threshold: float) -> list[list[CandidatePhrase]]:
    """Average-linkage agglomerative clustering under token-set Jaccard.

    Merging proceeds greedily on the globally most similar cluster pair
    and stops when no pair's average similarity exceeds the threshold.
    Deterministic: ties prefer the earliest cluster indexes.
    """
    if not 0 <= threshold <= 1:
        raise ValueError("threshold must be in [0, 1]")
    if not items:
        return []
    n = len(items)
    sims = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            s = token_jaccard(items[i].token_set, items[j].token_set)
            sims[i][j] = sims[j][i] = s
    clusters: list[list[int]] = [[i] for i in range(n)]
    while len(clusters) > 1:
        best = None
        best_sim = threshold
        for a in range(len(clusters)):
            for b in range(a + 1, len(clusters)):
                total = 0.0
                for i in clusters[a]:
                    for j in clusters[b]:
                        total += sims[i][j]
                avg = total / (len(clusters[a]) * len(clusters[b]))
                if avg > best_sim:
                    best_sim = avg
                    best = (a, b)
        if best is None:
            break
        a, b = best
        clusters[a] = clusters[a] + clusters[b]
        del clusters[b]
    return [[items[i] for i in members] for members in clusters]
