"""Topic-based extraction: cluster candidates into topics, rank topics
with PageRank over reciprocal-distance weights, keep each topic's
first-occurring candidate."""

from __future__ import annotations

from ..config import Config
from ..textcore import CandidatePhrase, WeightedGraph, hac_cluster, ngram_candidates, pagerank
from .base import KeywordSet, default_stopwords, document_tokens, select_top_k


def positional_weight(a: CandidatePhrase, b: CandidatePhrase) -> float:
    """Sum of reciprocal word-offset distances over all occurrence pairs.
    Overlapping occurrences (distance 0) count as distance 1."""
    total = 0.0
    for pa, _ in a.occurrences:
        for pb, _ in b.occurrences:
            total += 1.0 / max(1, abs(pa - pb))
    return total


def topic_graph(topics: list[list[CandidatePhrase]]) -> WeightedGraph:
    g = WeightedGraph(range(len(topics)))
    for i in range(len(topics)):
        for j in range(i + 1, len(topics)):
            w = 0.0
            for a in topics[i]:
                for b in topics[j]:
                    w += positional_weight(a, b)
            if w > 0:
                g.add_weight(i, j, w)
    return g


def topicrank_extract(text: str, k: int, config: Config | None = None) -> KeywordSet:
    cfg = config or Config()
    stop = default_stopwords()
    tokens = document_tokens(text)
    candidates = ngram_candidates(tokens, int(cfg.get("n_max", "topicrank")), stop)
    if not candidates:
        return KeywordSet(source="topicrank", entries=[], k=k)

    topics = hac_cluster(candidates, float(cfg.get("hac_threshold", "topicrank")))
    scores = pagerank(topic_graph(topics),
                      damping=float(cfg.get("damping", "topicrank")),
                      tol=float(cfg.get("tol", "topicrank")),
                      max_iter=int(cfg.get("max_iter", "topicrank")))

    scored = []
    for i, topic in enumerate(topics):
        representative = min(topic, key=lambda c: (c.first_offset, c.tokens))
        scored.append((representative, scores[i]))
    entries = select_top_k(scored, k, lower_is_better=False)
    return KeywordSet(source="topicrank", entries=entries, k=k)
