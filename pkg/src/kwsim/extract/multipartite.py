"""Multipartite candidate ranking: candidates are nodes, edges connect
only candidates of *different* topics, and each topic's first-occurring
candidate gets an incoming-weight boost before PageRank."""

from __future__ import annotations

import math

from ..config import Config
from ..textcore import CandidatePhrase, WeightedGraph, hac_cluster, ngram_candidates, pagerank
from .base import KeywordSet, default_stopwords, document_tokens, select_top_k
from .topicrank import positional_weight


def multipartite_graph(topics: list[list[CandidatePhrase]], alpha: float) -> WeightedGraph:
    """Directed graph over candidate phrases with the multipartite
    constraint (no intra-topic edges) and first-candidate edge boosting."""
    candidates = [c for topic in topics for c in topic]
    topic_of = {}
    for ti, topic in enumerate(topics):
        for c in topic:
            topic_of[c.phrase] = ti

    g = WeightedGraph([c.phrase for c in candidates], directed=True)
    for i, a in enumerate(candidates):
        for b in candidates[i + 1:]:
            if topic_of[a.phrase] == topic_of[b.phrase]:
                continue
            w = positional_weight(a, b)
            if w > 0:
                g.add_weight(a.phrase, b.phrase, w)
                g.add_weight(b.phrase, a.phrase, w)

    # Promote each multi-candidate topic's earliest candidate: every
    # external node's edges toward the topic's other members are summed,
    # scaled, and added to its edge toward the first candidate.
    for topic in topics:
        if len(topic) < 2:
            continue
        first = min(topic, key=lambda c: (c.first_offset, c.tokens))
        competitors = [c for c in topic if c.phrase != first.phrase]
        # 1-based word offset keeps the exponent finite at document start.
        scale = alpha * math.exp(1.0 / (first.first_offset + 1))
        for other in candidates:
            if topic_of[other.phrase] == topic_of[first.phrase]:
                continue
            boost = sum(g.weight(other.phrase, c.phrase) for c in competitors)
            if boost > 0:
                g.add_weight(other.phrase, first.phrase, scale * boost)
    return g


def _assert_multipartite(g: WeightedGraph, topic_of: dict[str, int]) -> None:
    for (a, b) in g.edges:
        if topic_of[a] == topic_of[b]:
            raise AssertionError(f"intra-topic edge {a!r} -> {b!r}")


def multipartiterank_extract(text: str, k: int, config: Config | None = None) -> KeywordSet:
    cfg = config or Config()
    stop = default_stopwords()
    tokens = document_tokens(text)
    candidates = ngram_candidates(tokens, int(cfg.get("n_max", "multipartiterank")), stop)
    if not candidates:
        return KeywordSet(source="multipartiterank", entries=[], k=k)

    topics = hac_cluster(candidates, float(cfg.get("hac_threshold", "multipartiterank")))
    g = multipartite_graph(topics, alpha=float(cfg.get("alpha", "multipartite")))
    topic_of = {c.phrase: ti for ti, topic in enumerate(topics) for c in topic}
    _assert_multipartite(g, topic_of)

    scores = pagerank(g,
                      damping=float(cfg.get("damping", "multipartiterank")),
                      tol=float(cfg.get("tol", "multipartiterank")),
                      max_iter=int(cfg.get("max_iter", "multipartiterank")))
    scored = [(c, scores[c.phrase]) for topic in topics for c in topic]
    entries = select_top_k(scored, k, lower_is_better=False)
    return KeywordSet(source="multipartiterank", entries=entries, k=k)
