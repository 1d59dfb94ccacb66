"""Frequency/position filtered extraction with corpus-level TF-IDF
scoring and a document-level boost for multi-word phrases."""

from __future__ import annotations

import math

from ..config import Config
from ..textcore import CorpusStats, ngram_candidates, tfidf
from .base import KeywordSet, default_stopwords, document_tokens, select_top_k


def kpminer_extract(text: str, k: int, stats: CorpusStats,
                    config: Config | None = None) -> KeywordSet:
    cfg = config or Config()
    stop = default_stopwords()
    tokens = document_tokens(text)
    doc_len = len(tokens)
    if doc_len == 0:
        return KeywordSet(source="kpminer", entries=[], k=k)

    lasf = int(cfg.get("kpminer.lasf"))
    if doc_len < int(cfg.get("kpminer.short_doc_words")):
        lasf = int(cfg.get("kpminer.lasf_short"))
    cutoff = int(cfg.get("kpminer.cutoff"))
    sigma = float(cfg.get("kpminer.sigma"))
    sigma_max = float(cfg.get("kpminer.sigma_max"))

    candidates = [
        c for c in ngram_candidates(tokens, int(cfg.get("n_max", "kpminer")), stop)
        if not any(t in stop for t in c.tokens)
        and c.frequency >= lasf and c.first_offset < cutoff
    ]
    if not candidates:
        return KeywordSet(source="kpminer", entries=[], k=k)

    n_d = sum(c.frequency for c in candidates)
    p_d = sum(c.frequency for c in candidates if len(c.tokens) > 1)
    boost = min(n_d / (p_d * sigma), sigma_max) if p_d > 0 else sigma_max

    scored = []
    for c in candidates:
        if len(c.tokens) == 1:
            score = tfidf(c.phrase, c.frequency, doc_len, stats)
        else:
            if c.phrase in stats.doc_freq:
                idf = math.log2(stats.n_docs / stats.doc_freq[c.phrase])
            else:
                idf = 1.0
            score = (c.frequency / doc_len) * boost * idf
        scored.append((c, score))
    entries = select_top_k(scored, k, lower_is_better=False)
    return KeywordSet(source="kpminer", entries=entries, k=k)
