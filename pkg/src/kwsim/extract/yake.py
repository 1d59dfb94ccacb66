"""Statistical single-document keyword scoring (YAKE family).

Feature definitions are frozen in docs/yake-scoring.md; the test-suite
oracle is coded against the same document.  Lower scores rank better.
"""

from __future__ import annotations

import bisect
import math
import statistics
from collections import Counter
from dataclasses import dataclass

from ..config import Config
from ..errors import EmptyTextError
from ..textcore import Token, ngram_candidates, token_jaccard
from .base import KeywordSet, default_stopwords, document_tokens, select_top_k


@dataclass(frozen=True)
class YakeFeatures:
    wc: float    # word casing
    wp: float    # word position
    wf: float    # normalized word frequency
    wrc: float   # word relatedness to context
    wd: float    # different-sentence ratio
    s: float     # composite, lower is better


def _entropy_dispersion(counts: Counter) -> float:
    """Normalized entropy of a neighbor-frequency distribution; 0 for
    fewer than two distinct neighbors."""
    m = len(counts)
    if m < 2:
        return 0.0
    total = sum(counts.values())
    h = -sum((c / total) * math.log(c / total) for c in counts.values())
    return h / math.log(m)


def _term_features(tokens: list[Token], n_sentences: int) -> dict[str, YakeFeatures]:
    occ: dict[str, list[Token]] = {}
    for t in tokens:
        occ.setdefault(t.surface, []).append(t)

    tf = {w: len(ts) for w, ts in occ.items()}
    max_tf = max(tf.values())
    mean_tf = statistics.fmean(tf.values())
    std_tf = statistics.pstdev(tf.values())
    denom_freq = mean_tf + std_tf

    left_neighbors: dict[str, Counter] = {w: Counter() for w in occ}
    right_neighbors: dict[str, Counter] = {w: Counter() for w in occ}
    for i, t in enumerate(tokens):
        if i > 0 and tokens[i - 1].sentence_index == t.sentence_index:
            left_neighbors[t.surface][tokens[i - 1].surface] += 1
        if i + 1 < len(tokens) and tokens[i + 1].sentence_index == t.sentence_index:
            right_neighbors[t.surface][tokens[i + 1].surface] += 1

    median = {w: statistics.median(t.sentence_index for t in ts) for w, ts in occ.items()}
    sorted_medians = sorted(median.values())

    feats: dict[str, YakeFeatures] = {}
    for w, ts in occ.items():
        n_upper = sum(1 for t in ts if t.raw[:1].isupper())
        n_acronym = sum(1 for t in ts if len(t.raw) >= 2 and t.raw.isupper())
        wc = max(n_upper, n_acronym) / tf[w]
        rank = 1 + bisect.bisect_left(sorted_medians, median[w])
        wp = math.log(math.log(3.0 + rank))
        wf = tf[w] / denom_freq if denom_freq > 0 else 0.0
        wrc = 1.0 + (_entropy_dispersion(left_neighbors[w])
                     + _entropy_dispersion(right_neighbors[w])) * tf[w] / max_tf
        wd = len({t.sentence_index for t in ts}) / n_sentences
        s = (wrc * wp) / (wc + wf / wrc + wd / wrc)
        feats[w] = YakeFeatures(wc=wc, wp=wp, wf=wf, wrc=wrc, wd=wd, s=s)
    return feats


def yake_extract(text: str, k: int, config: Config | None = None) -> KeywordSet:
    """Score 1..3-gram candidates by composite per-word statistics."""
    if not text.strip():
        raise EmptyTextError("yake: empty input text")
    cfg = config or Config()
    n_max = int(cfg.get("n_max", "yake"))
    dedup_threshold = float(cfg.get("dedup_threshold", "yake"))
    stop = default_stopwords()

    tokens = document_tokens(text)
    if not tokens:
        raise EmptyTextError("yake: no tokens in input text")
    n_sentences = tokens[-1].sentence_index + 1
    feats = _term_features(tokens, n_sentences)

    scored = []
    for cand in ngram_candidates(tokens, n_max, stop):
        prod = 1.0
        total = 0.0
        for w in cand.tokens:
            prod *= feats[w].s
            total += feats[w].s
        scored.append((cand, prod / (cand.frequency * (1.0 + total))))

    ranked = select_top_k(scored, k=len(scored), lower_is_better=True)
    token_sets = {c.phrase: c.token_set for c, _ in scored}
    entries: list[tuple[str, float]] = []
    kept_sets: list[frozenset[str]] = []
    for phrase, score in ranked:
        if len(entries) >= k:
            break
        ts = token_sets[phrase]
        if any(token_jaccard(ts, other) >= dedup_threshold for other in kept_sets):
            continue
        entries.append((phrase, score))
        kept_sets.append(ts)
    return KeywordSet(source="yake", entries=entries, k=k, lower_is_better=True)
