"""Shared extractor plumbing: the KeywordSet result type, document
tokenization, and deterministic top-k selection."""

from __future__ import annotations

from dataclasses import dataclass, field

from .. import resources
from ..ingest import split_sentences
from ..textcore import CandidatePhrase, Token, tokenize_sentences

EXTRACTOR_NAMES = ("yake", "topicrank", "multipartiterank", "kpminer", "kea", "wingnus")
SUPERVISED = ("kea", "wingnus")


@dataclass
class KeywordSet:
    source: str                      # one of EXTRACTOR_NAMES or "expert"
    entries: list[tuple[str, float]]  # (phrase, score), best first
    k: int
    lower_is_better: bool = False
    flags: list[str] = field(default_factory=list)

    @property
    def phrases(self) -> list[str]:
        return [p for p, _ in self.entries]


def document_tokens(text: str) -> list[Token]:
    """Sentence-split then tokenize, with document-wide word offsets."""
    sentences = split_sentences(text)
    return tokenize_sentences([s.text for s in sentences])


def default_stopwords() -> frozenset[str]:
    return resources.stopwords()


def select_top_k(scored: list[tuple[CandidatePhrase, float]], k: int,
                 lower_is_better: bool) -> list[tuple[str, float]]:
    """Deterministic ranking: score direction first, then earlier first
    occurrence, then lexicographic phrase order."""
    direction = 1.0 if lower_is_better else -1.0
    ranked = sorted(scored, key=lambda cs: (direction * cs[1], cs[0].first_offset, cs[0].phrase))
    out: list[tuple[str, float]] = []
    seen: set[str] = set()
    for cand, score in ranked:
        if len(out) >= k:
            break
        if cand.phrase in seen:
            continue
        seen.add(cand.phrase)
        out.append((cand.phrase, score))
    return out
