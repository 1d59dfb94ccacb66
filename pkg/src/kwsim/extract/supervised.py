"""KEA and WINGNUS: Naive-Bayes-ranked candidates.

KEA scores plain n-gram candidates on (tfidf, relative first occurrence).
WINGNUS restricts candidates to a token-class pattern (non-stopword runs
optionally joined by "of"), draws them from a document structure level,
and adds the number of structure levels containing the candidate as a
third feature.
"""

from __future__ import annotations

import re
from pathlib import Path

from ..config import Config
from ..errors import TrainingError, UsageError
from ..ingest import Document, build_document, load_article
from ..textcore import CandidatePhrase, CorpusStats, Token, build_corpus_stats, ngram_candidates, tfidf
from .base import KeywordSet, default_stopwords, document_tokens, select_top_k
from .bayes import NBModel, nb_train

STRUCTURE_LEVELS = ("full_text", "title_headers", "abstract_intro")

# Candidate shape over token classes: non-stopword runs, optionally
# joined by a single "of" ("state of charge").
_WINGNUS_PATTERN = re.compile(r"n+(?:on+)?")


def _require_model(model: NBModel | None, name: str, n_features: int) -> NBModel:
    if model is None:
        raise UsageError(f"{name}: a trained model is required")
    if model.n_features != n_features:
        raise UsageError(
            f"{name}: model has {model.n_features} features, expected {n_features}")
    return model


# ---------------------------------------------------------------------------
# KEA

def kea_features(cand: CandidatePhrase, doc_len: int, stats: CorpusStats) -> tuple[float, float]:
    return (
        tfidf(cand.phrase, cand.frequency, doc_len, stats),
        cand.first_offset / doc_len,
    )


def kea_extract(text: str, k: int, model: NBModel | None, stats: CorpusStats,
                config: Config | None = None) -> KeywordSet:
    model = _require_model(model, "kea", 2)
    cfg = config or Config()
    stop = default_stopwords()
    tokens = document_tokens(text)
    if not tokens:
        return KeywordSet(source="kea", entries=[], k=k)
    candidates = ngram_candidates(tokens, int(cfg.get("n_max", "kea")), stop)
    scored = [
        (c, model.posterior(kea_features(c, len(tokens), stats)))
        for c in candidates
    ]
    entries = select_top_k(scored, k, lower_is_better=False)
    return KeywordSet(source="kea", entries=entries, k=k)


# ---------------------------------------------------------------------------
# WINGNUS

def wingnus_candidates(tokens: list[Token], n_max: int,
                       stop: frozenset[str]) -> list[CandidatePhrase]:
    """Windows (within one sentence, length <= n_max + 1) whose
    stopword-class string matches the candidate pattern."""
    by_phrase: dict[tuple[str, ...], list[tuple[int, int]]] = {}
    i = 0
    n = len(tokens)
    max_len = n_max + 1
    while i < n:
        j = i
        while j < n and tokens[j].sentence_index == tokens[i].sentence_index:
            j += 1
        sent = tokens[i:j]
        classes = ["o" if t.surface == "of" else ("s" if t.surface in stop else "n")
                   for t in sent]
        for start in range(len(sent)):
            for length in range(1, max_len + 1):
                end = start + length
                if end > len(sent):
                    break
                if _WINGNUS_PATTERN.fullmatch("".join(classes[start:end])):
                    key = tuple(t.surface for t in sent[start:end])
                    by_phrase.setdefault(key, []).append(
                        (sent[start].position, sent[start].sentence_index))
        i = j
    out = []
    for key, occ in by_phrase.items():
        occ.sort()
        out.append(CandidatePhrase(tokens=list(key), occurrences=occ,
                                   frequency=len(occ), first_offset=occ[0][0]))
    out.sort(key=lambda c: (c.first_offset, c.tokens))
    return out


def structure_level_text(doc: Document, level: str) -> str:
    if level == "full_text":
        return doc.all_text
    if level == "title_headers":
        parts = [doc.title] + doc.section_headers
        return ". ".join(p for p in parts if p)
    if level == "abstract_intro":
        parts = [text for header, text in doc.sections
                 if "abstract" in header.lower() or "introduction" in header.lower()]
        return " ".join(p for p in parts if p)
    raise UsageError(f"unknown structure level {level!r}")


def wingnus_extract(text: str, k: int, model: NBModel | None, stats: CorpusStats,
                    structure: str = "full_text", doc: Document | None = None,
                    config: Config | None = None) -> KeywordSet:
    if structure not in STRUCTURE_LEVELS:
        raise UsageError(
            f"unknown structure level {structure!r}; valid: {', '.join(STRUCTURE_LEVELS)}")
    model = _require_model(model, "wingnus", 3)
    cfg = config or Config()
    n_max = int(cfg.get("n_max", "wingnus"))
    stop = default_stopwords()

    flags: list[str] = []
    level_source = text
    if structure != "full_text":
        level_source = structure_level_text(doc, structure) if doc is not None else ""
        if not level_source.strip():
            level_source = text
            flags.append("fallback")

    tokens = document_tokens(level_source)
    if not tokens:
        return KeywordSet(source="wingnus", entries=[], k=k, flags=flags)
    candidates = wingnus_candidates(tokens, n_max, stop)

    # Phrase membership per structure level, for the level-count feature.
    level_phrases: list[set[str]] = []
    for level in STRUCTURE_LEVELS:
        if level == "full_text":
            source = text
        elif doc is None:
            continue
        else:
            source = structure_level_text(doc, level)
        ltokens = document_tokens(source)
        if ltokens:
            level_phrases.append(
                {c.phrase for c in wingnus_candidates(ltokens, n_max, stop)})

    doc_len = len(tokens)
    scored = []
    for c in candidates:
        level_count = sum(1 for phrases in level_phrases if c.phrase in phrases)
        features = (
            tfidf(c.phrase, c.frequency, doc_len, stats),
            c.first_offset / doc_len,
            float(max(level_count, 1)),
        )
        scored.append((c, model.posterior(features)))
    entries = select_top_k(scored, k, lower_is_better=False)
    return KeywordSet(source="wingnus", entries=entries, k=k, flags=flags)


# ---------------------------------------------------------------------------
# Training corpus: document files with .key sidecars

def load_training_corpus(corpus_dir: str | Path) -> list[tuple[Document, set[str]]]:
    corpus_dir = Path(corpus_dir)
    doc_paths = sorted(
        p for p in corpus_dir.iterdir()
        if p.suffix.lower() in (".txt", ".xml") and p.is_file()
    )
    if not doc_paths:
        raise TrainingError(f"no training documents (.txt/.xml) in {corpus_dir}")
    missing = [p.name for p in doc_paths if not p.with_suffix(".key").exists()]
    if missing:
        raise TrainingError(
            "missing .key sidecars for: " + ", ".join(missing))
    corpus = []
    for p in doc_paths:
        doc = build_document(load_article(p))
        gold = {
            line.strip().lower()
            for line in p.with_suffix(".key").read_text(encoding="utf-8").splitlines()
            if line.strip()
        }
        corpus.append((doc, gold))
    return corpus


def training_examples(corpus: list[tuple[Document, set[str]]], extractor: str,
                      config: Config | None = None) -> list[tuple[tuple[float, ...], bool]]:
    cfg = config or Config()
    stop = default_stopwords()
    stats = build_corpus_stats(
        (document_tokens(doc.all_text) for doc, _ in corpus),
        n_max=int(cfg.get("n_max", extractor)), stopwords=stop)

    examples: list[tuple[tuple[float, ...], bool]] = []
    for doc, gold in corpus:
        tokens = document_tokens(doc.all_text)
        if not tokens:
            continue
        n_max = int(cfg.get("n_max", extractor))
        if extractor == "kea":
            for c in ngram_candidates(tokens, n_max, stop):
                examples.append((kea_features(c, len(tokens), stats), c.phrase in gold))
        elif extractor == "wingnus":
            candidates = wingnus_candidates(tokens, n_max, stop)
            level_phrases = []
            for level in STRUCTURE_LEVELS:
                ltokens = document_tokens(structure_level_text(doc, level))
                if ltokens:
                    level_phrases.append(
                        {c.phrase for c in wingnus_candidates(ltokens, n_max, stop)})
            for c in candidates:
                level_count = sum(1 for phrases in level_phrases if c.phrase in phrases)
                features = (
                    tfidf(c.phrase, c.frequency, len(tokens), stats),
                    c.first_offset / len(tokens),
                    float(max(level_count, 1)),
                )
                examples.append((features, c.phrase in gold))
        else:
            raise UsageError(f"no supervised trainer for {extractor!r}")
    return examples


def train_from_directory(corpus_dir: str | Path, extractor: str,
                         config: Config | None = None) -> tuple[NBModel, int, int]:
    """Returns (model, n_examples, n_positive)."""
    cfg = config or Config()
    corpus = load_training_corpus(corpus_dir)
    examples = training_examples(corpus, extractor, cfg)
    model = nb_train(examples, bins=int(cfg.get("nb.bins")),
                     laplace=float(cfg.get("nb.laplace")), extractor=extractor)
    return model, len(examples), sum(1 for _, y in examples if y)
