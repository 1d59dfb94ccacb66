"""Benchmark orchestration: every (document x extractor x index x text
variant) combination scored against the expert keyword set, with
similarity-phase wall times.

Extraction runs once per (document, extractor, variant) and is reused
across the three indexes; only the similarity computation is timed.
"""

from __future__ import annotations

import csv
import json
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Sequence

from . import resources
from .config import Config
from .errors import ConfigError, DataError, EmptyTextError
from .extract import EXTRACTOR_NAMES, SUPERVISED, KeywordSet, extract
from .extract.base import document_tokens
from .extract.bayes import NBModel
from .ingest import Document
from .similarity import (
    EmbeddingTable,
    bow_cosine,
    jaccard,
    keywords_to_tokens,
    wv_cosine_flags,
)
from .textcore import CorpusStats, build_corpus_stats

INDEX_NAMES = ("jaccard", "cosine", "cosine_wv")
VARIANT_NAMES = ("positive", "all")


@dataclass
class BenchConfig:
    extractors: Sequence[str] = EXTRACTOR_NAMES
    indexes: Sequence[str] = INDEX_NAMES
    variants: Sequence[str] = VARIANT_NAMES
    k: int = 30
    repeats: int = 5
    embedding_path: str | Path | None = None
    model_paths: dict[str, str | Path] = field(default_factory=dict)
    config: Config = field(default_factory=Config)

    def validate(self) -> None:
        if not self.extractors:
            raise ConfigError("no extractors selected")
        if not self.indexes:
            raise ConfigError("no similarity indexes selected")
        if not self.variants:
            raise ConfigError("no text variants selected")
        for name in self.extractors:
            if name not in EXTRACTOR_NAMES:
                raise ConfigError(
                    f"unknown extractor {name!r}; valid: {', '.join(EXTRACTOR_NAMES)}")
        for name in self.indexes:
            if name not in INDEX_NAMES:
                raise ConfigError(
                    f"unknown index {name!r}; valid: {', '.join(INDEX_NAMES)}")
        for name in self.variants:
            if name not in VARIANT_NAMES:
                raise ConfigError(
                    f"unknown variant {name!r}; valid: {', '.join(VARIANT_NAMES)}")
        if self.repeats < 1:
            raise ConfigError("repeats must be >= 1")
        if "cosine_wv" in self.indexes and self.embedding_path is None:
            raise ConfigError("cosine_wv requested but no embedding file configured")


@dataclass
class ScoreRecord:
    doc_id: str
    extractor: str
    index: str
    variant: str
    score: float
    wall_time_s: float
    flags: list[str] = field(default_factory=list)


def measure_runtime(task: Callable[[], object], repeats: int) -> float:
    """Arithmetic mean of wall-clock seconds over `repeats` executions."""
    if repeats < 1:
        raise ValueError("repeats must be >= 1")
    total = 0.0
    for _ in range(repeats):
        start = time.perf_counter()
        task()
        total += time.perf_counter() - start
    return total / repeats


def variant_text(doc: Document, variant: str) -> str:
    return doc.positive_text if variant == "positive" else doc.all_text


def sentence_stats(corpus: Sequence[Document]) -> list[dict]:
    out = []
    for doc in sorted(corpus, key=lambda d: d.id):
        positive = doc.positive_count
        out.append({
            "doc_id": doc.id,
            "total": len(doc.sentences),
            "positive": positive,
            "negative": len(doc.sentences) - positive,
        })
    return out


def run_benchmark(corpus: Sequence[Document], expert: KeywordSet, cfg: BenchConfig,
                  embeddings: EmbeddingTable | None = None,
                  models: dict[str, NBModel] | None = None,
                  keyword_collector: dict[tuple[str, str, str], KeywordSet] | None = None,
                  ) -> list[ScoreRecord]:
    """|corpus| x |extractors| x |indexes| x |variants| score records,
    sorted by (doc_id, extractor, index, variant).

    When a dict is passed as keyword_collector it is filled with the
    extraction results keyed by (doc_id, extractor, variant)."""
    cfg.validate()
    models = models or {}
    for name in cfg.extractors:
        if name in SUPERVISED and name not in models:
            raise ConfigError(f"{name} requested but no trained model supplied")
    if "cosine_wv" in cfg.indexes and embeddings is None:
        raise ConfigError("cosine_wv requested but embeddings were not loaded")

    stats = build_corpus_stats(
        (document_tokens(doc.all_text) for doc in corpus),
        n_max=int(cfg.config.get("n_max")),
        stopwords=resources.stopwords())

    expert_set, expert_bag = keywords_to_tokens(expert)

    records: list[ScoreRecord] = []
    for doc in sorted(corpus, key=lambda d: d.id):
        for variant in cfg.variants:
            text = variant_text(doc, variant)
            for extractor in cfg.extractors:
                extraction_flags: list[str] = []
                try:
                    ks = extract(extractor, text, cfg.k, stats=stats,
                                 model=models.get(extractor), doc=doc,
                                 config=cfg.config)
                    extraction_flags.extend(ks.flags)
                except EmptyTextError:
                    ks = KeywordSet(source=extractor, entries=[], k=cfg.k)
                    extraction_flags.append("empty-text")
                if keyword_collector is not None:
                    keyword_collector[(doc.id, extractor, variant)] = ks

                for index in cfg.indexes:
                    holder: dict[str, object] = {}

                    def task():
                        extracted_set, extracted_bag = keywords_to_tokens(ks)
                        if index == "jaccard":
                            holder["score"] = jaccard(extracted_set, expert_set)
                            holder["flags"] = []
                        elif index == "cosine":
                            holder["score"] = bow_cosine(extracted_bag, expert_bag)
                            holder["flags"] = []
                        else:
                            score, flags = wv_cosine_flags(
                                extracted_set, expert_set, embeddings)
                            holder["score"] = score
                            holder["flags"] = flags

                    wall = measure_runtime(task, cfg.repeats)
                    records.append(ScoreRecord(
                        doc_id=doc.id, extractor=extractor, index=index,
                        variant=variant, score=float(holder["score"]),
                        wall_time_s=wall,
                        flags=sorted(set(extraction_flags) | set(holder["flags"])),
                    ))
    records.sort(key=lambda r: (r.doc_id, r.extractor, r.index, r.variant))
    expected = (len(corpus) * len(cfg.extractors)
                * len(cfg.indexes) * len(cfg.variants))
    if len(records) != expected:
        raise AssertionError(
            f"record count {len(records)} != expected {expected}")
    return records


def aggregate(records: Sequence[ScoreRecord]) -> list[dict]:
    """Mean score per (extractor, index, variant) across documents."""
    if not records:
        raise DataError("aggregate: no records")
    groups: dict[tuple[str, str, str], list[float]] = {}
    for r in records:
        groups.setdefault((r.extractor, r.index, r.variant), []).append(r.score)
    out = []
    for (extractor, index, variant) in sorted(groups):
        scores = groups[(extractor, index, variant)]
        mean = sum(scores) / len(scores)
        out.append({
            "extractor": extractor,
            "index": index,
            "variant": variant,
            "mean_score": mean,
            "display": round(mean, 2),
            "n_docs": len(scores),
        })
    return out


def keyword_frequency(keyword_sets: Sequence[KeywordSet]) -> dict[str, int]:
    """How many keyword sets contain each phrase (word-cloud data)."""
    counts: dict[str, int] = {}
    for ks in keyword_sets:
        for phrase in ks.phrases:
            counts[phrase] = counts.get(phrase, 0) + 1
    return dict(sorted(counts.items(), key=lambda kv: (-kv[1], kv[0])))


CSV_COLUMNS = ("doc_id", "extractor", "index", "variant", "score", "wall_time_s", "flags")


def emit_report(records: Sequence[ScoreRecord], summary: Sequence[dict],
                freq: dict[str, int], out_dir: str | Path, format: str,
                config_echo: dict | None = None,
                stats: Sequence[dict] | None = None) -> list[Path]:
    """Write the report files for one format; returns the paths written."""
    out_dir = Path(out_dir)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise DataError(f"cannot create output directory {out_dir}: {exc}") from exc

    written: list[Path] = []
    if format == "csv":
        scores_path = out_dir / "scores.csv"
        with scores_path.open("w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(CSV_COLUMNS)
            for r in records:
                writer.writerow([
                    r.doc_id, r.extractor, r.index, r.variant,
                    f"{r.score:.4f}", f"{r.wall_time_s:.6f}", ";".join(r.flags),
                ])
        written.append(scores_path)

        summary_path = out_dir / "summary.csv"
        with summary_path.open("w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["extractor", "index", "variant", "mean_score", "n_docs"])
            for row in summary:
                writer.writerow([row["extractor"], row["index"], row["variant"],
                                 f"{row['display']:.2f}", row["n_docs"]])
        written.append(summary_path)

        freq_path = out_dir / "keyword_frequency.csv"
        with freq_path.open("w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["phrase", "count"])
            for phrase, count in freq.items():
                writer.writerow([phrase, count])
        written.append(freq_path)
    elif format == "json":
        payload = {
            "records": [
                {
                    "doc_id": r.doc_id, "extractor": r.extractor, "index": r.index,
                    "variant": r.variant, "score": r.score,
                    "wall_time_s": r.wall_time_s, "flags": r.flags,
                }
                for r in records
            ],
            "summary": list(summary),
            "keyword_frequency": freq,
            "config": config_echo or {},
            "sentence_stats": list(stats or []),
        }
        json_path = out_dir / "report.json"
        json_path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n",
                             encoding="utf-8")
        written.append(json_path)
    else:
        raise DataError(f"unknown report format {format!r}")
    return written
