"""Command-line surface: ingest | train | extract | score | bench.

Exit codes: 0 success, 1 usage error, 2 data error, 3 partial failure.
Errors print one structured JSON line to stderr: {"error": code,
"message": text}.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile
import time
from pathlib import Path

from . import __version__, resources
from .bench import (
    INDEX_NAMES,
    VARIANT_NAMES,
    BenchConfig,
    aggregate,
    emit_report,
    keyword_frequency,
    run_benchmark,
    sentence_stats,
)
from .config import Config, load_config
from .errors import ConfigError, DataError, KwsimError, PartialFailure, UsageError
from .extract import EXTRACTOR_NAMES, SUPERVISED, KeywordSet, extract
from .extract.bayes import load_model, save_model
from .extract.supervised import train_from_directory
from .ingest import build_document, document_to_json, load_article
from .similarity import bow_cosine, jaccard, keywords_to_tokens, load_embeddings, wv_cosine_flags


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits with code 2
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kwsim", description=__doc__)
    parser.add_argument("--version", action="version", version=f"kwsim {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="parse documents into JSON dumps")
    p.add_argument("input_dir", type=Path)
    p.add_argument("--out", type=Path, required=True)
    p.add_argument("--no-headers", action="store_true",
                   help="exclude section headers from the extraction text")

    p = sub.add_parser("train", help="train a supervised extractor model")
    p.add_argument("corpus_dir", type=Path)
    p.add_argument("--extractor", choices=SUPERVISED, required=True)
    p.add_argument("--out", type=Path, required=True)
    p.add_argument("--config", type=Path)

    p = sub.add_parser("extract", help="extract keywords from one document")
    p.add_argument("document", type=Path)
    p.add_argument("--extractor", required=True)
    p.add_argument("-k", type=int, default=30)
    p.add_argument("--model", type=Path, help="model file for kea/wingnus")
    p.add_argument("--variant", choices=VARIANT_NAMES, default="all")
    p.add_argument("--structure", default="full_text",
                   choices=("full_text", "title_headers", "abstract_intro"))
    p.add_argument("--corpus", type=Path,
                   help="directory used for corpus statistics (tf-idf)")
    p.add_argument("--no-headers", action="store_true")
    p.add_argument("--json", action="store_true", dest="as_json")
    p.add_argument("--config", type=Path)

    p = sub.add_parser("score", help="score a keywords file against an expert file")
    p.add_argument("extracted", type=Path)
    p.add_argument("expert", type=Path)
    p.add_argument("--indexes", default="jaccard,cosine,cosine_wv")
    p.add_argument("--embeddings", type=Path,
                   default=resources.data_path("embeddings_50d.txt"))

    p = sub.add_parser("bench", help="run the full benchmark over a corpus")
    p.add_argument("corpus_dir", type=Path)
    p.add_argument("--keywords", type=Path, required=True,
                   help="expert keywords, one phrase per line")
    p.add_argument("--out", type=Path, required=True)
    p.add_argument("--config", type=Path)
    p.add_argument("--extractors", default=",".join(EXTRACTOR_NAMES))
    p.add_argument("--indexes", default=",".join(INDEX_NAMES))
    p.add_argument("--variants", default=",".join(VARIANT_NAMES))
    p.add_argument("-k", type=int)
    p.add_argument("--repeats", type=int)
    p.add_argument("--embeddings", type=Path,
                   default=resources.data_path("embeddings_50d.txt"))
    p.add_argument("--models", type=Path,
                   help="directory holding kea.json / wingnus.json")
    p.add_argument("--train-dir", type=Path,
                   help="training corpus for supervised extractors "
                        "(default: bundled toy set)")
    p.add_argument("--no-headers", action="store_true")
    p.add_argument("--no-figures", action="store_true")
    p.add_argument("--seed", type=int, help="reserved; the pipeline is deterministic")
    return parser


def _input_files(input_dir: Path) -> list[Path]:
    if not input_dir.is_dir():
        raise DataError(f"not a directory: {input_dir}")
    files = sorted(p for p in input_dir.iterdir()
                   if p.suffix.lower() in (".xml", ".txt") and p.is_file())
    if not files:
        raise DataError(f"no .xml or .txt inputs in {input_dir}")
    return files


def _load_corpus(input_dir: Path, include_headers: bool):
    docs = []
    failures = []
    for path in _input_files(input_dir):
        try:
            docs.append(build_document(load_article(path), include_headers))
        except (KwsimError, UnicodeDecodeError) as exc:
            failures.append((path, exc))
    return docs, failures


def _load_expert_keywords(path: Path) -> KeywordSet:
    if not path.is_file():
        raise DataError(f"keywords file not found: {path}")
    phrases = []
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.strip().lower()
        if line:
            phrases.append(line)
    if not phrases:
        raise DataError(f"keywords file is empty: {path}")
    return KeywordSet(source="expert", entries=[(p, 1.0) for p in phrases],
                      k=len(phrases))


def _sha256(path: Path) -> str:
    digest = hashlib.sha256()
    with path.open("rb") as fh:
        for chunk in iter(lambda: fh.read(65536), b""):
            digest.update(chunk)
    return digest.hexdigest()


# ---------------------------------------------------------------------------
# Subcommands

def cmd_ingest(args) -> int:
    args.out.mkdir(parents=True, exist_ok=True)
    files = _input_files(args.input_dir)
    n_ok = 0
    failures = []
    total = positive = 0
    for path in files:
        try:
            doc = build_document(load_article(path), not args.no_headers)
        except (KwsimError, UnicodeDecodeError) as exc:
            failures.append((path, exc))
            print(json.dumps({"error": getattr(exc, "code", "data"),
                              "message": f"{path.name}: {exc}"}), file=sys.stderr)
            continue
        (args.out / f"{doc.id}.json").write_text(
            document_to_json(doc) + "\n", encoding="utf-8")
        n_neg = len(doc.sentences) - doc.positive_count
        print(f"{doc.id}\ttotal={len(doc.sentences)}\tpositive={doc.positive_count}"
              f"\tnegative={n_neg}")
        total += len(doc.sentences)
        positive += doc.positive_count
        n_ok += 1
    print(f"TOTAL\ttotal={total}\tpositive={positive}\tnegative={total - positive}")
    if failures and n_ok == 0:
        raise DataError(f"all {len(failures)} inputs failed to parse")
    if failures:
        raise PartialFailure(
            f"{n_ok} ingested, {len(failures)} failed: "
            + ", ".join(p.name for p, _ in failures))
    return 0


def cmd_train(args) -> int:
    cfg = load_config(args.config)
    model, n_examples, n_positive = train_from_directory(
        args.corpus_dir, args.extractor, cfg)
    args.out.parent.mkdir(parents=True, exist_ok=True)
    save_model(model, args.out)
    print(f"trained {args.extractor}: {n_examples} candidates, "
          f"{n_positive} keyphrase / {n_examples - n_positive} other -> {args.out}")
    return 0


def _corpus_stats_for(args, doc, cfg):
    from .extract.base import default_stopwords, document_tokens
    from .textcore import build_corpus_stats

    if args.corpus:
        docs, failures = _load_corpus(args.corpus, not args.no_headers)
        if not docs:
            raise DataError(f"no usable corpus documents in {args.corpus}")
        streams = (document_tokens(d.all_text) for d in docs)
    else:
        streams = [document_tokens(doc.all_text)]
    return build_corpus_stats(streams, n_max=int(cfg.get("n_max")),
                              stopwords=default_stopwords())


def cmd_extract(args) -> int:
    if args.extractor not in EXTRACTOR_NAMES:
        raise UsageError(
            f"unknown extractor {args.extractor!r}; valid extractors: "
            + ", ".join(EXTRACTOR_NAMES))
    cfg = load_config(args.config)
    doc = build_document(load_article(args.document), not args.no_headers)
    text = doc.positive_text if args.variant == "positive" else doc.all_text

    model = None
    if args.extractor in SUPERVISED:
        if args.model is None:
            raise UsageError(f"{args.extractor} requires --model")
        model = load_model(args.model)
    stats = None
    if args.extractor in ("kpminer", "kea", "wingnus"):
        stats = _corpus_stats_for(args, doc, cfg)

    ks = extract(args.extractor, text, args.k, stats=stats, model=model,
                 doc=doc, structure=args.structure, config=cfg)
    if args.as_json:
        print(json.dumps({
            "doc_id": doc.id, "source": ks.source, "k": ks.k,
            "lower_is_better": ks.lower_is_better, "flags": ks.flags,
            "entries": [{"phrase": p, "score": s} for p, s in ks.entries],
        }, indent=2))
    else:
        for phrase, score in ks.entries:
            print(f"{phrase}\t{score:.6f}")
    return 0


def cmd_score(args) -> int:
    indexes = [i.strip() for i in args.indexes.split(",") if i.strip()]
    for index in indexes:
        if index not in INDEX_NAMES:
            raise UsageError(f"unknown index {index!r}; valid: {', '.join(INDEX_NAMES)}")
    extracted = _load_expert_keywords(args.extracted)
    expert = _load_expert_keywords(args.expert)
    set_a, bag_a = keywords_to_tokens(extracted)
    set_b, bag_b = keywords_to_tokens(expert)
    out = {}
    for index in indexes:
        if index == "jaccard":
            out["jaccard"] = jaccard(set_a, set_b)
        elif index == "cosine":
            out["cosine"] = bow_cosine(bag_a, bag_b)
        else:
            if not args.embeddings.is_file():
                raise ConfigError(f"embedding file not found: {args.embeddings}")
            emb = load_embeddings(args.embeddings)
            score, flags = wv_cosine_flags(set_a, set_b, emb)
            out["cosine_wv"] = score
            if flags:
                out["flags"] = flags
    print(json.dumps(out, indent=2))
    return 0


def _bench_config(args, cfg: Config) -> BenchConfig:
    extractors = [e.strip() for e in args.extractors.split(",") if e.strip()]
    indexes = [i.strip() for i in args.indexes.split(",") if i.strip()]
    variants = [v.strip() for v in args.variants.split(",") if v.strip()]
    k = args.k if args.k is not None else int(cfg.get("k"))
    repeats = args.repeats if args.repeats is not None else int(cfg.get("repeats"))
    return BenchConfig(
        extractors=extractors, indexes=indexes, variants=variants,
        k=k, repeats=repeats,
        embedding_path=args.embeddings if "cosine_wv" in indexes else None,
        config=cfg,
    )


def _supervised_models(bench_cfg: BenchConfig, args, cfg: Config):
    models = {}
    needed = [e for e in bench_cfg.extractors if e in SUPERVISED]
    for name in needed:
        if args.models:
            path = args.models / f"{name}.json"
            if not path.is_file():
                raise ConfigError(f"model file not found: {path}")
            models[name] = load_model(path)
        else:
            train_dir = args.train_dir or resources.data_path("train")
            model, _, _ = train_from_directory(train_dir, name, cfg)
            models[name] = model
            bench_cfg.model_paths[name] = f"trained:{train_dir}"
    if args.models:
        for name in needed:
            bench_cfg.model_paths[name] = str(args.models / f"{name}.json")
    return models


def cmd_bench(args) -> int:
    cfg = load_config(args.config)
    bench_cfg = _bench_config(args, cfg)
    bench_cfg.validate()

    # Fail on configuration problems before any real work.
    embeddings = None
    if "cosine_wv" in bench_cfg.indexes:
        if not Path(bench_cfg.embedding_path).is_file():
            raise ConfigError(f"embedding file not found: {bench_cfg.embedding_path}")
        embeddings = load_embeddings(bench_cfg.embedding_path)
    models = _supervised_models(bench_cfg, args, cfg)

    input_files = _input_files(args.corpus_dir)
    docs, failures = _load_corpus(args.corpus_dir, not args.no_headers)
    if not docs:
        raise DataError(f"no usable documents in {args.corpus_dir}")
    expert = _load_expert_keywords(args.keywords)

    collected: dict[tuple[str, str, str], KeywordSet] = {}
    records = run_benchmark(docs, expert, bench_cfg, embeddings=embeddings,
                            models=models, keyword_collector=collected)
    summary = aggregate(records)
    freq = keyword_frequency(list(collected.values()))
    stats = sentence_stats(docs)

    config_echo = {
        "extractors": list(bench_cfg.extractors),
        "indexes": list(bench_cfg.indexes),
        "variants": list(bench_cfg.variants),
        "k": bench_cfg.k,
        "repeats": bench_cfg.repeats,
        "embedding_path": str(bench_cfg.embedding_path or ""),
        "model_paths": {k_: str(v) for k_, v in bench_cfg.model_paths.items()},
        "include_headers": not args.no_headers,
        "config_values": dict(cfg.values),
    }

    # Stage all report files, then move them into place so a fatal error
    # cannot leave a partial report behind.
    args.out.mkdir(parents=True, exist_ok=True)
    with tempfile.TemporaryDirectory(dir=args.out) as staging:
        written = []
        written += emit_report(records, summary, freq, staging, "csv",
                               config_echo=config_echo, stats=stats)
        written += emit_report(records, summary, freq, staging, "json",
                               config_echo=config_echo, stats=stats)
        if not args.no_figures:
            from .figures import render_figures
            written += render_figures(records, summary, freq, staging)

        manifest = {
            "tool": "kwsim",
            "version": __version__,
            "timestamp": time.strftime("%Y-%m-%dT%H:%M:%S%z"),
            "command": "bench",
            "config": config_echo,
            "inputs": [
                {"path": str(p), "sha256": _sha256(p)}
                for p in input_files + [args.keywords]
            ],
        }
        manifest_path = Path(staging) / "manifest.json"
        manifest_path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n",
                                 encoding="utf-8")
        written.append(manifest_path)
        for path in written:
            os.replace(path, args.out / path.name)

    for row in summary:
        print(f"{row['extractor']:18s} {row['index']:10s} {row['variant']:9s} "
              f"{row['display']:.2f}")
    for s in stats:
        print(f"{s['doc_id']}: sentences={s['total']} positive={s['positive']} "
              f"negative={s['negative']}")
    print(f"{len(records)} records -> {args.out}")
    if failures:
        raise PartialFailure(
            f"{len(docs)} documents benchmarked, {len(failures)} failed to parse")
    return 0


COMMANDS = {
    "ingest": cmd_ingest,
    "train": cmd_train,
    "extract": cmd_extract,
    "score": cmd_score,
    "bench": cmd_bench,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except KwsimError as exc:
        print(json.dumps({"error": exc.code, "message": exc.message}),
              file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
