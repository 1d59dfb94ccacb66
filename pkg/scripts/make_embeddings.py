#!/usr/bin/env python3
"""Regenerate the bundled synthetic embedding table.

Vectors share a strong common direction with per-token noise, so tokens
from the same technical register land close together: centroid cosines
between keyword sets come out high, the way a domain-trained embedding
behaves.  The table covers every token in the bundled corpora plus
filler vocabulary, at dim 50.  Output is deterministic (seeded RNG);
rerunning overwrites src/kwsim/data/embeddings_50d.txt in place.
"""

from __future__ import annotations

import sys
from pathlib import Path

import numpy as np

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from kwsim import resources                      # noqa: E402
from kwsim.extract.base import document_tokens   # noqa: E402
from kwsim.ingest import build_document, load_article  # noqa: E402

DIM = 50
NOISE = 1.0
SEED = 20240521
TARGET_SIZE = 2000

PREFIXES = ["nano", "micro", "meso", "electro", "thermo", "photo", "bio",
            "hydro", "poly", "ultra", "inter", "macro", "iso", "multi",
            "semi", "pseudo", "anti", "super", "sub", "co"]
STEMS = ["tube", "pore", "layer", "phase", "cell", "film", "wire", "sheet",
         "gel", "foam", "fiber", "grain", "shell", "rod", "mesh", "flake",
         "particle", "crystal", "channel", "cluster", "domain", "lattice",
         "membrane", "matrix", "composite"]
SUFFIXES = ["", "s", "d"]


def corpus_vocabulary() -> set[str]:
    vocab: set[str] = set()
    data = ROOT / "src" / "kwsim" / "data"
    for folder in ("minicorpus", "train"):
        for path in sorted((data / folder).iterdir()):
            if path.suffix == ".key":
                for line in path.read_text(encoding="utf-8").splitlines():
                    vocab.update(line.strip().lower().split())
                continue
            if path.suffix not in (".txt", ".xml"):
                continue
            doc = build_document(load_article(path))
            for text in (doc.all_text, doc.title, " ".join(doc.section_headers)):
                vocab.update(t.surface for t in document_tokens(text))
    for text, _label in (
        row.split("\t")
        for row in (data / "polarity_fixture.tsv").read_text(encoding="utf-8").splitlines()
        if row and not row.startswith("#")
    ):
        vocab.update(t.surface for t in document_tokens(text))
    for line in (data / "expert_keywords.txt").read_text(encoding="utf-8").splitlines():
        vocab.update(line.strip().lower().split())
    vocab.update(resources.stopwords())
    return vocab


def filler_vocabulary(n: int) -> list[str]:
    words = []
    for prefix in PREFIXES:
        for stem in STEMS:
            for suffix in SUFFIXES:
                words.append(prefix + stem + suffix)
    return sorted(set(words))[:n]


def main() -> None:
    vocab = corpus_vocabulary()
    filler = filler_vocabulary(max(0, TARGET_SIZE - len(vocab)))
    tokens = sorted(vocab | set(filler))

    rng = np.random.default_rng(SEED)
    base = np.ones(DIM) / np.sqrt(DIM)
    out_path = ROOT / "src" / "kwsim" / "data" / "embeddings_50d.txt"
    with out_path.open("w", encoding="utf-8") as fh:
        for token in tokens:
            noise = rng.standard_normal(DIM)
            noise /= np.linalg.norm(noise)
            vec = base + NOISE * noise
            vec /= np.linalg.norm(vec)
            fh.write(token + " " + " ".join(f"{v:.4f}" for v in vec) + "\n")
    print(f"wrote {len(tokens)} vectors (dim {DIM}) -> {out_path}")


if __name__ == "__main__":
    main()
