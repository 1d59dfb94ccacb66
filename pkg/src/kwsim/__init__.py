"""kwsim: keyword extraction and expert-keyword similarity benchmarking.

Library surface in brief:

    from kwsim import build_document, extract, run_benchmark

    doc = build_document(load_article("paper.xml"))
    keywords = extract("yake", doc.all_text, k=30)
"""

__version__ = "0.1.0"

from .ingest import Document, RawArticle, Sentence, build_document, load_article  # noqa: E402,F401
from .extract import EXTRACTOR_NAMES, KeywordSet, extract  # noqa: E402,F401
from .bench import BenchConfig, ScoreRecord, run_benchmark  # noqa: E402,F401
from .similarity import bow_cosine, jaccard, load_embeddings, wv_cosine  # noqa: E402,F401
