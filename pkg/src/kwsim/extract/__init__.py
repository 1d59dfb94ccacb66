"""Six keyword extractors behind one dispatch surface."""

from __future__ import annotations

from ..config import Config
from ..errors import UsageError
from ..ingest import Document
from ..textcore import CorpusStats
from .base import EXTRACTOR_NAMES, SUPERVISED, KeywordSet
from .bayes import NBModel
from .kpminer import kpminer_extract
from .multipartite import multipartiterank_extract
from .supervised import kea_extract, wingnus_extract
from .topicrank import topicrank_extract
from .yake import yake_extract

__all__ = [
    "EXTRACTOR_NAMES", "SUPERVISED", "KeywordSet", "extract",
    "yake_extract", "topicrank_extract", "multipartiterank_extract",
    "kpminer_extract", "kea_extract", "wingnus_extract",
]


def extract(name: str, text: str, k: int, *,
            stats: CorpusStats | None = None,
            model: NBModel | None = None,
            doc: Document | None = None,
            structure: str = "full_text",
            config: Config | None = None) -> KeywordSet:
    """Run the named extractor; unknown names list the valid six."""
    if name not in EXTRACTOR_NAMES:
        raise UsageError(
            f"unknown extractor {name!r}; valid extractors: {', '.join(EXTRACTOR_NAMES)}")
    if name == "yake":
        return yake_extract(text, k, config)
    if name == "topicrank":
        return topicrank_extract(text, k, config)
    if name == "multipartiterank":
        return multipartiterank_extract(text, k, config)
    if name in ("kpminer", "kea", "wingnus") and stats is None:
        raise UsageError(f"{name}: corpus statistics are required")
    if name == "kpminer":
        return kpminer_extract(text, k, stats, config)
    if name == "kea":
        return kea_extract(text, k, model, stats, config)
    return wingnus_extract(text, k, model, stats, structure=structure,
                           doc=doc, config=config)
