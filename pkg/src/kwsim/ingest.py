"""Document ingestion: TEI-XML or plain text in, cleaned and
sentence-segmented documents with polarity-tagged sentences out.

The pipeline is rule-based and deterministic end to end: no stemming,
no lemmatisation, and no normalization of non-standard words (chemical
formulas, acronyms, numbers survive verbatim).
"""

from __future__ import annotations

import json
import re
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from typing import Literal

from . import resources
from .errors import EmptyDocumentError, ParseError

Polarity = Literal["positive", "negative"]

SourceFormat = Literal["tei_xml", "plain_text"]


@dataclass(frozen=True)
class RawArticle:
    id: str
    source_format: SourceFormat
    data: bytes

    def __post_init__(self):
        if not self.id:
            raise ValueError("article id must be non-empty")


@dataclass(frozen=True)
class Sentence:
    index: int
    text: str
    polarity: Polarity


@dataclass
class Document:
    id: str
    title: str
    section_headers: list[str]
    sentences: list[Sentence]
    all_text: str
    positive_text: str
    # (header, cleaned body text) per section; leading text before the
    # first header gets an empty header label.
    sections: list[tuple[str, str]] = field(default_factory=list)

    @property
    def positive_count(self) -> int:
        return sum(1 for s in self.sentences if s.polarity == "positive")


# ---------------------------------------------------------------------------
# TEI parsing

_EXCLUDED_ELEMENTS = {"ref", "figure", "table", "formula"}
_WS_RUN = re.compile(r"\s+")


def _localname(tag: str) -> str:
    return tag.rsplit("}", 1)[-1] if "}" in tag else tag


def _collapse(text: str) -> str:
    return _WS_RUN.sub(" ", text).strip()


def _byte_offset(data: bytes, line: int, column: int) -> int:
    lines = data.split(b"\n")
    return sum(len(l) + 1 for l in lines[: line - 1]) + column


class _TeiWalker:
    def __init__(self):
        self.parts: list[str] = []
        self.headers: list[str] = []
        self.sections: list[tuple[str, list[str]]] = []
        self._current: list[str] = []
        self._current_header = ""

    def _emit(self, text: str) -> None:
        if text:
            self.parts.append(text)
            self._current.append(text)

    def _start_section(self, header: str) -> None:
        if self._current or self._current_header:
            self.sections.append((self._current_header, self._current))
        self._current = []
        self._current_header = header

    def finish(self) -> None:
        if self._current or self._current_header:
            self.sections.append((self._current_header, self._current))

    def walk(self, elem: ET.Element, include_headers: bool) -> None:
        tag = _localname(elem.tag)
        if tag in _EXCLUDED_ELEMENTS:
            return
        if tag == "head":
            header = _collapse(" ".join(elem.itertext()))
            if header:
                self.headers.append(header)
                self._start_section(header)
                if include_headers:
                    self.parts.append(header + ".")
            return
        if elem.text:
            self._emit(elem.text)
        for child in elem:
            self.walk(child, include_headers)
            if child.tail:
                self._emit(child.tail)


def _parse_tei_tree(article: RawArticle, include_headers: bool):
    try:
        root = ET.fromstring(article.data)
    except ET.ParseError as exc:
        line, column = exc.position
        offset = _byte_offset(article.data, line, column)
        raise ParseError(
            f"{article.id}: malformed XML at byte offset {offset}: {exc}") from exc

    title = ""
    for elem in root.iter():
        if _localname(elem.tag) == "title":
            title = _collapse(" ".join(elem.itertext()))
            break

    abstract_text = ""
    for elem in root.iter():
        if _localname(elem.tag) == "abstract":
            abstract_text = _collapse(" ".join(elem.itertext()))
            break

    body = None
    for elem in root.iter():
        if _localname(elem.tag) == "body":
            body = elem
            break
    if body is None:
        raise EmptyDocumentError(f"{article.id}: TEI document has no body element")

    walker = _TeiWalker()
    walker.walk(body, include_headers)
    walker.finish()
    body_text = _collapse(" ".join(walker.parts))
    if not body_text:
        raise EmptyDocumentError(f"{article.id}: no body text after stripping")

    sections = [(h, _collapse(" ".join(parts))) for h, parts in walker.sections]
    if abstract_text:
        sections.insert(0, ("Abstract", abstract_text))
    return title, walker.headers, body_text, sections


def parse_tei(article: RawArticle) -> tuple[str, list[str], str]:
    """Extract (title, section headers, body text) from a TEI-XML article.

    Reference, figure, table, and formula elements are stripped with
    their content; header texts are returned separately and also appear
    in the body text in document order.
    """
    if article.source_format != "tei_xml":
        raise ValueError(f"{article.id}: parse_tei requires tei_xml input")
    title, headers, body_text, _ = _parse_tei_tree(article, include_headers=True)
    return title, headers, body_text


# ---------------------------------------------------------------------------
# Cleaning

# Bracketed citation markers: [12], [12,13], [1-4], with optional spaces.
_CITATION = re.compile(r"\[\s*\d+(?:\s*[,;–-]\s*\d+)*\s*\]")
_EMPTY_PARENS = re.compile(r"\(\s*\)")
_SPACE_BEFORE_PUNCT = re.compile(r"\s+([.,;:!?])")


def clean_text(raw: str,
               substitutions: tuple[tuple[str, str], ...] | None = None) -> str:
    """Normalize one block of text.

    Applies the special-character substitution map, strips bracketed
    citation markers (and parentheses left holding nothing else),
    removes line breaks, and collapses whitespace runs.  Words stay
    verbatim: no case folding, no stemming, chemical formulas intact.
    """
    text = raw
    for src, dst in (substitutions or resources.char_substitutions()):
        text = text.replace(src, dst)
    # Marker and empty-paren removal can cascade; iterate to a fixpoint so
    # cleaning is idempotent.
    while True:
        stripped = _CITATION.sub(" ", text)
        stripped = _EMPTY_PARENS.sub(" ", stripped)
        if stripped == text:
            break
        text = stripped
    text = _WS_RUN.sub(" ", text)
    text = _SPACE_BEFORE_PUNCT.sub(r"\1", text)
    return text.strip()


# ---------------------------------------------------------------------------
# Sentence segmentation and polarity

_TERMINATOR = re.compile(r"[.!?]+(?=\s+[A-Z0-9])")
_POLARITY_TOKEN = re.compile(r"[^\W_]+(?:['’-][^\W_]+)*", re.UNICODE)


def _guarded(prefix: str, guards: tuple[str, ...]) -> bool:
    low = prefix.lower()
    for guard in guards:
        g = guard.lower()
        if low.endswith(g):
            before = len(prefix) - len(g) - 1
            if before < 0 or not prefix[before].isalnum():
                return True
    return False


def split_sentences(text: str,
                    abbreviations: tuple[str, ...] | None = None) -> list[Sentence]:
    """Rule-based segmentation on {., !, ?} + whitespace + uppercase/digit,
    with an abbreviation guard; each sentence carries its polarity tag."""
    if not text.strip():
        return []
    guards = abbreviations if abbreviations is not None else resources.abbreviations()
    breaks = []
    for m in _TERMINATOR.finditer(text):
        if "." in m.group(0) and _guarded(text[: m.end()], guards):
            continue
        breaks.append(m.end())
    pieces = []
    start = 0
    for b in breaks:
        pieces.append(text[start:b])
        start = b
    pieces.append(text[start:])
    sentences = []
    for piece in pieces:
        piece = piece.strip()
        if not piece:
            continue
        sentences.append(Sentence(index=len(sentences), text=piece,
                                  polarity=classify_polarity(piece)))
    return sentences


def classify_polarity(sentence: Sentence | str,
                      cues: frozenset[str] | None = None) -> Polarity:
    """negative iff any lowercased token is a negation cue or ends in n't."""
    text = sentence.text if isinstance(sentence, Sentence) else sentence
    cue_set = cues if cues is not None else resources.negation_cues()
    for token in _POLARITY_TOKEN.findall(text.lower()):
        if token in cue_set or token.endswith("n't"):
            return "negative"
    return "positive"


# ---------------------------------------------------------------------------
# Document assembly

def build_document(article: RawArticle, include_headers: bool = True) -> Document:
    """Parse, clean, segment, and polarity-tag one article."""
    if article.source_format == "tei_xml":
        title, headers, body, sections = _parse_tei_tree(article, include_headers)
    else:
        body = article.data.decode("utf-8")
        title, headers, sections = "", [], []

    cleaned = clean_text(body)
    sentences = split_sentences(cleaned)
    if not sentences:
        raise EmptyDocumentError(f"{article.id}: no sentences after cleaning")

    all_text = " ".join(s.text for s in sentences)
    positive_text = " ".join(s.text for s in sentences if s.polarity == "positive")
    return Document(
        id=article.id,
        title=clean_text(title) if title else "",
        section_headers=[clean_text(h) for h in headers],
        sentences=sentences,
        all_text=all_text,
        positive_text=positive_text,
        sections=[(clean_text(h) if h else "", clean_text(t)) for h, t in sections],
    )


def document_to_json(doc: Document) -> str:
    """Debug dump in the documented schema."""
    payload = {
        "id": doc.id,
        "title": doc.title,
        "section_headers": doc.section_headers,
        "sentences": [
            {"index": s.index, "text": s.text, "polarity": s.polarity}
            for s in doc.sentences
        ],
    }
    return json.dumps(payload, ensure_ascii=False, indent=2)


def load_article(path) -> RawArticle:
    """Read one input file; format is keyed off the extension."""
    from pathlib import Path

    p = Path(path)
    fmt: SourceFormat = "tei_xml" if p.suffix.lower() == ".xml" else "plain_text"
    return RawArticle(id=p.stem, source_format=fmt, data=p.read_bytes())
