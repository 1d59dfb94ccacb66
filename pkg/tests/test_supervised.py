"""KEA and WINGNUS extraction with toy models."""

from __future__ import annotations

import pytest

from kwsim.config import Config
from kwsim.errors import TrainingError, UsageError
from kwsim.extract.bayes import NBModel, nb_train
from kwsim.extract.supervised import (
    kea_extract,
    load_training_corpus,
    train_from_directory,
    training_examples,
    wingnus_candidates,
    wingnus_extract,
)
from kwsim.extract.base import default_stopwords, document_tokens
from kwsim.ingest import RawArticle, build_document
from kwsim.textcore import CorpusStats

from test_bayes import TOY_SET

TOY_MODEL = nb_train(TOY_SET, extractor="kea")


def test_kea_requires_model():
    with pytest.raises(UsageError):
        kea_extract("some text here", 5, None, CorpusStats(n_docs=1, doc_freq={}))


def test_kea_early_high_tfidf_ranks_first():
    text = ("Supercapacitor electrodes. Supercapacitor devices. "
            "Supercapacitor cells. Common words follow the common words.")
    stats = CorpusStats(n_docs=4, doc_freq={
        "supercapacitor": 1, "electrodes": 4, "devices": 4, "cells": 4,
        "common": 4, "words": 4, "follow": 4,
    })
    ks = kea_extract(text, 5, TOY_MODEL, stats, Config({"n_max": 1}))
    assert ks.phrases[0] == "supercapacitor"
    scores = [s for _, s in ks.entries]
    assert scores == sorted(scores, reverse=True)


def test_kea_k_larger_than_candidates_returns_all():
    text = "graphene conducts electrons"
    stats = CorpusStats(n_docs=2, doc_freq={})
    ks = kea_extract(text, 50, TOY_MODEL, stats, Config({"n_max": 1}))
    assert len(ks.entries) == 3


def test_kea_identical_features_tie_broken_by_offset():
    # zeta and gamma: same tf, same df, nearby offsets -> same bins,
    # identical posteriors; zeta appears first.
    text = "zeta gamma zeta gamma"
    stats = CorpusStats(n_docs=2, doc_freq={"zeta": 1, "gamma": 1})
    ks = kea_extract(text, 2, TOY_MODEL, stats, Config({"n_max": 1}))
    assert ks.phrases == ["zeta", "gamma"]
    assert ks.entries[0][1] == ks.entries[1][1]


def test_kea_empty_text():
    ks = kea_extract("", 5, TOY_MODEL, CorpusStats(n_docs=1, doc_freq={}))
    assert ks.entries == []


# ---------------------------------------------------------------------------
# WINGNUS

def wingnus_toy_model():
    """Hand-set model: tfidf and first-occurrence carry no information,
    the structure-level count decides."""
    return NBModel(
        feature_bins=[[], [], [1.5]],
        class_priors={"key": 0.5, "not_key": 0.5},
        likelihoods={
            "key": [[1.0], [1.0], [0.2, 0.8]],
            "not_key": [[1.0], [1.0], [0.8, 0.2]],
        },
        extractor="wingnus",
    )


def tei_doc(body: str, title: str = "") -> RawArticle:
    xml = (f"<TEI><teiHeader><titleStmt><title>{title}</title></titleStmt></teiHeader>"
           f"<text><body>{body}</body></text></TEI>")
    return RawArticle(id="w", source_format="tei_xml", data=xml.encode())


def test_wingnus_candidate_pattern_allows_of_joins():
    tokens = document_tokens("the state of charge matters")
    phrases = {c.phrase for c in wingnus_candidates(tokens, 3, default_stopwords())}
    assert "state of charge" in phrases
    assert "state" in phrases and "charge" in phrases
    # No candidate starts or ends with a stopword or bare "of".
    for p in phrases:
        parts = p.split()
        assert parts[0] not in default_stopwords()
        assert parts[-1] not in default_stopwords()


def test_wingnus_title_level_outranks_body_only():
    doc = build_document(tei_doc(
        "<p>The porous carbon stores charge. The graphite oxide stores charge.</p>",
        title="Porous carbon study"))
    stats = CorpusStats(n_docs=2, doc_freq={})
    ks = wingnus_extract(doc.all_text, 30, wingnus_toy_model(), stats,
                         structure="full_text", doc=doc)
    scores = dict(ks.entries)
    assert scores["porous carbon"] > scores["graphite oxide"]


def test_wingnus_structure_restricts_candidates():
    doc = build_document(tei_doc(
        "<div><head>Porous carbon materials</head><p>The graphite oxide dominates.</p></div>"
        "<div><head>Electrolyte ions</head><p>More body text follows.</p></div>"
        "<div><head>Charge storage</head><p>Closing text.</p></div>",
        title="Capacitor overview"))
    assert len(doc.section_headers) == 3
    stats = CorpusStats(n_docs=2, doc_freq={})
    ks = wingnus_extract(doc.all_text, 30, wingnus_toy_model(), stats,
                         structure="title_headers", doc=doc)
    level_tokens = set()
    for t in document_tokens(". ".join([doc.title] + doc.section_headers)):
        level_tokens.add(t.surface)
    assert ks.entries
    for phrase, _ in ks.entries:
        assert set(phrase.split()) <= level_tokens
    assert "graphite oxide" not in ks.phrases


def test_wingnus_missing_level_falls_back_with_flag():
    art = RawArticle(id="p", source_format="plain_text",
                     data=b"Porous carbon stores charge. Ions move freely.")
    doc = build_document(art)
    stats = CorpusStats(n_docs=2, doc_freq={})
    ks = wingnus_extract(doc.all_text, 10, wingnus_toy_model(), stats,
                         structure="title_headers", doc=doc)
    assert "fallback" in ks.flags
    assert ks.entries


def test_wingnus_k_zero():
    stats = CorpusStats(n_docs=1, doc_freq={})
    ks = wingnus_extract("porous carbon stores charge", 0, wingnus_toy_model(), stats)
    assert ks.entries == []


def test_wingnus_unknown_structure_errors():
    with pytest.raises(UsageError):
        wingnus_extract("text", 5, wingnus_toy_model(),
                        CorpusStats(n_docs=1, doc_freq={}), structure="chapters")


# ---------------------------------------------------------------------------
# Training corpus loading

def make_training_dir(tmp_path, n_docs=2, with_keys=True):
    for i in range(n_docs):
        doc = tmp_path / f"doc{i}.txt"
        doc.write_text(
            "Porous carbon stores charge. Graphene conducts electrons. "
            "The electrolyte fills the pores. Capacitance rises quickly.",
            encoding="utf-8")
        if with_keys:
            (tmp_path / f"doc{i}.key").write_text(
                "porous carbon\ngraphene\n", encoding="utf-8")
    return tmp_path


def test_training_corpus_missing_sidecars_lists_offenders(tmp_path):
    make_training_dir(tmp_path, with_keys=False)
    with pytest.raises(TrainingError) as err:
        load_training_corpus(tmp_path)
    assert "doc0.txt" in str(err.value)


def test_training_examples_have_both_classes(tmp_path):
    corpus = load_training_corpus(make_training_dir(tmp_path))
    examples = training_examples(corpus, "kea")
    assert any(y for _, y in examples)
    assert any(not y for _, y in examples)
    assert all(len(f) == 2 for f, _ in examples)
    wingnus_examples = training_examples(corpus, "wingnus")
    assert all(len(f) == 3 for f, _ in wingnus_examples)


def test_train_from_directory_roundtrip(tmp_path):
    model, n, n_pos = train_from_directory(make_training_dir(tmp_path), "kea")
    assert model.extractor == "kea"
    assert 0 < n_pos < n
