"""Similarity indexes vs independent brute-force implementations."""

from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest

from kwsim.errors import EmbeddingLoadError
from kwsim.extract.base import KeywordSet
from kwsim.similarity import (
    EmbeddingTable,
    TokenBag,
    bow_cosine,
    jaccard,
    keywords_to_tokens,
    load_embeddings,
    wv_cosine,
    wv_cosine_flags,
)


# ---------------------------------------------------------------------------
# Brute-force references

def brute_jaccard(a: set, b: set) -> Fraction:
    if not a and not b:
        return Fraction(1)
    inter = sum(1 for x in a if x in b)
    union = len(a) + len(b) - inter
    return Fraction(inter, union)


def brute_cosine(a: dict, b: dict) -> float:
    vocab = sorted(set(a) | set(b))
    va = [a.get(t, 0) for t in vocab]
    vb = [b.get(t, 0) for t in vocab]
    dot = sum(x * y for x, y in zip(va, vb))
    na = math.sqrt(sum(x * x for x in va))
    nb = math.sqrt(sum(y * y for y in vb))
    if na == 0 or nb == 0:
        return 0.0
    return dot / (na * nb)


def ks(*phrases: str) -> KeywordSet:
    return KeywordSet(source="expert", entries=[(p, 0.0) for p in phrases], k=len(phrases))


def bag(**counts: int) -> TokenBag:
    return TokenBag(counts=dict(counts))


# ---------------------------------------------------------------------------
# keywords_to_tokens

def test_keywords_expand_to_tokens():
    token_set, token_bag = keywords_to_tokens(ks("porous carbon", "carbon nanotubes"))
    assert token_set == {"porous", "carbon", "nanotubes"}
    assert token_bag.counts == {"porous": 1, "carbon": 2, "nanotubes": 1}
    assert token_bag.total == 4


def test_keywords_empty():
    token_set, token_bag = keywords_to_tokens(ks())
    assert token_set == set()
    assert token_bag.counts == {}


def test_keywords_single():
    token_set, _ = keywords_to_tokens(ks("edlc"))
    assert token_set == {"edlc"}


def test_keywords_keep_hyphenated():
    token_set, _ = keywords_to_tokens(ks("non-faradaic process"))
    assert token_set == {"non-faradaic", "process"}


# ---------------------------------------------------------------------------
# jaccard

def test_jaccard_identity():
    assert jaccard({"a", "b"}, {"a", "b"}) == 1.0


def test_jaccard_hand_value():
    assert jaccard({"a", "b", "c"}, {"b", "c", "d"}) == 0.5


def test_jaccard_disjoint_and_empty():
    assert jaccard({"a"}, {"b"}) == 0.0
    assert jaccard(set(), set()) == 1.0
    assert jaccard({"a"}, set()) == 0.0
    assert jaccard(set(), {"a"}) == 0.0


def test_jaccard_one_iff_equal():
    rng = random.Random(2)
    vocab = [f"t{i}" for i in range(10)]
    for _ in range(300):
        a = {rng.choice(vocab) for _ in range(rng.randint(0, 6))}
        b = {rng.choice(vocab) for _ in range(rng.randint(0, 6))}
        assert (jaccard(a, b) == 1.0) == (a == b)


# ---------------------------------------------------------------------------
# bow_cosine

def test_cosine_identical_bags():
    assert bow_cosine(bag(x=2, y=3), bag(x=2, y=3)) == pytest.approx(1.0, abs=1e-12)


def test_cosine_orthogonal():
    assert bow_cosine(bag(x=1), bag(y=1)) == 0.0


def test_cosine_hand_value():
    assert bow_cosine(bag(a=1, b=1), bag(a=1)) == pytest.approx(1 / math.sqrt(2), abs=1e-12)


def test_cosine_empty_side():
    assert bow_cosine(bag(), bag(x=1)) == 0.0
    assert bow_cosine(bag(), bag()) == 0.0


def test_cosine_scale_invariant():
    a, b = bag(x=1, y=2, z=3), bag(x=2, y=1)
    base = bow_cosine(a, b)
    scaled = bow_cosine(bag(x=7, y=14, z=21), b)
    assert scaled == pytest.approx(base, abs=1e-12)


def test_metrics_match_brute_force_on_1000_random_pairs():
    rng = random.Random(42)
    vocab = [f"w{i}" for i in range(40)]
    for _ in range(1000):
        a_tokens = [rng.choice(vocab) for _ in range(rng.randint(0, 20))]
        b_tokens = [rng.choice(vocab) for _ in range(rng.randint(0, 20))]
        a_set, b_set = set(a_tokens), set(b_tokens)
        got_j = jaccard(a_set, b_set)
        assert got_j == float(brute_jaccard(a_set, b_set))
        a_bag, b_bag = TokenBag(), TokenBag()
        for t in a_tokens:
            a_bag.add(t)
        for t in b_tokens:
            b_bag.add(t)
        got_c = bow_cosine(a_bag, b_bag)
        assert abs(got_c - brute_cosine(a_bag.counts, b_bag.counts)) < 1e-12
        # Symmetry is exact.
        assert jaccard(b_set, a_set) == got_j
        assert bow_cosine(b_bag, a_bag) == got_c


# ---------------------------------------------------------------------------
# embeddings

def write_emb(tmp_path, text):
    p = tmp_path / "emb.txt"
    p.write_text(text, encoding="utf-8")
    return p


def test_load_embeddings_two_lines(tmp_path):
    emb = load_embeddings(write_emb(tmp_path, "a 1 0 0\nb 0 1 0\n"))
    assert emb.dim == 3
    assert set(emb.vectors) == {"a", "b"}


def test_load_embeddings_dimension_mismatch_names_line(tmp_path):
    with pytest.raises(EmbeddingLoadError) as err:
        load_embeddings(write_emb(tmp_path, "a 1 0 0\nb 0 1\n"))
    assert ":2" in str(err.value)


def test_load_embeddings_duplicate_last_wins(tmp_path):
    emb = load_embeddings(write_emb(tmp_path, "a 1 0\na 0 1\n"))
    assert emb.duplicate_count == 1
    assert list(emb.vectors["a"]) == [0.0, 1.0]


def test_load_embeddings_empty_errors(tmp_path):
    with pytest.raises(EmbeddingLoadError):
        load_embeddings(write_emb(tmp_path, ""))


# ---------------------------------------------------------------------------
# wv_cosine on the dim-2 toy table

ROOT2 = 1 / math.sqrt(2)
TOY = EmbeddingTable(dim=2, vectors={
    "a": __import__("numpy").array([1.0, 0.0]),
    "b": __import__("numpy").array([0.0, 1.0]),
    "c": __import__("numpy").array([ROOT2, ROOT2]),
    "d": __import__("numpy").array([1.0, 1.0]),
})


def test_wv_identical_sets():
    assert wv_cosine({"a", "c"}, {"a", "c"}, TOY) == pytest.approx(1.0, abs=1e-12)


def test_wv_hand_computed_centroids():
    # centroid({a,b}) = (.5,.5); centroid({a}) = (1,0) -> cos = 1/sqrt(2)
    assert wv_cosine({"a", "b"}, {"a"}, TOY) == pytest.approx(ROOT2, abs=1e-12)
    # centroid({a,b}) parallel to c -> cos = 1
    assert wv_cosine({"a", "b"}, {"c"}, TOY) == pytest.approx(1.0, abs=1e-12)
    # orthogonal singletons
    assert wv_cosine({"a"}, {"b"}, TOY) == pytest.approx(0.0, abs=1e-12)
    # centroid({a,d}) = (1, .5); centroid({b}) = (0,1)
    expected = 0.5 / (math.sqrt(1.25) * 1.0)
    assert wv_cosine({"a", "d"}, {"b"}, TOY) == pytest.approx(expected, abs=1e-12)


def test_wv_oov_tokens_skipped():
    score = wv_cosine({"a", "zzz"}, {"a"}, TOY)
    assert score == pytest.approx(1.0, abs=1e-12)


def test_wv_fully_oov_flags():
    score, flags = wv_cosine_flags({"xx", "yy"}, {"a"}, TOY)
    assert score == 0.0
    assert flags == ["oov"]
    score2, flags2 = wv_cosine_flags({"a"}, {"zz"}, TOY)
    assert score2 == 0.0 and flags2 == ["oov"]


def test_wv_symmetric():
    assert wv_cosine({"a", "b"}, {"c", "d"}, TOY) == wv_cosine({"c", "d"}, {"a", "b"}, TOY)


def test_wv_range():
    rng = random.Random(9)
    toks = list(TOY.vectors)
    for _ in range(100):
        a = {rng.choice(toks) for _ in range(rng.randint(1, 4))}
        b = {rng.choice(toks) for _ in range(rng.randint(1, 4))}
        assert -1.0 - 1e-12 <= wv_cosine(a, b, TOY) <= 1.0 + 1e-12
