"""Naive Bayes training, classification, and serialization."""

from __future__ import annotations

import pytest

from kwsim.errors import TrainingError
from kwsim.extract.bayes import NBModel, load_model, model_to_json, nb_train, save_model

# Separable 6-point toy set: keyphrases have high tfidf and early first
# occurrence, non-keyphrases the opposite.
TOY_SET = [
    ((0.5, 0.0), True),
    ((0.45, 0.1), True),
    ((0.6, 0.05), True),
    ((0.0, 0.5), False),
    ((0.05, 0.6), False),
    ((0.0, 0.9), False),
]


def test_separable_toy_set_classified_correctly():
    model = nb_train(TOY_SET)
    for features, is_key in TOY_SET:
        posterior = model.posterior(features)
        assert (posterior > 0.5) == is_key, (features, posterior)


def test_priors_sum_to_one_and_likelihood_rows_normalized():
    model = nb_train(TOY_SET)
    assert sum(model.class_priors.values()) == pytest.approx(1.0, abs=1e-12)
    for rows in model.likelihoods.values():
        for row in rows:
            assert sum(row) == pytest.approx(1.0, abs=1e-12)
            assert all(p > 0 for p in row)


def test_posteriors_strictly_inside_unit_interval():
    model = nb_train(TOY_SET)
    for features in [(0.5, 0.0), (0.0, 0.9), (10.0, -5.0), (0.3, 0.3)]:
        p = model.posterior(features)
        assert 0.0 < p < 1.0


def test_identical_examples_opposite_labels_no_crash():
    model = nb_train([((0.5, 0.5), True), ((0.5, 0.5), False)])
    p = model.posterior((0.5, 0.5))
    assert 0.0 < p < 1.0


def test_empty_training_set_errors():
    with pytest.raises(TrainingError):
        nb_train([])


def test_single_class_errors():
    with pytest.raises(TrainingError):
        nb_train([((0.1, 0.2), True), ((0.3, 0.4), True)])


def test_serialization_roundtrip_byte_identical(tmp_path):
    model = nb_train(TOY_SET, extractor="kea")
    p1 = tmp_path / "m1.json"
    p2 = tmp_path / "m2.json"
    save_model(model, p1)
    save_model(load_model(p1), p2)
    assert p1.read_bytes() == p2.read_bytes()


def test_retraining_is_deterministic():
    assert model_to_json(nb_train(TOY_SET)) == model_to_json(nb_train(TOY_SET))


def test_roundtrip_preserves_posteriors(tmp_path):
    model = nb_train(TOY_SET)
    path = tmp_path / "m.json"
    save_model(model, path)
    loaded = load_model(path)
    for features, _ in TOY_SET:
        assert loaded.posterior(features) == model.posterior(features)


def test_binning_collapses_degenerate_features():
    # Constant feature: no cut points, single bin, still trains.
    data = [((1.0, 0.1), True), ((1.0, 0.9), False), ((1.0, 0.2), True), ((1.0, 0.8), False)]
    model = nb_train(data)
    assert model.feature_bins[0] == []
    assert 0.0 < model.posterior((1.0, 0.15)) < 1.0
