"""Naive Bayes candidate classifier: equal-frequency feature
discretization, Laplace-smoothed likelihoods, JSON serialization."""

from __future__ import annotations

import json
import statistics
from bisect import bisect_right
from dataclasses import dataclass
from pathlib import Path

from ..errors import DataError, TrainingError

MODEL_FORMAT_VERSION = 1


@dataclass
class NBModel:
    feature_bins: list[list[float]]          # cut points per feature
    class_priors: dict[str, float]           # {"key": .., "not_key": ..}
    likelihoods: dict[str, list[list[float]]]  # class -> feature -> P(bin|class)
    extractor: str = ""

    @property
    def n_features(self) -> int:
        return len(self.feature_bins)

    def bin_index(self, feature: int, value: float) -> int:
        return bisect_right(self.feature_bins[feature], value)

    def posterior(self, features: list[float] | tuple[float, ...]) -> float:
        """P(key | features); strictly inside (0, 1) thanks to smoothing."""
        if len(features) != self.n_features:
            raise DataError(
                f"model expects {self.n_features} features, got {len(features)}")
        joint = {}
        for cls in ("key", "not_key"):
            p = self.class_priors[cls]
            for f, value in enumerate(features):
                p *= self.likelihoods[cls][f][self.bin_index(f, value)]
            joint[cls] = p
        return joint["key"] / (joint["key"] + joint["not_key"])


def _cut_points(values: list[float], bins: int) -> list[float]:
    """Equal-frequency boundaries; duplicates collapse for skewed data."""
    if bins < 2 or len(set(values)) < 2:
        return []
    cuts = statistics.quantiles(values, n=bins, method="inclusive")
    unique = []
    for c in cuts:
        if not unique or c > unique[-1]:
            unique.append(float(c))
    return unique


def nb_train(labeled: list[tuple[list[float] | tuple[float, ...], bool]],
             bins: int = 5, laplace: float = 1.0,
             extractor: str = "") -> NBModel:
    """Fit the classifier on (feature vector, is_key) pairs."""
    if not labeled:
        raise TrainingError("empty training set")
    n_features = len(labeled[0][0])
    if any(len(f) != n_features for f, _ in labeled):
        raise TrainingError("inconsistent feature vector lengths")
    n_pos = sum(1 for _, y in labeled if y)
    n_neg = len(labeled) - n_pos
    if n_pos == 0 or n_neg == 0:
        raise TrainingError(
            f"training set needs both classes (got {n_pos} keyphrase, {n_neg} other)")

    feature_bins = [
        _cut_points([float(f[i]) for f, _ in labeled], bins)
        for i in range(n_features)
    ]

    likelihoods: dict[str, list[list[float]]] = {}
    for cls, wanted, n_cls in (("key", True, n_pos), ("not_key", False, n_neg)):
        rows = []
        for i, cuts in enumerate(feature_bins):
            n_bins = len(cuts) + 1
            counts = [0] * n_bins
            for f, y in labeled:
                if y == wanted:
                    counts[bisect_right(cuts, float(f[i]))] += 1
            rows.append([(c + laplace) / (n_cls + laplace * n_bins) for c in counts])
        likelihoods[cls] = rows

    return NBModel(
        feature_bins=feature_bins,
        class_priors={"key": n_pos / len(labeled), "not_key": n_neg / len(labeled)},
        likelihoods=likelihoods,
        extractor=extractor,
    )


def model_to_json(model: NBModel) -> str:
    payload = {
        "version": MODEL_FORMAT_VERSION,
        "extractor": model.extractor,
        "bins": model.feature_bins,
        "priors": model.class_priors,
        "likelihoods": model.likelihoods,
    }
    return json.dumps(payload, sort_keys=True, indent=2)


def save_model(model: NBModel, path: str | Path) -> None:
    Path(path).write_text(model_to_json(model) + "\n", encoding="utf-8")


def load_model(path: str | Path) -> NBModel:
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise DataError(f"model file {path}: invalid JSON: {exc}") from exc
    if payload.get("version") != MODEL_FORMAT_VERSION:
        raise DataError(f"model file {path}: unsupported version {payload.get('version')!r}")
    return NBModel(
        feature_bins=payload["bins"],
        class_priors=payload["priors"],
        likelihoods=payload["likelihoods"],
        extractor=payload.get("extractor", ""),
    )
