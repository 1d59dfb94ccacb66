"""Report figures: rendered to files next to the delimited output.

Three charts mirror the benchmark tables: mean similarity scores per
extractor/index/variant, similarity-phase wall times, and the keyword
frequency table (the word-cloud data, drawn as bars rather than a cloud).
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .bench import ScoreRecord

_INDEX_ORDER = ("jaccard", "cosine", "cosine_wv")
_VARIANT_COLORS = {"positive": "#4c72b0", "all": "#dd8452"}


def _grouped(summary: Sequence[dict]):
    extractors = sorted({row["extractor"] for row in summary})
    indexes = [i for i in _INDEX_ORDER if any(r["index"] == i for r in summary)]
    variants = sorted({row["variant"] for row in summary})
    table = {(r["extractor"], r["index"], r["variant"]): r["mean_score"] for r in summary}
    return extractors, indexes, variants, table


def plot_scores(summary: Sequence[dict], out_path: Path) -> Path:
    extractors, indexes, variants, table = _grouped(summary)
    fig, axes = plt.subplots(1, len(indexes), figsize=(4.2 * len(indexes), 3.6),
                             sharey=True, squeeze=False)
    x = np.arange(len(extractors))
    width = 0.8 / max(len(variants), 1)
    for ax, index in zip(axes[0], indexes):
        for vi, variant in enumerate(variants):
            heights = [table.get((e, index, variant), 0.0) for e in extractors]
            ax.bar(x + vi * width, heights, width,
                   label=variant, color=_VARIANT_COLORS.get(variant))
        ax.set_title(index)
        ax.set_xticks(x + width * (len(variants) - 1) / 2)
        ax.set_xticklabels(extractors, rotation=45, ha="right", fontsize=8)
        ax.set_ylim(0, 1.05)
    axes[0][0].set_ylabel("mean similarity")
    axes[0][-1].legend(title="variant", fontsize=8)
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
    return out_path


def plot_runtimes(records: Sequence[ScoreRecord], out_path: Path) -> Path:
    extractors = sorted({r.extractor for r in records})
    variants = sorted({r.variant for r in records})
    sums: dict[tuple[str, str], list[float]] = {}
    for r in records:
        sums.setdefault((r.extractor, r.variant), []).append(r.wall_time_s)
    fig, ax = plt.subplots(figsize=(6.5, 3.6))
    x = np.arange(len(extractors))
    width = 0.8 / max(len(variants), 1)
    for vi, variant in enumerate(variants):
        heights = []
        for e in extractors:
            values = sums.get((e, variant), [0.0])
            heights.append(1e3 * sum(values) / len(values))
        ax.bar(x + vi * width, heights, width,
               label=variant, color=_VARIANT_COLORS.get(variant))
    ax.set_xticks(x + width * (len(variants) - 1) / 2)
    ax.set_xticklabels(extractors, rotation=45, ha="right", fontsize=8)
    ax.set_ylabel("similarity wall time (ms)")
    ax.legend(title="variant", fontsize=8)
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
    return out_path


def plot_keyword_frequency(freq: dict[str, int], out_path: Path, top_n: int = 25) -> Path:
    items = list(freq.items())[:top_n]
    fig, ax = plt.subplots(figsize=(6.5, max(2.5, 0.28 * len(items))))
    if items:
        phrases = [p for p, _ in items][::-1]
        counts = [c for _, c in items][::-1]
        ax.barh(np.arange(len(items)), counts, color="#55a868")
        ax.set_yticks(np.arange(len(items)))
        ax.set_yticklabels(phrases, fontsize=8)
        ax.set_xlabel("documents containing phrase")
    else:
        ax.text(0.5, 0.5, "no keywords", ha="center", va="center")
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
    return out_path


def render_figures(records: Sequence[ScoreRecord], summary: Sequence[dict],
                   freq: dict[str, int], out_dir: str | Path) -> list[Path]:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    return [
        plot_scores(summary, out_dir / "scores_by_extractor.png"),
        plot_runtimes(records, out_dir / "runtime_comparison.png"),
        plot_keyword_frequency(freq, out_dir / "keyword_frequency.png"),
    ]
