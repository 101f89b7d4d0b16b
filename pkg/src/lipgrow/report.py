"""Optional run reports: a delimited per-iteration trace and a rendered figure."""

from __future__ import annotations

import csv

import numpy as np

from .grow import GrowthResult
from .image import Coord, GrayImage
from .region import CriterionConfig

__all__ = ["write_trace_csv", "render_figure"]


def write_trace_csv(result: GrowthResult, path) -> None:
    """One CSV row per dilate/trim pass: counts plus the heterogeneity reached."""
    with open(path, "w", newline="") as fh:
        out = csv.writer(fh)
        out.writerow(["iteration", "candidates", "trimmed", "region_size", "heterogeneity"])
        size = 1
        for i, rec in enumerate(result.trace, start=1):
            size += len(rec.candidates) - len(rec.trimmed)
            out.writerow([i, len(rec.candidates), len(rec.trimmed), size, rec.heterogeneity])


def render_figure(
    img: GrayImage,
    result: GrowthResult,
    seed: Coord,
    crit: CriterionConfig,
    path,
    dpi: int = 120,
) -> None:
    """Render the segmentation next to its heterogeneity trace.

    Left: the image with the grown region tinted red and the seed marked.
    Right: criterion value after each iteration against the threshold line.
    """
    import matplotlib

    matplotlib.use("Agg", force=True)
    import matplotlib.pyplot as plt

    fig, (ax_img, ax_trace) = plt.subplots(1, 2, figsize=(10, 4.2))

    ax_img.imshow(img.pixels, cmap="gray", vmin=0.0, vmax=img.model.m, interpolation="nearest")
    tint = np.zeros((img.height, img.width, 4))
    for x, y in result.region.members:
        tint[y, x] = (1.0, 0.0, 0.0, 0.45)
    ax_img.imshow(tint, interpolation="nearest")
    ax_img.plot([seed[0]], [seed[1]], marker="+", markersize=12, markeredgewidth=2, color="#00e0ff")
    ax_img.set_title(f"{len(result.region)} px, {result.termination}")
    ax_img.set_xticks([])
    ax_img.set_yticks([])

    hs = [rec.heterogeneity for rec in result.trace]
    ax_trace.plot(range(1, len(hs) + 1), hs, marker=".", lw=1.2, label="heterogeneity")
    ax_trace.axhline(crit.threshold, ls="--", color="crimson", lw=1.0, label=f"t = {crit.threshold:g}")
    ax_trace.set_xlabel("iteration")
    ax_trace.set_ylabel(f"H ({crit.kind})")
    ax_trace.legend(loc="lower right", fontsize=8)
    ax_trace.grid(alpha=0.3)

    fig.suptitle(f"criterion {crit.kind}, seed ({seed[0]}, {seed[1]})")
    fig.tight_layout()
    fig.savefig(path, dpi=dpi)
    plt.close(fig)
