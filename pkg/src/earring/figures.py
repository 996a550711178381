"""Render evidence reports as matplotlib figures saved to files.

One figure per report; the delimited outputs (CSV/JSON) stay the canonical
machine hand-off, figures are a reading aid.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .evidence import EvidenceReport


def save_report_figure(report: EvidenceReport, out_dir: Path | str) -> Path:
    """Draw the figure for a report and save it as ``<claim>.png`` in out_dir."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / f"{report.claim}.png"
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    _RENDERERS[report.claim](report, ax)
    ax.set_title(f"{report.claim} ({report.verdict})")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def _render_convergence(report: EvidenceReport, ax) -> None:
    ks = [c.k for c in report.cells]
    ds = [float(c.values["d_w"]) for c in report.cells]
    ax.loglog(ks, ds, "o-", label="sup distance to limit loop")
    ax.loglog(ks, [2.0 / k for k in ks], "--", color="gray", label="2/k")
    ax.set_xlabel("k")
    ax.set_ylabel("uniform distance")
    ax.legend()


def _grid_image(report: EvidenceReport, key: str):
    ns = sorted({c.n for c in report.cells})
    ks = sorted({c.k for c in report.cells})
    img = np.full((len(ns), len(ks)), np.nan)
    for c in report.cells:
        img[ns.index(c.n), ks.index(c.k)] = float(c.values[key])
    return ns, ks, img


def _render_heatmap(report: EvidenceReport, ax, key: str, label: str) -> None:
    ns, ks, img = _grid_image(report, key)
    im = ax.imshow(img, origin="lower", extent=(ks[0] - 0.5, ks[-1] + 0.5, ns[0] - 0.5, ns[-1] + 0.5))
    ax.set_xlabel("k")
    ax.set_ylabel("n")
    ax.figure.colorbar(im, ax=ax, label=label)


def _render_vanishing(report: EvidenceReport, ax) -> None:
    _render_heatmap(report, ax, "d_a", "sup distance to constant loop")


def _render_product(report: EvidenceReport, ax) -> None:
    _render_heatmap(report, ax, "reduced_len", "reduced length of a(n,k) w(n,k)")


def _render_oscillation(report: EvidenceReport, ax) -> None:
    exp_w = [c.values["expected_w"] for c in report.cells]
    got_w = [c.values["osc_w"] for c in report.cells]
    exp_a = [c.values["expected_a"] for c in report.cells]
    got_a = [c.values["osc_a"] for c in report.cells]
    ax.plot(exp_w, got_w, "o", label="w family (circle 1)")
    ax.plot(exp_a, got_a, "s", label="a family (circle n)", alpha=0.7)
    hi = max(exp_a + got_a)
    ax.plot([0, hi], [0, hi], "--", color="gray", linewidth=1)
    ax.set_xlabel("predicted count")
    ax.set_ylabel("measured oscillation")
    ax.legend()


def _render_limit_point(report: EvidenceReport, ax) -> None:
    eps = [float(c.values["eps"]) for c in report.cells]
    found = [c.n if c.n is not None else np.nan for c in report.cells]
    ax.semilogx(eps, found, "o-")
    ax.invert_xaxis()
    ax.set_xlabel("neighborhood radius")
    ax.set_ylabel("first index n = k inside it")


_RENDERERS = {
    "convergence": _render_convergence,
    "vanishing": _render_vanishing,
    "oscillation_bounds": _render_oscillation,
    "product_class": _render_product,
    "limit_point": _render_limit_point,
}
