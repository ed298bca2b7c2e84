"""Figure rendering for survey reports.

One figure per survey: a grid of panels, one panel per (k, l) pair, each
showing the closed-form maximum as a line over n with the sandwich bounds
as a shaded band and oracle values, where computed, as scatter marks.
Rendering uses the Agg backend and writes straight to a file, so it works
headless.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .survey import SurveyRow

plt.rcParams.update(
    {
        "figure.dpi": 110,
        "font.size": 9,
        "axes.grid": True,
        "grid.alpha": 0.3,
        "lines.linewidth": 1.4,
    }
)


def render_survey_figure(rows: list[SurveyRow], path: str) -> None:
    """Render one panel per (k, l) pair and save the figure to path."""
    if not rows:
        raise ValueError("no rows to plot")
    pairs = sorted({(r.k, r.l) for r in rows})
    cols = min(3, len(pairs))
    nrows = math.ceil(len(pairs) / cols)
    fig, axes = plt.subplots(
        nrows, cols, figsize=(4.0 * cols, 3.0 * nrows), squeeze=False
    )
    for idx, (k, l) in enumerate(pairs):
        ax = axes[idx // cols][idx % cols]
        sub = sorted((r for r in rows if r.k == k and r.l == l), key=lambda r: r.n)
        ns = [r.n for r in sub]
        ax.fill_between(
            ns,
            [r.lower_bound for r in sub],
            [r.upper_bound for r in sub],
            alpha=0.25,
            label="bounds",
        )
        ax.plot(ns, [r.mu for r in sub], label="formula")
        oracle_pts = [(r.n, r.mu_oracle) for r in sub if r.mu_oracle is not None]
        if oracle_pts:
            ax.scatter(
                [p[0] for p in oracle_pts],
                [p[1] for p in oracle_pts],
                s=14,
                zorder=3,
                label="oracle",
            )
        ax.set_title(f"k={k}, l={l}")
        ax.set_xlabel("n")
        ax.set_ylabel("max size")
        if idx == 0:
            ax.legend(loc="upper left")
    for idx in range(len(pairs), nrows * cols):
        axes[idx // cols][idx % cols].set_visible(False)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
