"""Report figures: empirical-to-prediction ratios and bracket envelopes."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .harness import ExperimentReport, format_p


def render_report_figure(report: ExperimentReport, path: str, dpi: int = 150):
    """Two-panel figure: ratio vs n per p, and bracket vs empirical value."""
    fig, (ax_ratio, ax_bracket) = plt.subplots(1, 2, figsize=(10, 4))
    p_values = sorted({row.p for row in report.rows})
    for p in p_values:
        rows = [r for r in report.rows if r.p == p and r.ratio is not None]
        if not rows:
            continue
        ns = [r.n for r in rows]
        ax_ratio.plot(ns, [r.ratio for r in rows], "o-", label=f"p={format_p(p)}")
        ax_bracket.fill_between(ns, [r.bracket_lower for r in rows],
                                [r.bracket_upper for r in rows], alpha=0.2)
        ax_bracket.plot(ns, [r.empirical_lower for r in rows], "o-",
                        label=f"p={format_p(p)}")
    ax_ratio.axhline(1.0, color="k", lw=0.8, ls="--")
    ax_ratio.set_xlabel("n")
    ax_ratio.set_ylabel("empirical / prediction")
    ax_ratio.set_title(f"psi={report.config.psi_spec}")
    ax_ratio.legend()
    ax_bracket.set_xlabel("n")
    ax_bracket.set_ylabel("interpolation error")
    ax_bracket.set_yscale("log")
    ax_bracket.set_title("empirical value inside analytic bracket")
    ax_bracket.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=dpi)
    plt.close(fig)
