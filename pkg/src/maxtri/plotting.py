"""Matplotlib report figures rendered to files (headless)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def bench_figure(records, path: str, slope: float = None) -> None:
    """Log-log wall time and iterations-per-vertex panels for a bench run.

    ``records`` are BenchRecord rows; the optional fitted slope goes in
    the title of the timing panel.
    """
    ns = [r.n for r in records]
    times = [r.mean_wall_time_s for r in records]
    ratios = [r.mean_iterations / r.n for r in records]

    fig, (ax_t, ax_i) = plt.subplots(1, 2, figsize=(9, 3.6))

    ax_t.loglog(ns, times, "o-", color="#1f77b4")
    ax_t.set_xlabel("vertices n")
    ax_t.set_ylabel("mean wall time [s]")
    title = "wall time vs n"
    if slope is not None:
        title += f" (log-log slope {slope:.3f})"
    ax_t.set_title(title)
    ax_t.grid(True, which="both", alpha=0.3)

    ax_i.semilogx(ns, ratios, "s-", color="#d62728")
    ax_i.set_xlabel("vertices n")
    ax_i.set_ylabel("mean iterations / n")
    ax_i.set_title("sweep iterations per vertex")
    ax_i.grid(True, which="both", alpha=0.3)

    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
