"""Summary figure for verification reports."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

STYLE = {
    "font.size": 9,
    "axes.labelsize": 9,
    "axes.titlesize": 10,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "axes.spines.top": False,
    "axes.spines.right": False,
}


def figure_path_for(report_path: str | Path) -> Path:
    return Path(report_path).with_suffix(".png")


def render_verification_figure(records: Sequence, path: str | Path, title: str = "") -> Path:
    """Coefficient agreement and per-shape timing, side by side."""
    done = [r for r in records if r.status != "timeout"]
    with plt.rc_context(STYLE):
        fig, (ax_coef, ax_time) = plt.subplots(1, 2, figsize=(8, 3.4))

        good_x, good_y, bad_x, bad_y = [], [], [], []
        for rec in done:
            n = max(len(rec.switching), len(rec.h))
            xs = [rec.switching[k] for k in range(n)]
            ys = [rec.h[k] for k in range(n)]
            if rec.is_counterexample:
                bad_x += xs
                bad_y += ys
            else:
                good_x += xs
                good_y += ys
        ax_coef.scatter(good_x, good_y, s=8, alpha=0.5, label="match", color="tab:blue")
        if bad_x:
            ax_coef.scatter(bad_x, bad_y, s=14, marker="x", label="counterexample", color="tab:red")
        top = max(good_x + good_y + bad_x + bad_y + [1])
        ax_coef.plot([1, top], [1, top], color="0.6", lw=0.8, ls="--")
        ax_coef.set_xscale("symlog")
        ax_coef.set_yscale("symlog")
        ax_coef.set_xlabel("switching rook coefficient")
        ax_coef.set_ylabel("h-polynomial coefficient")
        ax_coef.legend(loc="upper left", frameon=False)

        times = [r.elapsed_ms for r in done] or [0.0]
        ax_time.hist(times, bins=30, color="tab:gray")
        ax_time.set_xlabel("time per shape (ms)")
        ax_time.set_ylabel("shapes")
        n_timeout = len(records) - len(done)
        if n_timeout:
            ax_time.set_title(f"{n_timeout} timeouts", loc="right", color="tab:red")

        if title:
            fig.suptitle(title)
        fig.tight_layout()
        path = Path(path)
        fig.savefig(path, dpi=120)
        plt.close(fig)
    return path
