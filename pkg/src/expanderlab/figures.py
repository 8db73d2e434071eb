"""Matplotlib rendering of report records: each suite's reports become a
small set of PNG figures written next to the delimited output files."""

from __future__ import annotations

import math
from collections import defaultdict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

__all__ = ["render_figures"]

_SAVE_KW = dict(dpi=120, metadata={"Software": "expanderlab"})


def _finite(values):
    return [v for v in values if v is not None and math.isfinite(v)]


def render_figures(records, outdir, prefix: str) -> list[str]:
    """Write the figures supported by these records; returns the paths."""
    written: list[str] = []
    by_theorem = defaultdict(list)
    for rec in records:
        by_theorem[rec.theorem_id].append(rec)

    # ratio overview: one series per theorem id, against p or |A|
    series = {}
    for tid, recs in sorted(by_theorem.items()):
        pts = [
            (r.p if r.p is not None else r.size_a, r.ratio)
            for r in recs
            if r.ratio is not None and (r.p is not None or r.size_a is not None)
        ]
        pts = [(x, y) for (x, y) in pts if y is not None and y > 0]
        if pts:
            series[tid] = pts
    if series:
        fig, ax = plt.subplots(figsize=(7, 4.5))
        for tid, pts in series.items():
            xs, ys = zip(*sorted(pts))
            ax.plot(xs, ys, "o", ms=4, alpha=0.6, label=tid)
        ax.set_yscale("log")
        ax.set_xlabel("p (or |A| for real-number suites)")
        ax.set_ylabel("observed lhs/rhs ratio")
        ax.axhline(1.0, color="k", lw=0.8, ls="--")
        ax.legend(fontsize=7, ncol=2)
        ax.set_title("bound ratios")
        fig.tight_layout()
        path = f"{outdir}/{prefix}_ratios.png"
        fig.savefig(path, **_SAVE_KW)
        plt.close(fig)
        written.append(path)

    # second-eigenvalue panel when present
    theta = [
        r
        for r in by_theorem.get("theta2_bound", [])
        if r.p is not None and r.lhs is not None
    ]
    if theta:
        theta.sort(key=lambda r: r.p)
        fig, ax = plt.subplots(figsize=(6, 4))
        ax.plot([r.p for r in theta], [float(r.lhs) for r in theta], "o-", label="theta2")
        ax.plot(
            [r.p for r in theta],
            [float(r.rhs) for r in theta],
            "s--",
            label="4p-9 cap",
        )
        ax.set_xlabel("p")
        ax.set_ylabel("eigenvalue")
        ax.legend(fontsize=8)
        ax.set_title("second eigenvalue against its cap")
        fig.tight_layout()
        path = f"{outdir}/{prefix}_theta2.png"
        fig.savefig(path, **_SAVE_KW)
        plt.close(fig)
        written.append(path)

    # empirical exponent histogram
    exps = _finite([r.exponent for recs in by_theorem.values() for r in recs])
    if exps:
        fig, ax = plt.subplots(figsize=(6, 4))
        ax.hist(exps, bins=24, color="#4878d0", edgecolor="white")
        ax.set_xlabel("empirical growth exponent")
        ax.set_ylabel("count")
        ax.set_title("distribution of empirical exponents")
        fig.tight_layout()
        path = f"{outdir}/{prefix}_exponents.png"
        fig.savefig(path, **_SAVE_KW)
        plt.close(fig)
        written.append(path)

    # pass/fail panel for suites whose records carry hard flags
    flagged = {
        tid: recs
        for tid, recs in sorted(by_theorem.items())
        if any(r.holds is not None for r in recs)
    }
    if flagged:
        labels = list(flagged)
        passed = [sum(1 for r in recs if r.holds) for recs in flagged.values()]
        failed = [
            sum(1 for r in recs if r.holds is False) for recs in flagged.values()
        ]
        fig, ax = plt.subplots(figsize=(7, 4))
        xs = range(len(labels))
        ax.bar(xs, passed, color="#2e7d32", label="held")
        ax.bar(xs, failed, bottom=passed, color="#c62828", label="failed")
        ax.set_xticks(list(xs))
        ax.set_xticklabels(labels, rotation=45, ha="right", fontsize=7)
        ax.set_ylabel("records")
        ax.set_title("hard assertions by check")
        ax.legend(fontsize=8)
        fig.tight_layout()
        path = f"{outdir}/{prefix}_assertions.png"
        fig.savefig(path, **_SAVE_KW)
        plt.close(fig)
        written.append(path)
    return written
