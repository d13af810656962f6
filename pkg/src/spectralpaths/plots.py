"""Matplotlib renderings of the experiment reports.

Every report writer in the CLI drops a PNG next to its delimited
output; these helpers hold the figure code so the harness stays
headless (Agg backend, no display required).
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .experiments import BlockPathReport, PerturbationReport, StretchBoundReport, SweepResult


def plot_sweep(result: SweepResult, path: str) -> None:
    """Spectral path length against width k, with the limit as a
    horizontal line and the hop distance for scale."""
    finite = [r for r in result.rows if r.params.k is not None]
    ks = [r.params.k for r in finite]
    lens = [r.spectral_len for r in finite]
    hops = [r.hop_dist for r in finite]
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ax.plot(ks, lens, "o-", label="spectral path length")
    ax.plot(ks, hops, "s--", color="gray", label="hop distance")
    ax.axhline(result.limit_len, color="tab:red", lw=1, ls=":", label="limit length")
    if result.stabilization_k is not None:
        ax.axvline(result.stabilization_k, color="tab:green", lw=1, ls=":",
                   label=f"stabilizes at k={result.stabilization_k}")
    ax.set_xscale("log", base=2)
    ax.set_xlabel("k")
    ax.set_ylabel("path length")
    title = f"{result.family}  ell={result.ell}"
    if result.t is not None:
        title += f"  t={result.t}"
    ax.set_title(title)
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_perturbation(report: PerturbationReport, path: str) -> None:
    """Preservation and validity fractions per noise magnitude."""
    eps = [st.epsilon for st in report.stats]
    pres = [st.preserved / st.trials for st in report.stats]
    valid = [st.valid / st.trials for st in report.stats]
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ax.plot(eps, pres, "o-", label="preserved fraction")
    ax.plot(eps, valid, "s--", color="gray", label="valid fraction")
    if report.best_epsilon:
        ax.axvline(report.best_epsilon, color="tab:green", lw=1, ls=":",
                   label=f"largest fully preserved eps={report.best_epsilon:g}")
    ax.set_xscale("log")
    ax.set_ylim(-0.05, 1.05)
    ax.set_xlabel("epsilon")
    ax.set_ylabel("fraction of trials")
    ax.set_title(f"path stability, seed={report.seed}")
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_rw_report(report: StretchBoundReport, path: str) -> None:
    """Descent drop L_D against the bound lam * f_D at each vertex."""
    f, L = report.f_D, report.L_D
    nonneg = f >= 0
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ax.scatter(report.lam * f[nonneg], L[nonneg], s=18, label="f_D >= 0")
    ax.scatter(report.lam * f[~nonneg], L[~nonneg], s=18, marker="x",
               color="gray", label="f_D < 0 (no claim)")
    lim = max(1e-12, float(np.abs(report.lam * f).max()), float(np.abs(L).max()))
    xs = np.linspace(-lim, lim, 2)
    ax.plot(xs, xs, color="tab:red", lw=1, label="L_D = lambda f_D")
    ax.set_xlabel("lambda * f_D")
    ax.set_ylabel("L_D")
    ax.set_title(
        f"random-walk descent bound: lambda={report.lam:.4f}, "
        f"violations={len(report.violations)}"
    )
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_block_report(report: BlockPathReport, path: str) -> None:
    """Measured path length and diameter next to their closed forms."""
    names = ["diameter", "5d+ell-4", "spectral len", "(ell+1)d+2", "hop dist"]
    vals = [
        report.diameter,
        report.diameter_formula,
        report.spectral_len,
        report.claimed_len,
        report.endpoint_distance,
    ]
    colors = ["tab:blue", "lightsteelblue", "tab:orange", "navajowhite", "gray"]
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    bars = ax.bar(names, vals, color=colors)
    ax.bar_label(bars)
    p = report.params
    ax.set_ylabel("edges")
    ax.set_title(
        f"block path ell={p.ell} k={p.k} d={p.d}: "
        f"stretch vs diameter = {float(report.stretch_vs_diameter):.3f}"
    )
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
