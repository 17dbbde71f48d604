"""Figure rendering for the CLI.

Every CSV-emitting command can also save a matplotlib figure next to its
delimited output via ``--plot``.  Rendering is headless (Agg backend);
nothing here is needed by the numerical library itself.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

__all__ = [
    "save_curves",
    "save_density_surface",
    "save_charfn",
    "save_volume",
    "save_sample_hist",
    "save_convergence",
]

_DPI = 150


def _finish(fig, path: str) -> None:
    fig.savefig(path, dpi=_DPI, bbox_inches="tight")
    plt.close(fig)


def save_curves(path: str, xs, curves, xlabel: str, ylabel: str) -> None:
    """One line per (label, ys) pair over a common abscissa."""
    fig, ax = plt.subplots(figsize=(6, 4))
    for label, ys in curves:
        ax.plot(xs, ys, lw=1.5, label=label)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    if len(curves) > 1:
        ax.legend(fontsize=8, ncol=2)
    ax.grid(alpha=0.3)
    _finish(fig, path)


def save_density_surface(path: str, xs, dims, values, ylabel: str) -> None:
    """Heatmap of a per-dimension family of curves (dimension on the y axis)."""
    fig, ax = plt.subplots(figsize=(6, 4))
    grid = np.asarray(values, dtype=float).reshape(len(dims), len(xs))
    mesh = ax.pcolormesh(xs, dims, grid, shading="nearest", cmap="viridis")
    fig.colorbar(mesh, ax=ax, label=ylabel)
    ax.set_xlabel("x")
    ax.set_ylabel("n")
    _finish(fig, path)


def save_charfn(path: str, ts, phi, gauss, n: int) -> None:
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(ts, phi, lw=1.5, label=f"phi_n, n={n}")
    ax.plot(ts, gauss, lw=1.5, ls="--", label="exp(-t^2/2)")
    ax.set_xlabel("t")
    ax.set_ylabel("characteristic function")
    ax.legend()
    ax.grid(alpha=0.3)
    _finish(fig, path)


def save_volume(path: str, dims, volumes, ratios) -> None:
    fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(6, 6), sharex=True)
    ax1.plot(dims, volumes, "o-", ms=3)
    ax1.set_ylabel("unit-ball volume")
    ax1.grid(alpha=0.3)
    positive = [r > 0.0 for r in ratios]
    if all(positive):
        ax2.semilogy(dims, ratios, "o-", ms=3)
    else:
        ax2.plot(dims, ratios, "o-", ms=3)
    ax2.set_ylabel("volume / enclosing cube")
    ax2.set_xlabel("n")
    ax2.grid(alpha=0.3)
    _finish(fig, path)


def save_sample_hist(path: str, xs, n: int, pdf) -> None:
    """Sample histogram with the exact density overlaid."""
    fig, ax = plt.subplots(figsize=(6, 4))
    bins = max(20, min(100, int(math.sqrt(len(xs)))))
    ax.hist(xs, bins=bins, range=(-1.0, 1.0), density=True, alpha=0.6,
            label="samples")
    grid = np.linspace(-1.0, 1.0, 401)
    ax.plot(grid, [pdf(x) for x in grid], "k-", lw=1.5, label="exact density")
    ax.set_xlabel("x")
    ax.set_ylabel("density")
    ax.set_title(f"coordinate samples, n={n}")
    ax.legend()
    _finish(fig, path)


def save_convergence(path: str, dims, pdf_err, cf_err) -> None:
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.loglog(dims, pdf_err, "o-", ms=4, label="sup |g_n - normal pdf|")
    ax.loglog(dims, cf_err, "s-", ms=4, label="sup |phi_n - exp(-t^2/2)|")
    ax.set_xlabel("n")
    ax.set_ylabel("sup-norm distance")
    ax.legend()
    ax.grid(alpha=0.3, which="both")
    _finish(fig, path)
