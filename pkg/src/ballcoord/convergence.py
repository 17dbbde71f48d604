"""How fast the rescaled coordinate law approaches the standard normal.

The density of z = sqrt(n+2) x is g_n(z) = f_n(z / sqrt(n+2)) / sqrt(n+2)
on [-sqrt(n+2), sqrt(n+2)].  This module measures its sup-norm distance to
the standard normal density and the sup-norm distance of the
characteristic function to exp(-t^2/2) over fixed grids, per dimension,
and provides a one-sample Kolmogorov-Smirnov test of empirical coordinate
samples against the exact CDF.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .charfn import charfn_gauss_limit, charfn_hyp
from .geometry import check_dimension
from .marginal import MarginalDist

__all__ = [
    "DEFAULT_DIMS",
    "DEFAULT_Z_GRID",
    "DEFAULT_T_GRID",
    "KS_COEFF",
    "GofReport",
    "ConvergenceReport",
    "g_pdf",
    "normal_pdf",
    "pdf_sup_distance",
    "cf_sup_distance",
    "ks_test",
    "build_report",
]

DEFAULT_DIMS = (1, 2, 4, 8, 16, 32, 64, 128, 256)

# 1601 points cover all non-negligible normal mass; 25 points on [0, 3]
# cover the t-range where the characteristic functions differ most.
DEFAULT_Z_GRID = np.linspace(-8.0, 8.0, 1601)
DEFAULT_Z_GRID.setflags(write=False)
DEFAULT_T_GRID = np.linspace(0.0, 3.0, 25)
DEFAULT_T_GRID.setflags(write=False)

# Asymptotic one-sample KS critical values: reject when D > c(alpha)/sqrt(N).
KS_COEFF = {0.05: 1.358, 0.01: 1.628, 0.001: 1.949}

_SQRT_TWO_PI = math.sqrt(2.0 * math.pi)


@dataclass(frozen=True)
class GofReport:
    """One-sample Kolmogorov-Smirnov outcome."""

    n: int
    sample_size: int
    ks_stat: float
    critical_value: float
    passed: bool

    def __post_init__(self) -> None:
        if self.passed != (self.ks_stat < self.critical_value):
            raise ValueError("passed must equal ks_stat < critical_value")


@dataclass(frozen=True)
class ConvergenceReport:
    """Per-dimension sup-norm distances to the Gaussian limit."""

    dims: tuple
    pdf_sup_err: tuple
    cf_sup_err: tuple
    grid_spec: str

    def __post_init__(self) -> None:
        if not len(self.dims) == len(self.pdf_sup_err) == len(self.cf_sup_err):
            raise ValueError("report columns must share length")
        if any(e < 0.0 for e in self.pdf_sup_err + self.cf_sup_err):
            raise ValueError("sup-norm distances cannot be negative")


def g_pdf(n: int, z: float) -> float:
    """Density of the rescaled coordinate z = sqrt(n+2) x at z."""
    n = check_dimension(n)
    s = math.sqrt(n + 2.0)
    return MarginalDist(n).pdf(z / s) / s


def normal_pdf(z: float) -> float:
    """Standard normal density."""
    return math.exp(-0.5 * z * z) / _SQRT_TWO_PI


def pdf_sup_distance(n: int, grid: Sequence[float] = DEFAULT_Z_GRID) -> float:
    """max over the grid of |g_n(z) - standard normal pdf(z)|."""
    n = check_dimension(n)
    zs = np.asarray(grid, dtype=float)
    if zs.size == 0:
        raise ValueError("grid must be nonempty")
    dist = MarginalDist(n)
    s = math.sqrt(n + 2.0)
    g = np.fromiter((dist.pdf(z / s) / s for z in zs), dtype=float,
                    count=zs.size)
    ref = np.exp(-0.5 * zs * zs) / _SQRT_TWO_PI
    return float(np.max(np.abs(g - ref)))


def cf_sup_distance(n: int, grid: Sequence[float] = DEFAULT_T_GRID) -> float:
    """max over the grid of |phi_n(t) - exp(-t^2/2)|."""
    n = check_dimension(n)
    ts = np.asarray(grid, dtype=float)
    if ts.size == 0:
        raise ValueError("grid must be nonempty")
    return max(abs(charfn_hyp(n, float(t)) - charfn_gauss_limit(float(t)))
               for t in ts)


def ks_test(samples, dist: MarginalDist, alpha: float = 0.05) -> GofReport:
    """One-sample KS test of coordinate samples against the exact CDF.

    Uses the asymptotic critical value c(alpha)/sqrt(N), adequate for the
    sample sizes this package works at (N >= 1000).
    """
    if alpha not in KS_COEFF:
        raise ValueError(
            f"alpha must be one of {sorted(KS_COEFF)}, got {alpha}")
    xs = np.sort(np.asarray(samples, dtype=float))
    size = xs.size
    if size == 0:
        raise ValueError("samples must be nonempty")
    cdf_vals = np.fromiter((dist.cdf(x) for x in xs), dtype=float, count=size)
    steps = np.arange(1, size + 1, dtype=float) / size
    d_plus = float(np.max(steps - cdf_vals))
    d_minus = float(np.max(cdf_vals - (steps - 1.0 / size)))
    stat = max(d_plus, d_minus)
    critical = KS_COEFF[alpha] / math.sqrt(size)
    return GofReport(n=dist.n, sample_size=size, ks_stat=stat,
                     critical_value=critical, passed=stat < critical)


def build_report(dims: Sequence[int] = DEFAULT_DIMS) -> ConvergenceReport:
    """Sup-norm PDF and characteristic-function distances per dimension."""
    dims = tuple(check_dimension(n) for n in dims)
    if not dims:
        raise ValueError("dims must be nonempty")
    if any(b <= a for a, b in zip(dims, dims[1:])):
        raise ValueError("dims must be strictly increasing")
    pdf_errs = tuple(pdf_sup_distance(n) for n in dims)
    cf_errs = tuple(cf_sup_distance(n) for n in dims)
    spec = (f"z: {DEFAULT_Z_GRID.size} uniform points on "
            f"[{DEFAULT_Z_GRID[0]:g}, {DEFAULT_Z_GRID[-1]:g}]; "
            f"t: {DEFAULT_T_GRID.size} uniform points on "
            f"[{DEFAULT_T_GRID[0]:g}, {DEFAULT_T_GRID[-1]:g}]")
    return ConvergenceReport(dims=dims, pdf_sup_err=pdf_errs,
                             cf_sup_err=cf_errs, grid_spec=spec)
