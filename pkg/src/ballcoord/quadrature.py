"""Adaptive quadrature with loud failure.

Thin wrapper over QUADPACK (Gauss-Kronrod) as exposed by scipy.  A
tolerance the integrator cannot certify raises :class:`QuadratureError`
instead of silently returning a low-quality estimate.
"""

from __future__ import annotations

import warnings
from typing import Callable

from scipy import integrate

__all__ = ["QuadratureError", "integrate_to_tol"]


class QuadratureError(ArithmeticError):
    """Adaptive quadrature failed to reach the requested tolerance."""


def integrate_to_tol(f: Callable[[float], float], lo: float, hi: float,
                     tol: float) -> float:
    """Integrate ``f`` over [lo, hi] to absolute/relative tolerance ``tol``."""
    if tol <= 0.0:
        raise ValueError(f"quadrature tolerance must be positive, got {tol}")
    eps = max(tol, 1e-12)
    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        try:
            value, abserr = integrate.quad(f, lo, hi, epsabs=eps, epsrel=eps,
                                           limit=200)
        except integrate.IntegrationWarning as exc:
            raise QuadratureError(
                f"quadrature did not converge on [{lo}, {hi}]: {exc}") from exc
    if abserr > 10.0 * eps * max(1.0, abs(value)):
        raise QuadratureError(
            f"quadrature error estimate {abserr:.3e} exceeds tolerance "
            f"{tol:.3e} on [{lo}, {hi}]")
    return value
