"""Characteristic function of the rescaled coordinate z = sqrt(n+2) x.

Three independently computable forms of phi_n(t) = E[exp(i t z)]:

    series form    0F1(; n/2 + 1; -(n+2) t^2 / 4)
    Bessel form    Gamma(n/2+1) (2 / (sqrt(n+2) t))^(n/2) J_{n/2}(sqrt(n+2) t)
    integral form  C_n * integral_{-a}^{a} (a^2 - z^2)^((n-1)/2) e^{itz} dz

with a = sqrt(n+2).  The distribution is symmetric, so phi_n is real and
even; the integral form is the slow independent cross-check for the two
closed forms.  As n grows phi_n(t) tends to exp(-t^2/2), the
characteristic function of the standard normal distribution.
"""

from __future__ import annotations

import math

from .geometry import check_dimension
from .quadrature import QuadratureError, integrate_to_tol
from .specialfn import DEFAULT_SERIES, SeriesControl, hyp0f1, bessel_j

__all__ = [
    "charfn_hyp",
    "charfn_bessel",
    "charfn_quad",
    "charfn_gauss_limit",
    "BESSEL_SMALL_T",
    "QUAD_MAX_DIM",
]

_HALF_LOG_PI = 0.5 * math.log(math.pi)

# Below this |t| the Bessel-form prefactor (2/(sqrt(n+2) t))^(n/2) has lost
# all precision; such calls fall back to the series form.
BESSEL_SMALL_T = 1e-8

QUAD_MAX_DIM = 50


def charfn_hyp(n: int, t: float, ctl: SeriesControl = DEFAULT_SERIES) -> float:
    """Series form; even in t, exactly 1 at t = 0."""
    n = check_dimension(n)
    return hyp0f1(0.5 * n + 1.0, -0.25 * (n + 2.0) * t * t, ctl)


def charfn_bessel(n: int, t: float, ctl: SeriesControl = DEFAULT_SERIES) -> float:
    """Bessel form; undefined at t = 0 where the prefactor is singular."""
    n = check_dimension(n)
    if t == 0.0:
        raise ValueError("charfn_bessel is singular at t = 0; use charfn_hyp")
    t = abs(t)
    if t < BESSEL_SMALL_T:
        return charfn_hyp(n, t, ctl)
    nu = 0.5 * n
    z = math.sqrt(n + 2.0) * t
    log_pref = math.lgamma(nu + 1.0) + nu * math.log(2.0 / z)
    return math.exp(log_pref) * bessel_j(nu, z, ctl)


def charfn_quad(n: int, t: float, quad_tol: float = 1e-10) -> float:
    """Integral form, the independent oracle for the closed forms.

    With z = a sin(theta) the integrand becomes a^n cos(theta)^n
    e^{i t a sin(theta)}, smooth up to the endpoints, and a^n cancels
    into the normalizing constant.  Only the cosine (real) part is
    returned; the sine part vanishes by symmetry and is verified to come
    out below ``quad_tol``.
    """
    n = check_dimension(n)
    if n > QUAD_MAX_DIM:
        raise ValueError(
            f"charfn_quad is the test-oracle path, supported for "
            f"n <= {QUAD_MAX_DIM}; got {n}")
    a = math.sqrt(n + 2.0)
    norm = math.exp(math.lgamma(0.5 * n + 1.0)
                    - math.lgamma(0.5 * (n + 1.0)) - _HALF_LOG_PI)
    real_part = integrate_to_tol(
        lambda th: math.cos(th) ** n * math.cos(t * a * math.sin(th)),
        -0.5 * math.pi, 0.5 * math.pi, quad_tol)
    imag_part = integrate_to_tol(
        lambda th: math.cos(th) ** n * math.sin(t * a * math.sin(th)),
        -0.5 * math.pi, 0.5 * math.pi, quad_tol)
    if abs(norm * imag_part) > quad_tol:
        raise QuadratureError(
            f"odd part of the characteristic-function integral came out "
            f"{norm * imag_part:.3e}, above quad_tol={quad_tol:.3e}")
    return norm * real_part


def charfn_gauss_limit(t: float) -> float:
    """exp(-t^2/2), the standard normal characteristic function."""
    return math.exp(-0.5 * t * t)
