"""Scalar special functions used by every closed form in the package.

Gamma and log-gamma are thin validated wrappers over the C library
implementations in :mod:`math`.  The confluent hypergeometric limit
function

    0F1(; b; z) = sum_{k>=0} z^k / ((b)_k k!)

is summed directly, because the characteristic-function work needs its
alternating series evaluated with care for strongly negative arguments.
Bessel J of real nonnegative order is derived from it through

    J_nu(z) = (z/2)^nu / Gamma(nu + 1) * 0F1(; nu + 1; -z^2/4)

and the regularized incomplete beta function I_x(a, b) is evaluated by
the classical continued fraction (modified Lentz iteration).
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass

__all__ = [
    "SeriesControl",
    "DEFAULT_SERIES",
    "NonConvergenceError",
    "gamma",
    "log_gamma",
    "pochhammer",
    "hyp0f1",
    "bessel_j",
    "reg_inc_beta",
]


class NonConvergenceError(ArithmeticError):
    """A series or continued fraction exhausted its budget before converging."""


@dataclass(frozen=True)
class SeriesControl:
    """Truncation policy for infinite series evaluation.

    ``max_terms`` caps the number of terms; ``rel_tol`` is the relative
    size below which a term counts as negligible.  Exhausting the budget
    raises :class:`NonConvergenceError` rather than returning a guess.
    """

    max_terms: int = 500
    rel_tol: float = 1e-15

    def __post_init__(self) -> None:
        if self.max_terms < 1:
            raise ValueError(f"max_terms must be >= 1, got {self.max_terms}")
        if not 0.0 < self.rel_tol < 1.0:
            raise ValueError(f"rel_tol must be in (0, 1), got {self.rel_tol}")


DEFAULT_SERIES = SeriesControl()

_BETA_MAX_ITER = 600
_BETA_EPS = sys.float_info.epsilon
_FPMIN = sys.float_info.min / sys.float_info.epsilon


def gamma(z: float) -> float:
    """Gamma function for z > 0.

    Accurate to a few ulp on (0, 170]; raises OverflowError once the
    result exceeds the double range (z > ~171.6) -- use :func:`log_gamma`
    for large arguments.
    """
    if z <= 0.0:
        raise ValueError(f"gamma requires z > 0, got {z}")
    return math.gamma(z)


def log_gamma(z: float) -> float:
    """Natural logarithm of the gamma function for z > 0."""
    if z <= 0.0:
        raise ValueError(f"log_gamma requires z > 0, got {z}")
    return math.lgamma(z)


def pochhammer(b: float, k: int) -> float:
    """Rising factorial (b)_k = b (b+1) ... (b+k-1), with (b)_0 = 1."""
    if b <= 0.0:
        raise ValueError(f"pochhammer requires b > 0, got {b}")
    if k < 0:
        raise ValueError(f"pochhammer requires k >= 0, got {k}")
    out = 1.0
    for j in range(k):
        out *= b + j
    return out


# --- double-double primitives -------------------------------------------
#
# For strongly negative arguments the 0F1 series alternates with terms
# many orders of magnitude above the result; plain double summation then
# loses every digit to cancellation.  Carrying both the term recurrence
# and the accumulator as (hi, lo) pairs keeps ~32 significant digits,
# which is more than the worst condition number met in this package.

_SPLITTER = 134217729.0  # 2**27 + 1


def _two_sum(a: float, b: float) -> tuple:
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _quick_two_sum(a: float, b: float) -> tuple:
    # requires |a| >= |b|
    s = a + b
    return s, b - (s - a)


def _two_prod(a: float, b: float) -> tuple:
    p = a * b
    c = _SPLITTER * a
    ahi = c - (c - a)
    alo = a - ahi
    c = _SPLITTER * b
    bhi = c - (c - b)
    blo = b - bhi
    return p, ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo


def _dd_add(xhi: float, xlo: float, yhi: float, ylo: float) -> tuple:
    s1, s2 = _two_sum(xhi, yhi)
    t1, t2 = _two_sum(xlo, ylo)
    s2 += t1
    s1, s2 = _quick_two_sum(s1, s2)
    s2 += t2
    return _quick_two_sum(s1, s2)


def _dd_mul_d(xhi: float, xlo: float, c: float) -> tuple:
    p, e = _two_prod(xhi, c)
    e += xlo * c
    return _quick_two_sum(p, e)


def _dd_div(xhi: float, xlo: float, yhi: float, ylo: float) -> tuple:
    q1 = xhi / yhi
    phi, plo = _dd_mul_d(yhi, ylo, q1)
    rhi, rlo = _dd_add(xhi, xlo, -phi, -plo)
    q2 = rhi / yhi
    phi, plo = _dd_mul_d(yhi, ylo, q2)
    rhi, rlo = _dd_add(rhi, rlo, -phi, -plo)
    q3 = rhi / yhi
    s, e = _two_sum(q1, q2)
    return _quick_two_sum(s, e + q3)


def hyp0f1(b: float, z: float, ctl: SeriesControl = DEFAULT_SERIES) -> float:
    """Confluent hypergeometric limit function 0F1(; b; z).

    Terms follow the recurrence t_{k+1} = t_k * z / ((b + k)(k + 1)).
    Both the recurrence and the accumulation run in compensated
    double-double arithmetic, so the alternating series for z < 0 keeps
    near-machine absolute accuracy even when intermediate terms exceed
    the result by ten orders of magnitude.  Truncation requires two
    consecutive terms below ``rel_tol`` relative to the running sum; a
    single small term can occur mid-oscillation while the tail is still
    live.
    """
    if b <= 0.0:
        raise ValueError(f"hyp0f1 requires b > 0, got {b}")

    total_hi, total_lo = 0.0, 0.0
    term_hi, term_lo = 1.0, 0.0   # k = 0 term
    small_run = 0
    converged = False

    for k in range(ctl.max_terms):
        if not math.isfinite(term_hi):
            raise NonConvergenceError(
                f"0F1 series term overflowed at k={k} for b={b}, z={z}")
        total_hi, total_lo = _dd_add(total_hi, total_lo, term_hi, term_lo)

        if abs(term_hi) <= ctl.rel_tol * abs(total_hi):
            small_run += 1
            if small_run >= 2:
                converged = True
                break
        else:
            small_run = 0

        num_hi, num_lo = _dd_mul_d(term_hi, term_lo, z)
        den_hi, den_lo = _dd_mul_d(*_two_sum(b, float(k)), k + 1.0)
        term_hi, term_lo = _dd_div(num_hi, num_lo, den_hi, den_lo)

    if not converged:
        raise NonConvergenceError(
            f"0F1 series did not converge within {ctl.max_terms} terms "
            f"for b={b}, z={z}")
    return total_hi + total_lo


def bessel_j(nu: float, z: float, ctl: SeriesControl = DEFAULT_SERIES) -> float:
    """Bessel function of the first kind J_nu(z) for nu >= 0, z >= 0.

    Computed through the 0F1 representation; the (z/2)^nu / Gamma(nu+1)
    prefactor goes through log space so large orders cannot overflow
    prematurely.
    """
    if nu < 0.0:
        raise ValueError(f"bessel_j requires nu >= 0, got {nu}")
    if z < 0.0:
        raise ValueError(f"bessel_j requires z >= 0, got {z}")
    if z == 0.0:
        return 1.0 if nu == 0.0 else 0.0
    log_pref = nu * math.log(0.5 * z) - math.lgamma(nu + 1.0)
    return math.exp(log_pref) * hyp0f1(nu + 1.0, -0.25 * z * z, ctl)


def _beta_cont_frac(a: float, b: float, x: float) -> float:
    """Continued fraction for the incomplete beta integral (modified Lentz)."""
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _FPMIN:
        d = _FPMIN
    d = 1.0 / d
    h = d
    for m in range(1, _BETA_MAX_ITER + 1):
        m2 = 2 * m
        # even step
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        h *= d * c
        # odd step
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _BETA_EPS:
            return h
    raise NonConvergenceError(
        f"incomplete beta continued fraction stalled for a={a}, b={b}, x={x}")


def reg_inc_beta(a: float, b: float, x: float) -> float:
    """Regularized incomplete beta function I_x(a, b).

    Monotone nondecreasing in x with I_0 = 0 and I_1 = 1.  The symmetry
    I_x(a, b) = 1 - I_{1-x}(b, a) keeps the continued fraction in its
    fast-converging regime x < (a + 1) / (a + b + 2).
    """
    if a <= 0.0 or b <= 0.0:
        raise ValueError(f"reg_inc_beta requires a, b > 0, got a={a}, b={b}")
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"reg_inc_beta requires 0 <= x <= 1, got {x}")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    log_front = (math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b)
                 + a * math.log(x) + b * math.log1p(-x))
    front = math.exp(log_front)
    if x < (a + 1.0) / (a + b + 2.0):
        value = front * _beta_cont_frac(a, b, x) / a
    else:
        value = 1.0 - front * _beta_cont_frac(b, a, 1.0 - x) / b
    return min(1.0, max(0.0, value))
