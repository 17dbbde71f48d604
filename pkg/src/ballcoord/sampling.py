"""Seeded uniform sampling inside the unit n-ball by two independent methods.

Rejection from the enclosing cube draws n uniforms on [-1, 1] until the
point lands inside the ball; its acceptance rate is exactly V_n / 2^n,
which collapses fast, so the method is capped at small n and kept mainly
for independent validation.  The direction-times-radius sampler draws a
uniform direction (normalized Gaussian vector) and an independent radius
U^(1/n), and works at any dimension.

Randomness contract: a stream is a numpy Philox (counter-based) generator
keyed by (seed, stream).  The same key always reproduces the same sample
sequence on a given build, and distinct stream ids give statistically
independent streams.  A stream is single-owner mutable state: never share
one across threads; derive one stream per worker instead and merge results
in stream-id order.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .geometry import check_dimension

__all__ = [
    "SampleMethod",
    "RngStream",
    "BallPoint",
    "REJECT_CUBE_MAX_DIM",
    "sample_reject_cube",
    "sample_dir_radius",
    "sample_coordinate",
    "acceptance_fraction",
    "rescale_z",
]

REJECT_CUBE_MAX_DIM = 15

_BATCH_ROWS = 1 << 16


class SampleMethod(enum.Enum):
    """Which sampler produced a point."""

    REJECT_CUBE = "reject-cube"
    DIR_RADIUS = "dir-radius"


class RngStream:
    """Deterministic pseudo-random stream keyed by (seed, stream)."""

    def __init__(self, seed: int, stream: int = 0):
        seed = int(seed)
        stream = int(stream)
        if not 0 <= seed < 2 ** 64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
        if not 0 <= stream < 2 ** 32:
            raise ValueError(f"stream id must fit in 32 bits, got {stream}")
        self.seed = seed
        self.stream = stream
        ss = np.random.SeedSequence(seed, spawn_key=(stream,))
        self.generator = np.random.Generator(np.random.Philox(ss))

    def derive(self, stream: int) -> "RngStream":
        """Fresh independent stream from the same seed."""
        return RngStream(self.seed, stream)

    def __repr__(self) -> str:
        return f"RngStream(seed={self.seed}, stream={self.stream})"


@dataclass(frozen=True)
class BallPoint:
    """A sampled point with sum(coords^2) <= 1, plus provenance.

    ``trials`` counts candidate draws consumed; only the rejection
    sampler ever reports more than 1.
    """

    coords: np.ndarray
    method: SampleMethod
    trials: int = 1


def sample_reject_cube(n: int, rng: RngStream) -> BallPoint:
    """One uniform ball point by rejection from the enclosing cube."""
    n = check_dimension(n)
    if n > REJECT_CUBE_MAX_DIM:
        raise ValueError(
            f"rejection sampling is capped at n <= {REJECT_CUBE_MAX_DIM}; "
            f"the V_n/2^n acceptance rate collapses beyond that (got n={n})")
    gen = rng.generator
    trials = 0
    while True:
        trials += 1
        coords = gen.uniform(-1.0, 1.0, size=n)
        if float(coords @ coords) <= 1.0:
            return BallPoint(coords=coords, method=SampleMethod.REJECT_CUBE,
                             trials=trials)


def sample_dir_radius(n: int, rng: RngStream) -> BallPoint:
    """One uniform ball point as (uniform direction) * U^(1/n) radius."""
    n = check_dimension(n)
    gen = rng.generator
    while True:
        direction = gen.standard_normal(n)
        norm_sq = float(direction @ direction)
        if norm_sq > 0.0:  # the all-zero draw is measure zero; redraw
            break
    u = 1.0 - gen.random()  # uniform on (0, 1]
    scale = u ** (1.0 / n) / math.sqrt(norm_sq)
    coords = direction * scale
    s = float(coords @ coords)
    if s > 1.0:  # rounding can poke a hair past the boundary
        coords /= math.sqrt(s)
    assert float(coords @ coords) <= 1.0
    return BallPoint(coords=coords, method=SampleMethod.DIR_RADIUS)


def sample_coordinate(n: int, method: SampleMethod, count: int,
                      rng: RngStream) -> np.ndarray:
    """``count`` draws of the first coordinate, vectorized per method.

    Deterministic given (seed, stream, method, n, count).
    """
    n = check_dimension(n)
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    if method is SampleMethod.REJECT_CUBE:
        out = _reject_cube_coords(n, count, rng)
    elif method is SampleMethod.DIR_RADIUS:
        out = _dir_radius_coords(n, count, rng)
    else:
        raise ValueError(f"unknown sampling method: {method!r}")
    assert np.all(np.abs(out) <= 1.0)
    return out


def _reject_cube_coords(n: int, count: int, rng: RngStream) -> np.ndarray:
    if n > REJECT_CUBE_MAX_DIM:
        raise ValueError(
            f"rejection sampling is capped at n <= {REJECT_CUBE_MAX_DIM}, got {n}")
    gen = rng.generator
    out = np.empty(count)
    filled = 0
    while filled < count:
        cand = gen.uniform(-1.0, 1.0, size=(_BATCH_ROWS, n))
        keep = np.einsum("ij,ij->i", cand, cand) <= 1.0
        xs = cand[keep, 0]
        take = min(xs.size, count - filled)
        out[filled:filled + take] = xs[:take]
        filled += take
    return out


def _dir_radius_coords(n: int, count: int, rng: RngStream) -> np.ndarray:
    gen = rng.generator
    out = np.empty(count)
    filled = 0
    while filled < count:
        todo = count - filled
        draws = gen.standard_normal((todo, n))
        norm_sq = np.einsum("ij,ij->i", draws, draws)
        radii = (1.0 - gen.random(todo)) ** (1.0 / n)
        ok = norm_sq > 0.0
        vals = draws[ok, 0] * radii[ok] / np.sqrt(norm_sq[ok])
        np.clip(vals, -1.0, 1.0, out=vals)
        out[filled:filled + vals.size] = vals
        filled += vals.size
    return out


def acceptance_fraction(n: int, trials: int, rng: RngStream) -> float:
    """Fraction of ``trials`` uniform cube draws that land inside the ball.

    The empirical side of the V_n / 2^n acceptance-rate law.
    """
    n = check_dimension(n)
    if n > REJECT_CUBE_MAX_DIM:
        raise ValueError(
            f"rejection sampling is capped at n <= {REJECT_CUBE_MAX_DIM}, got {n}")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    gen = rng.generator
    accepted = 0
    done = 0
    while done < trials:
        m = min(_BATCH_ROWS, trials - done)
        cand = gen.uniform(-1.0, 1.0, size=(m, n))
        accepted += int(np.count_nonzero(
            np.einsum("ij,ij->i", cand, cand) <= 1.0))
        done += m
    return accepted / trials


def rescale_z(xs, n: int) -> np.ndarray:
    """Map coordinates x in [-1, 1] to z = sqrt(n+2) x elementwise."""
    n = check_dimension(n)
    arr = np.asarray(xs, dtype=float)
    if arr.size and float(np.max(np.abs(arr))) > 1.0:
        raise ValueError("rescale_z requires all |x| <= 1")
    return math.sqrt(n + 2.0) * arr
