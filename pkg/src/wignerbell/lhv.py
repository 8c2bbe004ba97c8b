"""Local hidden-variable models for spin measurements, exact and Monte Carlo.

Sampling is reproducible bit-for-bit per seed. The master seed feeds
``numpy.random.SeedSequence``; stream ``k`` of ``streams`` uses
``SeedSequence(seed).spawn(streams)[k]`` with a PCG64 generator. Directions
are drawn by inverse transform: ``cos(theta)`` uniform, then azimuth uniform
on ``[0, 2 pi)``. Stream ``k`` handles ``n // streams`` samples, and the
first ``n % streams`` streams take one extra sample each.

Outcomes use ``sign(0) = +1``; that event has probability zero.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

CHUNK = 1 << 20


class Estimate(NamedTuple):
    estimate: float
    std_error: float


class AdjustedValue(NamedTuple):
    value: float
    adjusted_angle: float


def _check_angle(theta: float) -> float:
    theta = float(theta)
    if not 0.0 <= theta <= math.pi:
        raise ValueError(f"angle must lie in [0, pi], got {theta}")
    return theta


def _sign(x: np.ndarray) -> np.ndarray:
    return np.where(x >= 0, 1.0, -1.0)


def _uniform_directions(rng: np.random.Generator, n: int, z_low: float = -1.0) -> np.ndarray:
    z = rng.uniform(z_low, 1.0, n)
    phi = rng.uniform(0.0, 2.0 * math.pi, n)
    r = np.sqrt(np.clip(1.0 - z * z, 0.0, None))
    return np.stack([r * np.cos(phi), r * np.sin(phi), z], axis=1)


def _stream_sizes(n: int, streams: int) -> list[int]:
    base, extra = divmod(n, streams)
    return [base + (k < extra) for k in range(streams)]


def _mean_and_error(products_sum: float, products_sq_sum: float, n: int) -> Estimate:
    mean = products_sum / n
    if n < 2:
        return Estimate(mean, math.inf)
    var = max(0.0, (products_sq_sum - n * mean * mean) / (n - 1))
    return Estimate(mean, math.sqrt(var / n))


def _run(outcome, n: int, seed: int, streams: int, z_low: float) -> Estimate:
    if n < 1:
        raise ValueError("n must be at least 1")
    if streams < 1:
        raise ValueError("streams must be at least 1")
    total = total_sq = 0.0
    for child, size in zip(np.random.SeedSequence(seed).spawn(streams), _stream_sizes(n, streams)):
        rng = np.random.Generator(np.random.PCG64(child))
        done = 0
        while done < size:
            m = min(CHUNK, size - done)
            values = outcome(_uniform_directions(rng, m, z_low))
            total += float(values.sum())
            total_sq += float((values * values).sum())
            done += m
    return _mean_and_error(total, total_sq, n)


def lhv_singlet_exact(theta: float) -> float:
    """Sign-model singlet correlation ``-1 + 2 theta / pi``."""
    return -1.0 + 2.0 * _check_angle(theta) / math.pi


def lhv_singlet_exact_adjusted(theta: float) -> AdjustedValue:
    """The *nonlocal* variant: ``a`` is replaced by ``a'`` rotated toward ``b``.

    With ``theta' = pi (1 - cos theta) / 2`` the sign model gives
    ``-1 + 2 theta'/pi = -cos theta``, the quantum value. ``a'`` depends on
    the far setting ``b``, so this is not a local model.
    """
    adjusted = math.pi * (1.0 - math.cos(_check_angle(theta))) / 2.0
    return AdjustedValue(-1.0 + 2.0 * adjusted / math.pi, adjusted)


def lhv_singlet_mc(a, b, n: int, seed: int, streams: int = 1) -> Estimate:
    """Monte Carlo mean of ``A B`` with ``A = sign(a.l)``, ``B = -sign(b.l)``, ``l`` uniform on the sphere."""
    a = np.asarray(a, dtype=float) / np.linalg.norm(a)
    b = np.asarray(b, dtype=float) / np.linalg.norm(b)
    return _run(lambda lam: -_sign(lam @ a) * _sign(lam @ b), n, seed, streams, -1.0)


def lhv_single_exact(theta: float) -> AdjustedValue:
    """Hemisphere model for one particle: returns ``cos theta`` and the setting angle ``theta'``."""
    adjusted = math.pi * (1.0 - math.cos(_check_angle(theta))) / 2.0
    return AdjustedValue(1.0 - 2.0 * adjusted / math.pi, adjusted)


def lhv_single_mc(theta: float, n: int, seed: int, streams: int = 1) -> Estimate:
    """``sign(l.a')`` with ``l`` uniform on the hemisphere ``l.z > 0`` and ``a'`` at ``theta'`` from z."""
    adjusted = lhv_single_exact(theta).adjusted_angle
    a_prime = np.array([math.sin(adjusted), 0.0, math.cos(adjusted)])
    return _run(lambda lam: _sign(lam @ a_prime), n, seed, streams, 0.0)
