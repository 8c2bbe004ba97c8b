r"""Four-vectors and Lorentz matrices in natural units (c = 1).

Conventions used everywhere in the package:

* metric signature (-, +, +, +), stored once as :data:`METRIC`;
* four-vectors are length-4 float arrays ``(t, x, y, z)``;
* Lorentz matrices act on column four-vectors, ``x' = M @ x``.

Boost sign convention
---------------------
:func:`boost_along` builds the matrix with ``cosh(alpha) = gamma`` and
``sinh(alpha) = -gamma * beta``, i.e. the passive transformation into a frame
that moves with velocity ``+beta`` along ``axis``. A particle at rest in the
old frame therefore acquires velocity ``-beta``. Many texts use the opposite
sign; this one is chosen so that the Wigner angle of a particle moving along
+z, seen from a frame boosted along +x, comes out negative.

:func:`standard_boost` is the *active* boost ``L(p)`` that carries the rest
momentum ``(m, 0, 0, 0)`` to ``p``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import LorentzValidationError, SuperluminalError

METRIC = np.diag([-1.0, 1.0, 1.0, 1.0])
METRIC.setflags(write=False)

#: Largest admissible speed; anything beyond raises rather than clamps.
BETA_MAX = 1.0 - 1e-12

DEFAULT_TOL = 1e-10


def four_vector(t: float, x: float, y: float, z: float) -> np.ndarray:
    v = np.array([t, x, y, z], dtype=float)
    if not np.all(np.isfinite(v)):
        raise ValueError(f"four-vector components must be finite, got {v}")
    return v


def _unit(axis, name: str = "axis") -> np.ndarray:
    n = np.asarray(axis, dtype=float).reshape(3)
    norm = np.linalg.norm(n)
    if not np.isfinite(norm) or norm < 1e-300:
        raise ValueError(f"{name} must be a nonzero finite 3-vector, got {n}")
    return n / norm


def check_beta(beta: float, *, allow_negative: bool = False) -> float:
    """Return ``beta`` as a float after checking ``0 <= beta <= BETA_MAX``.

    :raises SuperluminalError: if the speed reaches or exceeds 1.
    """
    beta = float(beta)
    if not math.isfinite(beta):
        raise ValueError(f"velocity must be finite, got {beta}")
    if abs(beta) > BETA_MAX:
        raise SuperluminalError(f"velocity must be < 1, got {beta}")
    if beta < 0 and not allow_negative:
        raise ValueError(f"velocity must be >= 0, got {beta}")
    return beta


def gamma(beta: float) -> float:
    r"""Lorentz factor :math:`\gamma = (1 - \beta^2)^{-1/2}`."""
    beta = check_beta(beta, allow_negative=True)
    return 1.0 / math.sqrt((1.0 - beta) * (1.0 + beta))


@dataclass(frozen=True)
class FourMomentum:
    """On-shell momentum of a massive particle.

    Only the spatial momentum is stored; the energy is always
    ``sqrt(mass**2 + |p|**2)``.
    """

    mass: float
    p: tuple[float, float, float] = (0.0, 0.0, 0.0)

    def __post_init__(self):
        p = tuple(float(c) for c in np.asarray(self.p, dtype=float).reshape(3))
        if not (math.isfinite(self.mass) and all(math.isfinite(c) for c in p)):
            raise ValueError("momentum components and mass must be finite")
        if self.mass <= 0:
            raise ValueError(f"mass must be strictly positive, got {self.mass}")
        object.__setattr__(self, "mass", float(self.mass))
        object.__setattr__(self, "p", p)

    @classmethod
    def from_velocity(cls, mass: float, beta: float, direction=(0.0, 0.0, 1.0)) -> "FourMomentum":
        """Particle of speed ``beta`` moving along ``direction``."""
        beta = check_beta(beta)
        n = _unit(direction, "direction")
        return cls(mass, tuple(mass * gamma(beta) * beta * n))

    @classmethod
    def from_four_vector(cls, mass: float, v) -> "FourMomentum":
        return cls(mass, tuple(np.asarray(v, dtype=float)[1:4]))

    @property
    def spatial(self) -> np.ndarray:
        return np.array(self.p)

    def energy(self) -> float:
        return math.sqrt(self.mass**2 + float(np.dot(self.p, self.p)))

    def gamma(self) -> float:
        return self.energy() / self.mass

    def beta(self) -> float:
        return float(np.linalg.norm(self.p)) / self.energy()

    def four_vector(self) -> np.ndarray:
        return np.array([self.energy(), *self.p])

    def boosted(self, lorentz: np.ndarray) -> "FourMomentum":
        """Momentum seen after applying ``lorentz`` to the four-vector."""
        return FourMomentum.from_four_vector(self.mass, np.asarray(lorentz) @ self.four_vector())

    def rest(self) -> np.ndarray:
        return np.array([self.mass, 0.0, 0.0, 0.0])


class Rotation3(NamedTuple):
    axis: np.ndarray
    angle: float


@dataclass(frozen=True)
class LorentzReport:
    """Outcome of :func:`validate_lorentz`.

    Deviations are absolute; ``passed`` compares them against ``tol`` scaled
    by the matrix magnitude (``max|M|**2`` for the metric, ``max|M|**4`` for
    the determinant).
    """

    metric_deviation: float
    det_deviation: float
    time_component: float
    orthochronous: bool
    metric_ok: bool
    det_ok: bool
    tol: float

    @property
    def passed(self) -> bool:
        return self.metric_ok and self.det_ok and self.orthochronous

    def failures(self) -> list[str]:
        out = []
        if not self.metric_ok:
            out.append(f"metric preservation (max |M^T eta M - eta| = {self.metric_deviation:.3e})")
        if not self.det_ok:
            out.append(f"unit determinant (|det M - 1| = {self.det_deviation:.3e})")
        if not self.orthochronous:
            out.append(f"orthochronous (M[0,0] = {self.time_component:.6g} < 1)")
        return out


def minkowski_dot(u, v) -> float:
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    return float(u @ METRIC @ v)


def standard_boost(p: FourMomentum) -> np.ndarray:
    r"""Pure boost :math:`L(p)` with :math:`L(p)(m,0,0,0) = (p^0, \vec p)`.

    Components: ``L[0,0] = gamma``, ``L[i,0] = L[0,i] = phat_i sqrt(gamma^2-1)``,
    ``L[i,j] = delta_ij + (gamma - 1) phat_i phat_j``.
    """
    pvec = p.spatial
    pnorm = float(np.linalg.norm(pvec))
    if pnorm == 0.0:
        return np.eye(4)
    m = p.mass
    g = p.energy() / m
    n = pvec / pnorm
    out = np.eye(4)
    out[0, 0] = g
    # sqrt(gamma^2 - 1) = |p|/m, which avoids cancellation for slow particles
    out[1:, 0] = out[0, 1:] = pvec / m
    out[1:, 1:] += (g - 1.0) * np.outer(n, n)
    return out


def inverse_standard_boost(p: FourMomentum) -> np.ndarray:
    """:math:`L^{-1}(p)`: the standard boost with the spatial momentum reversed."""
    pvec = p.spatial
    pnorm = float(np.linalg.norm(pvec))
    if pnorm == 0.0:
        return np.eye(4)
    m = p.mass
    g = p.energy() / m
    n = pvec / pnorm
    out = np.eye(4)
    out[0, 0] = g
    out[1:, 0] = out[0, 1:] = -pvec / m
    out[1:, 1:] += (g - 1.0) * np.outer(n, n)
    return out


def boost_along(axis, beta: float) -> np.ndarray:
    """Pure boost into a frame moving with velocity ``beta`` along ``axis``.

    ``cosh(alpha) = gamma`` and ``sinh(alpha) = -gamma*beta``; see the module
    docstring for the sign convention. ``beta`` may be negative.

    :raises SuperluminalError: if ``|beta| >= 1``.
    """
    beta = check_beta(beta, allow_negative=True)
    n = _unit(axis)
    g = gamma(beta)
    out = np.eye(4)
    out[0, 0] = g
    out[0, 1:] = out[1:, 0] = -g * beta * n
    out[1:, 1:] += (g - 1.0) * np.outer(n, n)
    return out


def _rotation3(n: np.ndarray, angle: float) -> np.ndarray:
    # Rodrigues formula, right-handed
    c, s = math.cos(angle), math.sin(angle)
    k = np.array([[0.0, -n[2], n[1]], [n[2], 0.0, -n[0]], [-n[1], n[0], 0.0]])
    return c * np.eye(3) + s * k + (1.0 - c) * np.outer(n, n)


def rotation_about(axis, angle: float) -> np.ndarray:
    """Right-handed spatial rotation by ``angle`` about ``axis``, as a 4x4 matrix.

    ``rotation_about((0, 0, 1), pi/2)`` maps x to y.
    """
    n = _unit(axis)
    out = np.eye(4)
    out[1:, 1:] = _rotation3(n, float(angle))
    return out


def validate_lorentz(matrix, tol: float = DEFAULT_TOL) -> LorentzReport:
    m = np.asarray(matrix, dtype=float)
    if m.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
    scale = max(1.0, float(np.abs(m).max()))
    metric_dev = float(np.abs(m.T @ METRIC @ m - METRIC).max())
    det_dev = abs(float(np.linalg.det(m)) - 1.0)
    t00 = float(m[0, 0])
    return LorentzReport(
        metric_deviation=metric_dev,
        det_deviation=det_dev,
        time_component=t00,
        orthochronous=t00 >= 1.0 - tol * scale**2,
        metric_ok=metric_dev <= tol * scale**2,
        det_ok=det_dev <= tol * scale**4,
        tol=tol,
    )


def require_lorentz(matrix, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Return ``matrix`` as an array, raising if it is not proper orthochronous."""
    report = validate_lorentz(matrix, tol)
    if not report.passed:
        raise LorentzValidationError("not a proper orthochronous Lorentz matrix: " + "; ".join(report.failures()))
    return np.asarray(matrix, dtype=float)


def axis_angle_from_rotation(matrix, tol: float = 1e-8) -> Rotation3:
    """Extract ``(axis, angle)`` with ``angle`` in ``[0, pi]`` from a spatial rotation.

    At ``angle == 0`` the axis is z. Near ``angle == pi`` the axis comes from
    the symmetric part and its sign is fixed so that the largest-magnitude
    component is positive (lowest index wins ties).

    :raises LorentzValidationError: naming the first violated check.
    """
    m = np.asarray(matrix, dtype=float)
    if m.shape != (4, 4):
        raise LorentzValidationError(f"expected a 4x4 matrix, got shape {m.shape}")
    time_dev = max(abs(m[0, 0] - 1.0), float(np.abs(m[0, 1:]).max()), float(np.abs(m[1:, 0]).max()))
    if time_dev > tol:
        raise LorentzValidationError(f"not a pure rotation: time row/column deviates from identity by {time_dev:.3e}")
    r = m[1:, 1:]
    orth_dev = float(np.abs(r.T @ r - np.eye(3)).max())
    if orth_dev > tol:
        raise LorentzValidationError(f"not a pure rotation: spatial block not orthogonal (deviation {orth_dev:.3e})")
    if np.linalg.det(r) < 0:
        raise LorentzValidationError("not a pure rotation: spatial block has determinant -1")

    # v = sin(angle) * axis
    v = 0.5 * np.array([r[2, 1] - r[1, 2], r[0, 2] - r[2, 0], r[1, 0] - r[0, 1]])
    sin_a = float(np.linalg.norm(v))
    cos_a = 0.5 * (float(np.trace(r)) - 1.0)
    angle = math.atan2(sin_a, cos_a)
    if sin_a < 1e-300 and cos_a > 0:
        return Rotation3(np.array([0.0, 0.0, 1.0]), 0.0)
    if cos_a >= 0:
        return Rotation3(v / sin_a, angle)

    # obtuse angles: (R + R^T)/2 - cos(a) I = (1 - cos a) n n^T is well conditioned
    b = 0.5 * (r + r.T) - cos_a * np.eye(3)
    col = int(np.argmax(np.diag(b)))
    n = b[:, col] / math.sqrt(b[col, col] * (1.0 - cos_a))
    n /= np.linalg.norm(n)
    if sin_a > 1e-12:
        if n @ v < 0:
            n = -n
    else:
        angle = math.pi
        lead = int(np.argmax(np.abs(n) - 1e-12 * np.arange(3)))
        if n[lead] < 0:
            n = -n
    return Rotation3(n, angle)
