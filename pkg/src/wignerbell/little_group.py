r"""Wigner rotations and their spin-1/2 representation.

For a Lorentz matrix ``Lambda`` and a massive momentum ``p`` the Wigner
rotation is ``W = L^{-1}(Lambda p) Lambda L(p)``. It fixes the rest momentum,
so it is a pure spatial rotation.

Angle conventions
-----------------
:class:`WignerRotation` stores the *right-handed* ``(axis, angle)`` of the
numeric matrix with ``angle`` in ``[0, pi]``. The closed forms in this module
return the conventional signed Wigner angle ``theta_W`` instead. For a
particle moving along +z seen from a frame boosted along +x, the matrix is a
right-handed rotation by ``|theta_W|`` about -y, while
``theta_W = atan2(-gamma' gamma beta' beta, gamma' + gamma)`` is negative.
That is, the conventional label ``(n, theta_W)`` names the matrix
``rotation_about(n, -theta_W)``. :meth:`WignerRotation.wigner_angle`
converts between the two.

The spin-1/2 matrix is ``spin_half_rep(n, theta) = cos(theta/2) + i sin(theta/2) n.sigma``.
Under the labelling above it is the SU(2) image of the matrix named
``(n, theta)``, so :meth:`WignerRotation.spin_rep` evaluates
``spin_half_rep(axis, -angle)``. This is the standard covering
homomorphism ``R_n(phi) -> exp(-i phi n.sigma / 2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import LorentzValidationError, NumericConsistencyError
from .minkowski import (
    FourMomentum,
    axis_angle_from_rotation,
    boost_along,
    check_beta,
    gamma,
    inverse_standard_boost,
    require_lorentz,
    rotation_about,
    standard_boost,
)

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)

#: Tolerance on the time row/column of a computed Wigner rotation.
PURITY_TOL = 1e-8


@dataclass(frozen=True)
class WignerRotation:
    matrix: np.ndarray
    axis: np.ndarray
    angle: float

    def signed_angle(self, about) -> float:
        """Right-handed angle about ``about`` (which must be parallel to the axis, or the angle zero)."""
        ref = np.asarray(about, dtype=float)
        ref = ref / np.linalg.norm(ref)
        return self.angle if float(ref @ self.axis) >= 0 else -self.angle

    def wigner_angle(self, about) -> float:
        """Conventional signed Wigner angle about ``about``; see module docstring."""
        return -self.signed_angle(about)

    def spin_rep(self) -> np.ndarray:
        return spin_half_rep(self.axis, -self.angle)


def wigner_rotation(lorentz, p: FourMomentum) -> WignerRotation:
    """``W = L^{-1}(Lambda p) Lambda L(p)`` with its axis and angle.

    :raises LorentzValidationError: if ``lorentz`` is not proper orthochronous.
    :raises NumericConsistencyError: if the product is not a pure rotation.
    """
    lam = require_lorentz(lorentz)
    w = inverse_standard_boost(p.boosted(lam)) @ lam @ standard_boost(p)
    scale = max(1.0, float(np.abs(lam).max()) * p.gamma() ** 2)
    try:
        axis, angle = axis_angle_from_rotation(w, tol=PURITY_TOL * scale)
    except LorentzValidationError as exc:
        raise NumericConsistencyError(f"Wigner rotation is not a pure rotation: {exc}") from exc
    return WignerRotation(w, axis, angle)


def wigner_angle_perpendicular(beta: float, beta_prime: float) -> float:
    r"""Signed Wigner angle for a particle with speed ``beta`` along +z seen from a frame boosted by ``beta_prime`` along +x.

    :math:`\tan\theta_W = -\gamma'\gamma\beta'\beta / (\gamma' + \gamma)`.
    """
    beta = check_beta(beta)
    beta_prime = check_beta(beta_prime)
    g, gp = gamma(beta), gamma(beta_prime)
    return math.atan2(-gp * g * beta_prime * beta, gp + g)


def wigner_angle_two_boosts(beta_x: float, beta_y: float) -> float:
    """Angle of ``B_y B_x = R_{-z}(theta_W) B`` with ``B`` a symmetric pure boost.

    ``R_{-z}(theta)`` is the right-handed rotation by ``theta`` about -z, so
    the negative result is a positive rotation about +z.
    """
    beta_x = check_beta(beta_x)
    beta_y = check_beta(beta_y)
    gx, gy = gamma(beta_x), gamma(beta_y)
    return math.atan2(-gy * gx * beta_y * beta_x, gy + gx)


def two_boost_remainder(beta_x: float, beta_y: float) -> np.ndarray:
    """``R_{-z}(theta_W)^{-1} B_y B_x``; symmetric when ``theta_W`` is right."""
    theta = wigner_angle_two_boosts(beta_x, beta_y)
    product = boost_along((0, 1, 0), beta_y) @ boost_along((1, 0, 0), beta_x)
    return rotation_about((0, 0, -1), theta).T @ product


def spin_half_rep(axis, angle: float) -> np.ndarray:
    """``cos(angle/2) I + i sin(angle/2) (axis . sigma)``."""
    n = np.asarray(axis, dtype=float).reshape(3)
    norm = np.linalg.norm(n)
    if norm < 1e-300:
        raise ValueError("axis must be nonzero")
    n = n / norm
    ns = n[0] * PAULI[0] + n[1] * PAULI[1] + n[2] * PAULI[2]
    return math.cos(angle / 2) * np.eye(2, dtype=complex) + 1j * math.sin(angle / 2) * ns
