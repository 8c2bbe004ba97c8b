"""Spin correlations, Bell and CHSH inequalities for two spin-1/2 particles.

Direct 4x4 expectation values are the reference for everything here; the
closed forms are kept alongside so that tests can compare the two.

CHSH is always arranged as ``|C(a,b) + C(a',b) + C(a',b') - C(a,b')|``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy import optimize

from .errors import NumericConsistencyError
from .little_group import PAULI, wigner_angle_perpendicular
from .states import BELL_AMPLITUDES, BellKind, BipartiteState

SQRT2 = math.sqrt(2.0)
TSIRELSON = 2.0 * SQRT2
IMAG_TOL = 1e-10

#: Parity matrix relating sigma_1 and sigma_2 on Phi+.
PHI_PLUS_PARITY = np.diag([1.0, -1.0, 1.0])


def _unit(v) -> np.ndarray:
    v = np.asarray(v, dtype=float).reshape(3)
    norm = np.linalg.norm(v)
    if norm < 1e-300:
        raise ValueError("direction must be nonzero")
    return v / norm


def sigma_dot(direction) -> np.ndarray:
    n = np.asarray(direction, dtype=float)
    return n[0] * PAULI[0] + n[1] * PAULI[1] + n[2] * PAULI[2]


def _amplitudes(state) -> np.ndarray:
    if isinstance(state, BipartiteState):
        return state.amplitudes
    return np.asarray(state, dtype=complex).reshape(4)


def expectation(state, operator: np.ndarray) -> float:
    """``<psi|O|psi>`` for a Hermitian ``O``; a large imaginary part is an error."""
    psi = _amplitudes(state)
    value = complex(np.vdot(psi, operator @ psi))
    if abs(value.imag) > IMAG_TOL:
        raise NumericConsistencyError(f"expectation of a Hermitian operator has imaginary part {value.imag:.3e}")
    return value.real


@dataclass(frozen=True)
class ChshDirections:
    a: np.ndarray
    a_prime: np.ndarray
    b: np.ndarray
    b_prime: np.ndarray

    def __post_init__(self):
        for name in ("a", "a_prime", "b", "b_prime"):
            object.__setattr__(self, name, _unit(getattr(self, name)))


_R = 1.0 / SQRT2

#: Settings chosen for the boosted singlet; maximal violation when theta_W = 0.
BOOSTED_SINGLET_DIRECTIONS = ChshDirections(
    a=(_R, -_R, 0.0), a_prime=(-_R, -_R, 0.0), b=(0.0, 1.0, 0.0), b_prime=(1.0, 0.0, 0.0)
)

#: Coplanar x-z settings giving 2*sqrt(2) on the singlet.
SINGLET_MAX_DIRECTIONS = ChshDirections(
    a=(0.0, 0.0, 1.0), a_prime=(1.0, 0.0, 0.0), b=(_R, 0.0, _R), b_prime=(_R, 0.0, -_R)
)


def correlation(state, a, b) -> float:
    """``<(a.sigma) (x) (b.sigma)>``."""
    return expectation(state, np.kron(sigma_dot(_unit(a)), sigma_dot(_unit(b))))


def correlation_tensor(state) -> np.ndarray:
    eye = np.eye(3)
    return np.array([[correlation(state, eye[i], eye[j]) for j in range(3)] for i in range(3)])


def _cross_matrix() -> np.ndarray:
    phi = BELL_AMPLITUDES[BellKind.PHI_PLUS]
    psi = BELL_AMPLITUDES[BellKind.PSI_MINUS]
    return np.array([[np.vdot(phi, np.kron(PAULI[i], PAULI[j]) @ psi).real for j in range(3)] for i in range(3)])


#: Re <Phi+| sigma_i (x) sigma_j |Psi->
BELL_CROSS = _cross_matrix()


def correlation_closed_form(theta_w: float, a, b) -> float:
    """Correlation for ``sin(t) Phi+ + cos(t) Psi-``, the boosted singlet.

    ``a_i b_j [sin^2 t B_ij - cos^2 t delta_ij + sin 2t X_ij]`` with
    ``B = diag(1, -1, 1)`` and ``X_ij = Re <Phi+|sigma_i (x) sigma_j|Psi->``.
    """
    a, b = _unit(a), _unit(b)
    s, c = math.sin(theta_w), math.cos(theta_w)
    t = s * s * PHI_PLUS_PARITY - c * c * np.eye(3) + math.sin(2 * theta_w) * BELL_CROSS
    return float(a @ t @ b)


def chsh_from_tensor(tensor: np.ndarray, d: ChshDirections) -> float:
    def c(x, y):
        return float(x @ tensor @ y)

    return abs(c(d.a, d.b) + c(d.a_prime, d.b) + c(d.a_prime, d.b_prime) - c(d.a, d.b_prime))


def chsh(state, d: ChshDirections) -> float:
    value = (
        correlation(state, d.a, d.b)
        + correlation(state, d.a_prime, d.b)
        + correlation(state, d.a_prime, d.b_prime)
        - correlation(state, d.a, d.b_prime)
    )
    return abs(value)


def chsh_closed_form(theta_w: float) -> float:
    """``sqrt(2) (1 + cos 2 theta_W)``: the boosted singlet at :data:`BOOSTED_SINGLET_DIRECTIONS`."""
    return SQRT2 * (1.0 + math.cos(2.0 * theta_w))


def chsh_velocity_form(beta: float, beta_prime: float) -> float:
    # validates the velocities
    wigner_angle_perpendicular(beta, beta_prime)
    s = math.sqrt(1.0 - beta**2) + math.sqrt(1.0 - beta_prime**2)
    return TSIRELSON * s * s / (s * s + (beta * beta_prime) ** 2)


def bell_original_margin(c_ab: float, c_ac: float, c_bc: float) -> float:
    """``1 + C(b,c) - |C(a,b) - C(a,c)|``; negative means the inequality is violated."""
    for name, v in (("C_ab", c_ab), ("C_ac", c_ac), ("C_bc", c_bc)):
        if not -1.0 - 1e-12 <= v <= 1.0 + 1e-12:
            raise ValueError(f"{name} = {v} is not a correlation in [-1, 1]")
    return 1.0 + c_bc - abs(c_ab - c_ac)


class OptimalChsh(NamedTuple):
    directions: ChshDirections
    value: float


def optimal_chsh(state) -> OptimalChsh:
    """Best CHSH settings from the two largest singular values of the correlation tensor.

    With ``T = sum s_k u_k v_k^T`` and ``phi = atan2(s2, s1)`` the settings
    ``b, b' = cos(phi) v1 +/- sin(phi) v2``, ``a = u2``, ``a' = u1`` reach
    ``2 sqrt(s1^2 + s2^2)``.
    """
    u, s, vt = np.linalg.svd(correlation_tensor(state))
    phi = math.atan2(s[1], s[0])
    v1, v2 = vt[0], vt[1]
    b = math.cos(phi) * v1 + math.sin(phi) * v2
    b_prime = math.cos(phi) * v1 - math.sin(phi) * v2
    d = ChshDirections(a=u[:, 1], a_prime=u[:, 0], b=b, b_prime=b_prime)
    return OptimalChsh(d, 2.0 * math.hypot(s[0], s[1]))


def _sphere(theta, phi):
    st = np.sin(theta)
    return np.stack([st * np.cos(phi), st * np.sin(phi), np.cos(theta)], axis=-1)


def chsh_grid_search(state, step_deg: float = 18.0) -> float:
    """Brute-force CHSH maximum, used as an oracle for :func:`optimal_chsh`.

    For fixed ``b, b'`` the best ``a, a'`` are known in closed form, which
    leaves ``|T(b + b')| + |T(b - b')|`` to maximize over two unit vectors.
    A coarse angular grid seeds a Nelder-Mead refinement.
    """
    t = correlation_tensor(state)
    h = math.radians(step_deg)
    thetas = np.arange(0.0, math.pi + 1e-9, h)
    phis = np.arange(0.0, 2 * math.pi - 1e-9, h)
    tt, pp = np.meshgrid(thetas, phis, indexing="ij")
    angles = np.stack([tt.ravel(), pp.ravel()], axis=1)
    dirs = _sphere(angles[:, 0], angles[:, 1])
    tb = dirs @ t.T
    total = np.linalg.norm(tb[:, None, :] + tb[None, :, :], axis=-1) + np.linalg.norm(
        tb[:, None, :] - tb[None, :, :], axis=-1
    )
    i, j = np.unravel_index(int(np.argmax(total)), total.shape)

    def objective(x):
        b = _sphere(x[0], x[1])
        bp = _sphere(x[2], x[3])
        return -(np.linalg.norm(t @ (b + bp)) + np.linalg.norm(t @ (b - bp)))

    x0 = np.concatenate([angles[i], angles[j]])
    best = optimize.minimize(objective, x0, method="Nelder-Mead", options={"xatol": 1e-10, "fatol": 1e-13, "maxiter": 20000})
    return float(max(-best.fun, total[i, j]))


class TsirelsonCheck(NamedTuple):
    value: float
    bound: float


def tsirelson_check(state, d: ChshDirections) -> TsirelsonCheck:
    """CHSH value and the state-dependent bound ``sqrt(4 - <[Q,R] (x) [S,T]>)``.

    For the arrangement used here the first-particle pair is
    ``Q = a'.sigma, R = a.sigma``, ``S = b.sigma, T = b'.sigma``, which puts
    the operator in the form ``(Q + R) S + (Q - R) T``.

    :raises NumericConsistencyError: if ``value <= bound <= 2 sqrt 2`` fails.
    """
    q, r = sigma_dot(d.a_prime), sigma_dot(d.a)
    s, t = sigma_dot(d.b), sigma_dot(d.b_prime)
    comm = np.kron(q @ r - r @ q, s @ t - t @ s)
    bound = math.sqrt(max(0.0, 4.0 - expectation(state, comm)))
    value = chsh(state, d)
    if value > bound + 1e-10 or bound > TSIRELSON + 1e-10:
        raise NumericConsistencyError(f"CHSH {value!r} vs bound {bound!r} violates value <= bound <= 2 sqrt 2")
    return TsirelsonCheck(value, bound)
