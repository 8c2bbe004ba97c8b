"""Schmidt decomposition and entanglement entropy for two spin-1/2 particles.

The 2x2 singular value problem is solved in closed form from the Hermitian
matrix ``C C^dagger`` rather than through a general SVD routine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .states import BipartiteState


@dataclass(frozen=True)
class SchmidtDecomposition:
    """``psi = sum_i coefficients[i] * basis1[i] (x) basis2[i]``.

    Each ``basis1`` vector has its largest-magnitude component real and
    nonnegative (lower index on ties); ``basis2`` carries the remaining phase.
    """

    coefficients: np.ndarray
    basis1: np.ndarray
    basis2: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return sum(lam * np.kron(u, v) for lam, u, v in zip(self.coefficients, self.basis1, self.basis2))


def coefficient_matrix(state: BipartiteState | np.ndarray) -> np.ndarray:
    """``C[i, j]`` is the amplitude of ``|i>_1 |j>_2`` (0 = up, 1 = down)."""
    amps = state.amplitudes if isinstance(state, BipartiteState) else np.asarray(state, dtype=complex)
    return amps.reshape(2, 2)


def _fix_phase(u: np.ndarray) -> np.ndarray:
    mags = np.abs(u)
    lead = 0 if mags[0] >= mags[1] - 1e-15 else 1
    if mags[lead] == 0:
        return u
    return u * (abs(u[lead]) / u[lead])


def _orthogonal(u: np.ndarray) -> np.ndarray:
    return np.array([-np.conj(u[1]), np.conj(u[0])])


def schmidt(state: BipartiteState | np.ndarray) -> SchmidtDecomposition:
    c = coefficient_matrix(state)
    h = c @ c.conj().T
    a, d = float(h[0, 0].real), float(h[1, 1].real)
    b = complex(h[0, 1])
    half_gap = math.hypot(0.5 * (a - d), abs(b))
    mu1 = 0.5 * (a + d) + half_gap
    lam1 = math.sqrt(max(mu1, 0.0))
    # lam1 * lam2 = |det C| avoids the cancellation in mu2 = tr/2 - half_gap
    lam2 = abs(complex(np.linalg.det(c))) / lam1 if lam1 > 0 else 0.0
    lam2 = min(lam2, lam1)

    # eigenvector of h for mu1; pick the better conditioned of two equivalent forms
    cand1 = np.array([b, mu1 - a])
    cand2 = np.array([mu1 - d, np.conj(b)])
    u1 = cand1 if np.linalg.norm(cand1) >= np.linalg.norm(cand2) else cand2
    norm = np.linalg.norm(u1)
    u1 = u1 / norm if norm > 1e-150 else np.array([1.0 + 0j, 0.0])
    u1 = _fix_phase(u1)
    u2 = _fix_phase(_orthogonal(u1))

    v1 = c.T @ u1.conj() / lam1 if lam1 > 0 else np.array([1.0 + 0j, 0.0])
    if lam2 > 1e-150:
        v2 = c.T @ u2.conj() / lam2
    else:
        v2 = _orthogonal(v1)
    return SchmidtDecomposition(np.array([lam1, lam2]), np.array([u1, u2]), np.array([v1, v2]))


def von_neumann_entropy(state: BipartiteState | np.ndarray) -> float:
    """Entanglement entropy in bits, ``-sum l^2 log2 l^2`` with ``0 log 0 = 0``."""
    probs = schmidt(state).coefficients ** 2
    probs = probs[probs > 0]
    return float(max(0.0, -np.sum(probs * np.log2(probs))))


def is_separable(state: BipartiteState | np.ndarray, tol: float = 1e-10) -> bool:
    return bool(schmidt(state).coefficients[1] < tol)
