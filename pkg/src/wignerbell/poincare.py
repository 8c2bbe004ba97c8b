"""Poincare generators in the real 5x5 affine representation.

A Poincare transformation ``x -> Lambda x + a`` acts on ``(x, 1)`` as the 5x5
matrix ``[[Lambda, a], [0, 1]]``. Its generators are real matrices whose top
left 4x4 block generates the Lorentz part and whose fifth column generates
translations.

The Hermitian generators of the abstract algebra carry explicit factors of
``i``; writing each one as ``i`` times a real matrix turns every relation
``[A, B] = i f C`` into ``[A, B] = f C`` with the same real ``f``. With
``J_1 = M^23, J_2 = M^31, J_3 = M^12`` and ``K_i = M^i0`` the closed table is::

    [J_i, P_j] =  eps_ijk P_k      [K_i, K_j] = -eps_ijk J_k
    [J_i, J_j] =  eps_ijk J_k      [K_i, P_j] = -delta_ij H
    [J_i, K_j] =  eps_ijk K_k      [K_i, H]   = -P_i
    [P_i, P_j] = [J_i, H] = [P_i, H] = 0

Normalization note: angular momentum is ``J^i = (1/2) eps^{ijk} M_jk``, so
``J_3 = M^12`` exactly. Without the 1/2 every J would be doubled and
``[J_i, J_j] = eps_ijk J_k`` would not close with unit structure constants.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .errors import TransversalityError
from .minkowski import METRIC, FourMomentum, minkowski_dot

#: Relation names in table order.
RELATIONS = ("[J,P]", "[J,J]", "[J,K]", "[P,P]", "[J,H]", "[P,H]", "[K,K]", "[K,P]", "[K,H]")


class Generator(enum.Enum):
    J1 = "J1"
    J2 = "J2"
    J3 = "J3"
    K1 = "K1"
    K2 = "K2"
    K3 = "K3"
    P0 = "P0"
    P1 = "P1"
    P2 = "P2"
    P3 = "P3"


J = (Generator.J1, Generator.J2, Generator.J3)
K = (Generator.K1, Generator.K2, Generator.K3)
P = (Generator.P1, Generator.P2, Generator.P3)
H = Generator.P0

_LORENTZ_INDICES = {
    Generator.J1: (2, 3),
    Generator.J2: (3, 1),
    Generator.J3: (1, 2),
    Generator.K1: (1, 0),
    Generator.K2: (2, 0),
    Generator.K3: (3, 0),
}


def lorentz_generator(mu: int, nu: int) -> np.ndarray:
    r"""5x5 matrix of :math:`M^{\mu\nu}`.

    The 4x4 block is ``(M^{mu nu})[a, b] = eta[nu, a] delta[mu, b] - eta[mu, a] delta[nu, b]``,
    the sign for which ``expm(theta * M^12)`` is a right-handed rotation about z
    and ``expm(alpha * M^10)`` is ``boost_along(x, tanh(alpha))``.
    """
    g = np.zeros((5, 5))
    for a in range(4):
        g[a, mu] += METRIC[nu, a]
        g[a, nu] -= METRIC[mu, a]
    return g


def translation_generator(mu: int) -> np.ndarray:
    g = np.zeros((5, 5))
    g[mu, 4] = 1.0
    return g


def generator(label: Generator) -> np.ndarray:
    if label in _LORENTZ_INDICES:
        return lorentz_generator(*_LORENTZ_INDICES[label])
    return translation_generator(int(label.value[1]))


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def _levi_civita() -> np.ndarray:
    eps = np.zeros((3, 3, 3))
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        eps[i, j, k] = 1.0
        eps[j, i, k] = -1.0
    return eps


EPSILON = _levi_civita()


@dataclass(frozen=True)
class AlgebraReport:
    deviations: dict[str, float]
    tol: float

    @property
    def passed(self) -> bool:
        return all(d <= self.tol for d in self.deviations.values())

    def failed(self) -> list[str]:
        return [name for name, d in self.deviations.items() if d > self.tol]


def verify_algebra(tol: float = 1e-12, overrides: Mapping[Generator, np.ndarray] | None = None) -> AlgebraReport:
    """Check every commutator of the Poincare table entrywise.

    ``overrides`` replaces individual generator matrices, which is how the
    tests inject faults.
    """
    gen = {label: generator(label) for label in Generator}
    if overrides:
        gen.update({label: np.asarray(m, dtype=float) for label, m in overrides.items()})

    def dev(a, b, expected):
        return float(np.abs(commutator(gen[a], gen[b]) - expected).max())

    zero = np.zeros((5, 5))

    def eps_sum(i, j, family):
        return sum(EPSILON[i, j, k] * gen[family[k]] for k in range(3))

    out = {name: 0.0 for name in RELATIONS}
    pairs = [(i, j) for i in range(3) for j in range(3)]
    for i, j in pairs:
        out["[J,P]"] = max(out["[J,P]"], dev(J[i], P[j], eps_sum(i, j, P)))
        out["[J,J]"] = max(out["[J,J]"], dev(J[i], J[j], eps_sum(i, j, J)))
        out["[J,K]"] = max(out["[J,K]"], dev(J[i], K[j], eps_sum(i, j, K)))
        out["[P,P]"] = max(out["[P,P]"], dev(P[i], P[j], zero))
        out["[K,K]"] = max(out["[K,K]"], dev(K[i], K[j], -eps_sum(i, j, J)))
        out["[K,P]"] = max(out["[K,P]"], dev(K[i], P[j], -(i == j) * gen[H]))
    for i in range(3):
        out["[J,H]"] = max(out["[J,H]"], dev(J[i], H, zero))
        out["[P,H]"] = max(out["[P,H]"], dev(P[i], H, zero))
        out["[K,H]"] = max(out["[K,H]"], dev(K[i], H, -gen[P[i]]))
    return AlgebraReport(out, tol)


def expm(a: np.ndarray, tol: float = 1e-16) -> np.ndarray:
    """Matrix exponential by scaling and squaring with a Taylor core.

    Adequate for the small, well-scaled generator combinations used here.
    """
    a = np.asarray(a, dtype=float)
    norm = float(np.abs(a).sum(axis=1).max()) if a.size else 0.0
    squarings = max(0, int(math.ceil(math.log2(norm))) + 1) if norm > 0.5 else 0
    x = a / 2.0**squarings
    term = np.eye(a.shape[0])
    out = term.copy()
    for k in range(1, 30):
        term = term @ x / k
        out = out + term
        if np.abs(term).max() < tol:
            break
    for _ in range(squarings):
        out = out @ out
    return out


def pauli_lubanski_rest(p: FourMomentum, w, tol: float = 1e-10) -> np.ndarray:
    r"""Rest-frame spin vector :math:`\vec S = \vec W/m - W^0 \vec p / (m (m + E))`.

    This equals the spatial part of ``inverse_standard_boost(p) @ w`` divided
    by ``m``.

    :raises TransversalityError: if ``w`` is not Minkowski-orthogonal to ``p``.
    """
    w = np.asarray(w, dtype=float)
    pv = p.four_vector()
    residual = minkowski_dot(w, pv)
    if abs(residual) > tol * max(1.0, float(np.abs(w).max()) * float(np.abs(pv).max())):
        raise TransversalityError(residual)
    m = p.mass
    return w[1:] / m - w[0] * p.spatial / (m * (m + p.energy()))
