"""Two-particle momentum-spin states and their Lorentz transformation.

Spin amplitudes live in the ordered basis ``(uu, ud, du, dd)``, where the
first letter is particle 1. Momenta are sharp labels, and two states overlap
only when both labels agree.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .little_group import wigner_rotation
from .minkowski import FourMomentum, check_beta, require_lorentz

SQRT_HALF = 1.0 / math.sqrt(2.0)
NORM_TOL = 1e-10


class BellKind(enum.Enum):
    PHI_PLUS = "phi+"
    PHI_MINUS = "phi-"
    PSI_PLUS = "psi+"
    PSI_MINUS = "psi-"

    @classmethod
    def parse(cls, text: str) -> "BellKind":
        try:
            return cls(text.strip().lower())
        except ValueError:
            choices = ", ".join(k.value for k in cls)
            raise ValueError(f"unknown Bell state {text!r}; choose one of {choices}") from None

    @property
    def amplitudes(self) -> np.ndarray:
        return BELL_AMPLITUDES[self].copy()


BELL_AMPLITUDES = {
    BellKind.PHI_PLUS: np.array([1, 0, 0, 1], dtype=complex) * SQRT_HALF,
    BellKind.PHI_MINUS: np.array([1, 0, 0, -1], dtype=complex) * SQRT_HALF,
    BellKind.PSI_PLUS: np.array([0, 1, 1, 0], dtype=complex) * SQRT_HALF,
    BellKind.PSI_MINUS: np.array([0, 1, -1, 0], dtype=complex) * SQRT_HALF,
}


@dataclass(frozen=True)
class BipartiteState:
    """Ordered two-particle state with sharp momenta.

    ``kinematic_factor`` accumulates the ``sqrt((Lambda p)^0 / p^0)`` factors
    of both particles. It multiplies every branch equally, so it is kept out
    of the spin normalization and drops out of all expectation values.
    """

    p1: FourMomentum
    p2: FourMomentum
    amplitudes: np.ndarray
    kinematic_factor: float = 1.0

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex).reshape(4)
        norm = float(np.vdot(amps, amps).real)
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"spin amplitudes must be unit-normalized, |a|^2 = {norm!r}")
        if not self.kinematic_factor > 0:
            raise ValueError("kinematic_factor must be positive")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def at_rest(cls, amplitudes, mass: float = 1.0) -> "BipartiteState":
        rest = FourMomentum(mass)
        return cls(rest, rest, amplitudes)

    def momenta_match(self, other: "BipartiteState", tol: float = 1e-10) -> bool:
        return bool(
            np.allclose(self.p1.four_vector(), other.p1.four_vector(), rtol=tol, atol=tol)
            and np.allclose(self.p2.four_vector(), other.p2.four_vector(), rtol=tol, atol=tol)
        )


def bell_state(kind: BellKind, beta: float = 0.0, mass: float = 1.0) -> BipartiteState:
    """Bell state in the zero-momentum frame, particle 1 moving along +z with speed ``beta``."""
    beta = check_beta(beta)
    p1 = FourMomentum.from_velocity(mass, beta, (0, 0, 1))
    p2 = FourMomentum(mass, tuple(-c for c in p1.p))
    return BipartiteState(p1, p2, kind.amplitudes)


def boost_state(state: BipartiteState, lorentz) -> BipartiteState:
    """Apply ``U(Lambda)``: momenta go to ``Lambda p_i`` and spins rotate by ``D(W_1) x D(W_2)``."""
    lam = require_lorentz(lorentz)
    d1 = wigner_rotation(lam, state.p1).spin_rep()
    d2 = wigner_rotation(lam, state.p2).spin_rep()
    amps = np.kron(d1, d2) @ state.amplitudes
    q1 = state.p1.boosted(lam)
    q2 = state.p2.boosted(lam)
    factor = math.sqrt(q1.energy() * q2.energy() / (state.p1.energy() * state.p2.energy()))
    return BipartiteState(q1, q2, amps, state.kinematic_factor * factor)


def transform_bell_closed_form(kind: BellKind, theta_w: float) -> np.ndarray:
    """Amplitudes of ``U(Lambda)|kind>`` for the perpendicular-boost configuration.

    Phi- and Psi+ are unchanged. Phi+ becomes ``cos(t) Phi+ - sin(t) Psi-``
    and Psi- becomes ``sin(t) Phi+ + cos(t) Psi-``.
    """
    c, s = math.cos(theta_w), math.sin(theta_w)
    phi_p = BELL_AMPLITUDES[BellKind.PHI_PLUS]
    psi_m = BELL_AMPLITUDES[BellKind.PSI_MINUS]
    if kind is BellKind.PHI_PLUS:
        return c * phi_p - s * psi_m
    if kind is BellKind.PSI_MINUS:
        return s * phi_p + c * psi_m
    return kind.amplitudes


def spin_inner_product(s1: BipartiteState, s2: BipartiteState, tol: float = 1e-10) -> complex:
    """Spin overlap, conjugate-linear in ``s1``; zero when the momentum labels differ."""
    if not s1.momenta_match(s2, tol):
        return 0j
    return complex(np.vdot(s1.amplitudes, s2.amplitudes))
