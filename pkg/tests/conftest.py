import numpy as np
import pytest
from hypothesis import strategies as st

from wignerbell.states import BipartiteState

speeds = st.floats(min_value=0.0, max_value=0.99, allow_nan=False)
signed_speeds = st.floats(min_value=-0.99, max_value=0.99, allow_nan=False)
angles = st.floats(min_value=-np.pi, max_value=np.pi, allow_nan=False)


@st.composite
def unit_vectors(draw):
    v = np.array([draw(st.floats(-1, 1, allow_nan=False)) for _ in range(3)])
    if np.linalg.norm(v) < 1e-3:
        v = np.array([0.0, 0.0, 1.0])
    return v / np.linalg.norm(v)


@st.composite
def momenta(draw):
    from wignerbell.minkowski import FourMomentum

    mass = draw(st.floats(0.1, 10.0))
    p = [draw(st.floats(-20.0, 20.0, allow_nan=False)) for _ in range(3)]
    return FourMomentum(mass, tuple(p))


def random_state(rng, p1=None, p2=None):
    a = rng.normal(size=4) + 1j * rng.normal(size=4)
    a /= np.linalg.norm(a)
    if p1 is None:
        return BipartiteState.at_rest(a)
    return BipartiteState(p1, p2, a)


@pytest.fixture
def rng():
    return np.random.default_rng(20241019)
