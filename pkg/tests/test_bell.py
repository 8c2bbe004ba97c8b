import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_state, unit_vectors
from wignerbell.bell import (
    BOOSTED_SINGLET_DIRECTIONS,
    SINGLET_MAX_DIRECTIONS,
    TSIRELSON,
    ChshDirections,
    bell_original_margin,
    chsh,
    chsh_closed_form,
    chsh_from_tensor,
    chsh_grid_search,
    chsh_velocity_form,
    correlation,
    correlation_closed_form,
    correlation_tensor,
    expectation,
    optimal_chsh,
    sigma_dot,
    tsirelson_check,
)
from wignerbell.errors import NumericConsistencyError, SuperluminalError
from wignerbell.little_group import wigner_angle_perpendicular
from wignerbell.minkowski import boost_along
from wignerbell.states import BellKind, BipartiteState, bell_state, boost_state, transform_bell_closed_form

X, Y, Z = np.eye(3)
SINGLET = bell_state(BellKind.PSI_MINUS)
UP_UP = BipartiteState.at_rest([1, 0, 0, 0])

# 2 sqrt2 * 2.56 / 2.6896, the velocity form at beta = beta' = 0.6
CHSH_06 = 2.6921376559154697


def boosted(kind, beta, beta_prime):
    return boost_state(bell_state(kind, beta), boost_along(X, beta_prime))


def test_singlet_correlation_examples():
    for a in (X, Y, Z, np.array([1, 2, 3]) / math.sqrt(14)):
        assert correlation(SINGLET, a, a) == pytest.approx(-1)
    assert correlation(SINGLET, X, Z) == pytest.approx(0, abs=1e-15)


@settings(max_examples=1000)
@given(unit_vectors(), unit_vectors())
def test_singlet_is_minus_dot(a, b):
    assert abs(correlation(SINGLET, a, b) + a @ b) < 1e-12


def test_singlet_single_particle_expectations_vanish():
    for s in (X, Y, Z):
        assert expectation(SINGLET, np.kron(sigma_dot(s), np.eye(2))) == pytest.approx(0, abs=1e-15)


def test_imaginary_expectation_is_an_error():
    with pytest.raises(NumericConsistencyError):
        expectation(UP_UP, 1j * np.eye(4))


def test_tensors():
    assert np.allclose(correlation_tensor(bell_state(BellKind.PHI_PLUS)), np.diag([1, -1, 1]))
    assert np.allclose(correlation_tensor(SINGLET), -np.eye(3))


@settings(max_examples=100)
@given(st.integers(0, 2**32 - 1), unit_vectors(), unit_vectors())
def test_bilinearity(seed, a, b):
    state = random_state(np.random.default_rng(seed))
    t = correlation_tensor(state)
    assert abs(correlation(state, a, b) - a @ t @ b) < 1e-12
    assert np.all(np.abs(t) <= 1 + 1e-12)


@pytest.mark.parametrize("theta", [-1.2, -0.2213, 0.0, 0.4, math.pi / 2])
def test_correlation_closed_form_matches_direct(theta):
    state = BipartiteState.at_rest(transform_bell_closed_form(BellKind.PSI_MINUS, theta))
    rng = np.random.default_rng(11)
    for _ in range(20):
        a, b = rng.normal(size=3), rng.normal(size=3)
        a, b = a / np.linalg.norm(a), b / np.linalg.norm(b)
        assert correlation_closed_form(theta, a, b) == pytest.approx(correlation(state, a, b), abs=1e-12)
    assert np.allclose(
        [[correlation_closed_form(theta, i, j) for j in (X, Y, Z)] for i in (X, Y, Z)], correlation_tensor(state)
    )


def test_correlation_closed_form_examples():
    # zero angle is the singlet itself
    assert correlation_closed_form(0.0, Z, Z) == pytest.approx(-1)
    assert correlation_closed_form(0.0, X, Y) == pytest.approx(0)
    # theta = pi/2 is Phi+, whose yy correlation is -1
    assert correlation_closed_form(math.pi / 2, Y, Y) == pytest.approx(-1)
    assert correlation_closed_form(math.pi / 2, Z, Z) == pytest.approx(1)
    assert correlation_closed_form(0.5, X, Z) == pytest.approx(-math.sin(1.0))


def test_chsh_examples():
    assert chsh(SINGLET, SINGLET_MAX_DIRECTIONS) == pytest.approx(TSIRELSON, abs=1e-12)
    assert chsh(boosted(BellKind.PSI_MINUS, 0.0, 0.0), BOOSTED_SINGLET_DIRECTIONS) == pytest.approx(TSIRELSON, abs=1e-12)


def test_product_state_never_violates():
    rng = np.random.default_rng(5)
    for _ in range(500):
        d = ChshDirections(*rng.normal(size=(4, 3)))
        assert chsh(UP_UP, d) <= 2 + 1e-10


def test_chsh_closed_form_values():
    assert chsh_closed_form(0.0) == pytest.approx(TSIRELSON)
    assert chsh_closed_form(math.pi / 4) == pytest.approx(math.sqrt(2))
    th = wigner_angle_perpendicular(0.6, 0.6)
    assert chsh_closed_form(th) == pytest.approx(CHSH_06, abs=1e-12)
    assert chsh(boosted(BellKind.PSI_MINUS, 0.6, 0.6), BOOSTED_SINGLET_DIRECTIONS) == pytest.approx(CHSH_06, abs=1e-12)


def test_chsh_velocity_form_values():
    assert chsh_velocity_form(0, 0) == pytest.approx(TSIRELSON)
    assert chsh_velocity_form(0.6, 0.6) == pytest.approx(TSIRELSON * 2.56 / 2.6896, abs=1e-14)
    assert chsh_velocity_form(0.6, 0.6) == pytest.approx(CHSH_06, abs=1e-12)
    for b in (0.1, 0.5, 0.99):
        assert chsh_velocity_form(b, 0) == pytest.approx(TSIRELSON)
        assert chsh_velocity_form(0, b) == pytest.approx(TSIRELSON)
    with pytest.raises(SuperluminalError):
        chsh_velocity_form(1.0, 0.2)


@pytest.mark.parametrize("beta", np.linspace(0, 0.99, 7))
@pytest.mark.parametrize("beta_prime", np.linspace(0, 0.99, 7))
def test_three_chsh_routes_agree(beta, beta_prime):
    direct = chsh(boosted(BellKind.PSI_MINUS, beta, beta_prime), BOOSTED_SINGLET_DIRECTIONS)
    angle = chsh_closed_form(wigner_angle_perpendicular(beta, beta_prime))
    velocity = chsh_velocity_form(beta, beta_prime)
    assert direct == pytest.approx(angle, abs=1e-10)
    assert angle == pytest.approx(velocity, abs=1e-10)


def test_bell_original_margin():
    q = -math.cos(math.pi / 4)
    margin = bell_original_margin(q, 0.0, q)
    assert margin == pytest.approx(1 - math.sqrt(2), abs=1e-12)
    assert margin == pytest.approx(-0.41421, abs=1e-5)
    assert bell_original_margin(-1, -1, -1) == 0
    assert bell_original_margin(-0.5, 0.0, -0.5) == pytest.approx(0.0)
    with pytest.raises(ValueError):
        bell_original_margin(1.5, 0, 0)


def test_bell_original_qm_violation_region_by_scan():
    # coplanar a, b, c with b between a and c; the QM singlet violates somewhere
    grid = np.linspace(0.01, math.pi / 2, 60)
    worst = min(bell_original_margin(-math.cos(x), -math.cos(x + y), -math.cos(y)) for x in grid for y in grid)
    assert worst < -0.4


@pytest.mark.parametrize("kind", list(BellKind))
def test_optimal_chsh_bell_states(kind):
    res = optimal_chsh(bell_state(kind))
    assert res.value == pytest.approx(TSIRELSON, abs=1e-12)
    assert chsh(bell_state(kind), res.directions) == pytest.approx(res.value, abs=1e-12)


def test_optimal_chsh_product_state():
    res = optimal_chsh(UP_UP)
    assert res.value == pytest.approx(2.0)
    assert chsh(UP_UP, res.directions) == pytest.approx(2.0)
    assert chsh_grid_search(UP_UP) == pytest.approx(2.0, abs=1e-4)


@pytest.mark.parametrize("kind", list(BellKind))
@pytest.mark.parametrize("beta,beta_prime", [(0.6, 0.6), (0.9, 0.3), (0.99, 0.99)])
def test_optimal_chsh_boosted(kind, beta, beta_prime):
    state = boosted(kind, beta, beta_prime)
    res = optimal_chsh(state)
    assert res.value == pytest.approx(TSIRELSON, abs=1e-8)
    assert chsh(state, res.directions) == pytest.approx(res.value, abs=1e-8)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_optimal_matches_grid_oracle(seed):
    state = random_state(np.random.default_rng(seed))
    res = optimal_chsh(state)
    assert chsh(state, res.directions) == pytest.approx(res.value, abs=1e-10)
    assert chsh_grid_search(state) == pytest.approx(res.value, abs=1e-4)


@settings(max_examples=200)
@given(st.integers(0, 2**32 - 1))
def test_optimal_beats_any_fixed_settings(seed):
    rng = np.random.default_rng(seed)
    state = random_state(rng)
    d = ChshDirections(*rng.normal(size=(4, 3)))
    assert chsh(state, d) <= optimal_chsh(state).value + 1e-10
    assert chsh_from_tensor(correlation_tensor(state), d) == pytest.approx(chsh(state, d), abs=1e-12)


def test_tsirelson_examples():
    value, bound = tsirelson_check(SINGLET, SINGLET_MAX_DIRECTIONS)
    assert value == pytest.approx(TSIRELSON, abs=1e-12)
    assert bound == pytest.approx(TSIRELSON, abs=1e-12)
    same_a = ChshDirections(X, X, Y, Z)
    assert tsirelson_check(SINGLET, same_a).bound == pytest.approx(2.0)
    same_b = ChshDirections(X, Y, Z, Z)
    assert tsirelson_check(SINGLET, same_b).bound == pytest.approx(2.0)


@settings(max_examples=300)
@given(st.integers(0, 2**32 - 1))
def test_tsirelson_random(seed):
    rng = np.random.default_rng(seed)
    value, bound = tsirelson_check(random_state(rng), ChshDirections(*rng.normal(size=(4, 3))))
    assert value <= bound + 1e-10 <= TSIRELSON + 2e-10
