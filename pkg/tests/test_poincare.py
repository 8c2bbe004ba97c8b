import math

import numpy as np
import pytest
import scipy.linalg
from hypothesis import given
from hypothesis import strategies as st

from conftest import momenta, unit_vectors
from wignerbell.errors import TransversalityError
from wignerbell.minkowski import (
    FourMomentum,
    inverse_standard_boost,
    rotation_about,
    standard_boost,
    validate_lorentz,
)
from wignerbell.poincare import (
    RELATIONS,
    Generator,
    commutator,
    expm,
    generator,
    pauli_lubanski_rest,
    verify_algebra,
)


def test_generator_shapes():
    for label in Generator:
        g = generator(label)
        assert g.shape == (5, 5)
        assert not g[4].any()


def test_j3_block():
    block = generator(Generator.J3)[:4, :4]
    expected = np.zeros((4, 4))
    expected[1, 2], expected[2, 1] = -1.0, 1.0
    assert np.array_equal(block, expected)
    assert not generator(Generator.J3)[:, 4].any()


def test_time_translation():
    g = generator(Generator.P0)
    assert np.count_nonzero(g) == 1 and g[0, 4] == 1


def test_boost_generator_is_symmetric_tx_mixing():
    block = generator(Generator.K1)[:4, :4]
    assert np.array_equal(block, block.T)
    assert set(zip(*np.nonzero(block))) == {(0, 1), (1, 0)}


def test_commutator_examples():
    j1, j2, j3 = (generator(g) for g in (Generator.J1, Generator.J2, Generator.J3))
    assert np.array_equal(commutator(j1, j2), j3)
    assert not commutator(generator(Generator.P1), generator(Generator.P2)).any()
    kp = commutator(generator(Generator.K1), generator(Generator.P1))
    assert np.array_equal(kp, -generator(Generator.P0))


def test_full_table():
    report = verify_algebra(1e-12)
    assert report.passed
    assert tuple(report.deviations) == RELATIONS


def test_flipped_k2_breaks_kk():
    report = verify_algebra(1e-12, {Generator.K2: -generator(Generator.K2)})
    assert not report.passed
    assert "[K,K]" in report.failed()
    assert report.deviations["[J,J]"] == 0 and report.deviations["[P,P]"] == 0


def test_expm_matches_scipy_and_rotation():
    j3 = generator(Generator.J3)
    r = expm(math.pi / 2 * j3)[:4, :4]
    assert validate_lorentz(r).passed
    assert np.abs(r - rotation_about((0, 0, 1), math.pi / 2)).max() < 1e-10
    a = 0.7 * generator(Generator.K2) + 0.3 * generator(Generator.J1) + generator(Generator.P3)
    assert np.abs(expm(a) - scipy.linalg.expm(a)).max() < 1e-12


@given(st.lists(st.floats(-2.0, 2.0), min_size=3, max_size=3))
def test_exp_of_boost_generators_is_lorentz(coeffs):
    a = sum(c * generator(k) for c, k in zip(coeffs, (Generator.K1, Generator.K2, Generator.K3)))
    lam = expm(a)[:4, :4]
    report = validate_lorentz(lam, tol=1e-12)
    assert report.passed, report.failures()


def test_pauli_lubanski_at_rest():
    s = pauli_lubanski_rest(FourMomentum(1.0), (0, 0, 0, 0.5))
    assert s == pytest.approx([0, 0, 0.5])


def test_pauli_lubanski_moving():
    p = FourMomentum(1.0, (0, 0, 0.75))
    w = standard_boost(p) @ [0, 0, 0, 0.5]
    assert pauli_lubanski_rest(p, w) == pytest.approx([0, 0, 0.5], abs=1e-12)


def test_pauli_lubanski_rejects_non_transverse():
    with pytest.raises(TransversalityError) as err:
        pauli_lubanski_rest(FourMomentum(1.0), (1.0, 0, 0, 0))
    assert err.value.residual == pytest.approx(-1.0)


@given(momenta(), unit_vectors(), st.floats(0.1, 3.0))
def test_pauli_lubanski_round_trip(p, spin_dir, size):
    w_rest = np.concatenate([[0.0], size * spin_dir])
    w = standard_boost(p) @ w_rest
    s = pauli_lubanski_rest(p, w)
    assert np.abs(s - w_rest[1:] / p.mass).max() < 1e-10 * max(1.0, size / p.mass)
    pulled = inverse_standard_boost(p) @ w
    assert abs(pulled[0]) < 1e-10 * max(1.0, np.abs(w).max())
    assert np.abs(pulled[1:] / p.mass - s).max() < 1e-10 * max(1.0, np.abs(w).max())
