"""Smoke tests for the python bindings: a thin pass over each operation
family; the deep numerical checks live in the C++ suites."""

import cmath
import math

import pytest

import thetafock as tf


@pytest.fixture
def square():
    return tf.Lattice(1 + 0j, 1j)


@pytest.fixture
def critical_space(square):
    return tf.ThetaFockSpace(tf.PseudoCharacter.weierstrass(square, math.pi))


def test_lattice_basics(square):
    assert square.cell_area() == pytest.approx(1.0)
    assert square.dimension(2 * math.pi) == 2
    assert len(square.shell(3)) == 24
    with pytest.raises(tf.ThetafockError):
        tf.Lattice(1 + 0j, 2 + 0j)


def test_cell_reduction(square):
    cell = tf.FundamentalCell(square)
    z0, gamma = cell.reduce(2.5 + 3.25j)
    assert z0 == pytest.approx(0.5 + 0.25j)
    assert gamma.value == pytest.approx(2 + 3j)


def test_character_cocycle(square):
    chi = tf.PseudoCharacter.weierstrass(square, math.pi)
    assert chi.is_real
    assert chi.evaluate(2, 3) == pytest.approx(-1.0)
    assert chi.verify_cocycle(3) < 1e-10


def test_perelomov_sum(critical_space):
    r = tf.coeff(critical_space, m=0, n=0)
    assert abs(r.value) < 1e-12 * r.abs_mass


def test_kernel_hermitian(critical_space):
    a = tf.kernel_eval(critical_space, 0.2 + 0.1j, 0.3 - 0.2j).value
    b = tf.kernel_eval(critical_space, 0.3 - 0.2j, 0.2 + 0.1j).value
    assert a == pytest.approx(b.conjugate(), rel=1e-12)


def test_kernel_routes_agree(critical_space):
    z, w = 0.25 + 0.15j, -0.2 + 0.3j
    direct = tf.kernel_eval(critical_space, z, w).value
    series = tf.kernel_eval_series(critical_space, z, w, 24, 24)
    poincare = tf.kernel_via_poincare(critical_space, z, w, 30)
    assert series == pytest.approx(direct, rel=1e-8)
    assert poincare == pytest.approx(direct, rel=1e-8)


def test_hermite_identities():
    h = tf.hermite_eval(1.3, 2, 3, 0.7 + 0.4j)
    assert tf.hermite_eval(1.3, 3, 2, 0.7 + 0.4j) == pytest.approx(h.conjugate())
    assert tf.genfun2_residual(1.0, 0.3, 0.3, 0.5 + 0.2j, 25, 25) < 1e-12


def test_gaussian_char_sum_table():
    assert tf.gaussian_char_sum(1.0) == pytest.approx(0.0, abs=1e-12)
    assert tf.gaussian_char_sum(2.0) == pytest.approx(0.8196872998200459, abs=1e-10)


def test_zero_count_matches_dimension(square):
    space = tf.ThetaFockSpace(tf.PseudoCharacter.weierstrass(square, 2 * math.pi))
    result = tf.zero_count(space, 0.3 + 0.2j)
    assert result.count == space.dim == 2
    zeros = tf.zero_locate(space, 0.3 + 0.2j, grid=24)
    assert len(zeros.zeros) == 2


def test_elliptic_mu_and_sigma(square):
    wd = tf.WeierstrassData(square)
    mu = tf.mu_invariant(wd, math.pi)
    assert abs(mu.mu) < 1e-10
    assert abs(wd.sigma(0j)) == 0.0
    assert wd.eta2 == pytest.approx(math.pi)


def test_theta_identity_report():
    rep = tf.theta_identity_report(math.pi)
    assert abs(rep.split_sum_combination) < 1e-12
    assert rep.printed_residual > 0.1
    assert abs(rep.theta_combination - rep.split_sum_combination) < 1e-10


def test_parity_report(critical_space):
    rep = tf.parity_report(critical_space, 3)
    assert all(row.vanishes for row in rep.rows)
    assert rep.max_even_magnitude > 1.0


def test_sigma_factorization(critical_space):
    samples = tf.sigma_factor_default_samples(critical_space)
    assert tf.sigma_factor_residual(critical_space, samples) < 1e-7
