"""Pauli algebra, coin rotations, and closed-form two-level eigenpairs."""

import numpy as np
import pytest

from qwgeom.errors import DegeneratePointError
from qwgeom.spin import (IDENTITY_2, PAULI_X, PAULI_Y, PAULI_Z,
                         band_eigenvector, bloch_sphere_state, eig_h2,
                         rotation_axis, rotation_x, rotation_y)


def test_pauli_algebra():
    for p in (PAULI_X, PAULI_Y, PAULI_Z):
        assert np.allclose(p @ p, IDENTITY_2)
        assert np.allclose(p, p.conj().T)
    assert np.allclose(PAULI_X @ PAULI_Y, 1j * PAULI_Z)
    assert np.allclose(PAULI_Y @ PAULI_Z, 1j * PAULI_X)
    assert np.allclose(PAULI_Z @ PAULI_X, 1j * PAULI_Y)


def test_pauli_constants_are_readonly():
    with pytest.raises(ValueError):
        PAULI_X[0, 0] = 5.0


def test_rotation_y_entries():
    th = 0.7
    m = rotation_y(th)
    expected = np.array([[np.cos(th), -np.sin(th)],
                         [np.sin(th), np.cos(th)]])
    assert np.array_equal(m, expected.astype(complex))


def test_rotation_x_entries():
    ph = -1.2
    m = rotation_x(ph)
    expected = np.array([[np.cos(ph), 1j * np.sin(ph)],
                         [1j * np.sin(ph), np.cos(ph)]])
    assert np.array_equal(m, expected)


def test_rotations_are_unitary_and_compose():
    rng = np.random.default_rng(11)
    for _ in range(20):
        a, b = rng.uniform(-np.pi, np.pi, 2)
        for rot in (rotation_y, rotation_x):
            m = rot(a)
            assert np.allclose(m @ m.conj().T, IDENTITY_2, atol=1e-14)
            assert np.allclose(rot(a) @ rot(b), rot(a + b), atol=1e-13)


def test_rotation_axis_entry_formula():
    rng = np.random.default_rng(3)
    for _ in range(10):
        axis = rng.normal(size=3)
        axis /= np.linalg.norm(axis)
        nx, ny, nz = axis
        th = rng.uniform(-3.0, 3.0)
        c, s = np.cos(th), np.sin(th)
        expected = np.array([[c - 1j * nz * s, (1j * nx - ny) * s],
                             [(1j * nx + ny) * s, c + 1j * nz * s]])
        m = rotation_axis(axis, th)
        assert np.allclose(m, expected, atol=1e-14)
        assert np.allclose(m @ m.conj().T, IDENTITY_2, atol=1e-12)
        assert abs(np.linalg.det(m) - 1.0) < 1e-12


def test_rotation_axis_z_quarter_turn():
    m = rotation_axis((0.0, 0.0, 1.0), np.pi / 2)
    assert np.allclose(m, np.diag([-1j, 1j]), atol=1e-15)


def test_rotation_axis_recovers_named_coins():
    th = 0.83
    assert np.allclose(rotation_axis((0, 1, 0), th), rotation_y(th),
                       atol=1e-15)
    assert np.allclose(rotation_axis((1, 0, 0), th), rotation_x(th),
                       atol=1e-15)


def test_rotation_axis_rejects_non_unit_axis():
    with pytest.raises(ValueError):
        rotation_axis((0.0, 0.0, 0.5), 1.0)
    with pytest.raises(ValueError):
        rotation_axis((1.0, 1.0, 1.0), 1.0)


def _direction(theta, phi):
    return np.array([np.sin(theta) * np.cos(phi),
                     np.sin(theta) * np.sin(phi),
                     np.cos(theta)])


def test_bloch_sphere_state_eigen_equation():
    # This family pairs e^{+i phi/2} with the upper component, so it
    # diagonalizes the direction with azimuth -phi; the pair is still an
    # orthonormal basis at every (theta, phi).
    rng = np.random.default_rng(5)
    for _ in range(25):
        theta = rng.uniform(0.0, np.pi)
        phi = rng.uniform(-np.pi, np.pi)
        n = _direction(theta, -phi)
        h = n[0] * PAULI_X + n[1] * PAULI_Y + n[2] * PAULI_Z
        for band in (+1, -1):
            psi = bloch_sphere_state(theta, phi, band)
            assert abs(np.linalg.norm(psi) - 1.0) < 1e-14
            assert np.linalg.norm(h @ psi - band * psi) < 1e-13
        plus = bloch_sphere_state(theta, phi, +1)
        minus = bloch_sphere_state(theta, phi, -1)
        assert abs(np.vdot(plus, minus)) < 1e-14


def test_bloch_sphere_state_double_valued_gauge():
    psi = bloch_sphere_state(0.9, 0.3, +1)
    shifted = bloch_sphere_state(0.9, 0.3 + 2 * np.pi, +1)
    assert np.allclose(shifted, -psi, atol=1e-14)


def test_bloch_sphere_state_band_validation():
    with pytest.raises(ValueError):
        bloch_sphere_state(0.3, 0.1, 0)


def test_band_eigenvector_eigen_equation_random():
    rng = np.random.default_rng(17)
    n = rng.normal(size=(400, 3)) * np.exp(rng.uniform(-3, 3, size=(400, 1)))
    r = np.linalg.norm(n, axis=1)
    for band in (+1, -1):
        v = band_eigenvector(n, band)
        norms = np.linalg.norm(v, axis=1)
        assert np.max(np.abs(norms - 1.0)) < 1e-12
        hv = (n[:, 0, None] * (PAULI_X @ v[..., None])[..., 0]
              + n[:, 1, None] * (PAULI_Y @ v[..., None])[..., 0]
              + n[:, 2, None] * (PAULI_Z @ v[..., None])[..., 0])
        residual = np.linalg.norm(hv - band * r[:, None] * v, axis=1)
        assert np.max(residual / r) < 1e-12


def test_band_eigenvectors_are_orthogonal():
    rng = np.random.default_rng(23)
    n = rng.normal(size=(200, 3))
    vp = band_eigenvector(n, +1)
    vm = band_eigenvector(n, -1)
    overlaps = np.abs(np.sum(vp.conj() * vm, axis=1))
    assert np.max(overlaps) < 1e-12


def test_band_eigenvector_lower_component_real():
    rng = np.random.default_rng(31)
    n = rng.normal(size=(200, 3))
    for band in (+1, -1):
        v = band_eigenvector(n, band)
        assert np.max(np.abs(v[:, 1].imag)) == 0.0


def test_band_eigenvector_poles():
    vp = band_eigenvector(np.array([0.0, 0.0, 2.5]), +1)
    assert np.allclose(vp, [1.0, 0.0])
    vm = band_eigenvector(np.array([0.0, 0.0, 2.5]), -1)
    assert np.allclose(vm, [0.0, 1.0])
    vp_south = band_eigenvector(np.array([0.0, 0.0, -2.5]), +1)
    assert np.allclose(vp_south, [0.0, -1.0])


def test_band_eigenvector_stable_near_poles():
    # A Bloch vector a hair away from +z once produced catastrophic
    # cancellation in the naive (nz - r) formula; the identity-based
    # branch keeps the eigen-residual at machine precision.
    n = np.array([1e-9, -2e-9, 0.7])
    for band in (+1, -1):
        v = band_eigenvector(n, band)
        h = n[0] * PAULI_X + n[1] * PAULI_Y + n[2] * PAULI_Z
        lam = band * np.linalg.norm(n)
        assert np.linalg.norm(h @ v - lam * v) < 1e-15


def test_band_eigenvector_equatorial_direction():
    # For nz = 0 both bands reduce to (e^{-i phi_n}, s)/sqrt(2) up to phase.
    rng = np.random.default_rng(41)
    for _ in range(20):
        phi_n = rng.uniform(-np.pi, np.pi)
        n = np.array([np.cos(phi_n), np.sin(phi_n), 0.0])
        for band in (+1, -1):
            v = band_eigenvector(n, band)
            ref = np.array([np.exp(-1j * phi_n), band]) / np.sqrt(2.0)
            assert abs(abs(np.vdot(ref, v)) - 1.0) < 1e-12


def test_band_eigenvector_zero_vector_raises():
    with pytest.raises(DegeneratePointError):
        band_eigenvector(np.zeros(3), +1)


def test_band_eigenvector_shape_validation():
    with pytest.raises(ValueError):
        band_eigenvector(np.ones((4, 2)), +1)
    with pytest.raises(ValueError):
        band_eigenvector(np.ones(3), 2)


def test_eig_h2_against_general_solver():
    rng = np.random.default_rng(47)
    for _ in range(30):
        n = rng.normal(size=3)
        lam_p, lam_m, vp, vm = eig_h2(n)
        r = np.linalg.norm(n)
        assert abs(lam_p - r) < 1e-14
        assert abs(lam_m + r) < 1e-14
        h = n[0] * PAULI_X + n[1] * PAULI_Y + n[2] * PAULI_Z
        w, vecs = np.linalg.eigh(h)
        # eigh sorts ascending, so column 1 is the +r eigenvector.
        assert abs(abs(np.vdot(vecs[:, 1], vp)) - 1.0) < 1e-12
        assert abs(abs(np.vdot(vecs[:, 0], vm)) - 1.0) < 1e-12


def test_eig_h2_matches_batch_solver():
    n = np.array([0.3, -1.1, 0.4])
    _, _, vp, vm = eig_h2(n)
    assert np.allclose(vp, band_eigenvector(n, +1))
    assert np.allclose(vm, band_eigenvector(n, -1))
