import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quditcode import qudit_algebra as qa
from quditcode.errors import DimensionMismatchError, InvalidDimensionError


def test_root_of_unity_values():
    assert qa.root_of_unity(2) == pytest.approx(-1)
    assert qa.root_of_unity(4) == pytest.approx(1j)
    assert qa.root_of_unity(6) == pytest.approx(0.5 + 1j * np.sqrt(3) / 2, abs=1e-15)
    for D in range(2, 40):
        assert abs(abs(qa.root_of_unity(D)) - 1) <= 1e-15


@pytest.mark.parametrize("fn", [qa.root_of_unity, qa.pauli_x, qa.pauli_z, qa.fourier_matrix])
@pytest.mark.parametrize("D", [1, 0, -3])
def test_invalid_dimension(fn, D):
    with pytest.raises(InvalidDimensionError):
        fn(D)


def test_pauli_x():
    np.testing.assert_array_equal(qa.pauli_x(2), [[0, 1], [1, 0]])
    X3 = qa.pauli_x(3)
    np.testing.assert_array_equal(X3[:, 2], [1, 0, 0])
    for D in (2, 3, 6, 10):
        np.testing.assert_allclose(np.linalg.matrix_power(qa.pauli_x(D), D), np.eye(D), atol=0)


def test_pauli_z():
    np.testing.assert_allclose(qa.pauli_z(2), np.diag([1, -1]), atol=1e-16)
    assert qa.pauli_z(6)[3, 3] == pytest.approx(-1, abs=1e-15)


@pytest.mark.parametrize("D", range(2, 33))
def test_unitarity_and_commutation(D):
    X, Z = qa.pauli_x(D), qa.pauli_z(D)
    assert qa.is_unitary(X, atol=1e-13)
    assert qa.is_unitary(Z, atol=1e-13)
    assert qa.allclose(Z @ X, qa.root_of_unity(D) * X @ Z, atol=1e-13)
    H = qa.fourier_matrix(D)
    Xd = H.conj().T @ X @ H
    assert qa.allclose(Xd, np.diag(np.diag(Xd)), atol=1e-12)


def test_generalized_pauli():
    np.testing.assert_allclose(qa.generalized_pauli(2, 1, 1), [[0, -1], [1, 0]], atol=1e-16)
    for D in (2, 5, 6):
        np.testing.assert_allclose(qa.generalized_pauli(D, 0, 0), np.eye(D))
    np.testing.assert_allclose(qa.generalized_pauli(6, 6, 0), np.eye(6))


@given(D=st.integers(2, 12), a=st.integers(-30, 30), b=st.integers(-30, 30))
@settings(max_examples=60, deadline=None)
def test_generalized_pauli_is_power_product(D, a, b):
    X, Z = qa.pauli_x(D), qa.pauli_z(D)
    expected = np.linalg.matrix_power(X, a % D) @ np.linalg.matrix_power(Z, b % D)
    assert qa.allclose(qa.generalized_pauli(D, a, b), expected, atol=1e-12)


def test_fourier_matrix():
    np.testing.assert_allclose(qa.fourier_matrix(2), np.array([[1, 1], [1, -1]]) / np.sqrt(2), atol=1e-16)
    H6 = qa.fourier_matrix(6)
    assert qa.is_unitary(H6)
    assert qa.allclose(np.linalg.matrix_power(H6, 4), np.eye(6), atol=1e-12)


@pytest.mark.parametrize("D", [2, 3, 6, 10])
def test_rotated_basis_diagonalizes_x(D):
    H, X, w = qa.fourier_matrix(D), qa.pauli_x(D), qa.root_of_unity(D)
    for i in range(D):
        ket = H[:, i]
        assert qa.allclose(X @ ket, w**i * ket, atol=1e-12)


def test_kron():
    np.testing.assert_array_equal(qa.kron(np.eye(2), np.eye(3)), np.eye(6))
    np.testing.assert_array_equal(qa.kron(np.diag([1, -1]), np.eye(2)), np.diag([1, 1, -1, -1]))
    assert qa.kron(np.ones((2, 3)), np.ones((4, 5))).shape == (8, 15)


def test_partial_trace(rng):
    rho = qa.random_density_matrix(4, rng)
    sigma = 0.7 * qa.random_density_matrix(3, rng)
    out = qa.partial_trace_ancilla(qa.kron(rho, sigma), 4, 3)
    assert qa.allclose(out, np.trace(sigma) * rho)
    joint = qa.random_density_matrix(12, rng)
    assert abs(np.trace(qa.partial_trace_ancilla(joint, 4, 3)) - np.trace(joint)) <= 1e-12
    bell = np.array([1, 0, 0, 1]) / np.sqrt(2)
    assert qa.allclose(qa.partial_trace_ancilla(qa.projector(bell), 2, 2), np.eye(2) / 2)
    e0 = qa.projector(qa.basis_state(5, 0))
    assert qa.allclose(qa.partial_trace_ancilla(qa.kron(rho, e0), 4, 5), rho, atol=1e-14)
    with pytest.raises(DimensionMismatchError):
        qa.partial_trace_ancilla(joint, 4, 4)


def test_validate_density_matrix(rng):
    rho = qa.random_density_matrix(6, rng)
    qa.validate_density_matrix(rho, check_positive=True)
    with pytest.raises(ValueError):
        qa.validate_density_matrix(2 * rho)
    bad = rho.copy()
    bad[0, 1] += 0.1
    with pytest.raises(ValueError):
        qa.validate_density_matrix(bad)
    neg = np.diag([1.5, -0.5]).astype(complex)
    qa.validate_density_matrix(neg)
    with pytest.raises(ValueError):
        qa.validate_density_matrix(neg, check_positive=True)
