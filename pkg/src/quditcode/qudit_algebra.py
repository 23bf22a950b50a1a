"""
Dense linear algebra for a single qudit.

Operators, pure states and density matrices are plain complex numpy arrays
(``(D, D)`` and ``(D,)``). Index convention for joint system (x) ancilla
spaces is system-major: joint index = system_index * dim_ancilla + ancilla_index,
which is what ``np.kron`` produces.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatchError, InvalidDimensionError

DEFAULT_ATOL = 1e-12


def _check_dim(D: int) -> None:
    if int(D) != D or D < 2:
        raise InvalidDimensionError(f"qudit dimension must be an integer >= 2, got {D!r}")


def root_of_unity(D: int) -> complex:
    """omega = exp(2 pi i / D)."""
    _check_dim(D)
    return complex(np.exp(2j * np.pi / D))


def omega_power(D: int, j) -> np.ndarray | complex:
    """omega**j with the exponent reduced mod D first (keeps phases exact at j = D/2 etc.)."""
    j = np.mod(j, D)
    return np.exp(2j * np.pi * j / D)


def pauli_x(D: int) -> np.ndarray:
    """Cyclic shift X|j> = |j+1 mod D>."""
    _check_dim(D)
    X = np.zeros((D, D), dtype=complex)
    X[(np.arange(D) + 1) % D, np.arange(D)] = 1.0
    return X


def pauli_z(D: int) -> np.ndarray:
    """Clock operator Z|j> = omega**j |j>."""
    _check_dim(D)
    return np.diag(omega_power(D, np.arange(D))).astype(complex)


def generalized_pauli(D: int, a: int, b: int) -> np.ndarray:
    """X**a @ Z**b, exponents taken mod D."""
    _check_dim(D)
    a, b = int(a) % D, int(b) % D
    j = np.arange(D)
    # (X^a Z^b)|j> = omega^{b j} |j + a>
    P = np.zeros((D, D), dtype=complex)
    P[(j + a) % D, j] = omega_power(D, b * j)
    return P


def fourier_matrix(D: int) -> np.ndarray:
    """H_ij = omega**(-i j) / sqrt(D).

    H is symmetric, so its columns (and rows) are the rotated basis
    kets |i~> = sum_j H_ij |j>, the eigenvectors of X.
    """
    _check_dim(D)
    i = np.arange(D)
    return omega_power(D, -np.outer(i, i)) / np.sqrt(D)


def kron(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    return np.kron(A, B)


def partial_trace_ancilla(joint: np.ndarray, dim_system: int, dim_ancilla: int) -> np.ndarray:
    """Trace out the minor (ancilla) factor of a system (x) ancilla operator."""
    n = dim_system * dim_ancilla
    if joint.shape != (n, n):
        raise DimensionMismatchError(
            f"joint operator has shape {joint.shape}, expected ({n}, {n})"
        )
    return np.einsum("iaja->ij", joint.reshape(dim_system, dim_ancilla, dim_system, dim_ancilla))


def allclose(A, B, atol: float = DEFAULT_ATOL) -> bool:
    """Elementwise absolute comparison, no relative term."""
    A, B = np.asarray(A), np.asarray(B)
    return A.shape == B.shape and bool(np.max(np.abs(A - B), initial=0.0) <= atol)


def max_abs_diff(A, B) -> float:
    return float(np.max(np.abs(np.asarray(A) - np.asarray(B)), initial=0.0))


def is_unitary(U: np.ndarray, atol: float = 1e-13) -> bool:
    return allclose(U @ U.conj().T, np.eye(U.shape[0]), atol=atol)


def basis_state(D: int, j: int) -> np.ndarray:
    psi = np.zeros(D, dtype=complex)
    psi[j % D] = 1.0
    return psi


def projector(psi: np.ndarray) -> np.ndarray:
    """|psi><psi|."""
    return np.outer(psi, psi.conj())


def validate_pure_state(psi: np.ndarray, atol: float = DEFAULT_ATOL) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    if psi.ndim != 1:
        raise DimensionMismatchError(f"pure state must be a vector, got shape {psi.shape}")
    if abs(np.vdot(psi, psi).real - 1.0) > atol:
        raise ValueError("pure state is not normalized")
    return psi


def validate_density_matrix(
    rho: np.ndarray, atol: float = DEFAULT_ATOL, check_positive: bool = False
) -> np.ndarray:
    """Check Hermiticity and unit trace; eigenvalues only when ``check_positive``."""
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise DimensionMismatchError(f"density matrix must be square, got shape {rho.shape}")
    if max_abs_diff(rho, rho.conj().T) > atol:
        raise ValueError("density matrix is not Hermitian")
    if abs(np.trace(rho) - 1.0) > atol:
        raise ValueError(f"density matrix trace is {np.trace(rho)}, not 1")
    if check_positive and np.linalg.eigvalsh(rho).min() < -1e-10:
        raise ValueError("density matrix has a negative eigenvalue")
    return rho


def random_pure_state(D: int, rng: np.random.Generator) -> np.ndarray:
    psi = rng.normal(size=D) + 1j * rng.normal(size=D)
    return psi / np.linalg.norm(psi)


def random_density_matrix(D: int, rng: np.random.Generator, rank: int | None = None) -> np.ndarray:
    """Ginibre-distributed mixed state of the given rank (full rank by default)."""
    r = D if rank is None else rank
    G = rng.normal(size=(D, r)) + 1j * rng.normal(size=(D, r))
    rho = G @ G.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return rho / np.trace(rho).real
