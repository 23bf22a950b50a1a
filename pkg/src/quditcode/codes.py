"""
Minimal single-qudit codes protecting one qubit against k shifts.

Correcting all shifts of weight <= k with a weight-2 stabilizer needs
D = 4k + 2 levels. The amplitude code {|0>, |2k+1>} is stabilized by Z**2
and corrects X**s; its Fourier transform, the phase code
{|0~>, |(2k+1)~>} = {|+bar>, |-bar>}, is stabilized by X**2 and corrects Z**s.

k = 0 (D = 2) is accepted everywhere and stands for the unencoded qubit.

Repetition-code baseline: only n odd is supported. The n = 1 code is the
unencoded qubit (its fidelity equals (2 + eta) / 3); there is no n = 2 case.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvalidDimensionError
from .qudit_algebra import basis_state, generalized_pauli, pauli_x, pauli_z


def _check_weight(k: int) -> int:
    if int(k) != k or k < 0:
        raise DomainError(f"shift weight k must be a non-negative integer, got {k!r}")
    return int(k)


def dim_for_weight(k: int) -> int:
    return 4 * _check_weight(k) + 2


def weight_for_dim(D: int) -> int:
    """Inverse of ``dim_for_weight``; D must be 2 mod 4."""
    if int(D) != D or D < 2 or D % 4 != 2:
        raise InvalidDimensionError(f"dimension must be 2 or 4k+2, got {D!r}")
    return (int(D) - 2) // 4


@dataclass(frozen=True)
class AmplitudeCode:
    """Codewords |0>, |2k+1>; corrects X**s for |s| <= k."""

    k: int

    def __post_init__(self):
        _check_weight(self.k)

    @property
    def D(self) -> int:
        return 4 * self.k + 2

    @property
    def codeword_indices(self) -> tuple[int, int]:
        return (0, 2 * self.k + 1)

    def codewords(self) -> tuple[np.ndarray, np.ndarray]:
        return amplitude_codewords(self.k)

    def stabilizer(self) -> np.ndarray:
        return np.linalg.matrix_power(pauli_z(self.D), 2)

    def encode(self, alpha: complex, beta: complex) -> np.ndarray:
        zero, one = self.codewords()
        return alpha * zero + beta * one


@dataclass(frozen=True)
class PhaseCode:
    """Codewords |+bar>, |-bar>; corrects Z**s for |s| <= k."""

    k: int

    def __post_init__(self):
        _check_weight(self.k)

    @property
    def D(self) -> int:
        return 4 * self.k + 2

    def codewords(self) -> tuple[np.ndarray, np.ndarray]:
        return phase_codewords(self.k)

    def rotated_codewords(self) -> tuple[np.ndarray, np.ndarray]:
        return rotated_codewords(self.k)

    def stabilizer(self) -> np.ndarray:
        return np.linalg.matrix_power(pauli_x(self.D), 2)

    def logical_flip(self) -> np.ndarray:
        return logical_flip(self.k)

    def logical_phase(self) -> np.ndarray:
        return logical_phase(self.k)

    def encode(self, theta: float, phi: float) -> np.ndarray:
        return encode_logical(self.k, theta, phi)


@dataclass(frozen=True)
class RepetitionCodeSpec:
    """n-qubit majority-vote code; n odd."""

    n: int

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1 or self.n % 2 == 0:
            raise DomainError(f"repetition code length must be an odd positive integer, got {self.n!r}")

    @property
    def dim(self) -> int:
        return 2**self.n

    @property
    def label(self) -> str:
        return f"rep-n{self.n}"


def amplitude_codewords(k: int) -> tuple[np.ndarray, np.ndarray]:
    D = dim_for_weight(k)
    return basis_state(D, 0), basis_state(D, 2 * k + 1)


def phase_codewords(k: int) -> tuple[np.ndarray, np.ndarray]:
    """(|+bar>, |-bar>): uniform and alternating-sign superpositions."""
    D = dim_for_weight(k)
    signs = (-1.0) ** np.arange(D)
    plus = np.full(D, 1 / np.sqrt(D), dtype=complex)
    return plus, plus * signs


def rotated_codewords(k: int) -> tuple[np.ndarray, np.ndarray]:
    """(zeta_0, zeta_1): uniform superpositions over even and odd levels."""
    D = dim_for_weight(k)
    norm = 1 / np.sqrt(2 * k + 1)
    zeta0 = np.zeros(D, dtype=complex)
    zeta1 = np.zeros(D, dtype=complex)
    zeta0[0::2] = norm
    zeta1[1::2] = norm
    return zeta0, zeta1


def logical_flip(k: int) -> np.ndarray:
    """X**(2k+1): swaps the amplitude codewords."""
    D = dim_for_weight(k)
    return generalized_pauli(D, 2 * k + 1, 0)


def logical_phase(k: int) -> np.ndarray:
    """Z**(2k+1) = diag((-1)**j): swaps the phase codewords."""
    D = dim_for_weight(k)
    return generalized_pauli(D, 0, 2 * k + 1)


def _check_angles(theta: float, phi: float) -> None:
    # theta may be negative: F_rec(-pi/2, 0) addresses zeta_1 directly
    if not -np.pi <= theta <= np.pi:
        raise DomainError(f"theta must lie in [-pi, pi], got {theta!r}")
    if not 0.0 <= phi < 2 * np.pi:
        raise DomainError(f"phi must lie in [0, 2pi), got {phi!r}")


def logical_amplitudes(theta: float, phi: float, D: int) -> np.ndarray:
    """a_l = cos(theta/2) + (-1)**l e^{i phi} sin(theta/2), without the 1/sqrt(D)."""
    signs = (-1.0) ** np.arange(D)
    return np.cos(theta / 2) + signs * np.exp(1j * phi) * np.sin(theta / 2)


def encode_logical(k: int, theta: float, phi: float) -> np.ndarray:
    """cos(theta/2)|+bar> + e^{i phi} sin(theta/2)|-bar> in the computational basis.

    The |+bar> coefficient is kept real, which fixes the global phase.
    """
    _check_angles(theta, phi)
    D = dim_for_weight(k)
    return logical_amplitudes(theta, phi, D) / np.sqrt(D)


def omega_coefficients(theta: float, phi: float, D: int) -> np.ndarray:
    """Omega_lm = a_l conj(a_m); the encoded density matrix is Omega / D."""
    _check_angles(theta, phi)
    a = logical_amplitudes(theta, phi, D)
    return np.outer(a, a.conj())
