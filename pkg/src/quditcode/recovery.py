"""
Syndrome extraction and recovery for the minimal codes.

Amplitude code: the circuit R = C N acts on system (x) ancilla with an
ancilla of exactly 2k+1 levels. Syndrome s in [-k, k] is stored in ancilla
level s mod (2k+1). Tracing the ancilla out gives the recovery map

    E_R(rho) = sum_s X**(-s) P(s) rho P(s) X**s,

which only lands in span{|0>, |2k+1>} with entries
Phi(x, y) = sum_s rho[x+s, y+s].

Phase code: the same construction conjugated by the Fourier matrix. The
coefficients Phi~(x, y) are evaluated directly in the computational basis
through the kernel Delta(d, D) = sum_s omega**(s d).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .channels import ChannelSpec, apply_closed_form
from .codes import dim_for_weight, rotated_codewords, weight_for_dim
from .errors import DimensionMismatchError, RestorationError
from .qudit_algebra import (
    fourier_matrix,
    generalized_pauli,
    max_abs_diff,
    omega_power,
    partial_trace_ancilla,
    projector,
)


def syndromes(k: int) -> range:
    return range(-k, k + 1)


@dataclass(frozen=True)
class SyndromeProjectorSet:
    k: int
    projectors: dict[int, np.ndarray] = field(repr=False)

    @property
    def D(self) -> int:
        return 4 * self.k + 2

    def __getitem__(self, s: int) -> np.ndarray:
        return self.projectors[s]

    def __iter__(self):
        return iter(self.projectors.items())


@dataclass(frozen=True)
class RecoveryKernel:
    D: int
    values: dict[int, float] = field(repr=False)

    def __getitem__(self, d: int) -> float:
        return self.values[d]

    def matrix(self) -> np.ndarray:
        """K[l, m] = Delta(l - m, D)."""
        idx = np.arange(self.D)
        table = np.array([self.values[d] for d in range(-(self.D - 1), self.D)])
        return table[idx[:, None] - idx[None, :] + self.D - 1]


def syndrome_projectors(k: int) -> SyndromeProjectorSet:
    """P(s) = |s><s| + |2k+1+s><2k+1+s| (indices mod D)."""
    D = dim_for_weight(k)
    projs = {}
    for s in syndromes(k):
        P = np.zeros((D, D), dtype=complex)
        P[s % D, s % D] = 1.0
        P[(2 * k + 1 + s) % D, (2 * k + 1 + s) % D] = 1.0
        projs[s] = P
    return SyndromeProjectorSet(k, projs)


def ancilla_dim(k: int) -> int:
    return 2 * k + 1


def _ancilla_shift_power(k: int, s: int) -> np.ndarray:
    # cyclic shift on 2k+1 levels; defined for the 1-level ancilla at k = 0 too
    A = ancilla_dim(k)
    return np.roll(np.eye(A, dtype=complex), s, axis=0)


def _ancilla_level(k: int, s: int) -> np.ndarray:
    A = ancilla_dim(k)
    e = np.zeros((A, A), dtype=complex)
    e[s % A, s % A] = 1.0
    return e


def syndrome_unitary_N(k: int) -> np.ndarray:
    """Generalized CNOT N = sum_s P(s) (x) X_A**s."""
    projs = syndrome_projectors(k)
    return sum(np.kron(P, _ancilla_shift_power(k, s)) for s, P in projs)


def correction_unitary_C(k: int) -> np.ndarray:
    """C = sum_s X**(-s) (x) |s><s|_A."""
    D = dim_for_weight(k)
    return sum(np.kron(generalized_pauli(D, -s, 0), _ancilla_level(k, s)) for s in syndromes(k))


def recovery_unitary_R(k: int) -> np.ndarray:
    return correction_unitary_C(k) @ syndrome_unitary_N(k)


def _check_state(rho: np.ndarray, k: int) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    D = dim_for_weight(k)
    if rho.shape != (D, D):
        raise DimensionMismatchError(f"state has shape {rho.shape}, code needs ({D}, {D})")
    return rho


def recovery_circuit(rho: np.ndarray, k: int) -> np.ndarray:
    """Tr_A[R (rho (x) |0><0|_A) R^dag] for the amplitude code."""
    rho = _check_state(rho, k)
    R = recovery_unitary_R(k)
    joint = R @ np.kron(rho, _ancilla_level(k, 0)) @ R.conj().T
    return partial_trace_ancilla(joint, rho.shape[0], ancilla_dim(k))


def recovery_circuit_phase(rho: np.ndarray, k: int) -> np.ndarray:
    """The amplitude-code circuit run in the Fourier-rotated frame."""
    rho = _check_state(rho, k)
    H = fourier_matrix(rho.shape[0])
    return H @ recovery_circuit(H.conj().T @ rho @ H, k) @ H.conj().T


def amplitude_coefficients(rho: np.ndarray, k: int) -> np.ndarray:
    """2x2 array Phi[a, b] for x, y = (0, 2k+1)[a], (0, 2k+1)[b]."""
    rho = _check_state(rho, k)
    D = rho.shape[0]
    cw = (0, 2 * k + 1)
    phi = np.zeros((2, 2), dtype=complex)
    for a, x in enumerate(cw):
        for b, y in enumerate(cw):
            phi[a, b] = sum(rho[(x + s) % D, (y + s) % D] for s in syndromes(k))
    return phi


def recovery_map_amplitude(rho: np.ndarray, k: int) -> np.ndarray:
    phi = amplitude_coefficients(rho, k)
    D = dim_for_weight(k)
    out = np.zeros((D, D), dtype=complex)
    cw = np.array([0, 2 * k + 1])
    out[np.ix_(cw, cw)] = phi
    return out


def recovery_kernel(d: int, D: int) -> float:
    """Delta(d, D) = sum_{s=-k}^{k} omega**(s d), as an explicit finite sum."""
    k = weight_for_dim(D)
    total = sum(omega_power(D, s * d) for s in syndromes(k))
    if abs(total.imag) > 1e-13:
        raise ArithmeticError(f"kernel sum has imaginary part {total.imag}")
    return float(total.real)


def recovery_kernel_closed_form(d: int, D: int) -> float:
    """sin(pi d / 2) / sin(pi d / D), valid for d not a multiple of D."""
    return float(np.sin(np.pi * d / 2) / np.sin(np.pi * d / D))


def recovery_kernel_table(D: int) -> RecoveryKernel:
    return RecoveryKernel(D, {d: recovery_kernel(d, D) for d in range(-(D - 1), D)})


def phase_coefficients(rho: np.ndarray, k: int) -> np.ndarray:
    """Phi~(x, y) = (1/D) sum_lm rho_lm (-1)**(x l - y m) Delta(l - m, D), x, y in {0, 2k+1}.

    Returned as a 2x2 array indexed like ``amplitude_coefficients``.
    """
    rho = _check_state(rho, k)
    D = rho.shape[0]
    M = rho * recovery_kernel_table(D).matrix()
    # (-1)**(x l) with x in {0, 2k+1} (odd)
    signs = np.vstack([np.ones(D), (-1.0) ** np.arange(D)])
    return signs @ M @ signs.T / D


def phase_coefficients_via_rotation(rho: np.ndarray, k: int) -> np.ndarray:
    """Same coefficients, computed by rotating rho into the X eigenbasis and summing diagonals."""
    rho = _check_state(rho, k)
    H = fourier_matrix(rho.shape[0])
    return amplitude_coefficients(H.conj().T @ rho @ H, k)


def phase_dyads(k: int) -> np.ndarray:
    """Columns |0~>, |(2k+1)~> as a (D, 2) array."""
    H = fourier_matrix(dim_for_weight(k))
    return H[:, [0, 2 * k + 1]]


def recovery_map_phase(rho: np.ndarray, k: int) -> np.ndarray:
    V = phase_dyads(k)
    return V @ phase_coefficients(rho, k) @ V.conj().T


def recover_rotated_codeword_check(k: int, u: int, spec: ChannelSpec, atol: float = 1e-11) -> np.ndarray:
    """Damp |zeta_u><zeta_u|, recover it, and insist it comes back unchanged.

    Raises RestorationError if the output differs from the input or the
    coefficients Phi~ are not (1/2, (-1)**u/2; (-1)**u/2, 1/2).
    """
    if u not in (0, 1):
        raise ValueError(f"u must be 0 or 1, got {u!r}")
    zeta = rotated_codewords(k)[u]
    target = projector(zeta)
    damped = apply_closed_form(spec, target)
    V = phase_dyads(k)
    coeffs = phase_coefficients(damped, k)
    out = V @ coeffs @ V.conj().T
    sign = (-1) ** u
    expected = 0.5 * np.array([[1, sign], [sign, 1]])
    if max_abs_diff(coeffs, expected) > atol:
        raise RestorationError(f"Phi~ coefficients {coeffs.round(14).tolist()} differ from {expected.tolist()}")
    err = max_abs_diff(out, target)
    if err > atol:
        raise RestorationError(f"zeta_{u} not restored: max deviation {err:.3e}")
    return out
