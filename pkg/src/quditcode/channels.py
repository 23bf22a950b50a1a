"""
Two qudit generalizations of qubit phase damping.

Both channels act elementwise in the computational basis,

    E(rho)_lm = rho_lm * f(eta, l - m),

with
    conventional:  f1(eta, d) = eta**(d**2)
    Weyl:          f2(eta, d) = [((1-eta)/2) omega**d + (1+eta)/2]**(D-1)

The closed forms are the production path. The Kraus families exist as
independent cross-checks: the Weyl one is finite (D binomially weighted
powers of Z) and equals the closed form exactly; the conventional one is
infinite and must be truncated.

Truncating the conventional family at ``i_max`` leaves, in entry (l, m), the
relative error P(Poisson(l m (-2 ln eta)) > i_max). The largest such
error is at l = m = D-1, which is what ``conventional_kraus_tail_bound``
returns. It grows quickly with D and with damping, so a fixed ``i_max`` is
only adequate for small D or weak damping; ``conventional_kraus_i_max``
picks one that meets a target tolerance.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.special import gammainc

from .errors import ClosedFormOnlyError, DimensionMismatchError, DomainError, InvalidWeightsError
from .qudit_algebra import generalized_pauli, omega_power, pauli_x, pauli_z

DEFAULT_I_MAX = 60


class ChannelKind(str, enum.Enum):
    CONVENTIONAL = "conventional"
    WEYL = "weyl"


def _check_eta(eta: float) -> float:
    if not 0.0 <= eta <= 1.0:
        raise DomainError(f"damping strength eta must lie in [0, 1], got {eta!r}")
    return float(eta)


@dataclass(frozen=True)
class ChannelSpec:
    kind: ChannelKind
    eta: float

    def __post_init__(self):
        object.__setattr__(self, "kind", ChannelKind(self.kind))
        _check_eta(self.eta)


@dataclass(frozen=True)
class WeylWeights:
    """pi[m, n] is the probability of conjugating by Z**n X**m."""

    pi: np.ndarray

    def __post_init__(self):
        pi = np.asarray(self.pi, dtype=float)
        if pi.ndim != 2 or pi.shape[0] != pi.shape[1]:
            raise InvalidWeightsError(f"weights must be a square D x D array, got shape {pi.shape}")
        if np.any(pi < 0) or np.any(pi > 1):
            raise InvalidWeightsError("weights must lie in [0, 1]")
        if abs(pi.sum() - 1.0) > 1e-12:
            raise InvalidWeightsError(f"weights sum to {pi.sum()}, not 1")
        object.__setattr__(self, "pi", pi)

    @property
    def dim(self) -> int:
        return self.pi.shape[0]


def eta_from_gamma(gamma: float) -> float:
    """eta = exp(-gamma), gamma >= 0 the dephasing exponent."""
    if gamma < 0:
        raise DomainError(f"gamma must be non-negative, got {gamma!r}")
    return math.exp(-gamma)


def gamma_from_eta(eta: float) -> float:
    eta = _check_eta(eta)
    return math.inf if eta == 0.0 else -math.log(eta)


def _ipow(z: complex, n: int) -> complex:
    """z**n by repeated squaring, n >= 0."""
    result = 1.0 + 0.0j
    while n:
        if n & 1:
            result *= z
        z *= z
        n >>= 1
    return result


def damping_factor(spec: ChannelSpec, D: int, d: int) -> complex:
    """f_r(eta, d) for a coherence between levels l and m with l - m = d."""
    if not -(D - 1) <= d <= D - 1:
        raise DomainError(f"level difference must lie in [-(D-1), D-1], got {d}")
    if d == 0:
        return 1.0 + 0.0j
    eta = spec.eta
    if spec.kind is ChannelKind.CONVENTIONAL:
        return complex(eta ** (d * d))
    base = 0.5 * (1 - eta) * omega_power(D, d) + 0.5 * (1 + eta)
    return _ipow(complex(base), D - 1)


def damping_matrix(spec: ChannelSpec, D: int) -> np.ndarray:
    """F[l, m] = f_r(eta, l - m)."""
    table = np.array([damping_factor(spec, D, d) for d in range(-(D - 1), D)])
    idx = np.arange(D)
    return table[idx[:, None] - idx[None, :] + D - 1]


def apply_closed_form(spec: ChannelSpec, rho: np.ndarray) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {rho.shape}")
    return rho * damping_matrix(spec, rho.shape[0])


def binomial_weights(eta: float, D: int) -> np.ndarray:
    """C(D-1, m) ((1-eta)/2)**m ((1+eta)/2)**(D-1-m), m = 0..D-1."""
    eta = _check_eta(eta)
    p, q = 0.5 * (1 - eta), 0.5 * (1 + eta)
    n = D - 1
    return np.array([math.comb(n, m) * p**m * q ** (n - m) for m in range(D)])


def weyl_kraus_operators(eta: float, D: int) -> list[np.ndarray]:
    """E_m = sqrt(w_m) Z**m with binomial weights w_m."""
    Z = pauli_z(D)
    w = binomial_weights(eta, D)
    ops = []
    Zm = np.eye(D, dtype=complex)
    for m in range(D):
        ops.append(np.sqrt(w[m]) * Zm)
        Zm = Zm @ Z
    return ops


def conventional_kraus_operators(eta: float, D: int, i_max: int = DEFAULT_I_MAX) -> list[np.ndarray]:
    """Truncated E_0..E_{i_max}, E_i = sum_j (j sqrt(-2 ln eta))**i eta**(j**2) / sqrt(i!) |j><j|.

    Entries are evaluated in log space so that large ``i_max`` does not overflow.
    """
    eta = _check_eta(eta)
    if eta == 0.0:
        raise ClosedFormOnlyError(
            "conventional Kraus operators diverge at eta = 0; use apply_closed_form"
        )
    if i_max < 0:
        raise DomainError(f"i_max must be non-negative, got {i_max}")
    c = -2.0 * math.log(eta)
    ops = []
    for i in range(i_max + 1):
        diag = np.zeros(D)
        for j in range(D):
            if j == 0 or c == 0.0:
                diag[j] = 1.0 if i == 0 else 0.0
                continue
            log_entry = i * math.log(j * math.sqrt(c)) + j * j * math.log(eta) - 0.5 * math.lgamma(i + 1)
            diag[j] = math.exp(log_entry)
        ops.append(np.diag(diag).astype(complex))
    return ops


def conventional_kraus_tail_bound(eta: float, D: int, i_max: int) -> float:
    """Largest relative error of entries of the truncated conventional Kraus sum.

    Also bounds the completeness defect |I - sum E_i^dag E_i|_max.
    """
    eta = _check_eta(eta)
    if eta == 0.0:
        raise ClosedFormOnlyError("conventional Kraus operators diverge at eta = 0")
    lam = (D - 1) ** 2 * (-2.0 * math.log(eta))
    if lam == 0.0:
        return 0.0
    # P(Poisson(lam) >= i_max + 1) = regularized lower incomplete gamma
    return float(gammainc(i_max + 1, lam))


def conventional_kraus_i_max(eta: float, D: int, tol: float = 1e-13) -> int:
    """Smallest truncation index whose tail bound is at most ``tol``."""
    lam = (D - 1) ** 2 * (-2.0 * math.log(_check_eta(eta))) if eta > 0 else math.inf
    if math.isinf(lam):
        raise ClosedFormOnlyError("conventional Kraus operators diverge at eta = 0")
    i_max = int(lam)
    while conventional_kraus_tail_bound(eta, D, i_max) > tol:
        i_max += max(1, int(math.sqrt(lam + 1)))
    while i_max > 0 and conventional_kraus_tail_bound(eta, D, i_max - 1) <= tol:
        i_max -= 1
    return i_max


def apply_kraus(kraus_ops: Sequence[np.ndarray], rho: np.ndarray) -> np.ndarray:
    """sum_i E_i rho E_i^dag. An empty list gives the zero matrix."""
    rho = np.asarray(rho, dtype=complex)
    out = np.zeros_like(rho)
    for E in kraus_ops:
        if E.shape != rho.shape:
            raise DimensionMismatchError(f"Kraus operator shape {E.shape} != state shape {rho.shape}")
        out += E @ rho @ E.conj().T
    return out


def kraus_completeness_defect(kraus_ops: Sequence[np.ndarray]) -> float:
    D = kraus_ops[0].shape[0]
    S = sum(E.conj().T @ E for E in kraus_ops)
    return float(np.max(np.abs(np.eye(D) - S)))


def apply_general_weyl(weights: WeylWeights, rho: np.ndarray) -> np.ndarray:
    """sum_{m,n} pi[m,n] (Z**n X**m) rho (Z**n X**m)^dag."""
    rho = np.asarray(rho, dtype=complex)
    D = weights.dim
    if rho.shape != (D, D):
        raise DimensionMismatchError(f"weights are {D}x{D} but state has shape {rho.shape}")
    X = pauli_x(D)
    out = np.zeros_like(rho)
    for m in range(D):
        Xm = np.linalg.matrix_power(X, m)
        for n in range(D):
            p = weights.pi[m, n]
            if p == 0.0:
                continue
            U = generalized_pauli(D, 0, n) @ Xm
            out += p * (U @ rho @ U.conj().T)
    return out


def weyl_phase_damping_weights(eta: float, D: int) -> WeylWeights:
    """The binomial Weyl channel written as general Weyl weights (m = 0 row only)."""
    pi = np.zeros((D, D))
    pi[0, :] = binomial_weights(eta, D)
    return WeylWeights(pi)
