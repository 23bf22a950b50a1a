"""
Input-output fidelities of the phase code under phase damping.

Every quantity has two routes: a closed-form sum over matrix indices
(fast, used by sweeps) and an explicit pipeline
encode -> channel -> [recovery] -> <psi|rho|psi> that the closed forms are
checked against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .channels import ChannelKind, ChannelSpec, apply_closed_form, damping_matrix
from .codes import (
    RepetitionCodeSpec,
    dim_for_weight,
    encode_logical,
    omega_coefficients,
    weight_for_dim,
)
from .errors import DimensionMismatchError, DomainError
from .qudit_algebra import projector
from .recovery import recovery_kernel_table, recovery_map_phase

DEFAULT_QUADRATURE = (8, 16)
IMAG_TOL = 1e-10


@dataclass(frozen=True)
class BlochAngles:
    theta: float
    phi: float

    def __post_init__(self):
        if not 0.0 <= self.theta <= math.pi:
            raise DomainError(f"theta must lie in [0, pi], got {self.theta!r}")
        if not 0.0 <= self.phi < 2 * math.pi:
            raise DomainError(f"phi must lie in [0, 2pi), got {self.phi!r}")


@dataclass(frozen=True)
class SweepRecord:
    channel_kind: ChannelKind
    code_label: str
    eta: float
    f_damp: float
    f_rec: float

    def __post_init__(self):
        for name in ("f_damp", "f_rec"):
            v = getattr(self, name)
            if not math.isnan(v) and not -1e-10 <= v <= 1 + 1e-10:
                raise ValueError(f"{name} = {v} outside [0, 1]")


def _real(z: complex, tol: float = IMAG_TOL) -> float:
    if abs(z.imag) > tol:
        raise ArithmeticError(f"expected a real value, imaginary part is {z.imag:.3e}")
    return float(z.real)


def state_fidelity(psi: np.ndarray, rho: np.ndarray) -> float:
    """<psi|rho|psi>."""
    psi = np.asarray(psi, dtype=complex)
    if rho.shape != (psi.shape[0], psi.shape[0]):
        raise DimensionMismatchError(f"state of length {psi.shape[0]} vs operator {rho.shape}")
    return _real(np.vdot(psi, rho @ psi), tol=1e-12)


def _parity_weight(D: int) -> np.ndarray:
    """3 + (-1)**(l - m)."""
    idx = np.arange(D)
    return 3.0 + (-1.0) ** (idx[:, None] + idx[None, :])


# state-dependent fidelities

def f_damp_state(k: int, spec: ChannelSpec, theta: float, phi: float) -> float:
    """(1/D^2) sum_lm |Omega_lm|^2 f_r(eta, l-m)."""
    D = dim_for_weight(k)
    Om = omega_coefficients(theta, phi, D)
    return _real(np.sum(np.abs(Om) ** 2 * damping_matrix(spec, D)) / D**2)


def f_damp_state_pipeline(k: int, spec: ChannelSpec, theta: float, phi: float) -> float:
    psi = encode_logical(k, theta, phi)
    return state_fidelity(psi, apply_closed_form(spec, projector(psi)))


def f_rec_state(k: int, spec: ChannelSpec, theta: float, phi: float) -> float:
    """Closed form: sum over Omega f Delta times the projection bracket onto |theta, phi>."""
    D = dim_for_weight(k)
    Om = omega_coefficients(theta, phi, D)
    F = damping_matrix(spec, D)
    K = recovery_kernel_table(D).matrix()
    sl = (-1.0) ** np.arange(D)
    c2, s2 = math.cos(theta / 2) ** 2, math.sin(theta / 2) ** 2
    half_sin = math.sin(theta) / 2
    bracket = (
        c2
        + half_sin * np.exp(1j * phi) * sl[None, :]
        + half_sin * np.exp(-1j * phi) * sl[:, None]
        + s2 * np.outer(sl, sl)
    )
    return _real(np.sum(Om * F * K * bracket) / D**2)


def f_rec_state_pipeline(k: int, spec: ChannelSpec, theta: float, phi: float) -> float:
    psi = encode_logical(k, theta, phi)
    out = recovery_map_phase(apply_closed_form(spec, projector(psi)), k)
    return state_fidelity(psi, out)


# Bloch-averaged fidelities

def f_damp_avg(D: int, spec: ChannelSpec) -> float:
    """(1 / 3D^2) sum_lm [3 + (-1)^(l-m)] f_r(eta, l-m)."""
    return _real(np.sum(_parity_weight(D) * damping_matrix(spec, D)) / (3 * D**2))


def f_rec_avg(D: int, spec: ChannelSpec) -> float:
    """As ``f_damp_avg`` with the recovery kernel Delta(l-m, D) in the summand."""
    weight_for_dim(D)
    K = recovery_kernel_table(D).matrix()
    return _real(np.sum(_parity_weight(D) * damping_matrix(spec, D) * K) / (3 * D**2))


def bloch_average(
    f: Callable[[float, float], float], quadrature_order: tuple[int, int] = DEFAULT_QUADRATURE
) -> float:
    """Uniform average of f(theta, phi) over the sphere.

    Gauss-Legendre nodes in cos(theta), equally spaced phi (trapezoid on a
    periodic integrand).
    """
    n_theta, n_phi = quadrature_order
    x, w = np.polynomial.legendre.leggauss(n_theta)
    thetas = np.arccos(x)
    phis = 2 * np.pi * np.arange(n_phi) / n_phi
    total = 0.0
    for th, wt in zip(thetas, w):
        total += wt * sum(f(float(th), float(ph)) for ph in phis) / n_phi
    return total / 2


# repetition-code baseline

def repetition_fidelity(n: int, eta: float) -> float:
    """Average fidelity of the n-qubit majority-vote code; same for both channel kinds.

    Configurations with at most (n-1)/2 flips are corrected; the rest
    contribute the 1/3 average fidelity of a logical flip.
    """
    RepetitionCodeSpec(n)
    if not 0.0 <= eta <= 1.0:
        raise DomainError(f"eta must lie in [0, 1], got {eta!r}")
    p_ok, p_flip = (1 + eta) / 2, (1 - eta) / 2
    terms = [math.comb(n, j) * p_ok ** (n - j) * p_flip**j for j in range(n + 1)]
    t = (n - 1) // 2
    return math.fsum(terms[: t + 1]) + math.fsum(terms[t + 1 :]) / 3


def repetition_n_for_dim(D: int) -> int:
    """Smallest odd n with 2**n >= D."""
    if D < 2:
        raise DomainError(f"dimension must be >= 2, got {D}")
    n = (int(D) - 1).bit_length()
    return n if n % 2 else n + 1


# sweeps

def qudit_label(D: int) -> str:
    return f"qudit-D{D}"


def _label_key(label: str):
    family, _, number = label.rpartition("-")
    return (family, int(number.lstrip("Dn")))


def record_sort_key(r: SweepRecord):
    return (r.channel_kind.value, _label_key(r.code_label), r.eta)


def default_eta_grid(steps: int = 101) -> np.ndarray:
    return np.linspace(0.0, 1.0, steps)


def run_sweep(
    kinds: Iterable[ChannelKind | str],
    dims: Sequence[int],
    etas: Sequence[float],
    include_repetition: bool = True,
    include_damped: bool = True,
) -> list[SweepRecord]:
    """One record per (kind, D, eta), plus rep-n rows when requested.

    Repetition rows report the unencoded value repetition_fidelity(1, eta)
    as f_damp. With ``include_damped=False`` f_damp is NaN throughout.
    """
    kinds = [ChannelKind(k) for k in kinds]
    for D in dims:
        weight_for_dim(D)
    etas = [float(e) for e in etas]
    for e in etas:
        if not 0.0 <= e <= 1.0:
            raise DomainError(f"eta must lie in [0, 1], got {e!r}")
    rep_ns = sorted({repetition_n_for_dim(D) for D in dims}) if include_repetition else []

    records = []
    for kind in kinds:
        for eta in etas:
            spec = ChannelSpec(kind, eta)
            for D in dims:
                f_d = f_damp_avg(D, spec) if include_damped else math.nan
                records.append(SweepRecord(kind, qudit_label(D), eta, f_d, f_rec_avg(D, spec)))
            for n in rep_ns:
                f_d = repetition_fidelity(1, eta) if include_damped else math.nan
                records.append(
                    SweepRecord(kind, RepetitionCodeSpec(n).label, eta, f_d, repetition_fidelity(n, eta))
                )
    records.sort(key=record_sort_key)
    return records
