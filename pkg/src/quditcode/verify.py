"""
Self-check suites run by ``quditcode verify``.

Each suite evaluates a batch of identities, tracks the largest residual
seen, and fails if any residual exceeds the tolerance attached to its check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import channels, codes, fidelity, qudit_algebra as qa, recovery
from .channels import ChannelKind, ChannelSpec

KINDS = (ChannelKind.CONVENTIONAL, ChannelKind.WEYL)
ETAS = (0.0, 0.25, 0.5, 0.75, 1.0)


@dataclass
class SuiteResult:
    name: str
    max_residual: float = 0.0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, label: str, residual: float, tol: float) -> None:
        residual = float(residual)
        self.max_residual = max(self.max_residual, residual)
        if not residual <= tol:
            self.failures.append(f"{label}: residual {residual:.3e} > {tol:.0e}")

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name:<10} {status}  max_residual={self.max_residual:.3e}"


def _d(A, B) -> float:
    return qa.max_abs_diff(A, B)


def suite_algebra(seed: int = 0) -> SuiteResult:
    res = SuiteResult("algebra")
    rng = np.random.default_rng(seed)
    for D in range(2, 33):
        X, Z, H = qa.pauli_x(D), qa.pauli_z(D), qa.fourier_matrix(D)
        I = np.eye(D)
        res.check(f"X unitary D={D}", _d(X @ X.conj().T, I), 1e-13)
        res.check(f"Z unitary D={D}", _d(Z @ Z.conj().T, I), 1e-13)
        res.check(f"ZX=wXZ D={D}", _d(Z @ X, qa.root_of_unity(D) * X @ Z), 1e-13)
        res.check(f"H unitary D={D}", _d(H @ H.conj().T, I), 1e-13)
        Xd = H.conj().T @ X @ H
        res.check(f"H^dag X H diagonal D={D}", _d(Xd, np.diag(np.diag(Xd))), 1e-12)
        rho = qa.random_density_matrix(D, rng)
        anc = qa.projector(qa.basis_state(3, 0))
        res.check(f"ptrace(kron) D={D}", _d(qa.partial_trace_ancilla(qa.kron(rho, anc), D, 3), rho), 1e-14)
    return res


def suite_codes(seed: int = 0) -> SuiteResult:
    res = SuiteResult("codes")
    rng = np.random.default_rng(seed)
    for k in range(8):
        D = 4 * k + 2
        H = qa.fourier_matrix(D)
        a0, a1 = codes.amplitude_codewords(k)
        p0, p1 = codes.phase_codewords(k)
        z0, z1 = codes.rotated_codewords(k)
        for name, (u, v) in {"amplitude": (a0, a1), "phase": (p0, p1), "rotated": (z0, z1)}.items():
            G = np.array([[np.vdot(u, u), np.vdot(u, v)], [np.vdot(v, u), np.vdot(v, v)]])
            res.check(f"{name} orthonormal k={k}", _d(G, np.eye(2)), 1e-12)
        res.check(f"phase = H amplitude k={k}", max(_d(H @ a0, p0), _d(H @ a1, p1)), 1e-12)
        Z2 = np.linalg.matrix_power(qa.pauli_z(D), 2)
        X2 = np.linalg.matrix_power(qa.pauli_x(D), 2)
        alpha, beta = qa.random_pure_state(2, rng)
        amp, ph = alpha * a0 + beta * a1, alpha * p0 + beta * p1
        res.check(f"Z^2 stabilizes k={k}", _d(Z2 @ amp, amp), 1e-13)
        res.check(f"X^2 stabilizes k={k}", _d(X2 @ ph, ph), 1e-13)
        w = qa.root_of_unity(D)
        for s in range(1, k + 1):
            for sign in (1, -1):
                Xs = qa.generalized_pauli(D, sign * s, 0)
                res.check(f"syndrome k={k} s={sign * s}", _d(Z2 @ Xs @ amp, w ** (2 * sign * s) * Xs @ amp), 1e-12)
        Zbar, X = codes.logical_phase(k), qa.pauli_x(D)
        res.check(f"Zbar zeta k={k}", max(_d(Zbar @ z0, z0), _d(Zbar @ z1, -z1)), 1e-13)
        res.check(f"X zeta k={k}", max(_d(X @ z0, z1), _d(X @ z1, z0)), 1e-13)
    return res


def suite_channels(seed: int = 0) -> SuiteResult:
    res = SuiteResult("channels")
    rng = np.random.default_rng(seed)
    for D in (2, 6, 10, 18, 30):
        for eta in ETAS:
            rho = qa.random_density_matrix(D, rng)
            for kind in KINDS:
                out = channels.apply_closed_form(ChannelSpec(kind, eta), rho)
                res.check(f"{kind.value} trace D={D} eta={eta}", abs(np.trace(out) - 1), 1e-12)
                res.check(f"{kind.value} hermitian D={D} eta={eta}", _d(out, out.conj().T), 1e-12)
                res.check(f"{kind.value} positive D={D} eta={eta}", max(0.0, -np.linalg.eigvalsh(out).min()), 1e-9)
                diag = np.diag(np.diag(rho))
                res.check(f"{kind.value} diagonal fixed D={D}", _d(channels.apply_closed_form(ChannelSpec(kind, eta), diag), diag), 1e-13)
            closed = channels.apply_closed_form(ChannelSpec(ChannelKind.WEYL, eta), rho)
            res.check(f"Weyl Kraus D={D} eta={eta}", _d(channels.apply_kraus(channels.weyl_kraus_operators(eta, D), rho), closed), 1e-12)
            res.check(
                f"general Weyl D={D} eta={eta}",
                _d(channels.apply_general_weyl(channels.weyl_phase_damping_weights(eta, D), rho), closed),
                1e-12,
            )
    for D in (2, 6, 10):
        for eta in (0.1, 0.3, 0.5, 0.7, 0.9, 1.0):
            rho = qa.random_density_matrix(D, rng)
            closed = channels.apply_closed_form(ChannelSpec(ChannelKind.CONVENTIONAL, eta), rho)
            i_max = channels.conventional_kraus_i_max(eta, D, tol=1e-13)
            trunc = channels.apply_kraus(channels.conventional_kraus_operators(eta, D, i_max), rho)
            res.check(f"conventional Kraus D={D} eta={eta} i_max={i_max}", _d(trunc, closed), 1e-10)
    return res


def suite_kernel() -> SuiteResult:
    res = SuiteResult("kernel")
    for D in (2, 6, 10, 18, 30):
        k = codes.weight_for_dim(D)
        res.check(f"Delta(0) D={D}", abs(recovery.recovery_kernel(0, D) - (2 * k + 1)), 0.0)
        for d in range(-(D - 1), D):
            finite = recovery.recovery_kernel(d, D)
            res.check(f"Delta even symmetry D={D} d={d}", abs(finite - recovery.recovery_kernel(-d, D)), 1e-12)
            if d != 0:
                res.check(f"Delta closed form D={D} d={d}", abs(finite - recovery.recovery_kernel_closed_form(d, D)), 1e-12)
    return res


def suite_recovery(seed: int = 0) -> SuiteResult:
    res = SuiteResult("recovery")
    rng = np.random.default_rng(seed)
    for k in (0, 1, 2):
        D = 4 * k + 2
        for _ in range(10):
            rho = qa.random_density_matrix(D, rng)
            res.check(f"amplitude circuit k={k}", _d(recovery.recovery_circuit(rho, k), recovery.recovery_map_amplitude(rho, k)), 1e-12)
            res.check(f"phase circuit k={k}", _d(recovery.recovery_circuit_phase(rho, k), recovery.recovery_map_phase(rho, k)), 1e-12)
            res.check(
                f"Phi~ two routes k={k}",
                _d(recovery.phase_coefficients(rho, k), recovery.phase_coefficients_via_rotation(rho, k)),
                1e-12,
            )
    for k in range(6):
        D = 4 * k + 2
        for _ in range(5):
            alpha, beta = qa.random_pure_state(2, rng)
            a0, a1 = codes.amplitude_codewords(k)
            p0, p1 = codes.phase_codewords(k)
            amp, ph = alpha * a0 + beta * a1, alpha * p0 + beta * p1
            for s in range(-k, k + 1):
                Xs, Zs = qa.generalized_pauli(D, s, 0), qa.generalized_pauli(D, 0, s)
                out_a = recovery.recovery_map_amplitude(qa.projector(Xs @ amp), k)
                out_p = recovery.recovery_map_phase(qa.projector(Zs @ ph), k)
                res.check(f"X^{s} corrected k={k}", abs(1 - fidelity.state_fidelity(amp, out_a)), 1e-12)
                res.check(f"Z^{s} corrected k={k}", abs(1 - fidelity.state_fidelity(ph, out_p)), 1e-12)
    for k in range(4):
        for u in (0, 1):
            for kind in KINDS:
                for eta in (0.0, 0.5, 1.0):
                    spec = ChannelSpec(kind, eta)
                    target = qa.projector(codes.rotated_codewords(k)[u])
                    out = recovery.recovery_map_phase(channels.apply_closed_form(spec, target), k)
                    res.check(f"zeta_{u} restored k={k} {kind.value} eta={eta}", _d(out, target), 1e-11)
    return res


def suite_fidelity(seed: int = 0, quadrature_order: tuple[int, int] = fidelity.DEFAULT_QUADRATURE) -> SuiteResult:
    res = SuiteResult("fidelity")
    rng = np.random.default_rng(seed)
    for _ in range(50):
        k = int(rng.integers(0, 4))
        spec = ChannelSpec(KINDS[int(rng.integers(0, 2))], float(rng.uniform()))
        theta, phi = float(rng.uniform(0, np.pi)), float(rng.uniform(0, 2 * np.pi))
        res.check(
            f"F_damp closed/pipeline k={k}",
            abs(fidelity.f_damp_state(k, spec, theta, phi) - fidelity.f_damp_state_pipeline(k, spec, theta, phi)),
            1e-10,
        )
        res.check(
            f"F_rec closed/pipeline k={k}",
            abs(fidelity.f_rec_state(k, spec, theta, phi) - fidelity.f_rec_state_pipeline(k, spec, theta, phi)),
            1e-10,
        )
    for kind in KINDS:
        for D in (2, 6, 18):
            k = codes.weight_for_dim(D)
            for eta in (0.25, 0.75):
                spec = ChannelSpec(kind, eta)
                qd = fidelity.bloch_average(lambda t, p: fidelity.f_damp_state(k, spec, t, p), quadrature_order)
                qr = fidelity.bloch_average(lambda t, p: fidelity.f_rec_state(k, spec, t, p), quadrature_order)
                res.check(f"F_damp quadrature {kind.value} D={D} eta={eta}", abs(qd - fidelity.f_damp_avg(D, spec)), 1e-6)
                res.check(f"F_rec quadrature {kind.value} D={D} eta={eta}", abs(qr - fidelity.f_rec_avg(D, spec)), 1e-6)
        for eta in np.linspace(0, 1, 11):
            spec = ChannelSpec(kind, float(eta))
            ref = (2 + eta) / 3
            res.check(f"D=2 F_damp {kind.value} eta={eta:.1f}", abs(fidelity.f_damp_avg(2, spec) - ref), 1e-12)
            res.check(f"D=2 F_rec {kind.value} eta={eta:.1f}", abs(fidelity.f_rec_avg(2, spec) - ref), 1e-12)
    for n in (1, 3, 5):
        res.check(f"repetition n={n} eta=0", abs(fidelity.repetition_fidelity(n, 0.0) - 2 / 3), 1e-12)
        res.check(f"repetition n={n} eta=1", abs(fidelity.repetition_fidelity(n, 1.0) - 1), 1e-12)
    return res


SUITES: dict[str, Callable[[], SuiteResult]] = {
    "algebra": suite_algebra,
    "codes": suite_codes,
    "channels": suite_channels,
    "kernel": suite_kernel,
    "recovery": suite_recovery,
    "fidelity": suite_fidelity,
}


def run_suites(names=None) -> list[SuiteResult]:
    names = list(SUITES) if not names else list(names)
    return [SUITES[n]() for n in names]
