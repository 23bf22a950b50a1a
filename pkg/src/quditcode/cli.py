"""
Command-line front end.

    quditcode sweep  [--channel both] [--dims 2,6,18,30] [--eta 0:1:101] [--out -]
    quditcode point  --channel conventional --dim 6 --eta 0.5 --theta 1.57 --phi 0
    quditcode verify [--suite recovery]

Exit codes: 0 success, 1 verification failure, 2 usage, 3 I/O, 4 empty result.
"""

from __future__ import annotations

import argparse
import functools
import sys
from dataclasses import dataclass
from typing import Sequence, TextIO

import numpy as np

from . import fidelity, verify
from .channels import ChannelKind, ChannelSpec
from .codes import weight_for_dim
from .errors import DomainError, InvalidDimensionError
from .fidelity import SweepRecord, run_sweep

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_IO, EXIT_EMPTY = 0, 1, 2, 3, 4
STDOUT = "-"
CSV_HEADER = "channel,code,eta,f_damp,f_rec"


class EmptyResultError(ValueError):
    pass


@dataclass(frozen=True)
class CliConfig:
    command: str
    channel: str = "both"
    dims: tuple[int, ...] = (2, 6, 18, 30)
    eta_min: float = 0.0
    eta_max: float = 1.0
    eta_steps: int = 101
    include_repetition: bool = True
    include_damped: bool = True
    output_path: str = STDOUT
    quadrature_orders: tuple[int, int] = fidelity.DEFAULT_QUADRATURE
    theta: float = 0.0
    phi: float = 0.0
    suites: tuple[str, ...] = ()

    @property
    def kinds(self) -> list[ChannelKind]:
        if self.channel == "both":
            return [ChannelKind.CONVENTIONAL, ChannelKind.WEYL]
        return [ChannelKind(self.channel)]

    def eta_grid(self) -> np.ndarray:
        return np.linspace(self.eta_min, self.eta_max, self.eta_steps)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _dims(text: str) -> tuple[int, ...]:
    try:
        dims = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of integers: {text!r}")
    if not dims:
        raise argparse.ArgumentTypeError("at least one dimension is required")
    for D in dims:
        try:
            weight_for_dim(D)
        except InvalidDimensionError:
            raise argparse.ArgumentTypeError(f"dimension must be 2 or 4k+2, got {D}")
    return dims


def _eta_grid(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    try:
        if len(parts) == 1:
            lo = hi = float(parts[0])
            steps = 1
        elif len(parts) == 3:
            lo, hi, steps = float(parts[0]), float(parts[1]), int(parts[2])
        else:
            raise ValueError
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected min:max:count or a single value, got {text!r}")
    if not (0.0 <= lo <= hi <= 1.0):
        raise argparse.ArgumentTypeError(f"need 0 <= min <= max <= 1, got {text!r}")
    if steps < 1 or (steps == 1 and lo != hi):
        raise argparse.ArgumentTypeError(f"count must be >= 1 (and 1 only when min == max), got {text!r}")
    return lo, hi, steps


def _eta_value(text: str) -> float:
    v = float(text)
    if not 0.0 <= v <= 1.0:
        raise argparse.ArgumentTypeError(f"eta must lie in [0, 1], got {text}")
    return v


def _orders(text: str) -> tuple[int, int]:
    try:
        a, b = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected two integers N_THETA,N_PHI, got {text!r}")
    if a < 1 or b < 1:
        raise argparse.ArgumentTypeError("quadrature orders must be positive")
    return a, b


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="quditcode", description="Minimal qudit phase code under phase damping.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    channel = dict(choices=["conventional", "weyl", "both"], default="both")
    quad = dict(type=_orders, default=fidelity.DEFAULT_QUADRATURE, metavar="N_THETA,N_PHI",
                help="Bloch quadrature orders (default 8,16)")

    s = sub.add_parser("sweep", help="averaged fidelities versus eta, as CSV")
    s.add_argument("--channel", **channel)
    s.add_argument("--dims", type=_dims, default=(2, 6, 18, 30), help="comma-separated, each 2 or 4k+2")
    s.add_argument("--eta", type=_eta_grid, default=(0.0, 1.0, 101), metavar="MIN:MAX:COUNT")
    s.add_argument("--out", default=STDOUT, help="output path, '-' for stdout")
    s.add_argument("--no-repetition", dest="include_repetition", action="store_false")
    s.add_argument("--no-damped", dest="include_damped", action="store_false",
                   help="skip the unrecovered fidelity (f_damp written as nan)")
    s.add_argument("--quadrature", **quad)

    pt = sub.add_parser("point", help="state-dependent and averaged fidelities at one point")
    pt.add_argument("--channel", **channel)
    pt.add_argument("--dim", type=_dims, required=True)
    pt.add_argument("--eta", type=_eta_value, required=True)
    pt.add_argument("--theta", type=float, default=0.0)
    pt.add_argument("--phi", type=float, default=0.0)
    pt.add_argument("--out", default=STDOUT)
    pt.add_argument("--quadrature", **quad)

    v = sub.add_parser("verify", help="run the built-in invariant suites")
    v.add_argument("--suite", action="append", choices=list(verify.SUITES), default=[])
    v.add_argument("--quadrature", **quad)
    return p


def parse_args(argv: Sequence[str] | None = None) -> CliConfig:
    parser = build_parser()
    ns = parser.parse_args(argv)
    if ns.command == "sweep":
        lo, hi, steps = ns.eta
        return CliConfig(
            command="sweep", channel=ns.channel, dims=ns.dims, eta_min=lo, eta_max=hi, eta_steps=steps,
            include_repetition=ns.include_repetition, include_damped=ns.include_damped,
            output_path=ns.out, quadrature_orders=ns.quadrature,
        )
    if ns.command == "point":
        if len(ns.dim) != 1:
            parser.error("argument --dim: expects a single dimension")
        if not -np.pi <= ns.theta <= np.pi:
            parser.error(f"argument --theta: must lie in [-pi, pi], got {ns.theta}")
        if not 0.0 <= ns.phi < 2 * np.pi:
            parser.error(f"argument --phi: must lie in [0, 2pi), got {ns.phi}")
        return CliConfig(
            command="point", channel=ns.channel, dims=ns.dim, eta_min=ns.eta, eta_max=ns.eta, eta_steps=1,
            output_path=ns.out, quadrature_orders=ns.quadrature, theta=ns.theta, phi=ns.phi,
        )
    return CliConfig(command="verify", suites=tuple(ns.suite), quadrature_orders=ns.quadrature)


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def format_csv(records: Sequence[SweepRecord]) -> str:
    if not records:
        raise EmptyResultError("nothing to emit")
    rows = [CSV_HEADER]
    for r in sorted(records, key=fidelity.record_sort_key):
        rows.append(",".join([r.channel_kind.value, r.code_label, _fmt(r.eta), _fmt(r.f_damp), _fmt(r.f_rec)]))
    return "\n".join(rows) + "\n"


def _write(text: str, destination: str | TextIO) -> None:
    if destination == STDOUT:
        sys.stdout.write(text)
    elif hasattr(destination, "write"):
        destination.write(text)
    else:
        with open(destination, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def emit_csv(records: Sequence[SweepRecord], destination: str | TextIO = STDOUT) -> None:
    """Write records as ``channel,code,eta,f_damp,f_rec`` with 12 significant digits."""
    _write(format_csv(records), destination)


def run_point(cfg: CliConfig) -> str:
    D = cfg.dims[0]
    k = weight_for_dim(D)
    eta = cfg.eta_min
    lines = ["channel,dim,eta,theta,phi,f_damp_state,f_rec_state,f_damp_avg,f_rec_avg"]
    for kind in cfg.kinds:
        spec = ChannelSpec(kind, eta)
        vals = [
            fidelity.f_damp_state(k, spec, cfg.theta, cfg.phi),
            fidelity.f_rec_state(k, spec, cfg.theta, cfg.phi),
            fidelity.f_damp_avg(D, spec),
            fidelity.f_rec_avg(D, spec),
        ]
        lines.append(",".join([kind.value, str(D), _fmt(eta), _fmt(cfg.theta), _fmt(cfg.phi), *map(_fmt, vals)]))
    return "\n".join(lines) + "\n"


def run_verify(suites: Sequence[str] = (), quadrature_orders=fidelity.DEFAULT_QUADRATURE, stream: TextIO | None = None) -> int:
    stream = stream or sys.stdout
    names = list(suites) or list(verify.SUITES)
    ok = True
    for name in names:
        fn = verify.SUITES[name]
        if name == "fidelity":
            fn = functools.partial(fn, quadrature_order=tuple(quadrature_orders))
        result = fn()
        print(result.line(), file=stream)
        for msg in result.failures[:5]:
            print(f"    {msg}", file=stream)
        ok &= result.passed
    return EXIT_OK if ok else EXIT_VERIFY


def main(argv: Sequence[str] | None = None) -> int:
    cfg = parse_args(argv)
    try:
        if cfg.command == "verify":
            return run_verify(cfg.suites, cfg.quadrature_orders)
        if cfg.command == "point":
            _write(run_point(cfg), cfg.output_path)
            return EXIT_OK
        records = run_sweep(
            cfg.kinds, cfg.dims, cfg.eta_grid(),
            include_repetition=cfg.include_repetition, include_damped=cfg.include_damped,
        )
        emit_csv(records, cfg.output_path)
    except EmptyResultError as exc:
        print(f"quditcode: {exc}", file=sys.stderr)
        return EXIT_EMPTY
    except OSError as exc:
        print(f"quditcode: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    except DomainError as exc:
        print(f"quditcode: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
