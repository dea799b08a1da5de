"""Command-line interface: point evaluation, grid exports, parameter
sweeps, closed-form verification, and figure-data generation.

All tabular output uses one schema (theta,phi,nu,r,k,s,W), 12
significant digits, LF newlines.  Exit codes: 0 success, 2 argument
error, 3 I/O error, 1 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from .errors import (
    DimensionError,
    IndexOutOfRange,
    MixingOutOfRange,
    ROutOfRange,
    SpinWignerError,
)
from .quasiprob import (
    ClosedFormVariant,
    accelerated_ghz,
    compare_closed_form,
    evaluate,
    grid_values,
)
from .rindler import R_MAX, coefficient_report
from .su2kernel import DistributionKind, SphericalPoint

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_IO = 3

CSV_HEADER = "theta,phi,nu,r,k,s,W"
_KIND_BY_LETTER = {
    "q": DistributionKind.Q,
    "w": DistributionKind.WIGNER,
    "p": DistributionKind.P,
}
_BOUNDARY_SLACK = 1e-6

SURFACE_THETA_STEPS = 91
SURFACE_PHI_STEPS = 181
MAP_STEPS = 51
R_CURVE_STEPS = 50


class UsageError(Exception):
    """Invalid argument values detected after parsing."""


def _fmt(value) -> str:
    return f"{value:.12g}"


def _clamp(value: float, lo: float, hi: float, name: str) -> float:
    """Snap values within a hair of the boundary onto it; reject the rest."""
    if lo - _BOUNDARY_SLACK <= value < lo:
        return lo
    if hi < value <= hi + _BOUNDARY_SLACK:
        return hi
    if not (lo <= value <= hi):
        raise UsageError(f"{name}={value} outside [{lo:g}, {hi:g}]")
    return value


def _parse_accelerated(text: str) -> tuple[int, ...]:
    """Count form ("2" -> qubits 0,1) or explicit comma-separated indices."""
    text = text.strip()
    try:
        if "," in text:
            indices = tuple(int(t) for t in text.split(",") if t.strip() != "")
        else:
            count = int(text)
            if not (0 <= count <= 3):
                raise UsageError(f"accelerated count {count} outside 0..3")
            return tuple(range(count))
    except ValueError as exc:
        raise UsageError(f"cannot parse --accelerated {text!r}") from exc
    if len(set(indices)) != len(indices):
        raise UsageError(f"duplicate qubit indices in --accelerated {text!r}")
    if any(not (0 <= q <= 2) for q in indices):
        raise UsageError(f"qubit indices in --accelerated {text!r} outside 0..2")
    return indices


def _csv_text(rows) -> str:
    lines = [CSV_HEADER]
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _write_text(path: str | Path, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        _write_text(args.output, text)
    else:
        sys.stdout.write(text)


def _state(nu: float, r: float, accelerated: tuple[int, ...]):
    from .rindler import AccelerationConfig, accelerate
    from .states import GhzWernerParams, ghz_werner

    rho = ghz_werner(GhzWernerParams(nu=nu))
    if accelerated:
        rho = accelerate(rho, AccelerationConfig(r=r, accelerated=accelerated))
    return rho


def _grid_rows(nu, r, accelerated, kind, thetas, phis):
    rho = _state(nu, r, accelerated)
    values = grid_values(rho, kind, thetas, phis)
    k = len(accelerated)
    s = int(kind)
    rows = []
    for i, theta in enumerate(thetas):
        for j, phi in enumerate(phis):
            rows.append((theta, phi, nu, r, k, s, values[i, j]))
    return rows


def _cmd_eval(args) -> int:
    accelerated = _parse_accelerated(args.accelerated)
    point = SphericalPoint(args.theta, args.phi)
    rho = _state(args.nu, args.r, accelerated)
    sample = evaluate(rho, args.kind, (point,) * rho.n_qubits)
    sys.stdout.write(_fmt(sample.value) + "\n")
    return EXIT_OK


def _cmd_grid(args) -> int:
    accelerated = _parse_accelerated(args.accelerated)
    if args.theta_steps < 2 or args.phi_steps < 2:
        raise UsageError("theta-steps and phi-steps must both be at least 2")
    thetas = np.linspace(0.0, math.pi, args.theta_steps)
    phis = np.arange(args.phi_steps) * (2.0 * math.pi / args.phi_steps)
    rows = _grid_rows(args.nu, args.r, accelerated, args.kind, thetas, phis)
    if args.format == "csv":
        _emit(args, _csv_text(rows))
    else:
        meta = {
            "command": "grid",
            "nu": args.nu,
            "r": args.r,
            "accelerated": list(accelerated),
            "k": len(accelerated),
            "s": int(args.kind),
            "theta_steps": args.theta_steps,
            "phi_steps": args.phi_steps,
            "columns": CSV_HEADER.split(","),
        }
        payload = {"meta": meta, "samples": [list(row) for row in rows]}
        _emit(args, json.dumps(payload, sort_keys=True, indent=2) + "\n")
    return EXIT_OK


def _cmd_scan_r(args) -> int:
    accelerated = _parse_accelerated(args.accelerated)
    if not accelerated:
        raise UsageError("scan-r needs at least one accelerated qubit")
    if args.r_steps < 2:
        raise UsageError("r-steps must be at least 2")
    point = SphericalPoint(args.theta, args.phi)
    k = len(accelerated)
    s = int(args.kind)
    rows = []
    for r in np.linspace(0.0, R_MAX, args.r_steps):
        rho = _state(args.nu, float(r), accelerated)
        sample = evaluate(rho, args.kind, (point,) * rho.n_qubits)
        rows.append((args.theta, args.phi, args.nu, float(r), k, s, sample.value))
    _emit_rows(args, rows, command="scan-r")
    return EXIT_OK


def _cmd_scan_nu(args) -> int:
    accelerated = _parse_accelerated(args.accelerated)
    if args.nu_steps < 2:
        raise UsageError("nu-steps must be at least 2")
    point = SphericalPoint(args.theta, args.phi)
    k = len(accelerated)
    s = int(args.kind)
    rows = []
    for nu in np.linspace(0.0, 1.0, args.nu_steps):
        rho = _state(float(nu), args.r, accelerated)
        sample = evaluate(rho, args.kind, (point,) * rho.n_qubits)
        rows.append((args.theta, args.phi, float(nu), args.r, k, s, sample.value))
    _emit_rows(args, rows, command="scan-nu")
    return EXIT_OK


def _emit_rows(args, rows, command: str) -> None:
    if args.format == "csv":
        _emit(args, _csv_text(rows))
    else:
        meta = {"command": command, "columns": CSV_HEADER.split(",")}
        payload = {"meta": meta, "samples": [list(row) for row in rows]}
        _emit(args, json.dumps(payload, sort_keys=True, indent=2) + "\n")


_VERIFY_VARIANT_CASES = [
    (ClosedFormVariant.GHZ, 0.0, 0.0),
    (ClosedFormVariant.GHZ, 0.3, 0.0),
    (ClosedFormVariant.GHZ, 1.0, 0.0),
    (ClosedFormVariant.ACC1, 0.0, 0.0),
    (ClosedFormVariant.ACC1, 0.3, 0.3),
    (ClosedFormVariant.ACC1, 0.7, 0.6),
    (ClosedFormVariant.ACC1, 1.0, R_MAX),
    (ClosedFormVariant.ACC2, 1.0, 0.0),
    (ClosedFormVariant.ACC2, 0.3, 0.6),
    (ClosedFormVariant.ACC2, 1.0, 0.6),
    (ClosedFormVariant.ACC3, 1.0, 0.0),
    (ClosedFormVariant.ACC3, 0.3, 0.6),
    (ClosedFormVariant.ACC3, 1.0, 0.6),
]

_VERIFY_COEFFICIENT_CASES = [
    (variant, nu, r)
    for variant in ("A", "B", "C")
    for (nu, r) in ((0.3, 0.6), (1.0, 0.6), (1.0, 0.0))
]


def _cmd_verify(args) -> int:
    if args.theta_steps < 2 or args.phi_steps < 2:
        raise UsageError("theta-steps and phi-steps must both be at least 2")
    variants = []
    for variant, nu, r in _VERIFY_VARIANT_CASES:
        comparison = compare_closed_form(variant, nu, r, args.theta_steps, args.phi_steps)
        variants.append(
            {
                "tag": variant.value,
                "nu": nu,
                "r": r,
                "max_abs_diff": comparison.max_abs_diff,
                "argmax": {
                    "theta": comparison.argmax.theta,
                    "phi": comparison.argmax.phi,
                },
                "status": comparison.status,
            }
        )
    coefficients = []
    for variant, nu, r in _VERIFY_COEFFICIENT_CASES:
        report = coefficient_report(variant, nu, r)
        coefficients.append(
            {
                "variant": variant,
                "nu": nu,
                "r": r,
                "max_abs_diff": report.max_abs_diff,
                "printed_trace": report.printed_diagonal_sum,
                "status": report.status,
            }
        )
    payload = {"variants": variants, "coefficients": coefficients}
    _emit(args, json.dumps(payload, sort_keys=True, indent=2) + "\n")
    return EXIT_OK


def _figure_specs():
    """(filename, row generator) pairs for the canonical figure exports."""
    thetas = np.linspace(0.0, math.pi, SURFACE_THETA_STEPS)
    phis = np.arange(SURFACE_PHI_STEPS) * (2.0 * math.pi / SURFACE_PHI_STEPS)
    nus = np.linspace(0.0, 1.0, MAP_STEPS)
    rs = np.linspace(0.0, R_MAX, MAP_STEPS)
    r_curve = np.linspace(0.0, R_MAX, R_CURVE_STEPS)
    probe_theta, probe_phi = math.pi / 2.0, math.pi
    wigner = DistributionKind.WIGNER

    def surface(nu, r, k):
        return _grid_rows(nu, r, tuple(range(k)), wigner, thetas, phis)

    def nu_theta_map():
        rows = []
        for nu in nus:
            rho = _state(float(nu), 0.0, ())
            values = grid_values(rho, wigner, thetas, np.array([probe_phi]))
            for i, theta in enumerate(thetas):
                rows.append((float(theta), probe_phi, float(nu), 0.0, 0, 0, values[i, 0]))
        return rows

    def nu_r_map(k):
        accelerated = tuple(range(k))
        point = SphericalPoint(probe_theta, probe_phi)
        rows = []
        for nu in nus:
            for r in rs:
                rho = _state(float(nu), float(r), accelerated)
                sample = evaluate(rho, wigner, (point,) * rho.n_qubits)
                rows.append((probe_theta, probe_phi, float(nu), float(r), k, 0, sample.value))
        return rows

    def r_curves(nu):
        point = SphericalPoint(probe_theta, probe_phi)
        rows = []
        for k in (1, 2, 3):
            accelerated = tuple(range(k))
            for r in r_curve:
                rho = _state(nu, float(r), accelerated)
                sample = evaluate(rho, wigner, (point,) * rho.n_qubits)
                rows.append((probe_theta, probe_phi, nu, float(r), k, 0, sample.value))
        return rows

    specs = [
        ("fig1a.csv", lambda: surface(1.0, 0.0, 0)),
        ("fig1b.csv", lambda: surface(0.3, 0.0, 0)),
        ("fig1c.csv", nu_theta_map),
        ("fig2a.csv", lambda: surface(1.0, 0.6, 1)),
        ("fig2b.csv", lambda: surface(0.3, 0.6, 1)),
        ("fig2c.csv", lambda: nu_r_map(1)),
        ("fig3a.csv", lambda: surface(1.0, 0.6, 2)),
        ("fig3b.csv", lambda: surface(0.3, 0.6, 2)),
        ("fig3c.csv", lambda: nu_r_map(2)),
        ("fig4a.csv", lambda: surface(1.0, 0.6, 3)),
        ("fig4b.csv", lambda: surface(0.3, 0.6, 3)),
        ("fig4c.csv", lambda: nu_r_map(3)),
        ("fig5a.csv", lambda: r_curves(1.0)),
        ("fig5b.csv", lambda: r_curves(0.7)),
        ("fig5c.csv", lambda: r_curves(0.5)),
        ("fig5d.csv", lambda: r_curves(0.2)),
    ]
    return specs


def _cmd_figures(args) -> int:
    out_dir = Path(args.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, build in _figure_specs():
        path = out_dir / name
        _write_text(path, _csv_text(build()))
        sys.stdout.write(f"wrote {path}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinwigner",
        description="Quasi-probability distributions of three-qubit GHZ-Werner "
        "states on the SU(2) sphere, with acceleration-induced decoherence.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, point_defaults=(None, None)):
        p.add_argument("--nu", type=float, required=True, help="GHZ weight in [0, 1]")
        p.add_argument("--r", type=float, default=0.0, help="acceleration parameter in [0, pi/4]")
        p.add_argument(
            "--accelerated",
            default="0",
            help="count (1/2/3 = first k qubits) or comma-separated indices",
        )
        p.add_argument("--s", choices=("q", "w", "p"), default="w", help="distribution (default w)")
        theta_default, phi_default = point_defaults
        p.add_argument("--theta", type=float, default=theta_default, required=theta_default is None)
        p.add_argument("--phi", type=float, default=phi_default, required=phi_default is None)

    p_eval = sub.add_parser("eval", help="print one distribution value")
    add_common(p_eval)
    p_eval.set_defaults(func=_cmd_eval)

    p_grid = sub.add_parser("grid", help="equal-angle grid over the sphere")
    add_common(p_grid, point_defaults=(0.0, 0.0))
    p_grid.add_argument("--theta-steps", type=int, default=SURFACE_THETA_STEPS)
    p_grid.add_argument("--phi-steps", type=int, default=SURFACE_PHI_STEPS)
    p_grid.add_argument("--format", choices=("csv", "json"), default="csv")
    p_grid.add_argument("-o", "--output", help="output file (stdout if omitted)")
    p_grid.set_defaults(func=_cmd_grid)

    p_scan_r = sub.add_parser("scan-r", help="sweep r at a fixed probe point")
    add_common(p_scan_r, point_defaults=(math.pi / 2.0, math.pi))
    p_scan_r.add_argument("--r-steps", type=int, default=R_CURVE_STEPS)
    p_scan_r.add_argument("--format", choices=("csv", "json"), default="csv")
    p_scan_r.add_argument("-o", "--output")
    p_scan_r.set_defaults(func=_cmd_scan_r)

    p_scan_nu = sub.add_parser("scan-nu", help="sweep nu at a fixed probe point")
    add_common(p_scan_nu, point_defaults=(math.pi / 2.0, math.pi))
    p_scan_nu.add_argument("--nu-steps", type=int, default=MAP_STEPS)
    p_scan_nu.add_argument("--format", choices=("csv", "json"), default="csv")
    p_scan_nu.add_argument("-o", "--output")
    p_scan_nu.set_defaults(func=_cmd_scan_nu)

    p_verify = sub.add_parser(
        "verify", help="compare closed forms and coefficient tables to the numeric pipeline"
    )
    p_verify.add_argument("--theta-steps", type=int, default=50)
    p_verify.add_argument("--phi-steps", type=int, default=50)
    p_verify.add_argument("-o", "--output")
    p_verify.set_defaults(func=_cmd_verify)

    p_fig = sub.add_parser("figures", help="emit the canonical figure-data CSV files")
    p_fig.add_argument("--output-dir", default="figures")
    p_fig.set_defaults(func=_cmd_figures)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if hasattr(args, "nu"):
            args.nu = _clamp(args.nu, 0.0, 1.0, "nu")
        if hasattr(args, "r"):
            args.r = _clamp(args.r, 0.0, R_MAX, "r")
        if hasattr(args, "s"):
            args.kind = _KIND_BY_LETTER[args.s]
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (MixingOutOfRange, ROutOfRange, IndexOutOfRange, DimensionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except SpinWignerError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
