"""Evaluation of the s-parametrized distributions for multi-qubit states.

Point evaluation against the kernel product, vectorized grid scans with
negativity diagnostics, a quadrature normalization functional, and
comparisons against the published closed-form expressions for the
(accelerated) GHZ-Werner family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence

import numpy as np

from .errors import DimensionError, NonRealResult
from .linalg import DensityMatrix, kron
from .rindler import AccelerationConfig, accelerate
from .states import GhzWernerParams, ghz_werner
from .su2kernel import (
    DistributionKind,
    SphericalPoint,
    kernel_grid,
    kernel_n,
)

IMAG_TOL = 1e-10
MATCH_TOL = 1e-12
BISECTION_TOL = 1e-9
SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class QuasiProbSample:
    """One distribution value, with the per-qubit points it was taken at.

    The trace behind ``value`` must be real; an imaginary residue above
    1e-10 is rejected at construction.
    """

    points: tuple[SphericalPoint, ...]
    kind: DistributionKind
    value: float


def _require_real(value: complex, context: str) -> float:
    if abs(value.imag) > IMAG_TOL:
        raise NonRealResult(f"{context}: imaginary residue {value.imag:.3e}")
    return float(value.real)


def evaluate(rho: DensityMatrix, kind: DistributionKind, points: Sequence[SphericalPoint]) -> QuasiProbSample:
    """Distribution value Tr[rho K(p_0) x ... x K(p_{n-1})], one point per qubit."""
    pts = tuple(points)
    if len(pts) != rho.n_qubits:
        raise DimensionError(f"expected {rho.n_qubits} points, got {len(pts)}")
    k = kernel_n(kind, pts, rho.n_qubits)
    raw = complex(np.einsum("ij,ji->", rho.matrix, k))
    value = _require_real(raw, "evaluate")
    return QuasiProbSample(points=pts, kind=DistributionKind(kind), value=value)


def grid_values(rho: DensityMatrix, kind: DistributionKind, thetas: np.ndarray, phis: np.ndarray) -> np.ndarray:
    """Equal-angle values W(theta_i, phi_j) as a (len(thetas), len(phis)) array.

    Same kernel construction as :func:`evaluate`, vectorized over the
    angle grid; qubit i reads basis bit i of the state indices.
    """
    thetas = np.asarray(thetas, dtype=float)
    phis = np.asarray(phis, dtype=float)
    e = kernel_grid(kind, thetas[:, None], phis[None, :])
    n = rho.n_qubits
    m = rho.matrix
    acc = np.zeros(e.shape[2:], dtype=complex)
    for x in range(2 ** n):
        for y in range(2 ** n):
            w = m[x, y]
            if w == 0:
                continue
            prod = e[y & 1, x & 1]
            for i in range(1, n):
                prod = prod * e[(y >> i) & 1, (x >> i) & 1]
            acc += w * prod
    if float(np.abs(acc.imag).max()) > IMAG_TOL:
        raise NonRealResult(f"grid values: imaginary residue {np.abs(acc.imag).max():.3e}")
    return acc.real.copy()


@dataclass(frozen=True, eq=False)
class ScanReport:
    """Extrema and negativity diagnostics of a grid scan.

    ``values`` has shape (theta_steps, phi_steps) for an equal-angle scan
    and (theta_steps, phi_steps) repeated per qubit otherwise; argmin and
    argmax carry one point per qubit (all equal in the equal-angle case).
    Ties resolve to the first grid point in row-major order.
    """

    kind: DistributionKind
    theta_steps: int
    phi_steps: int
    equal_angles: bool
    thetas: np.ndarray
    phis: np.ndarray
    values: np.ndarray
    min_value: float
    argmin: tuple[SphericalPoint, ...]
    max_value: float
    argmax: tuple[SphericalPoint, ...]
    negative_fraction: float
    negative_volume: float


def grid_scan(
    rho: DensityMatrix,
    kind: DistributionKind,
    theta_steps: int,
    phi_steps: int,
    equal_angles: bool = True,
) -> ScanReport:
    """Scan theta in [0, pi] (inclusive) x phi in [0, 2*pi) on uniform grids.

    With ``equal_angles`` every qubit sits at the same point (the usual
    convention for the figures).  Otherwise each qubit runs over its own
    copy of the grid, which multiplies the sample count by itself n times;
    keep the grids small in that mode.
    """
    if theta_steps < 2 or phi_steps < 2:
        raise DimensionError("theta_steps and phi_steps must both be at least 2")
    thetas = np.linspace(0.0, math.pi, theta_steps)
    phis = np.arange(phi_steps) * (2.0 * math.pi / phi_steps)
    d_theta = math.pi / (theta_steps - 1)
    d_phi = 2.0 * math.pi / phi_steps
    point_weight = np.sin(thetas)[:, None] * d_theta * d_phi * np.ones_like(phis)[None, :]

    n = rho.n_qubits
    if equal_angles:
        values = grid_values(rho, kind, thetas, phis)
        weight = point_weight
    else:
        e = kernel_grid(kind, thetas[:, None], phis[None, :])
        acc = np.zeros((theta_steps, phi_steps) * n, dtype=complex)
        for x in range(2 ** n):
            for y in range(2 ** n):
                w = rho.matrix[x, y]
                if w == 0:
                    continue
                block = e[y & 1, x & 1]
                for i in range(1, n):
                    block = np.multiply.outer(block, e[(y >> i) & 1, (x >> i) & 1])
                acc += w * block
        if float(np.abs(acc.imag).max()) > IMAG_TOL:
            raise NonRealResult("grid scan: non-negligible imaginary residue")
        values = acc.real.copy()
        weight = point_weight
        for _ in range(n - 1):
            weight = np.multiply.outer(weight, point_weight)

    flat_min = int(values.argmin())
    flat_max = int(values.argmax())

    def _points_at(flat_index: int) -> tuple[SphericalPoint, ...]:
        idx = np.unravel_index(flat_index, values.shape)
        if equal_angles:
            pt = SphericalPoint(float(thetas[idx[0]]), float(phis[idx[1]]))
            return (pt,) * n
        return tuple(
            SphericalPoint(float(thetas[idx[2 * i]]), float(phis[idx[2 * i + 1]]))
            for i in range(n)
        )

    negative = values < 0.0
    return ScanReport(
        kind=DistributionKind(kind),
        theta_steps=theta_steps,
        phi_steps=phi_steps,
        equal_angles=equal_angles,
        thetas=thetas,
        phis=phis,
        values=values,
        min_value=float(values.flat[flat_min]),
        argmin=_points_at(flat_min),
        max_value=float(values.flat[flat_max]),
        argmax=_points_at(flat_max),
        negative_fraction=float(negative.sum()) / values.size,
        negative_volume=float((-values[negative] * weight[negative]).sum()),
    )


def normalization_check(rho: DensityMatrix, kind: DistributionKind, quad_order: int = 32) -> float:
    """Quadrature of (2*pi)^-n * Int W dOmega_1 ... dOmega_n; should be 1.

    Gauss-Legendre nodes in cos(theta) (``quad_order`` of them) and a
    uniform trapezoid with 2*quad_order points in phi, per qubit.  The
    integrand is multilinear in the per-qubit kernels and the grid is a
    tensor product, so the full n-fold quadrature sum factorizes exactly
    into per-qubit 2x2 quadratures combined by Kronecker products.
    """
    if quad_order < 16:
        raise ValueError(f"quad_order={quad_order} must be at least 16")
    nodes, weights = np.polynomial.legendre.leggauss(quad_order)
    thetas = np.arccos(nodes)
    n_phi = 2 * quad_order
    phis = np.arange(n_phi) * (2.0 * math.pi / n_phi)
    e = kernel_grid(kind, thetas[:, None], phis[None, :])
    per_qubit = (e * weights[:, None]).sum(axis=(2, 3)) * (2.0 * math.pi / n_phi)
    factor = per_qubit / (2.0 * math.pi)
    total = factor
    for _ in range(rho.n_qubits - 1):
        total = kron(total, factor)
    raw = complex(np.einsum("ij,ji->", rho.matrix, total))
    return _require_real(raw, "normalization_check")


class ClosedFormVariant(Enum):
    """Published closed-form expressions for the three-qubit family."""

    GHZ = "GHZ"
    ACC1 = "ACC1"
    ACC2 = "ACC2"
    ACC3 = "ACC3"


_K_ACCELERATED = {
    ClosedFormVariant.GHZ: 0,
    ClosedFormVariant.ACC1: 1,
    ClosedFormVariant.ACC2: 2,
    ClosedFormVariant.ACC3: 3,
}


def _cf_ghz(theta, phi, nu, r):
    return (
        3.0 * SQRT3 * nu * np.sin(theta) ** 3 * np.cos(3.0 * phi)
        + 9.0 * nu * np.cos(theta) ** 2
        + 1.0
    ) / 8.0


def _cf_acc1(theta, phi, nu, r):
    return (
        SQRT3
        * (
            6.0 * nu * np.sin(theta) ** 3 * np.cos(r) * np.cos(3.0 * phi)
            + np.cos(theta) * np.sin(r) ** 2 * (3.0 * nu * np.cos(2.0 * theta) + 3.0 * nu + 2.0)
        )
        + 6.0 * nu * (np.cos(theta) ** 2 * np.cos(2.0 * r) + np.cos(2.0 * theta) + 1.0)
        + 2.0
    ) / 16.0


def _cf_acc2(theta, phi, nu, r):
    # transcribed as printed; the source drops a closing parenthesis after
    # "cos 2theta + 1", restored here in the minimal way
    return (
        25.0
        + 48.0 * SQRT3 * nu * np.sin(theta) ** 3 * np.cos(r) ** 2 * np.cos(3.0 * phi)
        + 9.0 * np.cos(2.0 * theta)
        + 33.0 * nu * (np.cos(2.0 * theta) + 1.0)
        + 4.0
        * SQRT3
        * np.cos(theta)
        * (
            3.0 * nu * np.cos(2.0 * theta) * np.sin(2.0 * r) ** 2
            + np.sin(r) ** 2 * (6.0 * nu * np.cos(2.0 * r) + 6.0 * nu + 8.0)
        )
        + np.cos(theta) ** 2 * (4.0 * (3.0 * nu - 1.0) * np.cos(2.0 * r) + (nu + 1.0) * np.cos(4.0 * r))
    ) / 128.0


def _cf_acc3(theta, phi, nu, r):
    # transcribed as printed (one unclosed parenthesis in the second helper,
    # restored at the end of the expression)
    eta_p = SQRT3 * np.cos(theta) + 1.0
    eta_m = SQRT3 * np.cos(theta) - 1.0
    mu_p = 1.0 + 3.0 * nu
    mu_m = 1.0 - 3.0 * nu
    k1 = (3.0 * np.cos(2.0 * theta) + 1.0) * (mu_p * np.cos(2.0 * r) - nu - 3.0)
    k2 = mu_p * np.sin(r) ** 4 + 2.0 * (1.0 - nu) * (np.sin(r) ** 2 + 1.0)
    k3 = mu_p * np.sin(r) ** 4 + 2.0 * mu_m * np.sin(r) ** 2 + mu_p
    return (48.0 / 128.0) * (
        SQRT3 * nu * np.sin(theta) ** 3 * np.cos(r) ** 3 * np.cos(3.0 * phi)
        - 1.5 * eta_p * np.cos(r) ** 4 * k1
        - 6.0 * eta_m * eta_p ** 2 * np.cos(r) ** 2 * k2
        + 2.0 * eta_p ** 3 * (np.sin(r) ** 2 + 1.0) * k3
        - 2.0 * mu_p * eta_m ** 3 * np.cos(r) ** 6
    )


_CLOSED_FORMS: dict[ClosedFormVariant, Callable] = {
    ClosedFormVariant.GHZ: _cf_ghz,
    ClosedFormVariant.ACC1: _cf_acc1,
    ClosedFormVariant.ACC2: _cf_acc2,
    ClosedFormVariant.ACC3: _cf_acc3,
}


def closed_form(variant: ClosedFormVariant, theta: float, phi: float, nu: float, r: float = 0.0) -> float:
    """Published closed-form value at one point, transcribed verbatim.

    GHZ and ACC1 agree with the numeric pipeline; ACC2 and ACC3 carry
    misprints in the source and are kept as printed so comparisons can
    quantify the deviation.
    """
    variant = ClosedFormVariant(variant)
    return float(_CLOSED_FORMS[variant](theta, phi, nu, r))


def accelerated_ghz(nu: float, k_accelerated: int, r: float, n_qubits: int = 3) -> DensityMatrix:
    """GHZ-Werner state with its first ``k_accelerated`` qubits accelerated."""
    if not (0 <= k_accelerated <= n_qubits):
        raise ValueError(f"k_accelerated={k_accelerated} outside 0..{n_qubits}")
    rho = ghz_werner(GhzWernerParams(nu=nu, n_qubits=n_qubits))
    if k_accelerated:
        rho = accelerate(rho, AccelerationConfig(r=r, accelerated=tuple(range(k_accelerated))))
    return rho


@dataclass(frozen=True)
class ClosedFormComparison:
    """Grid comparison of the numeric pipeline against one closed form."""

    variant: ClosedFormVariant
    nu: float
    r: float
    theta_steps: int
    phi_steps: int
    max_abs_diff: float
    argmax: SphericalPoint
    numeric_value: float
    closed_form_value: float
    status: str


def compare_closed_form(
    variant: ClosedFormVariant,
    nu: float,
    r: float = 0.0,
    theta_steps: int = 50,
    phi_steps: int = 50,
) -> ClosedFormComparison:
    """Max |numeric - closed form| over the equal-angle grid; MATCH at 1e-12."""
    variant = ClosedFormVariant(variant)
    if theta_steps < 2 or phi_steps < 2:
        raise DimensionError("theta_steps and phi_steps must both be at least 2")
    rho = accelerated_ghz(nu, _K_ACCELERATED[variant], r)
    thetas = np.linspace(0.0, math.pi, theta_steps)
    phis = np.arange(phi_steps) * (2.0 * math.pi / phi_steps)
    numeric = grid_values(rho, DistributionKind.WIGNER, thetas, phis)
    reference = _CLOSED_FORMS[variant](thetas[:, None], phis[None, :], nu, r)
    reference = np.broadcast_to(reference, numeric.shape)
    diff = np.abs(numeric - reference)
    flat = int(diff.argmax())
    it, ip = np.unravel_index(flat, diff.shape)
    return ClosedFormComparison(
        variant=variant,
        nu=nu,
        r=r,
        theta_steps=theta_steps,
        phi_steps=phi_steps,
        max_abs_diff=float(diff[it, ip]),
        argmax=SphericalPoint(float(thetas[it]), float(phis[ip])),
        numeric_value=float(numeric[it, ip]),
        closed_form_value=float(reference[it, ip]),
        status="MATCH" if float(diff[it, ip]) <= MATCH_TOL else "DISCREPANT",
    )


def scan_min_vs_r(
    nu: float,
    k_accelerated: int,
    r_samples: Sequence[float],
    theta: float = math.pi / 2.0,
    phi: float = math.pi,
) -> list[tuple[float, float]]:
    """Point value of the Wigner distribution along an r sweep.

    Returns (r, W) pairs at the fixed probe point (default: the deepest
    negativity point theta = pi/2, phi = pi) with the first
    ``k_accelerated`` qubits accelerated.
    """
    if k_accelerated not in (1, 2, 3):
        raise ValueError(f"k_accelerated={k_accelerated} must be 1, 2, or 3")
    pt = SphericalPoint(theta, phi)
    out = []
    for r in r_samples:
        rho = accelerated_ghz(nu, k_accelerated, float(r))
        sample = evaluate(rho, DistributionKind.WIGNER, (pt,) * rho.n_qubits)
        out.append((float(r), sample.value))
    return out


@dataclass(frozen=True)
class ThresholdResult:
    """Mixing weight where the point value changes sign, if it does.

    ``nu_star`` is NaN and ``sign_change`` False when the value keeps one
    sign on all of [0, 1] (reported in-band, not as an error).
    """

    nu_star: float
    sign_change: bool
    iterations: int


def negativity_threshold(
    k_accelerated: int,
    r: float,
    theta: float = math.pi / 2.0,
    phi: float = math.pi,
) -> ThresholdResult:
    """Bisect nu in [0, 1] for the sign change of the point Wigner value."""
    if not (0 <= k_accelerated <= 3):
        raise ValueError(f"k_accelerated={k_accelerated} outside 0..3")
    pt = SphericalPoint(theta, phi)

    def w(nu: float) -> float:
        rho = accelerated_ghz(nu, k_accelerated, r)
        return evaluate(rho, DistributionKind.WIGNER, (pt,) * rho.n_qubits).value

    lo, hi = 0.0, 1.0
    w_lo, w_hi = w(lo), w(hi)
    if w_lo == 0.0:
        return ThresholdResult(nu_star=lo, sign_change=True, iterations=0)
    if w_hi == 0.0:
        return ThresholdResult(nu_star=hi, sign_change=True, iterations=0)
    if (w_lo > 0.0) == (w_hi > 0.0):
        return ThresholdResult(nu_star=math.nan, sign_change=False, iterations=0)
    iterations = 0
    while hi - lo > BISECTION_TOL:
        mid = 0.5 * (lo + hi)
        w_mid = w(mid)
        iterations += 1
        if w_mid == 0.0:
            return ThresholdResult(nu_star=mid, sign_change=True, iterations=iterations)
        if (w_mid > 0.0) == (w_lo > 0.0):
            lo, w_lo = mid, w_mid
        else:
            hi = mid
    return ThresholdResult(nu_star=0.5 * (lo + hi), sign_change=True, iterations=iterations)
