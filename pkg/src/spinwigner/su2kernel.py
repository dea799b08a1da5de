"""Phase-point kernels on the SU(2) sphere for spin-1/2 constituents.

The s-parametrized kernel family (s = -1, 0, +1 selecting the Husimi Q,
Wigner, and Glauber P distributions) is assembled from Clebsch-Gordan
coefficients, irreducible tensor operators, and the L <= 1 spherical
harmonics.  Expectation of the n-fold kernel product against a state
gives the value of the corresponding distribution at one point of each
qubit's sphere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import DimensionError, InvalidQuantumNumbers, UnsupportedOrder
from .linalg import kron

SQRT_2PI = math.sqrt(2.0 * math.pi)
SQRT3 = math.sqrt(3.0)
_Y00 = 0.5 / math.sqrt(math.pi)
_N10 = math.sqrt(3.0 / (4.0 * math.pi))
_N11 = math.sqrt(3.0 / (8.0 * math.pi))

HERMITICITY_TOL = 1e-13


class DistributionKind(IntEnum):
    """s parameter selecting one member of the quasi-probability family."""

    Q = -1
    WIGNER = 0
    P = 1


@dataclass(frozen=True)
class SphericalPoint:
    """Point on the unit sphere: colatitude theta, azimuth phi (radians)."""

    theta: float
    phi: float

    def __post_init__(self):
        if not (math.isfinite(self.theta) and math.isfinite(self.phi)):
            raise ValueError("theta and phi must be finite")


@dataclass(frozen=True, eq=False)
class KernelOperator:
    """Single-qubit phase-point operator evaluated at one sphere point."""

    kind: DistributionKind
    point: SphericalPoint
    matrix: np.ndarray


def _as_doubled(x: float, name: str) -> int:
    """Return 2*x as an exact integer; reject non-half-integral input."""
    d = 2.0 * float(x)
    r = round(d)
    if abs(d - r) > 1e-9:
        raise InvalidQuantumNumbers(f"{name}={x} is not half-integral")
    return int(r)


def clebsch_gordan(j1: float, m1: float, j2: float, m2: float, J: float, M: float) -> float:
    """Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M>, Condon-Shortley phase.

    Half-integral arguments are handled exactly (internally doubled to
    integers); the Racah closed-form sum is evaluated with exact rational
    arithmetic under the square root, so results are correct to one ulp.
    Selection-rule failures return 0.0; malformed labels raise
    InvalidQuantumNumbers.
    """
    jj1, mm1 = _as_doubled(j1, "j1"), _as_doubled(m1, "m1")
    jj2, mm2 = _as_doubled(j2, "j2"), _as_doubled(m2, "m2")
    JJ, MM = _as_doubled(J, "J"), _as_doubled(M, "M")
    for jj, mm, nm in ((jj1, mm1, "1"), (jj2, mm2, "2"), (JJ, MM, "tot")):
        if jj < 0:
            raise InvalidQuantumNumbers(f"j{nm} must be non-negative")
        if abs(mm) > jj:
            raise InvalidQuantumNumbers(f"|m{nm}| exceeds j{nm}")
        if (jj + mm) % 2:
            raise InvalidQuantumNumbers(f"j{nm} and m{nm} differ by a non-integer")

    if mm1 + mm2 != MM:
        return 0.0
    if JJ < abs(jj1 - jj2) or JJ > jj1 + jj2 or (jj1 + jj2 + JJ) % 2:
        return 0.0

    def f(doubled: int) -> int:
        # argument arrives as a doubled even integer; factorial of half
        if doubled % 2 or doubled < 0:
            raise InvalidQuantumNumbers("internal: non-integral factorial argument")
        return math.factorial(doubled // 2)

    pref2 = Fraction(JJ + 1, 1)
    pref2 *= Fraction(
        f(jj1 + jj2 - JJ) * f(jj1 - jj2 + JJ) * f(-jj1 + jj2 + JJ),
        f(jj1 + jj2 + JJ + 2),
    )
    pref2 *= Fraction(
        f(JJ + MM) * f(JJ - MM) * f(jj1 + mm1) * f(jj1 - mm1) * f(jj2 + mm2) * f(jj2 - mm2)
    )

    # summation index k (true integer); bounds keep every factorial argument >= 0
    k_min = max(0, (jj2 - JJ - mm1) // 2, (jj1 + mm2 - JJ) // 2)
    k_max = min(
        (jj1 + jj2 - JJ) // 2,
        (jj1 - mm1) // 2,
        (jj2 + mm2) // 2,
    )
    total = Fraction(0)
    for k in range(k_min, k_max + 1):
        kk = 2 * k
        denom = (
            math.factorial(k)
            * f(jj1 + jj2 - JJ - kk)
            * f(jj1 - mm1 - kk)
            * f(jj2 + mm2 - kk)
            * f(JJ - jj2 + mm1 + kk)
            * f(JJ - jj1 - mm2 + kk)
        )
        total += Fraction(-1 if k % 2 else 1, denom)
    if total == 0:
        return 0.0
    value2 = pref2 * total * total
    return math.copysign(math.sqrt(float(value2)), float(total))


def _ylm(L: int, K: int, theta, phi):
    """L <= 1 spherical harmonics, Condon-Shortley phase; array-capable."""
    if (L, K) == (0, 0):
        return _Y00 * np.ones_like(np.asarray(theta, dtype=float))
    if (L, K) == (1, 0):
        return _N10 * np.cos(theta)
    if (L, K) == (1, 1):
        return -_N11 * np.sin(theta) * np.exp(1j * np.asarray(phi, dtype=float))
    if (L, K) == (1, -1):
        return _N11 * np.sin(theta) * np.exp(-1j * np.asarray(phi, dtype=float))
    raise UnsupportedOrder(f"(L, K) = ({L}, {K}) not implemented")


def spherical_harmonic(L: int, K: int, point: SphericalPoint) -> complex:
    """Y_{L,K}(theta, phi) for L in {0, 1}; larger L raises UnsupportedOrder."""
    if L not in (0, 1):
        raise UnsupportedOrder(f"order L={L} outside the implemented range {{0, 1}}")
    if abs(K) > L:
        raise InvalidQuantumNumbers(f"|K|={abs(K)} exceeds L={L}")
    return complex(_ylm(L, K, point.theta, point.phi))


@lru_cache(maxsize=None)
def _ito_frozen(L: int, M: int) -> np.ndarray:
    norm = math.sqrt((2 * L + 1) / 2.0)
    t = np.zeros((2, 2), dtype=complex)
    # basis index 0 holds m = -1/2, index 1 holds m = +1/2
    for ki, k in ((0, -0.5), (1, 0.5)):
        for kpi, kp in ((0, -0.5), (1, 0.5)):
            c = clebsch_gordan(0.5, k, L, -M, 0.5, kp)
            if c != 0.0:
                t[kpi, ki] = c
    t *= (-1) ** M * norm
    t.setflags(write=False)
    return t


def ito(L: int, M: int) -> np.ndarray:
    """Adjoint irreducible tensor operator for spin 1/2, as a 2x2 matrix.

    Built from Clebsch-Gordan couplings of the spin with a rank-L
    multipole; only L in {0, 1} exists for a single qubit.
    """
    if L not in (0, 1):
        raise UnsupportedOrder(f"rank L={L} outside the implemented range {{0, 1}}")
    if abs(M) > L:
        raise InvalidQuantumNumbers(f"|M|={abs(M)} exceeds L={L}")
    return _ito_frozen(L, M).copy()


def kernel_grid(kind: DistributionKind, theta, phi) -> np.ndarray:
    """Kernel matrix elements over broadcastable angle arrays.

    Returns a complex array of shape (2, 2) + broadcast(theta, phi).shape;
    the scalar case yields a plain 2x2 matrix.
    """
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    shape = np.broadcast_shapes(theta.shape, phi.shape)
    pad = (1,) * len(shape)
    g = SQRT3 ** int(kind)
    out = np.zeros((2, 2) + shape, dtype=complex)
    out += _ito_frozen(0, 0).reshape(2, 2, *pad) * _ylm(0, 0, theta, phi)
    for n in (-1, 0, 1):
        out += g * _ito_frozen(1, n).reshape(2, 2, *pad) * _ylm(1, n, theta, phi)
    out *= SQRT_2PI
    return out


def kernel(kind: DistributionKind, point: SphericalPoint) -> KernelOperator:
    """Single-qubit phase-point operator at ``point`` for distribution ``kind``."""
    m = kernel_grid(kind, point.theta, point.phi)
    m.setflags(write=False)
    return KernelOperator(kind=DistributionKind(kind), point=point, matrix=m)


def kernel_n(kind: DistributionKind, points: Sequence[SphericalPoint], n: int) -> np.ndarray:
    """n-qubit kernel: Kronecker product of per-qubit phase-point operators.

    ``points[i]`` belongs to qubit i; qubit 0 is the least-significant
    basis bit and therefore the last Kronecker factor.
    """
    pts = list(points)
    if len(pts) != n:
        raise DimensionError(f"expected {n} points, got {len(pts)}")
    out = kernel(kind, pts[-1]).matrix
    for p in reversed(pts[:-1]):
        out = kron(out, kernel(kind, p).matrix)
    return out
