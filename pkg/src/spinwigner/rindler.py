"""Uniform-acceleration decoherence of selected qubits.

Each accelerated qubit is carried from its inertial mode into a pair of
Rindler-wedge modes by an isometry parametrized by r in [0, pi/4]; the
causally hidden wedge is traced out immediately, leaving a completely
positive trace-preserving channel on the original register.  The module
also evaluates reference coefficient tables for the accelerated
GHZ-Werner family, kept verbatim from the published closed forms
(including their misprints) so reports can measure the deviation instead
of silently correcting it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import IndexOutOfRange, MixingOutOfRange, ROutOfRange
from .linalg import DensityMatrix, _partial_trace_raw, kron, validate_density
from .states import GhzWernerParams, ghz_werner

R_MAX = math.pi / 4.0
MATCH_TOL = 1e-12

COEFFICIENT_VARIANTS = ("A", "B", "C")
_K_FOR_VARIANT = {"A": 1, "B": 2, "C": 3}
_DIAG_KEYS = ("11", "22", "33", "44", "55", "66", "77", "88")


@dataclass(frozen=True)
class AccelerationConfig:
    """Acceleration parameter and the qubit indices it applies to.

    Qubit indices refer to basis bits (qubit 0 = least significant);
    duplicates are rejected here, range is checked against the register
    inside :func:`accelerate`.
    """

    r: float
    accelerated: tuple[int, ...] = ()

    def __post_init__(self):
        if not (0.0 <= self.r <= R_MAX):
            raise ROutOfRange(f"r={self.r} outside [0, {R_MAX}]")
        idx = tuple(int(q) for q in self.accelerated)
        if len(set(idx)) != len(idx):
            raise ValueError(f"duplicate qubit indices in {idx}")
        if any(q < 0 for q in idx):
            raise IndexOutOfRange(f"negative qubit index in {idx}")
        object.__setattr__(self, "accelerated", idx)


def unruh_isometry(r: float) -> np.ndarray:
    """4x2 isometry mapping one qubit into the two-wedge mode pair.

    |0> -> cos r |00> + sin r |11> and |1> -> |10>, with the first wedge
    factor most significant; columns are orthonormal for every r.
    """
    if not (0.0 <= r <= R_MAX):
        raise ROutOfRange(f"r={r} outside [0, {R_MAX}]")
    v = np.zeros((4, 2), dtype=complex)
    v[0, 0] = math.cos(r)
    v[3, 0] = math.sin(r)
    v[2, 1] = 1.0
    return v


def accelerate(rho: DensityMatrix, config: AccelerationConfig) -> DensityMatrix:
    """Apply the acceleration channel to every qubit named in ``config``.

    Each step conjugates the state by the embedding isometry of one qubit
    and traces out the hidden wedge factor created next to it; the steps
    commute, so they run in ascending index order for determinism.
    """
    n = rho.n_qubits
    for q in config.accelerated:
        if q >= n:
            raise IndexOutOfRange(f"qubit {q} outside register of {n}")
    m = rho.matrix
    v = unruh_isometry(config.r)
    for q in sorted(config.accelerated):
        pos = n - 1 - q  # tensor slot of qubit q; factors run msb-first
        embed = v
        if pos > 0:
            embed = kron(np.eye(2 ** pos), embed)
        if pos < n - 1:
            embed = kron(embed, np.eye(2 ** (n - 1 - pos)))
        big = embed @ m @ embed.conj().T
        dims = [2] * (n + 1)
        keep = [i for i in range(n + 1) if i != pos + 1]
        m = _partial_trace_raw(big, dims, keep)
    return validate_density(m, n)


@dataclass(frozen=True)
class CoefficientTable:
    """Named entries of a published coefficient table at one (nu, r)."""

    variant: str
    nu: float
    r: float
    entries: dict[str, float]
    note: str | None = None

    @property
    def diagonal_sum(self) -> float:
        return float(sum(self.entries[k] for k in _DIAG_KEYS))


def coefficient_table(variant: str, nu: float, r: float) -> CoefficientTable:
    """Evaluate the published per-entry formulas for one, two, or three
    accelerated qubits (variants "A", "B", "C").

    The formulas are transcribed verbatim, so known misprints are
    reproduced: the B diagonal sums to 1 - nu/2, and parts of C drift
    from the channel output as r grows.  Comparison against the numeric
    channel belongs to :func:`coefficient_report`.
    """
    if variant not in COEFFICIENT_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {COEFFICIENT_VARIANTS}")
    if not (0.0 <= nu <= 1.0):
        raise MixingOutOfRange(f"nu={nu} outside [0, 1]")
    if not (0.0 <= r <= R_MAX):
        raise ROutOfRange(f"r={r} outside [0, {R_MAX}]")
    c = math.cos(r)
    s = math.sin(r)
    c2, s2 = c * c, s * s
    p = (1.0 + 3.0 * nu) / 8.0
    q = (1.0 - nu) / 8.0

    a = {
        "11": p * c2,
        "22": p * s2 + q,
        "33": q * c2,
        "44": q * (s2 + 1.0),
        "55": q * c2,
        "66": q * (s2 + 1.0),
        "77": q * c2,
        "88": p + q * s2,
        "18": 0.5 * nu * c,
    }
    a["81"] = a["18"]
    if variant == "A":
        return CoefficientTable("A", nu, r, a)

    if variant == "B":
        b = {
            "11": a["11"] * c2,
            "22": a["22"] * c2,
            "33": a["22"] * c2,
            "44": math.tan(r) ** 4 * (a["11"] * c2) + a["44"],
            "55": a["33"] * c2,
            "66": a["44"] * c2,
            "77": a["44"] * c2 + q * s2,
            "88": a["44"] * (s2 + 1.0),
            "18": a["18"] * c,
        }
        b["81"] = b["18"]
        return CoefficientTable("B", nu, r, b)

    cc = {
        "11": a["11"] * c2 * c2,
        "22": a["22"] * c2 * c2,
        "33": a["22"] * c2 * c2,
        "44": a["22"] * c2 + 2.0 * a["33"] * s2,
        "55": a["22"] * c2 * c2,
        "66": a["22"] * c2 + 2.0 * a["33"] * s2,
        "77": a["22"] * c2 + 2.0 * a["33"] * s2,
        "88": 3.0 * a["44"] * s2 + p * (s2 ** 3 + 1.0),
        "18": a["18"] * c2,
    }
    cc["81"] = cc["18"]
    return CoefficientTable(
        "C", nu, r, cc, note="the |111><111| weight is labelled 12 in the source table"
    )


@dataclass(frozen=True)
class CoefficientComparison:
    """Entrywise comparison of a published table against the channel output."""

    variant: str
    nu: float
    r: float
    printed: dict[str, float]
    numeric: dict[str, float]
    abs_diff: dict[str, float]
    max_abs_diff: float
    printed_diagonal_sum: float
    status: str
    note: str | None = None


def coefficient_report(variant: str, nu: float, r: float) -> CoefficientComparison:
    """Compare a published coefficient table against the numeric channel.

    The numeric column is the ground truth: the GHZ-Werner state pushed
    through the acceleration channel on the first one, two, or three
    qubits.  Status is MATCH when every named entry agrees within 1e-12,
    DISCREPANT otherwise.
    """
    table = coefficient_table(variant, nu, r)
    k = _K_FOR_VARIANT[variant]
    rho = accelerate(
        ghz_werner(GhzWernerParams(nu=nu)),
        AccelerationConfig(r=r, accelerated=tuple(range(k))),
    )
    m = rho.matrix
    numeric: dict[str, float] = {}
    for key in _DIAG_KEYS:
        i = int(key[0]) - 1
        numeric[key] = float(m[i, i].real)
    numeric["18"] = float(m[0, 7].real)
    numeric["81"] = float(m[7, 0].real)
    diff = {key: abs(table.entries[key] - numeric[key]) for key in table.entries}
    max_diff = max(diff.values())
    return CoefficientComparison(
        variant=variant,
        nu=nu,
        r=r,
        printed=dict(table.entries),
        numeric=numeric,
        abs_diff=diff,
        max_abs_diff=max_diff,
        printed_diagonal_sum=table.diagonal_sum,
        status="MATCH" if max_diff <= MATCH_TOL else "DISCREPANT",
        note=table.note,
    )
