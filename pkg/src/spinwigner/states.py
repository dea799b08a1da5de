"""GHZ states and their white-noise (Werner-type) mixtures."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import MixingOutOfRange
from .linalg import DensityMatrix, validate_density


@dataclass(frozen=True)
class GhzWernerParams:
    """Mixing weight nu in [0, 1] and register size (default three qubits)."""

    nu: float
    n_qubits: int = 3

    def __post_init__(self):
        if not (0.0 <= self.nu <= 1.0):
            raise MixingOutOfRange(f"nu={self.nu} outside [0, 1]")
        if self.n_qubits < 1:
            raise ValueError(f"n_qubits={self.n_qubits} must be at least 1")


def ghz_pure(n_qubits: int) -> np.ndarray:
    """State vector (|0...0> + |1...1>)/sqrt(2) of length 2**n_qubits."""
    if n_qubits < 1:
        raise ValueError(f"n_qubits={n_qubits} must be at least 1")
    v = np.zeros(2 ** n_qubits, dtype=complex)
    amp = 1.0 / math.sqrt(2.0)
    v[0] = amp
    v[-1] = amp
    return v


def ghz_werner(params: GhzWernerParams) -> DensityMatrix:
    """nu * |GHZ><GHZ| + (1 - nu) * I / 2**n, validated."""
    v = ghz_pure(params.n_qubits)
    dim = v.size
    m = params.nu * np.outer(v, v.conj()) + (1.0 - params.nu) / dim * np.eye(dim)
    return validate_density(m, params.n_qubits)
