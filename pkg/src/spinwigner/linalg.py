"""Dense complex linear algebra for small multi-qubit registers.

Kronecker products, partial traces over arbitrary subsystem subsets, and
density-matrix validation.  Matrices are plain complex128 numpy arrays;
in any composite, the first tensor factor carries the most significant
block index (``kron(a, b)`` places ``a`` on the coarse grid).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DimensionError,
    HermiticityViolation,
    NegativityViolation,
    NotPowerOfTwoError,
    NotSquareError,
    TraceViolation,
)

TRACE_TOL = 1e-12
HERMITICITY_TOL = 1e-12
PSD_FLOOR = -1e-10


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Validated quantum state: unit trace, Hermitian, positive semidefinite.

    Instances come out of :func:`validate_density`; the wrapped array is
    frozen (non-writeable) so values can be shared freely.
    """

    matrix: np.ndarray
    n_qubits: int

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product: entry ((i*rb + k), (j*cb + l)) equals a[i,j]*b[k,l]."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def kron_all(factors: Sequence[np.ndarray]) -> np.ndarray:
    """Left-to-right Kronecker product of one or more matrices."""
    if not factors:
        raise DimensionError("kron_all needs at least one factor")
    out = np.asarray(factors[0], dtype=complex)
    for f in factors[1:]:
        out = np.kron(out, np.asarray(f, dtype=complex))
    return out


def _partial_trace_raw(m: np.ndarray, dims: Sequence[int], keep: Sequence[int]) -> np.ndarray:
    """Partial trace on a raw square array; ``keep`` must be sorted and unique."""
    n = len(dims)
    t = m.reshape(tuple(dims) + tuple(dims))
    # Row axis i and column axis i share an einsum label iff subsystem i is
    # traced out; kept axes survive into the output in subsystem order.
    row_labels = list(range(n))
    col_labels = [i + n if i in keep else i for i in range(n)]
    out_labels = [i for i in keep] + [i + n for i in keep]
    reduced = np.einsum(t, row_labels + col_labels, out_labels)
    d = math.prod(dims[i] for i in keep)
    return reduced.reshape(d, d)


def partial_trace(
    rho: DensityMatrix | np.ndarray, dims: Sequence[int], keep: Iterable[int]
) -> DensityMatrix:
    """Trace out every subsystem not in ``keep``; kept order is preserved.

    ``dims`` lists the subsystem dimensions in tensor-factor order and must
    multiply out to the matrix dimension.  Accepts either a validated
    :class:`DensityMatrix` or a raw array.
    """
    mat = rho.matrix if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=complex)
    dims = [int(d) for d in dims]
    if any(d < 1 for d in dims):
        raise DimensionError("subsystem dimensions must be positive")
    if math.prod(dims) != mat.shape[0]:
        raise DimensionError(
            f"dims {dims} do not factor the matrix dimension {mat.shape[0]}"
        )
    keep_sorted = sorted(set(int(i) for i in keep))
    if not keep_sorted:
        raise DimensionError("keep must name at least one subsystem")
    if keep_sorted[0] < 0 or keep_sorted[-1] >= len(dims):
        raise DimensionError(f"keep indices {keep_sorted} outside 0..{len(dims) - 1}")
    reduced = _partial_trace_raw(mat, dims, keep_sorted)
    d = reduced.shape[0]
    n_out = d.bit_length() - 1
    return validate_density(reduced, n_out)


def validate_density(m: np.ndarray, n_qubits: int) -> DensityMatrix:
    """Check trace, Hermiticity and positivity; return the frozen state.

    All violated invariants are reported together in the message of the
    first failure, each with its measured magnitude.
    """
    arr = np.array(m, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise NotSquareError(f"expected a square matrix, got shape {arr.shape}")
    dim = arr.shape[0]
    if n_qubits < 1 or dim != 2 ** n_qubits:
        raise NotPowerOfTwoError(f"dimension {dim} is not 2**{n_qubits}")

    problems: list[tuple[type, str, float]] = []
    trace_err = abs(complex(arr.trace()) - 1.0)
    if trace_err > TRACE_TOL:
        problems.append((TraceViolation, f"trace deviates from 1 by {trace_err:.3e}", trace_err))
    herm_err = float(np.abs(arr - arr.conj().T).max())
    if herm_err > HERMITICITY_TOL:
        problems.append(
            (HermiticityViolation, f"non-Hermitian by {herm_err:.3e}", herm_err)
        )
    hermitian_part = 0.5 * (arr + arr.conj().T)
    min_eig = float(np.linalg.eigvalsh(hermitian_part)[0])
    if min_eig < PSD_FLOOR:
        problems.append(
            (NegativityViolation, f"minimum eigenvalue {min_eig:.3e} below floor", -min_eig)
        )
    if problems:
        cls, msg, magnitude = problems[0]
        if len(problems) > 1:
            msg += "; also: " + "; ".join(p[1] for p in problems[1:])
        raise cls(msg, magnitude)

    arr.setflags(write=False)
    return DensityMatrix(matrix=arr, n_qubits=n_qubits)
