"""s-parametrized quasi-probability distributions of multi-qubit states
on the SU(2) sphere: Husimi (s = -1), Wigner (s = 0), Glauber (s = +1),
with acceleration-induced decoherence of GHZ-Werner states.
"""

from .errors import (
    DimensionError,
    HermiticityViolation,
    IndexOutOfRange,
    InvalidQuantumNumbers,
    MixingOutOfRange,
    NegativityViolation,
    NonRealResult,
    NotPowerOfTwoError,
    NotSquareError,
    ROutOfRange,
    SpinWignerError,
    TraceViolation,
    UnsupportedOrder,
    ValidationError,
)
from .linalg import (
    DensityMatrix,
    kron,
    kron_all,
    partial_trace,
    validate_density,
)
from .quasiprob import (
    ClosedFormComparison,
    ClosedFormVariant,
    QuasiProbSample,
    ScanReport,
    ThresholdResult,
    accelerated_ghz,
    closed_form,
    compare_closed_form,
    evaluate,
    grid_scan,
    grid_values,
    negativity_threshold,
    normalization_check,
    scan_min_vs_r,
)
from .rindler import (
    R_MAX,
    AccelerationConfig,
    CoefficientComparison,
    CoefficientTable,
    accelerate,
    coefficient_report,
    coefficient_table,
    unruh_isometry,
)
from .states import GhzWernerParams, ghz_pure, ghz_werner
from .su2kernel import (
    DistributionKind,
    KernelOperator,
    SphericalPoint,
    clebsch_gordan,
    ito,
    kernel,
    kernel_grid,
    kernel_n,
    spherical_harmonic,
)

__version__ = "0.1.0"

__all__ = [
    "AccelerationConfig",
    "ClosedFormComparison",
    "ClosedFormVariant",
    "CoefficientComparison",
    "CoefficientTable",
    "DensityMatrix",
    "DimensionError",
    "DistributionKind",
    "GhzWernerParams",
    "HermiticityViolation",
    "IndexOutOfRange",
    "InvalidQuantumNumbers",
    "KernelOperator",
    "MixingOutOfRange",
    "NegativityViolation",
    "NonRealResult",
    "NotPowerOfTwoError",
    "NotSquareError",
    "QuasiProbSample",
    "R_MAX",
    "ROutOfRange",
    "ScanReport",
    "SphericalPoint",
    "SpinWignerError",
    "ThresholdResult",
    "TraceViolation",
    "UnsupportedOrder",
    "ValidationError",
    "accelerate",
    "accelerated_ghz",
    "clebsch_gordan",
    "closed_form",
    "coefficient_report",
    "coefficient_table",
    "compare_closed_form",
    "evaluate",
    "ghz_pure",
    "ghz_werner",
    "grid_scan",
    "grid_values",
    "ito",
    "kernel",
    "kernel_grid",
    "kernel_n",
    "kron",
    "kron_all",
    "negativity_threshold",
    "normalization_check",
    "partial_trace",
    "scan_min_vs_r",
    "spherical_harmonic",
    "unruh_isometry",
    "validate_density",
]
