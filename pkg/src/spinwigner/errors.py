"""Exception types shared across the package."""


class SpinWignerError(Exception):
    """Base class for all package-specific errors."""


class DimensionError(SpinWignerError):
    """Operands have incompatible or unexpected dimensions."""


class ValidationError(SpinWignerError):
    """A matrix failed density-matrix validation.

    ``magnitude`` holds the measured size of the violation (0.0 when the
    failure is structural rather than numeric).
    """

    def __init__(self, message: str, magnitude: float = 0.0):
        super().__init__(message)
        self.magnitude = magnitude


class NotSquareError(ValidationError):
    """Matrix is not square."""


class NotPowerOfTwoError(ValidationError):
    """Matrix dimension is not 2**n_qubits."""


class TraceViolation(ValidationError):
    """Trace deviates from one beyond tolerance."""


class HermiticityViolation(ValidationError):
    """Matrix deviates from its conjugate transpose beyond tolerance."""


class NegativityViolation(ValidationError):
    """An eigenvalue lies below the positive-semidefinite floor."""


class InvalidQuantumNumbers(SpinWignerError):
    """Angular-momentum labels are inconsistent (non-half-integral, |m| > j, ...)."""


class UnsupportedOrder(SpinWignerError):
    """Requested multipole order is outside the implemented range."""


class ROutOfRange(SpinWignerError):
    """Acceleration parameter lies outside [0, pi/4]."""


class IndexOutOfRange(SpinWignerError):
    """Qubit index lies outside the register."""


class MixingOutOfRange(SpinWignerError):
    """Mixing weight lies outside [0, 1]."""


class NonRealResult(SpinWignerError):
    """A quantity that must be real carried a non-negligible imaginary part."""
