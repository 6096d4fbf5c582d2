"""Exception hierarchy for the complexity toolkit.

Every error raised on purpose by this package derives from CvComplexityError,
so callers (and the CLI exit-code mapping) can catch a single base class.
"""


class CvComplexityError(Exception):
    """Base exception for cvcomplexity errors."""

    pass


class SpecParseError(CvComplexityError):
    """Raised when a state or sweep description cannot be parsed."""

    pass


class BadParameter(CvComplexityError):
    """Raised when a family parameter lies outside its allowed range."""

    pass


class NonPhysical(CvComplexityError):
    """Raised when a density matrix is not a valid quantum state."""

    pass


class DegenerateCat(CvComplexityError):
    """Raised for the cat state whose normalization constant vanishes."""

    pass


class TruncationTooSevere(CvComplexityError):
    """Raised when a Fock truncation discards more probability than allowed."""

    pass


class Unsupported(CvComplexityError):
    """Raised when an operation is not implemented for a state family."""

    pass


class OrderingNotAdmissible(CvComplexityError):
    """Raised when W_s is not guaranteed nonnegative for the requested s."""

    pass


class ZeroMeanPhoton(CvComplexityError):
    """Raised when a quantity divides by a vanishing mean photon number."""

    pass


class NoConvergence(CvComplexityError):
    """Raised when adaptive quadrature misses its tolerance.

    Attributes:
        value: Best estimate of the integral when refinement stopped.
        err_est: Error estimate attached to that value.
    """

    def __init__(self, message: str, value: float, err_est: float) -> None:
        super().__init__(message)
        self.value = value
        self.err_est = err_est
