"""Type definitions shared by the core modules."""

from enum import Enum
from typing import Annotated, Any, Literal

import numpy as np
from pydantic import (
    BaseModel,
    BeforeValidator,
    ConfigDict,
    Field,
    PlainSerializer,
)


def _coerce_complex(value: Any) -> complex:
    """Accept complex, real, {"re", "im"} mappings and [re, im] pairs."""
    if isinstance(value, dict):
        return complex(float(value.get("re", 0.0)), float(value.get("im", 0.0)))
    if isinstance(value, (list, tuple)) and len(value) == 2:
        return complex(float(value[0]), float(value[1]))
    return complex(value)


ComplexAmplitude = Annotated[
    complex,
    BeforeValidator(_coerce_complex),
    PlainSerializer(lambda z: {"re": z.real, "im": z.imag}, return_type=dict),
]


class _Frozen(BaseModel):
    model_config = ConfigDict(frozen=True)


# ---------------------------------------------------------------------------
# State families
# ---------------------------------------------------------------------------


class Coherent(_Frozen):
    """Coherent state |beta>."""

    family: Literal["coherent"] = "coherent"
    beta: ComplexAmplitude = 0j


class Thermal(_Frozen):
    """Thermal state with mean photon number nbar."""

    family: Literal["thermal"] = "thermal"
    nbar: float


class Fock(_Frozen):
    """Number state |k>."""

    family: Literal["fock"] = "fock"
    k: int


class Gaussian(_Frozen):
    """Displaced squeezed thermal state D(xi) S(r e^{i theta}) rho_th S^+ D^+."""

    family: Literal["gaussian"] = "gaussian"
    nbar: float = 0.0
    r: float = 0.0
    theta: float = 0.0
    xi: ComplexAmplitude = 0j


class PhotonAddedThermal(_Frozen):
    """k-photon-added thermal state, proportional to a^+k rho_th a^k."""

    family: Literal["photon_added_thermal"] = "photon_added_thermal"
    k: int
    nbar: float


class PhotonAddedCoherent(_Frozen):
    """Photon-added coherent state a^+|beta> / sqrt(1 + |beta|^2)."""

    family: Literal["photon_added_coherent"] = "photon_added_coherent"
    beta: ComplexAmplitude


class Cat(_Frozen):
    """Superposition (|beta> + e^{i phi}|-beta>) / N_beta."""

    family: Literal["cat"] = "cat"
    beta: ComplexAmplitude
    phi: float = 0.0


class CoherentMixture(_Frozen):
    """Equal-weight mixture of |beta> and |-beta>."""

    family: Literal["coherent_mixture"] = "coherent_mixture"
    beta: ComplexAmplitude


class PhaseAveragedCoherent(_Frozen):
    """Coherent state with a uniformly averaged phase (Poissonian diagonal)."""

    family: Literal["phase_averaged_coherent"] = "phase_averaged_coherent"
    beta_mod: float


class FockMatrix(_Frozen):
    """Generic density matrix in a truncated number basis.

    Real and imaginary parts are stored as nested lists so the model stays
    JSON-native; use `matrix` to get the complex numpy array.
    """

    family: Literal["fock_matrix"] = "fock_matrix"
    dim: int
    re: list[list[float]]
    im: list[list[float]] | None = None

    @property
    def matrix(self) -> np.ndarray:
        rho = np.asarray(self.re, dtype=float).astype(complex)
        if self.im is not None:
            rho = rho + 1j * np.asarray(self.im, dtype=float)
        return rho

    @classmethod
    def from_array(cls, rho: np.ndarray) -> "FockMatrix":
        rho = np.asarray(rho, dtype=complex)
        im = rho.imag.tolist() if np.any(rho.imag) else None
        return cls(dim=rho.shape[0], re=rho.real.tolist(), im=im)


StateSpec = Annotated[
    Coherent
    | Thermal
    | Fock
    | Gaussian
    | PhotonAddedThermal
    | PhotonAddedCoherent
    | Cat
    | CoherentMixture
    | PhaseAveragedCoherent
    | FockMatrix,
    Field(discriminator="family"),
]


class CheckedState(BaseModel):
    """A validated state with normalized parameters.

    Attributes:
        spec: The normalized family description (angles reduced to [0, 2 pi),
            FockMatrix hermitized and trace-normalized).
        rho: The normalized density matrix for FockMatrix inputs, else None.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    spec: StateSpec
    rho: np.ndarray | None = None

    @property
    def family(self) -> str:
        return self.spec.family


class TruncatedState(_Frozen):
    """Result of projecting a state onto the first `dim` number states."""

    matrix: FockMatrix
    dim: int
    retained_trace: float


class PhasePoint(_Frozen):
    """Phase-space coordinate alpha = x + i y."""

    x: float
    y: float

    @property
    def alpha(self) -> complex:
        return complex(self.x, self.y)

    @classmethod
    def from_complex(cls, alpha: complex) -> "PhasePoint":
        return cls(x=alpha.real, y=alpha.imag)


# ---------------------------------------------------------------------------
# Numerical configuration and results
# ---------------------------------------------------------------------------


class QuadratureConfig(_Frozen):
    """Integration policy shared by every phase-space functional.

    Attributes:
        radius_margin: Half-width of the integration domain in units of the
            distribution's spread.
        target_rel_tol: Relative tolerance on every integral.
        max_subdivisions: Maximum number of adaptive refinement rounds.
        floor_eps: Integrand values below this count as zero in log/ratio terms.
        abs_tol: Absolute tolerance floor for integrals close to zero.
        initial_panels: Panels per axis before any refinement.
        trunc_tol: Probability allowed to be lost by Fock truncation.
        pure_shortcut: Use I = 1 for provably pure families instead of
            integrating the Fisher density.
    """

    radius_margin: float = Field(default=8.0, gt=0)
    target_rel_tol: float = Field(default=1e-8, gt=0, lt=1)
    max_subdivisions: int = Field(default=20, ge=1)
    floor_eps: float = Field(default=1e-300, gt=0)
    abs_tol: float = Field(default=1e-13, ge=0)
    initial_panels: int = Field(default=16, ge=1)
    trunc_tol: float = Field(default=1e-10, gt=0, lt=1)
    pure_shortcut: bool = True


class Method(str, Enum):
    """How a report was obtained."""

    closed_form = "closed_form"
    quadrature = "quadrature"


class ComplexityReport(_Frozen):
    """Entropy, Fisher information and complexity of one state at one ordering."""

    family: str
    s: float = -1.0
    entropy: float
    fisher: float
    complexity: float
    err_entropy: float = 0.0
    err_fisher: float = 0.0
    err_complexity: float = 0.0
    method: Method
    config: QuadratureConfig


class QuantifierRow(_Frozen):
    """Comparison quantifiers for one state; None marks an unsupported entry."""

    mandel_q: float | None = None
    nonclassical_depth: float | None = None
    nonclassical_depth_unfloored: float | None = None
    skew_info: float | None = None
    wigner_negativity: float | None = None
    delta_A: float | None = None
    delta_B: float | None = None


class GaussianMoments(_Frozen):
    """Coefficients of the (s-ordered) Gaussian quasiprobability."""

    s: float = -1.0
    delta: float
    a: float
    b: float


class GaussianPoint(_Frozen):
    """A point on the Gaussian energy-constraint surface."""

    nbar: float
    r: float
    xi_abs: float
    complexity: float


class GaussianExtrema(_Frozen):
    """Outcome of the constrained grid search over Gaussian states."""

    energy: float
    maximum: GaussianPoint
    minimum: GaussianPoint
    evaluations: int


class CheckResult(_Frozen):
    """One pass/fail line of a verification suite."""

    suite: str
    name: str
    passed: bool
    deviation: float
    tolerance: float
    detail: str = ""
