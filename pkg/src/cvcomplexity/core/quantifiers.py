"""Nonclassicality and non-Gaussianity quantifiers to compare with the complexity."""

import math

import numpy as np
from scipy.special import roots_laguerre, xlogy

from cvcomplexity.core.errors import (
    BadParameter,
    CvComplexityError,
    Unsupported,
    ZeroMeanPhoton,
)
from cvcomplexity.core.phasespace import fock_s_field
from cvcomplexity.core.quadrature import integrate_radial
from cvcomplexity.core.states import (
    gaussian_number_variance,
    gaussian_parameters,
    number_moments,
    to_fock_matrix,
    vacuum_population,
    validate,
)
from cvcomplexity.core.types import (
    CheckedState,
    CoherentMixture,
    Fock,
    PhaseAveragedCoherent,
    QuadratureConfig,
    QuantifierRow,
    StateSpec,
)

MEAN_PHOTON_FLOOR = 1e-14
VACUUM_FLOOR = 1e-14


def mandel_q(state: StateSpec | CheckedState) -> float:
    """Mandel Q = (<a^+2 a^2> - <a^+ a>^2) / <a^+ a>.

    Gaussian states use the closed form in (nbar, r, theta, xi); other states
    use their photon-number moments.

    Raises:
        ZeroMeanPhoton: For the vacuum, where the ratio is undefined.
    """
    checked = validate(state)
    params = gaussian_parameters(checked)
    mean, second = number_moments(checked)
    if mean < MEAN_PHOTON_FLOOR:
        raise ZeroMeanPhoton(
            f"Mandel Q is undefined for {checked.family} with zero mean photon number"
        )
    if params is not None:
        return gaussian_number_variance(*params) / mean - 1.0
    return (second - mean * mean) / mean


def nonclassical_depth(state: StateSpec | CheckedState) -> tuple[float, float]:
    """Nonclassical depth and its un-floored variant, (tau, tau_unfloored).

    Gaussian states use ((nbar+1) tanh r - nbar) / (1 + tanh r). Mixtures of
    coherent states have depth 0. Any state without vacuum population has the
    maximal depth 1, which covers Fock, photon-added, odd cat states.

    Raises:
        Unsupported: For other states, whose depth has no closed form here.
    """
    checked = validate(state)
    params = gaussian_parameters(checked)
    if params is not None:
        nbar, r, _, _ = params
        t = math.tanh(r)
        tilde = ((nbar + 1.0) * t - nbar) / (1.0 + t)
        return max(0.0, tilde), tilde
    if isinstance(checked.spec, (CoherentMixture, PhaseAveragedCoherent)):
        return 0.0, 0.0
    if isinstance(checked.spec, Fock) and checked.spec.k == 0:
        return 0.0, 0.0
    if vacuum_population(checked) < VACUUM_FLOOR:
        return 1.0, 1.0
    raise Unsupported(f"Nonclassical depth is not available for {checked.family}")


def skew_info_nonclassicality(
    state: StateSpec | CheckedState, trunc_tol: float = 1e-10
) -> float:
    """Skew-information nonclassicality.

    Evaluated as tr(rho a^+ a) + 1/2 - tr(sqrt(rho) a^+ sqrt(rho) a).

    Closed forms for Gaussian and Fock states; other states are truncated to
    the number basis and use the eigendecomposition of rho.
    """
    checked = validate(state)
    params = gaussian_parameters(checked)
    if params is not None:
        nbar, r, _, _ = params
        return (0.5 + nbar - math.sqrt(nbar * (nbar + 1.0))) * math.cosh(2.0 * r)
    if isinstance(checked.spec, Fock):
        return checked.spec.k + 0.5

    rho = to_fock_matrix(checked, trunc_tol=trunc_tol).matrix.matrix
    return _skew_info_matrix(rho)


def _skew_info_matrix(rho: np.ndarray) -> float:
    dim = rho.shape[0]
    evals, evecs = np.linalg.eigh(0.5 * (rho + rho.conj().T))
    root = (evecs * np.sqrt(np.clip(evals, 0.0, None))) @ evecs.conj().T
    lower = np.diag(np.sqrt(np.arange(1, dim)), 1)
    raise_op = lower.conj().T
    mean = float(np.dot(np.arange(dim), np.real(np.diag(rho))))
    overlap = float(np.trace(root @ raise_op @ root @ lower).real)
    return mean + 0.5 - overlap


def wigner_negativity(
    state: StateSpec | CheckedState, cfg: QuadratureConfig | None = None
) -> tuple[float, float]:
    """Integrated negative part of the Wigner function, (delta, err_est).

    Zero for Gaussian states. For |k> the signed Wigner function is integrated
    radially in absolute value, with breakpoints at the zeros of L_k(4 r^2).

    Raises:
        Unsupported: For states that are neither Gaussian nor Fock.
        NoConvergence: If the radial integral does not converge.
    """
    checked = validate(state)
    cfg = cfg or QuadratureConfig()
    if gaussian_parameters(checked) is not None:
        return 0.0, 0.0
    if not isinstance(checked.spec, Fock):
        raise Unsupported(f"Wigner negativity is not available for {checked.family}")

    k = checked.spec.k
    if k == 0:
        return 0.0, 0.0
    zeros, _ = roots_laguerre(k)
    breakpoints = 0.5 * np.sqrt(zeros)

    def profile(r: np.ndarray) -> np.ndarray:
        w, _, _ = fock_s_field(k, r, np.zeros_like(r), 0.0, grad=False)
        return np.abs(w)

    total, err = integrate_radial(profile, math.sqrt(k + 1.0), cfg, breakpoints)
    return max(total - 1.0, 0.0), err


def nongaussianity_fock(k: int) -> tuple[float, float]:
    """Non-Gaussianity of |k> as (delta_A, delta_B).

    delta_A = (1 + 1/(2k+1))/2 - k^k/(k+1)^{k+1} and
    delta_B = (k+1) ln(k+1) - k ln k, with 0 ln 0 = 0.
    """
    if k < 0:
        raise BadParameter(f"k must be >= 0, got {k}")
    ratio = math.exp(xlogy(k, k) - (k + 1) * math.log(k + 1))
    delta_a = 0.5 * (1.0 + 1.0 / (2 * k + 1)) - ratio
    delta_b = float(xlogy(k + 1, k + 1) - xlogy(k, k))
    return delta_a, delta_b


def quantifier_row(
    state: StateSpec | CheckedState, cfg: QuadratureConfig | None = None
) -> QuantifierRow:
    """Every quantifier available for the state; unavailable entries stay None."""
    checked = validate(state)

    def attempt(fn):
        try:
            return fn()
        except (Unsupported, ZeroMeanPhoton):
            return None

    depth = attempt(lambda: nonclassical_depth(checked))
    negativity = attempt(lambda: wigner_negativity(checked, cfg))

    delta = None
    if gaussian_parameters(checked) is not None:
        delta = (0.0, 0.0)
    elif isinstance(checked.spec, Fock):
        delta = nongaussianity_fock(checked.spec.k)

    try:
        skew = skew_info_nonclassicality(checked, (cfg or QuadratureConfig()).trunc_tol)
    except CvComplexityError:
        skew = None

    return QuantifierRow(
        mandel_q=attempt(lambda: mandel_q(checked)),
        nonclassical_depth=None if depth is None else depth[0],
        nonclassical_depth_unfloored=None if depth is None else depth[1],
        skew_info=skew,
        wigner_negativity=None if negativity is None else negativity[0],
        delta_A=None if delta is None else delta[0],
        delta_B=None if delta is None else delta[1],
    )
