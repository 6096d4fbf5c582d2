"""State model: validation, wire codec, Fock-basis truncation and photon moments.

Every state family is a frozen pydantic model (see `core.types`). `validate`
turns a raw description into a `CheckedState`, the handle accepted by all the
phase-space and functional routines. Non-Gaussian states can be projected onto
a truncated number basis with `to_fock_matrix`; squeezed Gaussian states never
are, their quantities come from closed forms.
"""

import json
import math
from collections.abc import Mapping
from typing import Any

import numpy as np
from pydantic import TypeAdapter, ValidationError
from scipy.special import eval_genlaguerre, gammaln, xlogy

from cvcomplexity.core.errors import (
    BadParameter,
    DegenerateCat,
    NonPhysical,
    SpecParseError,
    TruncationTooSevere,
    Unsupported,
)
from cvcomplexity.core.types import (
    Cat,
    CheckedState,
    Coherent,
    CoherentMixture,
    Fock,
    FockMatrix,
    Gaussian,
    PhaseAveragedCoherent,
    PhotonAddedCoherent,
    PhotonAddedThermal,
    StateSpec,
    Thermal,
    TruncatedState,
)

TWO_PI = 2.0 * math.pi

TRACE_TOL = 1e-8
PSD_TOL = 1e-10
MAX_DIMENSION = 4096

_STATE_ADAPTER: TypeAdapter[StateSpec] = TypeAdapter(StateSpec)


# ---------------------------------------------------------------------------
# Wire codec
# ---------------------------------------------------------------------------


def parse_state_spec(payload: str | bytes | Mapping[str, Any]) -> StateSpec:
    """Parse the JSON wire form {"family": ..., "params": {...}}.

    Args:
        payload: A JSON document or an already decoded mapping.

    Returns:
        The typed state description (not yet validated for physical ranges).

    Raises:
        SpecParseError: If the payload is not JSON, lacks a family, or its
            parameters do not match the family's fields.
    """
    if isinstance(payload, (str, bytes)):
        try:
            payload = json.loads(payload)
        except json.JSONDecodeError as e:
            raise SpecParseError(f"State spec is not valid JSON: {e}") from e

    if not isinstance(payload, Mapping) or "family" not in payload:
        raise SpecParseError("State spec must be an object with a 'family' key")

    params = payload.get("params") or {}
    if not isinstance(params, Mapping):
        raise SpecParseError("'params' must be an object")

    try:
        return _STATE_ADAPTER.validate_python({"family": payload["family"], **params})
    except ValidationError as e:
        raise SpecParseError(f"Invalid state spec: {e}") from e


def dump_state_spec(spec: StateSpec | CheckedState) -> dict[str, Any]:
    """Serialize a state description to its JSON wire form."""
    spec = _spec_of(spec)
    data = spec.model_dump(mode="json")
    family = data.pop("family")
    return {"family": family, "params": data}


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


def _spec_of(state: StateSpec | CheckedState) -> StateSpec:
    return state.spec if isinstance(state, CheckedState) else state


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise BadParameter(message)


def _finite(*values: float | complex) -> bool:
    return all(math.isfinite(abs(v)) for v in values)


def cat_norm_squared(beta: complex, phi: float) -> float:
    """N_beta^2 = 2 (1 + e^{-2|beta|^2} cos phi).

    Evaluated as 4 cos^2(phi/2) + 2 cos(phi) expm1(-2|beta|^2), with the
    cosine taken as sin((phi - pi)/2), so the odd cat keeps full relative
    precision as beta goes to zero.
    """
    half = 0.5 * (phi - math.pi)
    return 4.0 * math.sin(half) ** 2 + 2.0 * math.cos(phi) * math.expm1(
        -2.0 * abs(beta) ** 2
    )


def _cat_parity_factors(phi: float) -> tuple[complex, complex]:
    """(1 + e^{i phi}, 1 - e^{i phi}) up to the common phase 2 e^{i phi/2}."""
    half = 0.5 * (phi - math.pi)
    return complex(-math.sin(half), 0.0), complex(0.0, -math.cos(half))


def validate(spec: StateSpec | CheckedState) -> CheckedState:
    """Check a state description and return a normalized, immutable handle.

    Angles are reduced to [0, 2 pi). A FockMatrix is hermitized, checked for
    unit trace, renormalized and then checked for positivity.

    Args:
        spec: The state description. An existing CheckedState is returned as is.

    Returns:
        The checked state.

    Raises:
        BadParameter: If a family parameter is out of range or not finite.
        NonPhysical: If a density matrix has the wrong trace or a negative
            eigenvalue.
        DegenerateCat: If the cat-state normalization vanishes.
    """
    if isinstance(spec, CheckedState):
        return spec

    match spec:
        case Coherent(beta=beta) | PhotonAddedCoherent(beta=beta) | CoherentMixture(
            beta=beta
        ):
            _require(_finite(beta), "beta must be finite")
        case Thermal(nbar=nbar):
            _require(_finite(nbar) and nbar >= 0, f"nbar must be >= 0, got {nbar}")
        case Fock(k=k):
            _require(k >= 0, f"k must be >= 0, got {k}")
        case Gaussian(nbar=nbar, r=r, theta=theta, xi=xi):
            _require(_finite(nbar, r, theta, xi), "Gaussian parameters must be finite")
            _require(nbar >= 0, f"nbar must be >= 0, got {nbar}")
            _require(r >= 0, f"r must be >= 0, got {r}")
            spec = spec.model_copy(update={"theta": theta % TWO_PI})
        case PhotonAddedThermal(k=k, nbar=nbar):
            _require(k >= 1, f"k must be >= 1, got {k}")
            _require(_finite(nbar) and nbar >= 0, f"nbar must be >= 0, got {nbar}")
        case Cat(beta=beta, phi=phi):
            _require(_finite(beta, phi), "cat parameters must be finite")
            phi = phi % TWO_PI
            if cat_norm_squared(beta, phi) <= 0.0:
                raise DegenerateCat(
                    f"Cat state with beta={beta} and phi={phi} has vanishing norm"
                )
            spec = spec.model_copy(update={"phi": phi})
        case PhaseAveragedCoherent(beta_mod=b):
            _require(_finite(b) and b >= 0, f"beta_mod must be >= 0, got {b}")
        case FockMatrix():
            rho = _check_density_matrix(spec)
            return CheckedState(spec=FockMatrix.from_array(rho), rho=rho)

    return CheckedState(spec=spec)


def _check_density_matrix(spec: FockMatrix) -> np.ndarray:
    _require(spec.dim >= 1, f"dim must be >= 1, got {spec.dim}")
    rho = spec.matrix
    if rho.shape != (spec.dim, spec.dim):
        raise BadParameter(
            f"Matrix shape {rho.shape} does not match dim={spec.dim}"
        )
    if not np.all(np.isfinite(rho)):
        raise BadParameter("Density matrix entries must be finite")

    rho = 0.5 * (rho + rho.conj().T)
    trace = float(np.trace(rho).real)
    if abs(trace - 1.0) > TRACE_TOL:
        raise NonPhysical(f"Density matrix trace is {trace}, expected 1")
    rho = rho / trace

    min_eig = float(np.linalg.eigvalsh(rho)[0])
    if min_eig < -PSD_TOL:
        raise NonPhysical(f"Density matrix has negative eigenvalue {min_eig:.3e}")
    return rho


def gaussian_parameters(
    state: StateSpec | CheckedState,
) -> tuple[float, float, float, complex] | None:
    """(nbar, r, theta, xi) for the Gaussian families, else None."""
    match _spec_of(state):
        case Coherent(beta=beta):
            return 0.0, 0.0, 0.0, beta
        case Thermal(nbar=nbar):
            return nbar, 0.0, 0.0, 0j
        case Gaussian(nbar=nbar, r=r, theta=theta, xi=xi):
            return nbar, r, theta, xi
    return None


def is_pure_family(state: StateSpec | CheckedState) -> bool:
    """Whether the family describes a pure state for every parameter value."""
    spec = _spec_of(state)
    if isinstance(spec, (Coherent, Fock, Cat, PhotonAddedCoherent)):
        return True
    return isinstance(spec, Gaussian) and spec.nbar == 0.0


# ---------------------------------------------------------------------------
# Photon statistics
# ---------------------------------------------------------------------------


def mean_photon(state: StateSpec | CheckedState) -> float:
    """Mean photon number tr(rho a^+ a)."""
    return number_moments(state)[0]


def gaussian_number_variance(nbar: float, r: float, theta: float, xi: complex) -> float:
    """Photon-number variance of a displaced squeezed thermal state."""
    h = nbar + 0.5
    rotation = complex(math.cos(theta), math.sin(theta))
    mixed = xi * math.cosh(r) + xi.conjugate() * rotation * math.sinh(r)
    return h * h * math.cosh(4.0 * r) + 2.0 * h * abs(mixed) ** 2 - 0.25


def number_moments(state: StateSpec | CheckedState) -> tuple[float, float]:
    """First two factorial moments (<a^+ a>, <a^+2 a^2>).

    Closed forms are used for every named family; a FockMatrix uses its
    diagonal.
    """
    match _spec_of(state):
        case Coherent(beta=beta) | CoherentMixture(beta=beta):
            mu = abs(beta) ** 2
            return mu, mu * mu
        case Thermal(nbar=nbar):
            return nbar, 2.0 * nbar * nbar
        case Fock(k=k):
            return float(k), float(k * (k - 1))
        case Gaussian(nbar=nbar, r=r, theta=theta, xi=xi):
            mean = nbar + abs(xi) ** 2 + (2.0 * nbar + 1.0) * math.sinh(r) ** 2
            var = gaussian_number_variance(nbar, r, theta, xi)
            return mean, var - mean + mean * mean
        case PhotonAddedThermal(k=k, nbar=nbar):
            mean = k + (k + 1) * nbar
            var = (k + 1) * nbar * (nbar + 1.0)
            return mean, var - mean + mean * mean
        case PhotonAddedCoherent(beta=beta):
            mu = abs(beta) ** 2
            return (mu * mu + 3.0 * mu + 1.0) / (1.0 + mu), mu * (mu + 4.0)
        case Cat(beta=beta, phi=phi):
            mu = abs(beta) ** 2
            # 2 (1 - e^{-2mu} cos phi) is the norm of the opposite-parity cat
            opposite = cat_norm_squared(beta, phi + math.pi)
            return mu * opposite / cat_norm_squared(beta, phi), mu * mu
        case PhaseAveragedCoherent(beta_mod=b):
            return b * b, b**4
        case FockMatrix() as spec:
            p = np.real(np.diag(spec.matrix))
            n = np.arange(spec.dim, dtype=float)
            return float(np.dot(n, p)), float(np.dot(n * (n - 1.0), p))
    raise Unsupported(f"Unknown state family: {state!r}")


# ---------------------------------------------------------------------------
# Fock-basis representation
# ---------------------------------------------------------------------------


def coherent_amplitudes(beta: complex, dim: int) -> np.ndarray:
    """<n|beta> for n < dim, evaluated in log-space."""
    n = np.arange(dim)
    mod = abs(beta)
    log_mag = -0.5 * mod * mod + xlogy(n, mod) - 0.5 * gammaln(n + 1)
    return np.exp(log_mag) * np.exp(1j * n * np.angle(beta))


def displacement_matrix(xi: complex, dim: int) -> np.ndarray:
    """Matrix elements <m|D(xi)|n> for m, n < dim (generalized Laguerre form)."""
    m = np.arange(dim)[:, None]
    n = np.arange(dim)[None, :]
    lo = np.minimum(m, n)
    diff = np.abs(m - n)
    x = abs(xi) ** 2
    log_mag = (
        0.5 * (gammaln(lo + 1) - gammaln(lo + diff + 1))
        + xlogy(diff, abs(xi))
        - 0.5 * x
    )
    lag = eval_genlaguerre(lo, diff, x)
    phase_up = np.exp(1j * diff * np.angle(xi))
    phase_down = np.exp(1j * diff * np.angle(-np.conj(xi)))
    phase = np.where(m >= n, phase_up, phase_down)
    return np.exp(log_mag) * lag * phase


def auto_dimension(state: StateSpec | CheckedState) -> int:
    """Initial truncation dimension max(16, ceil(E + 8 sqrt(E + 1)))."""
    spec = _spec_of(state)
    if isinstance(spec, FockMatrix):
        return spec.dim
    energy = mean_photon(spec)
    dim = max(16, math.ceil(energy + 8.0 * math.sqrt(energy + 1.0)))
    if isinstance(spec, (Fock, PhotonAddedThermal)):
        dim = max(dim, spec.k + 16)
    return dim


def _pure(amplitudes: np.ndarray) -> np.ndarray:
    return np.outer(amplitudes, amplitudes.conj())


def _diagonal(log_weights: np.ndarray) -> np.ndarray:
    return np.diag(np.exp(log_weights)).astype(complex)


def _thermal_log_weights(nbar: float, dim: int) -> np.ndarray:
    n = np.arange(dim)
    x = nbar / (nbar + 1.0)
    return xlogy(n, x) - math.log1p(nbar)


def _build_matrix(spec: StateSpec, dim: int) -> np.ndarray:
    match spec:
        case Coherent(beta=beta):
            return _pure(coherent_amplitudes(beta, dim))
        case Thermal(nbar=nbar):
            return _diagonal(_thermal_log_weights(nbar, dim))
        case Fock(k=k):
            rho = np.zeros((dim, dim), dtype=complex)
            if k < dim:
                rho[k, k] = 1.0
            return rho
        case Gaussian(nbar=nbar, r=r, xi=xi):
            if r > 0.0:
                raise Unsupported(
                    "Squeezed Gaussian states are handled by closed forms, "
                    "not Fock truncation"
                )
            padded = 2 * dim
            thermal = np.exp(_thermal_log_weights(nbar, padded))
            disp = displacement_matrix(xi, padded)
            rho = (disp * thermal[None, :]) @ disp.conj().T
            return rho[:dim, :dim]
        case PhotonAddedThermal(k=k, nbar=nbar):
            n = np.arange(max(dim - k, 0))
            x = nbar / (nbar + 1.0)
            log_w = (
                gammaln(n + k + 1)
                - gammaln(n + 1)
                - gammaln(k + 1)
                + xlogy(n, x)
                - (k + 1) * math.log1p(nbar)
            )
            weights = np.zeros(dim)
            weights[k:] = np.exp(log_w)
            return np.diag(weights).astype(complex)
        case PhotonAddedCoherent(beta=beta):
            amps = np.zeros(dim, dtype=complex)
            amps[1:] = np.sqrt(np.arange(1, dim)) * coherent_amplitudes(beta, dim - 1)
            return _pure(amps / math.sqrt(1.0 + abs(beta) ** 2))
        case Cat(beta=beta, phi=phi):
            even, odd = _cat_parity_factors(phi)
            factors = np.where(np.arange(dim) % 2 == 0, even, odd)
            amps = 2.0 * coherent_amplitudes(beta, dim) * factors
            return _pure(amps / math.sqrt(cat_norm_squared(beta, phi)))
        case CoherentMixture(beta=beta):
            amps = coherent_amplitudes(beta, dim)
            parity = (-1.0) ** np.arange(dim)
            same_parity = 0.5 * (1.0 + np.outer(parity, parity))
            return _pure(amps) * same_parity
        case PhaseAveragedCoherent(beta_mod=b):
            n = np.arange(dim)
            return _diagonal(-b * b + xlogy(2 * n, b) - gammaln(n + 1))
        case FockMatrix() as fm:
            rho = np.zeros((dim, dim), dtype=complex)
            keep = min(dim, fm.dim)
            rho[:keep, :keep] = fm.matrix[:keep, :keep]
            return rho
    raise Unsupported(f"Unknown state family: {spec!r}")


def to_fock_matrix(
    state: StateSpec | CheckedState,
    dim: int | None = None,
    trunc_tol: float = 1e-10,
) -> TruncatedState:
    """Project a state onto the first `dim` number states.

    With `dim` omitted, the dimension starts at `auto_dimension` and doubles
    until the retained trace reaches 1 - trunc_tol.

    Args:
        state: The state to represent.
        dim: Truncation dimension, or None for automatic selection.
        trunc_tol: Probability that may be lost to truncation.

    Returns:
        The truncated (not renormalized) matrix with its retained trace.

    Raises:
        TruncationTooSevere: If the retained trace stays below 1 - trunc_tol.
        Unsupported: For squeezed Gaussian states.
    """
    checked = validate(state)
    spec = checked.spec
    if checked.rho is not None and dim is None:
        return TruncatedState(
            matrix=spec, dim=spec.dim, retained_trace=float(np.trace(checked.rho).real)
        )

    auto = dim is None
    current = auto_dimension(spec) if auto else dim
    if current < 1:
        raise BadParameter(f"dim must be >= 1, got {current}")

    while True:
        rho = _build_matrix(spec, current)
        retained = float(np.trace(rho).real)
        if retained >= 1.0 - trunc_tol:
            return TruncatedState(
                matrix=FockMatrix.from_array(rho), dim=current, retained_trace=retained
            )
        if not auto or current >= MAX_DIMENSION:
            raise TruncationTooSevere(
                f"dim={current} retains only {retained:.12f} of the trace "
                f"(tolerance {trunc_tol:g})"
            )
        current = min(2 * current, MAX_DIMENSION)


def vacuum_population(state: StateSpec | CheckedState) -> float:
    """<0|rho|0>."""
    match _spec_of(state):
        case Fock(k=k):
            return 1.0 if k == 0 else 0.0
        case PhotonAddedThermal() | PhotonAddedCoherent():
            return 0.0
        case Cat(beta=beta, phi=phi):
            even, _ = _cat_parity_factors(phi)
            overlap = 4.0 * abs(even) ** 2
            return overlap * math.exp(-abs(beta) ** 2) / cat_norm_squared(beta, phi)
        case FockMatrix() as fm:
            return float(fm.matrix[0, 0].real)
    truncated = to_fock_matrix(state, dim=1, trunc_tol=1.0)
    return float(truncated.matrix.matrix[0, 0].real)


# ---------------------------------------------------------------------------
# Random states
# ---------------------------------------------------------------------------


def haar_mixed_state(
    dim: int, rank: int | None = None, rng: np.random.Generator | None = None
) -> FockMatrix:
    """Random density matrix from the Ginibre construction G G^+ / tr.

    Args:
        dim: Hilbert-space dimension.
        rank: Number of Ginibre columns; defaults to `dim` (full rank).
        rng: Random generator; a fresh default generator when omitted.

    Returns:
        A FockMatrix spec with unit trace.
    """
    rng = rng if rng is not None else np.random.default_rng()
    rank = dim if rank is None else rank
    if dim < 1 or rank < 1:
        raise BadParameter("dim and rank must be >= 1")
    g = rng.standard_normal((dim, rank)) + 1j * rng.standard_normal((dim, rank))
    rho = g @ g.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return FockMatrix.from_array(rho / np.trace(rho).real)
