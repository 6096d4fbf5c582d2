"""Husimi function, its gradient and s-ordered quasiprobabilities.

Every routine has a scalar form taking a PhasePoint (or complex) and a
vectorized form taking coordinate arrays; the quadrature engine only uses the
vectorized forms. Values are normalized against d^2 alpha / pi.

Closed forms are used per family wherever they exist, including the
s-ordered fields of Fock, photon-added and cat states. Below the Husimi order
(s < -1) FockMatrix states are smoothed numerically: the Husimi function is
convolved with a Gaussian kernel of width (-1 - s)/2, using Gauss-Hermite
nodes centred on the product of the kernel and the state's own Gaussian
envelope, which makes the rule exact for polynomial-times-Gaussian Husimi
functions.
"""

import functools
import math

import numpy as np
from numpy.polynomial.hermite import hermgauss
from pydantic import BaseModel, ConfigDict
from scipy.special import eval_genlaguerre, eval_laguerre, gammaln, i0e, i1e, xlogy

from cvcomplexity.core.closedform import gaussian_moments, gaussian_ordering_bound
from cvcomplexity.core.errors import OrderingNotAdmissible, Unsupported
from cvcomplexity.core.states import (
    cat_norm_squared,
    gaussian_parameters,
    to_fock_matrix,
    validate,
)
from cvcomplexity.core.types import (
    Cat,
    CheckedState,
    CoherentMixture,
    Fock,
    FockMatrix,
    PhaseAveragedCoherent,
    PhasePoint,
    PhotonAddedCoherent,
    PhotonAddedThermal,
    StateSpec,
)

HUSIMI_ORDER = -1.0
CHUNK = 4096

Fields = tuple[np.ndarray, np.ndarray | None, np.ndarray | None]


class Support(BaseModel):
    """Where a quasiprobability lives: quadrature hints for one state."""

    model_config = ConfigDict(frozen=True)

    center: PhasePoint
    scale: float
    radial: bool


def _as_alpha(alpha: PhasePoint | complex) -> complex:
    return alpha.alpha if isinstance(alpha, PhasePoint) else complex(alpha)


def _is_husimi(s: float) -> bool:
    return s == HUSIMI_ORDER


def _flat(x, y) -> tuple[np.ndarray, np.ndarray, tuple[int, ...]]:
    x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    return x.ravel(), y.ravel(), x.shape


def _reshape(fields: Fields, shape: tuple[int, ...]) -> Fields:
    return tuple(None if f is None else f.reshape(shape) for f in fields)


# ---------------------------------------------------------------------------
# Closed-form fields
# ---------------------------------------------------------------------------


def _gaussian_field(
    params: tuple[float, float, float, complex],
    x: np.ndarray,
    y: np.ndarray,
    s: float,
    grad: bool,
) -> Fields:
    nbar, r, theta, xi = params
    m = gaussian_moments(nbar, r, s)
    u = x - xi.real
    v = y - xi.imag
    cos_t, sin_t = math.cos(theta), math.sin(theta)
    quad = cos_t * (u * u - v * v) + 2.0 * sin_t * u * v
    value = np.exp((-m.a * (u * u + v * v) + 2.0 * m.b * quad) / (2.0 * m.delta))
    value /= math.sqrt(m.delta)
    if not grad:
        return value, None, None
    gx = -value * (m.a * u - 2.0 * m.b * (cos_t * u + sin_t * v)) / m.delta
    gy = -value * (m.a * v - 2.0 * m.b * (sin_t * u - cos_t * v)) / m.delta
    return value, gx, gy


def _fock_husimi(k: int, x: np.ndarray, y: np.ndarray, grad: bool) -> Fields:
    rsq = x * x + y * y
    log_norm = gammaln(k + 1)
    value = np.exp(xlogy(k, rsq) - rsq - log_norm)
    if not grad:
        return value, None, None
    if k == 0:
        radial = -2.0 * value
    else:
        radial = 2.0 * k * np.exp(xlogy(k - 1, rsq) - rsq - log_norm) - 2.0 * value
    return value, x * radial, y * radial


def fock_s_field(k: int, x: np.ndarray, y: np.ndarray, s: float, grad: bool = True) -> Fields:
    """s-ordered quasiprobability of |k> in its Laguerre form (any s != -1, s < 1).

    W_s = 2/(1-s) ((s+1)/(s-1))^k exp(-2|alpha|^2/(1-s)) L_k(4|alpha|^2/(1-s^2)).
    Signed for -1 < s < 1, positive for s < -1.
    """
    rsq = x * x + y * y
    arg = 4.0 * rsq / (1.0 - s * s)
    ratio = (-1.0 - s) / (1.0 - s)
    prefactor = (2.0 / (1.0 - s)) * ratio**k * np.exp(-2.0 * rsq / (1.0 - s))
    value = prefactor * eval_laguerre(k, arg)
    if not grad:
        return value, None, None
    d_laguerre = -eval_genlaguerre(k - 1, 1, arg) if k >= 1 else np.zeros_like(arg)
    d_rsq = -2.0 * value / (1.0 - s) + prefactor * d_laguerre * 4.0 / (1.0 - s * s)
    return value, 2.0 * x * d_rsq, 2.0 * y * d_rsq


def wigner_fock(k: int, alpha: PhasePoint | complex) -> float:
    """Signed Wigner function 2 (-1)^k e^{-2|alpha|^2} L_k(4|alpha|^2) of |k>."""
    a = _as_alpha(alpha)
    value, _, _ = fock_s_field(k, np.array([a.real]), np.array([a.imag]), 0.0, grad=False)
    return float(value[0])


def _phase_averaged_field(
    b: float, x: np.ndarray, y: np.ndarray, s: float, grad: bool
) -> Fields:
    a = 2.0 / (1.0 - s)
    rho = np.hypot(x, y)
    z = 2.0 * a * b * rho
    bessel0 = i0e(z)
    value = a * np.exp(-a * (rho - b) ** 2) * bessel0
    if not grad:
        return value, None, None
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(rho > 0.0, i1e(z) / (bessel0 * rho), a * b)
    radial = value * (-2.0 * a + 2.0 * a * b * ratio)
    return value, x * radial, y * radial


def _coherent_s_field(
    beta: complex, x: np.ndarray, y: np.ndarray, s: float, grad: bool
) -> Fields:
    return _gaussian_field((0.0, 0.0, 0.0, beta), x, y, s, grad)


def _mixture_field(
    beta: complex, x: np.ndarray, y: np.ndarray, s: float, grad: bool
) -> Fields:
    plus = _coherent_s_field(beta, x, y, s, grad)
    minus = _coherent_s_field(-beta, x, y, s, grad)
    value = 0.5 * (plus[0] + minus[0])
    if not grad:
        return value, None, None
    return value, 0.5 * (plus[1] + minus[1]), 0.5 * (plus[2] + minus[2])


def _photon_added_thermal_field(
    k: int, nbar: float, x: np.ndarray, y: np.ndarray, s: float, grad: bool
) -> Fields:
    # W_s(alpha) = W_s'(alpha / sqrt(nbar + 1) | k) / (nbar + 1): the thermal
    # envelope rescales the smoothing width (-1 - s)/2 by 1/(nbar + 1).
    lam = nbar + 1.0
    root = math.sqrt(lam)
    if _is_husimi(s):
        value, gx, gy = _fock_husimi(k, x / root, y / root, grad)
    else:
        scaled = HUSIMI_ORDER - (HUSIMI_ORDER - s) / lam
        value, gx, gy = fock_s_field(k, x / root, y / root, scaled, grad)
    if not grad:
        return value / lam, None, None
    return value / lam, gx / (lam * root), gy / (lam * root)


def _photon_added_coherent_field(
    beta: complex, x: np.ndarray, y: np.ndarray, s: float, grad: bool
) -> Fields:
    # W_s = c e^{-c|alpha - beta|^2} (|m|^2 + c w) / (1 + |beta|^2)
    # with c = 2/(1 - s), w = (-1 - s)/2 and m = c (alpha + w beta).
    c = 2.0 / (1.0 - s)
    w = 0.5 * (HUSIMI_ORDER - s)
    u, v = x - beta.real, y - beta.imag
    envelope = c * np.exp(-c * (u * u + v * v)) / (1.0 + abs(beta) ** 2)
    mx = c * (x + w * beta.real)
    my = c * (y + w * beta.imag)
    poly = mx * mx + my * my + c * w
    value = poly * envelope
    if not grad:
        return value, None, None
    gx = 2.0 * c * (mx - u * poly) * envelope
    gy = 2.0 * c * (my - v * poly) * envelope
    return value, gx, gy


def _cat_field(
    beta: complex, phi: float, x: np.ndarray, y: np.ndarray, s: float, grad: bool
) -> Fields:
    # W_s = 2c e^{-S} [cosh(2cR) + e^{-d} cos(phi + 2cI)] / N^2 with c = 2/(1 - s),
    # S = c(|alpha|^2 + |beta|^2), R = Re(conj(alpha) beta), I = Im(alpha conj(beta))
    # and d = 2(1 - c)|beta|^2. With t = (phi - pi)/2 + cI the bracket is
    # 2 sinh^2(cR) + 2 sin^2(t) - expm1(-d) cos(2t), which stays accurate for the
    # odd cat at small beta, where the two coherent parts cancel.
    bx, by = beta.real, beta.imag
    c = 2.0 / (1.0 - s)
    norm = cat_norm_squared(beta, phi)
    fringe = math.expm1(-2.0 * (1.0 - c) * abs(beta) ** 2)
    re = c * (x * bx + y * by)
    turn = 0.5 * (phi - math.pi) + c * (y * bx - x * by)
    mag = np.abs(re)
    exponent = c * (x * x + y * y + abs(beta) ** 2)
    # 2|cR| <= S, so near never overflows
    near = np.exp(np.minimum(2.0 * mag - exponent, 0.0))
    far = np.exp(-exponent)
    sinh_sq = 0.25 * np.expm1(-2.0 * mag) ** 2 * near
    inner = 2.0 * sinh_sq + (2.0 * np.sin(turn) ** 2 - fringe * np.cos(2.0 * turn)) * far
    value = 2.0 * c * inner / norm
    if not grad:
        return value, None, None
    slope_r = -c * np.sign(re) * np.expm1(-4.0 * mag) * near
    slope_i = 2.0 * c * (1.0 + fringe) * np.sin(2.0 * turn) * far
    gx = 2.0 * c * (slope_r * bx - slope_i * by - 2.0 * c * x * inner) / norm
    gy = 2.0 * c * (slope_r * by + slope_i * bx - 2.0 * c * y * inner) / norm
    return value, gx, gy


def _matrix_field(
    rho: np.ndarray, x: np.ndarray, y: np.ndarray, grad: bool, envelope: bool = True
) -> Fields:
    """c^+ rho c with c_n = <n|alpha>; without the envelope e^{-|alpha|^2} if asked."""
    dim = rho.shape[0]
    n = np.arange(dim)
    log_fact = 0.5 * gammaln(n + 1)
    sqrt_n = np.sqrt(n)
    rho_t = rho.T
    value = np.empty(x.shape)
    gx = np.empty(x.shape) if grad else None
    gy = np.empty(x.shape) if grad else None
    for start in range(0, x.size, CHUNK):
        xs = x[start : start + CHUNK]
        ys = y[start : start + CHUNK]
        rsq = xs * xs + ys * ys
        mod = np.sqrt(rsq)
        log_mag = xlogy(n[None, :], mod[:, None]) - log_fact[None, :]
        if envelope:
            log_mag = log_mag - 0.5 * rsq[:, None]
        phase = np.exp(1j * n[None, :] * np.arctan2(ys, xs)[:, None])
        c = np.exp(log_mag) * phase
        rho_c = c @ rho_t
        q = np.sum(np.conj(c) * rho_c, axis=1).real
        value[start : start + CHUNK] = q
        if grad:
            d = np.zeros_like(c)
            d[:, 1:] = sqrt_n[None, 1:] * c[:, :-1]
            cross = np.sum(np.conj(c) * (d @ rho_t), axis=1)
            scale = 2.0 if envelope else 0.0
            gx[start : start + CHUNK] = -scale * xs * q + 2.0 * cross.real
            gy[start : start + CHUNK] = -scale * ys * q - 2.0 * cross.imag
    return value, gx, gy


@functools.lru_cache(maxsize=32)
def _cat_density(beta: complex, phi: float, trunc_tol: float) -> np.ndarray:
    truncated = to_fock_matrix(Cat(beta=beta, phi=phi), trunc_tol=trunc_tol)
    return truncated.matrix.matrix


def _density_of(state: CheckedState, trunc_tol: float = 1e-10) -> np.ndarray:
    spec = state.spec
    if state.rho is not None:
        return state.rho
    if isinstance(spec, Cat):
        return _cat_density(spec.beta, spec.phi, trunc_tol)
    return to_fock_matrix(state, trunc_tol=trunc_tol).matrix.matrix


# ---------------------------------------------------------------------------
# Husimi function
# ---------------------------------------------------------------------------


def husimi_fields(
    state: StateSpec | CheckedState, x: np.ndarray, y: np.ndarray, grad: bool = True
) -> Fields:
    """Vectorized (Q, dQ/dx, dQ/dy); the gradient entries are None if not asked."""
    checked = validate(state)
    x, y, shape = _flat(x, y)
    return _reshape(_husimi_flat(checked, x, y, grad), shape)


def _husimi_flat(checked: CheckedState, x: np.ndarray, y: np.ndarray, grad: bool) -> Fields:
    params = gaussian_parameters(checked)
    if params is not None:
        return _gaussian_field(params, x, y, HUSIMI_ORDER, grad)

    match checked.spec:
        case Fock(k=k):
            return _fock_husimi(k, x, y, grad)
        case PhotonAddedThermal(k=k, nbar=nbar):
            return _photon_added_thermal_field(k, nbar, x, y, HUSIMI_ORDER, grad)
        case PhotonAddedCoherent(beta=beta):
            return _photon_added_coherent_field(beta, x, y, HUSIMI_ORDER, grad)
        case Cat(beta=beta, phi=phi):
            return _cat_field(beta, phi, x, y, HUSIMI_ORDER, grad)
        case CoherentMixture(beta=beta):
            return _mixture_field(beta, x, y, HUSIMI_ORDER, grad)
        case PhaseAveragedCoherent(beta_mod=b):
            return _phase_averaged_field(b, x, y, HUSIMI_ORDER, grad)
        case FockMatrix():
            return _matrix_field(checked.rho, x, y, grad)
    raise Unsupported(f"No Husimi function for {checked.family}")


def husimi_q(state: StateSpec | CheckedState, alpha: PhasePoint | complex) -> float:
    """Q(alpha | rho) = <alpha| rho |alpha>."""
    a = _as_alpha(alpha)
    value, _, _ = husimi_fields(state, np.array([a.real]), np.array([a.imag]), grad=False)
    return max(float(value[0]), 0.0)


def husimi_grad(
    state: StateSpec | CheckedState, alpha: PhasePoint | complex
) -> tuple[float, float]:
    """Analytic (dQ/dx, dQ/dy)."""
    a = _as_alpha(alpha)
    _, gx, gy = husimi_fields(state, np.array([a.real]), np.array([a.imag]))
    return float(gx[0]), float(gy[0])


def husimi_grad_fd(
    state: StateSpec | CheckedState,
    alpha: PhasePoint | complex,
    h: float | None = None,
) -> tuple[float, float]:
    """Central finite-difference gradient, for cross-checking the analytic one."""
    a = _as_alpha(alpha)
    h = 1e-5 * (1.0 + abs(a)) if h is None else h
    xs = np.array([a.real + h, a.real - h, a.real, a.real])
    ys = np.array([a.imag, a.imag, a.imag + h, a.imag - h])
    q, _, _ = husimi_fields(state, xs, ys, grad=False)
    return float((q[0] - q[1]) / (2.0 * h)), float((q[2] - q[3]) / (2.0 * h))


# ---------------------------------------------------------------------------
# s-ordered quasiprobabilities
# ---------------------------------------------------------------------------


def ordering_bound(state: StateSpec | CheckedState) -> tuple[float, bool]:
    """Admissible orderings as (bound, inclusive): s < bound, or s <= bound."""
    checked = validate(state)
    params = gaussian_parameters(checked)
    if params is not None:
        nbar, r, _, _ = params
        return min(1.0, gaussian_ordering_bound(nbar, r)), False
    if isinstance(checked.spec, (PhaseAveragedCoherent, CoherentMixture)):
        return 1.0, False
    return HUSIMI_ORDER, True


def s_admissible(state: StateSpec | CheckedState, s: float) -> bool:
    """Whether W_s is pointwise nonnegative for this state and implemented.

    Classical families need s < 1, Gaussian states s < 1 - 2 tau_m, and the
    remaining (nonclassical) families s <= -1.
    """
    if not math.isfinite(s):
        return False
    if _is_husimi(s):
        return True
    bound, inclusive = ordering_bound(state)
    return s <= bound if inclusive else s < bound


def _envelope_form(state: CheckedState, trunc_tol: float):
    """(polynomial part P, envelope exponent mu, envelope center m, nodes).

    The Husimi function factors as P(alpha) exp(-mu |alpha - m|^2).
    """
    match state.spec:
        case Fock(k=k):

            def poly(x, y):
                return np.exp(xlogy(k, x * x + y * y) - gammaln(k + 1))

            return poly, 1.0, 0j, k + 4
        case PhotonAddedThermal(k=k, nbar=nbar):
            lam = nbar + 1.0

            def poly(x, y):
                return np.exp(xlogy(k, (x * x + y * y) / lam) - gammaln(k + 1)) / lam

            return poly, 1.0 / lam, 0j, k + 4
        case PhotonAddedCoherent(beta=beta):
            norm = 1.0 + abs(beta) ** 2

            def poly(x, y):
                return (x * x + y * y) / norm

            return poly, 1.0, beta, 6
        case Cat() | FockMatrix():
            rho = _density_of(state, trunc_tol)

            def poly(x, y):
                value, _, _ = _matrix_field(rho, x, y, grad=False, envelope=False)
                return np.maximum(value, 0.0)

            return poly, 1.0, 0j, rho.shape[0] + 3
    raise Unsupported(f"No convolution form for {state.family}")


@functools.lru_cache(maxsize=16)
def _hermite_grid(nodes: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Tensor Gauss-Hermite nodes (u, v) and weights, flattened."""
    t, wt = hermgauss(nodes)
    zu, zv = (g.ravel() for g in np.meshgrid(t, t, indexing="ij"))
    return zu, zv, np.outer(wt, wt).ravel()


def _convolution_field(
    state: CheckedState,
    x: np.ndarray,
    y: np.ndarray,
    s: float,
    grad: bool,
    trunc_tol: float = 1e-10,
) -> Fields:
    poly, mu, center, nodes = _envelope_form(state, trunc_tol)
    w = 0.5 * (-1.0 - s)
    lam = mu + 1.0 / w
    root = math.sqrt(lam)
    zu, zv, node_weights = _hermite_grid(nodes)
    norm = 1.0 / (math.pi * lam * w)
    damping = mu / (w * lam)

    value = np.empty(x.shape)
    gx = np.empty(x.shape) if grad else None
    gy = np.empty(x.shape) if grad else None
    step = max(1, CHUNK // 16)
    for start in range(0, x.size, step):
        xs = x[start : start + step]
        ys = y[start : start + step]
        cx = (mu * center.real + xs / w) / lam
        cy = (mu * center.imag + ys / w) / lam
        bx = cx[:, None] + zu[None, :] / root
        by = cy[:, None] + zv[None, :] / root
        p = poly(bx.ravel(), by.ravel()).reshape(bx.shape)
        shift = damping * ((xs - center.real) ** 2 + (ys - center.imag) ** 2)
        with np.errstate(divide="ignore"):
            terms = node_weights[None, :] * np.exp(np.log(p) - shift[:, None])
        value[start : start + step] = norm * terms.sum(axis=1)
        if grad:
            kernel_x = -2.0 * (xs[:, None] - bx) / w
            kernel_y = -2.0 * (ys[:, None] - by) / w
            gx[start : start + step] = norm * np.sum(terms * kernel_x, axis=1)
            gy[start : start + step] = norm * np.sum(terms * kernel_y, axis=1)
    return value, gx, gy


def quasiprob_fields(
    state: StateSpec | CheckedState,
    x: np.ndarray,
    y: np.ndarray,
    s: float,
    grad: bool = True,
    trunc_tol: float = 1e-10,
) -> Fields:
    """Vectorized (W_s, dW_s/dx, dW_s/dy).

    Raises:
        OrderingNotAdmissible: If `s_admissible(state, s)` is false.
    """
    checked = validate(state)
    if _is_husimi(s):
        return husimi_fields(checked, x, y, grad)
    if not s_admissible(checked, s):
        raise OrderingNotAdmissible(
            f"s={s} is not an admissible ordering for {checked.family}"
        )
    x, y, shape = _flat(x, y)
    params = gaussian_parameters(checked)
    if params is not None:
        fields = _gaussian_field(params, x, y, s, grad)
    else:
        match checked.spec:
            case PhaseAveragedCoherent(beta_mod=b):
                fields = _phase_averaged_field(b, x, y, s, grad)
            case CoherentMixture(beta=beta):
                fields = _mixture_field(beta, x, y, s, grad)
            case Fock(k=k):
                fields = fock_s_field(k, x, y, s, grad)
            case PhotonAddedThermal(k=k, nbar=nbar):
                fields = _photon_added_thermal_field(k, nbar, x, y, s, grad)
            case PhotonAddedCoherent(beta=beta):
                fields = _photon_added_coherent_field(beta, x, y, s, grad)
            case Cat(beta=beta, phi=phi):
                fields = _cat_field(beta, phi, x, y, s, grad)
            case _:
                fields = _convolution_field(checked, x, y, s, grad, trunc_tol)
    return _reshape(fields, shape)


def quasiprob_s(
    state: StateSpec | CheckedState, alpha: PhasePoint | complex, s: float
) -> float:
    """W_s(alpha | rho) for an admissible ordering s."""
    a = _as_alpha(alpha)
    value, _, _ = quasiprob_fields(
        state, np.array([a.real]), np.array([a.imag]), s, grad=False
    )
    return float(value[0])


def quasiprob_s_grad(
    state: StateSpec | CheckedState, alpha: PhasePoint | complex, s: float
) -> tuple[float, float]:
    """Gradient of W_s at alpha."""
    a = _as_alpha(alpha)
    _, gx, gy = quasiprob_fields(state, np.array([a.real]), np.array([a.imag]), s)
    return float(gx[0]), float(gy[0])


def convolve_husimi(
    state: StateSpec | CheckedState, alpha: PhasePoint | complex, s: float
) -> tuple[float, tuple[float, float]]:
    """W_s by explicit Gaussian smoothing of Q, with its kernel-derivative gradient.

    Available for s < -1 on Fock, photon-added, cat and FockMatrix states.
    """
    checked = validate(state)
    if not s < HUSIMI_ORDER:
        raise OrderingNotAdmissible(f"Convolution needs s < -1, got s={s}")
    a = _as_alpha(alpha)
    value, gx, gy = _convolution_field(
        checked, np.array([a.real]), np.array([a.imag]), s, grad=True
    )
    return float(value[0]), (float(gx[0]), float(gy[0]))


# ---------------------------------------------------------------------------
# Integration hints
# ---------------------------------------------------------------------------


def _top_level(rho: np.ndarray, floor: float = 1e-14) -> int:
    populated = np.nonzero(np.real(np.diag(rho)) > floor)[0]
    return int(populated[-1]) if populated.size else 0


def support(state: StateSpec | CheckedState, s: float = HUSIMI_ORDER) -> Support:
    """Center, spread and radial symmetry of W_s for quadrature.

    The spread is widened by sqrt((1 - s)/2) below the Husimi order, where the
    smoothing kernel adds width.
    """
    checked = validate(state)
    spec = checked.spec
    center = PhasePoint(x=0.0, y=0.0)
    params = gaussian_parameters(checked)
    if params is not None:
        nbar, r, _, xi = params
        center = PhasePoint.from_complex(xi)
        scale = max(1.0, math.exp(r) * math.sqrt(nbar + 1.0))
        radial = r == 0.0 and xi == 0
    else:
        match spec:
            case Fock(k=k):
                scale, radial = math.sqrt(k + 1.0), True
            case PhotonAddedThermal(k=k, nbar=nbar):
                scale, radial = math.sqrt(k + 1.0) * math.sqrt(nbar + 1.0), True
            case PhotonAddedCoherent(beta=beta) | Cat(beta=beta) | CoherentMixture(
                beta=beta
            ):
                scale, radial = abs(beta) + 2.0, False
            case PhaseAveragedCoherent(beta_mod=b):
                scale, radial = b + 2.0, True
            case FockMatrix():
                rho = checked.rho
                scale = math.sqrt(_top_level(rho) + 1.0)
                radial = bool(np.allclose(rho, np.diag(np.diag(rho)), atol=1e-14))
            case _:
                raise Unsupported(f"No support hint for {checked.family}")
    scale *= max(1.0, math.sqrt(0.5 * (1.0 - s)))
    return Support(center=center, scale=scale, radial=radial)

