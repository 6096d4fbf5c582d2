"""Wehrl entropy, Fisher information and complexity of single-mode states.

The complexity is C = e^{S - 1} I, where S is the entropy of the Husimi
function and I is a quarter of the integrated |grad Q|^2 / Q. The s-ordered
variants replace Q by the s-ordered quasiprobability W_s.
"""

import math

import numpy as np

from cvcomplexity.core.closedform import (
    fock_closed,
    gaussian_closed,
    s_gaussian_closed,
)
from cvcomplexity.core.errors import OrderingNotAdmissible, Unsupported
from cvcomplexity.core.phasespace import (
    HUSIMI_ORDER,
    quasiprob_fields,
    s_admissible,
    support,
)
from cvcomplexity.core.quadrature import integrate_plane, integrate_radial
from cvcomplexity.core.states import gaussian_parameters, is_pure_family, validate
from cvcomplexity.core.types import (
    CheckedState,
    ComplexityReport,
    Fock,
    Method,
    PhotonAddedThermal,
    QuadratureConfig,
    StateSpec,
)


def _entropy_density(w: np.ndarray, floor: float) -> np.ndarray:
    positive = w > floor
    safe = np.where(positive, w, 1.0)
    return np.where(positive, -w * np.log(safe), 0.0)


def _fisher_density(
    w: np.ndarray, gx: np.ndarray, gy: np.ndarray, floor: float
) -> np.ndarray:
    positive = w > floor
    safe = np.where(positive, w, 1.0)
    return np.where(positive, 0.25 * (gx * gx + gy * gy) / safe, 0.0)


def _integrate_field(
    state: CheckedState, s: float, cfg: QuadratureConfig, fisher: bool
) -> tuple[float, float]:
    hint = support(state, s)

    def density(x: np.ndarray, y: np.ndarray) -> np.ndarray:
        w, gx, gy = quasiprob_fields(
            state, x, y, s, grad=fisher, trunc_tol=cfg.trunc_tol
        )
        if fisher:
            return _fisher_density(w, gx, gy, cfg.floor_eps)
        return _entropy_density(w, cfg.floor_eps)

    if hint.radial:
        return integrate_radial(
            lambda r: density(r, np.zeros_like(r)), hint.scale, cfg
        )
    return integrate_plane(density, hint.center, hint.scale, cfg)


def wehrl_entropy(
    state: StateSpec | CheckedState, cfg: QuadratureConfig | None = None
) -> tuple[float, float]:
    """Wehrl entropy S_W = -int Q ln Q d^2 alpha / pi.

    Args:
        state: The state.
        cfg: Quadrature configuration; defaults to QuadratureConfig().

    Returns:
        (S_W, err_est).

    Raises:
        NoConvergence: If the integral does not reach the requested tolerance.
    """
    return s_wehrl_entropy(state, HUSIMI_ORDER, cfg)


def fisher_information(
    state: StateSpec | CheckedState, cfg: QuadratureConfig | None = None
) -> tuple[float, float]:
    """Fisher information I = (1/4) int |grad Q|^2 / Q d^2 alpha / pi.

    Returns:
        (I, err_est).

    Raises:
        NoConvergence: If the integral does not reach the requested tolerance.
    """
    return s_fisher_information(state, HUSIMI_ORDER, cfg)


def s_wehrl_entropy(
    state: StateSpec | CheckedState, s: float, cfg: QuadratureConfig | None = None
) -> tuple[float, float]:
    """Entropy of the s-ordered quasiprobability, (value, err_est)."""
    checked = validate(state)
    _require_admissible(checked, s)
    return _integrate_field(checked, s, cfg or QuadratureConfig(), fisher=False)


def s_fisher_information(
    state: StateSpec | CheckedState, s: float, cfg: QuadratureConfig | None = None
) -> tuple[float, float]:
    """Fisher information of the s-ordered quasiprobability, (value, err_est)."""
    checked = validate(state)
    _require_admissible(checked, s)
    return _integrate_field(checked, s, cfg or QuadratureConfig(), fisher=True)


def _require_admissible(state: CheckedState, s: float) -> None:
    if not s_admissible(state, s):
        raise OrderingNotAdmissible(
            f"s={s} is not an admissible ordering for {state.family}"
        )


def _report(
    state: CheckedState,
    s: float,
    entropy: float,
    fisher: float,
    err_entropy: float,
    err_fisher: float,
    method: Method,
    cfg: QuadratureConfig,
) -> ComplexityReport:
    complexity = math.exp(entropy - 1.0) * fisher
    err_complexity = complexity * err_entropy
    if fisher > 0.0:
        err_complexity += complexity * err_fisher / fisher
    return ComplexityReport(
        family=state.family,
        s=s,
        entropy=entropy,
        fisher=fisher,
        complexity=complexity,
        err_entropy=err_entropy,
        err_fisher=err_fisher,
        err_complexity=err_complexity,
        method=method,
        config=cfg,
    )


def _closed_form_report(state: CheckedState, cfg: QuadratureConfig) -> ComplexityReport:
    params = gaussian_parameters(state)
    if params is not None:
        nbar, r, _, _ = params
        entropy, fisher, _ = gaussian_closed(nbar, r)
    else:
        match state.spec:
            case Fock(k=k):
                entropy, _ = fock_closed(k)
                fisher = 1.0
            case PhotonAddedThermal(k=k, nbar=nbar):
                # Rescaled Fock Husimi function: S gains ln(nbar+1), I loses a factor nbar+1.
                fock_entropy, _ = fock_closed(k)
                entropy = fock_entropy + math.log1p(nbar)
                fisher = 1.0 / (nbar + 1.0)
            case _:
                raise Unsupported(f"No closed form for {state.family}")
    return _report(
        state, HUSIMI_ORDER, entropy, fisher, 0.0, 0.0, Method.closed_form, cfg
    )


def complexity(
    state: StateSpec | CheckedState,
    cfg: QuadratureConfig | None = None,
    method: Method | None = None,
) -> ComplexityReport:
    """Complexity C = e^{S_W - 1} I of a state.

    Gaussian families use closed forms unless `method` forces quadrature;
    Fock and photon-added thermal states have closed forms on request. When
    cfg.pure_shortcut is set, provably pure families take I = 1 instead of
    integrating the Fisher density.

    Args:
        state: The state.
        cfg: Quadrature configuration; defaults to QuadratureConfig().
        method: Force `closed_form` or `quadrature`; None picks automatically.

    Returns:
        The complexity report.

    Raises:
        NoConvergence: If a quadrature does not converge.
        Unsupported: If a closed form is requested for a family without one.
    """
    checked = validate(state)
    cfg = cfg or QuadratureConfig()
    if method is None:
        has_closed_form = gaussian_parameters(checked) is not None
        method = Method.closed_form if has_closed_form else Method.quadrature
    if method is Method.closed_form:
        return _closed_form_report(checked, cfg)

    entropy, err_entropy = _integrate_field(checked, HUSIMI_ORDER, cfg, fisher=False)
    if cfg.pure_shortcut and is_pure_family(checked):
        fisher, err_fisher = 1.0, 0.0
    else:
        fisher, err_fisher = _integrate_field(checked, HUSIMI_ORDER, cfg, fisher=True)
    return _report(
        checked,
        HUSIMI_ORDER,
        entropy,
        fisher,
        err_entropy,
        err_fisher,
        Method.quadrature,
        cfg,
    )


def s_complexity(
    state: StateSpec | CheckedState,
    s: float,
    cfg: QuadratureConfig | None = None,
    method: Method | None = None,
) -> ComplexityReport:
    """s-ordered complexity C_s = e^{S_s - 1} I_s.

    At s = -1 this is `complexity`. Gaussian families use the s-ordered closed
    form unless `method` forces quadrature.

    Raises:
        OrderingNotAdmissible: If W_s is not guaranteed nonnegative for this
            state, or is not implemented.
        NoConvergence: If a quadrature does not converge.
    """
    checked = validate(state)
    cfg = cfg or QuadratureConfig()
    if s == HUSIMI_ORDER:
        return complexity(checked, cfg, method)
    _require_admissible(checked, s)

    params = gaussian_parameters(checked)
    if params is not None and method is not Method.quadrature:
        nbar, r, _, _ = params
        entropy, fisher, _ = s_gaussian_closed(nbar, r, s)
        return _report(checked, s, entropy, fisher, 0.0, 0.0, Method.closed_form, cfg)
    if method is Method.closed_form:
        raise Unsupported(f"No s-ordered closed form for {checked.family}")

    entropy, err_entropy = _integrate_field(checked, s, cfg, fisher=False)
    fisher, err_fisher = _integrate_field(checked, s, cfg, fisher=True)
    return _report(
        checked, s, entropy, fisher, err_entropy, err_fisher, Method.quadrature, cfg
    )
