"""Adaptive Gauss-Legendre integration over the phase plane.

Integrals are taken against the measure d^2 alpha / pi. The plane integrator
works on a square of half-width radius_margin * scale split into panels; each
panel is integrated with a tensor 16-point rule and an embedded 8-point rule,
and the difference of the two is the panel's error estimate. Panels whose error
exceeds their share of the target are split in four and re-evaluated in one
vectorized batch per round. The radial integrator does the same in one
dimension for fields that depend only on |alpha|.

Integrands are vectorized: they receive coordinate arrays and return an array
of the same shape. Panels are kept in a fixed order and summed with
`math.fsum`, so results do not depend on how the evaluations were scheduled.
"""

import math
from collections.abc import Callable, Sequence

import numpy as np
from numpy.polynomial.legendre import leggauss
from pydantic import BaseModel, ConfigDict

from cvcomplexity.core.errors import NoConvergence
from cvcomplexity.core.types import PhasePoint, QuadratureConfig

PlaneIntegrand = Callable[[np.ndarray, np.ndarray], np.ndarray]
RadialIntegrand = Callable[[np.ndarray], np.ndarray]

MAX_PANELS = 250_000

_HIGH_NODES, _HIGH_WEIGHTS = leggauss(16)
_LOW_NODES, _LOW_WEIGHTS = leggauss(8)
_HIGH_TENSOR = np.outer(_HIGH_WEIGHTS, _HIGH_WEIGHTS)
_LOW_TENSOR = np.outer(_LOW_WEIGHTS, _LOW_WEIGHTS)


class QuadratureResult(BaseModel):
    """Value and error estimate of one adaptive integration."""

    model_config = ConfigDict(frozen=True)

    value: float
    err_est: float
    panels: int
    rounds: int


def _target(value: float, cfg: QuadratureConfig) -> float:
    return max(cfg.target_rel_tol * abs(value), cfg.abs_tol)


# ---------------------------------------------------------------------------
# Plane
# ---------------------------------------------------------------------------


def _plane_rule(
    f: PlaneIntegrand, panels: np.ndarray, nodes: np.ndarray, weights: np.ndarray
) -> np.ndarray:
    """Tensor-product rule on every panel; panels rows are (x0, x1, y0, y1)."""
    hx = 0.5 * (panels[:, 1] - panels[:, 0])
    hy = 0.5 * (panels[:, 3] - panels[:, 2])
    cx = 0.5 * (panels[:, 1] + panels[:, 0])
    cy = 0.5 * (panels[:, 3] + panels[:, 2])
    x = cx[:, None, None] + hx[:, None, None] * nodes[None, :, None]
    y = cy[:, None, None] + hy[:, None, None] * nodes[None, None, :]
    x, y = np.broadcast_arrays(x, y)
    values = np.asarray(f(x.ravel(), y.ravel()), dtype=float).reshape(x.shape)
    return (hx * hy) * np.einsum("pij,ij->p", values, weights)


def _split_plane(panels: np.ndarray) -> np.ndarray:
    x0, x1, y0, y1 = panels.T
    xm = 0.5 * (x0 + x1)
    ym = 0.5 * (y0 + y1)
    children = np.stack(
        [
            np.stack([x0, xm, y0, ym], axis=1),
            np.stack([xm, x1, y0, ym], axis=1),
            np.stack([x0, xm, ym, y1], axis=1),
            np.stack([xm, x1, ym, y1], axis=1),
        ],
        axis=1,
    )
    return children.reshape(-1, 4)


def _initial_plane_panels(center: PhasePoint, half_width: float, n: int) -> np.ndarray:
    xs = np.linspace(center.x - half_width, center.x + half_width, n + 1)
    ys = np.linspace(center.y - half_width, center.y + half_width, n + 1)
    gx0, gy0 = np.meshgrid(xs[:-1], ys[:-1], indexing="ij")
    gx1, gy1 = np.meshgrid(xs[1:], ys[1:], indexing="ij")
    return np.stack([gx0.ravel(), gx1.ravel(), gy0.ravel(), gy1.ravel()], axis=1)


def _adaptive(
    evaluate: Callable[[np.ndarray], tuple[np.ndarray, np.ndarray]],
    split: Callable[[np.ndarray], np.ndarray],
    panels: np.ndarray,
    children_per_panel: int,
    cfg: QuadratureConfig,
) -> QuadratureResult:
    """Shared refinement loop.

    `evaluate` returns per-panel (value, error). Settled panels keep their
    contributions; the panel list is kept in creation order so the final
    `fsum` is reproducible.
    """
    values, errors = evaluate(panels)
    for rounds in range(cfg.max_subdivisions + 1):
        total = math.fsum(values.tolist())
        err = math.fsum(errors.tolist())
        if not math.isfinite(total):
            raise NoConvergence("Integrand produced non-finite values", total, err)
        if err <= _target(total, cfg):
            return QuadratureResult(
                value=total, err_est=err, panels=len(panels), rounds=rounds
            )
        if rounds == cfg.max_subdivisions:
            break

        share = _target(total, cfg) / len(panels)
        refine = errors > share
        n_refine = int(refine.sum())
        if len(panels) + (children_per_panel - 1) * n_refine > MAX_PANELS:
            break

        children = split(panels[refine])
        child_values, child_errors = evaluate(children)
        # Keep creation order: each refined panel is replaced in place by its children.
        order = np.repeat(np.arange(len(panels)), np.where(refine, children_per_panel, 1))
        new_panels = np.empty((len(order), panels.shape[1]))
        new_values = np.empty(len(order))
        new_errors = np.empty(len(order))
        is_child = refine[order]
        new_panels[~is_child] = panels[~refine]
        new_values[~is_child] = values[~refine]
        new_errors[~is_child] = errors[~refine]
        new_panels[is_child] = children
        new_values[is_child] = child_values
        new_errors[is_child] = child_errors
        panels, values, errors = new_panels, new_values, new_errors

    raise NoConvergence(
        f"Integral did not converge: value={total:.12g}, err_est={err:.3e} "
        f"after {cfg.max_subdivisions} refinement rounds ({len(panels)} panels)",
        total,
        err,
    )


def integrate_plane_result(
    f: PlaneIntegrand, center: PhasePoint, scale: float, cfg: QuadratureConfig
) -> QuadratureResult:
    """Like `integrate_plane` but returns the full QuadratureResult."""
    if scale <= 0:
        raise ValueError(f"scale must be > 0, got {scale}")
    half_width = cfg.radius_margin * scale
    panels = _initial_plane_panels(center, half_width, cfg.initial_panels)

    def evaluate(batch: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        high = _plane_rule(f, batch, _HIGH_NODES, _HIGH_TENSOR) / math.pi
        low = _plane_rule(f, batch, _LOW_NODES, _LOW_TENSOR) / math.pi
        return high, np.abs(high - low)

    return _adaptive(evaluate, _split_plane, panels, 4, cfg)


def integrate_plane(
    f: PlaneIntegrand, center: PhasePoint, scale: float, cfg: QuadratureConfig
) -> tuple[float, float]:
    """Integrate f over the plane against d^2 alpha / pi.

    Args:
        f: Vectorized integrand f(x, y).
        center: Center of the integration square.
        scale: Spread of the integrand; the square has half-width
            cfg.radius_margin * scale.
        cfg: Tolerances and refinement limits.

    Returns:
        (value, err_est).

    Raises:
        NoConvergence: If the error estimate stays above
            max(target_rel_tol * |value|, abs_tol).
    """
    result = integrate_plane_result(f, center, scale, cfg)
    return result.value, result.err_est


# ---------------------------------------------------------------------------
# Radial
# ---------------------------------------------------------------------------


def _radial_rule(
    g: RadialIntegrand, segments: np.ndarray, nodes: np.ndarray, weights: np.ndarray
) -> np.ndarray:
    h = 0.5 * (segments[:, 1] - segments[:, 0])
    c = 0.5 * (segments[:, 1] + segments[:, 0])
    r = c[:, None] + h[:, None] * nodes[None, :]
    values = np.asarray(g(r.ravel()), dtype=float).reshape(r.shape)
    return 2.0 * h * ((values * r) @ weights)


def _split_radial(segments: np.ndarray) -> np.ndarray:
    a, b = segments.T
    m = 0.5 * (a + b)
    return np.stack([np.stack([a, m], axis=1), np.stack([m, b], axis=1)], axis=1).reshape(-1, 2)


def integrate_radial_result(
    g: RadialIntegrand,
    scale: float,
    cfg: QuadratureConfig,
    breakpoints: Sequence[float] = (),
) -> QuadratureResult:
    """Like `integrate_radial` but returns the full QuadratureResult."""
    if scale <= 0:
        raise ValueError(f"scale must be > 0, got {scale}")
    outer = cfg.radius_margin * scale
    edges = sorted({0.0, outer, *(b for b in breakpoints if 0.0 < b < outer)})
    pieces = []
    for a, b in zip(edges[:-1], edges[1:]):
        sub = np.linspace(a, b, cfg.initial_panels + 1)
        pieces.append(np.stack([sub[:-1], sub[1:]], axis=1))
    segments = np.concatenate(pieces)

    def evaluate(batch: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        high = _radial_rule(g, batch, _HIGH_NODES, _HIGH_WEIGHTS)
        low = _radial_rule(g, batch, _LOW_NODES, _LOW_WEIGHTS)
        return high, np.abs(high - low)

    return _adaptive(evaluate, _split_radial, segments, 2, cfg)


def integrate_radial(
    g: RadialIntegrand,
    scale: float,
    cfg: QuadratureConfig,
    breakpoints: Sequence[float] = (),
) -> tuple[float, float]:
    """Integrate a radially symmetric field: 2 * int_0^R g(r) r dr.

    Args:
        g: Vectorized radial profile g(r).
        scale: Spread of the profile; R = cfg.radius_margin * scale.
        cfg: Tolerances and refinement limits.
        breakpoints: Interior radii where g has kinks (for example zeros of a
            signed function integrated in absolute value).

    Returns:
        (value, err_est).

    Raises:
        NoConvergence: If the error estimate stays above the target.
    """
    result = integrate_radial_result(g, scale, cfg, breakpoints)
    return result.value, result.err_est
