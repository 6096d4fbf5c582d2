"""Analytic results for Gaussian and number states.

These expressions serve two purposes: they are the production path for
Gaussian states, and they are the oracle the quadrature pipeline is checked
against.
"""

import math
import operator

import numpy as np
from scipy.special import digamma, gammaln

from cvcomplexity.core.errors import BadParameter, OrderingNotAdmissible
from cvcomplexity.core.types import (
    Gaussian,
    GaussianExtrema,
    GaussianMoments,
    GaussianPoint,
)

EULER_GAMMA = 0.5772156649015329
HARMONIC_SUM_LIMIT = 10_000


def digamma_int(n: int) -> float:
    """psi(n) for a positive integer n.

    Uses the exact harmonic sum H_{n-1} - gamma up to HARMONIC_SUM_LIMIT and
    scipy's digamma beyond.
    """
    if n < 1:
        raise BadParameter(f"digamma_int needs n >= 1, got {n}")
    if n - 1 <= HARMONIC_SUM_LIMIT:
        return math.fsum(1.0 / m for m in range(1, n)) - EULER_GAMMA
    return float(digamma(n))


def log_factorial(k: int) -> float:
    return float(gammaln(k + 1))


def gaussian_moments(nbar: float, r: float, s: float = -1.0) -> GaussianMoments:
    """Delta_s, A_s and B of the s-ordered Gaussian quasiprobability.

    At s = -1 these are the Husimi coefficients
    Delta = (nbar+1)^2 + (2 nbar+1) sinh^2 r, A = 1 + (2 nbar+1) cosh 2r and
    B = (nbar + 1/2) sinh 2r. They satisfy A_s^2 - 4 B^2 = 4 Delta_s.
    """
    width = 2.0 * nbar + 1.0
    delta = (nbar + 0.5 * (1.0 - s)) ** 2 - s * width * math.sinh(r) ** 2
    a = -s + width * math.cosh(2.0 * r)
    b = (nbar + 0.5) * math.sinh(2.0 * r)
    return GaussianMoments(s=s, delta=delta, a=a, b=b)


def gaussian_ordering_bound(nbar: float, r: float) -> float:
    """Largest s (exclusive) for which the s-ordered Gaussian stays a Gaussian.

    Equals 1 - 2 tau where tau is the un-floored nonclassical depth,
    i.e. (2 nbar + 1) e^{-2r}.
    """
    return (2.0 * nbar + 1.0) * math.exp(-2.0 * r)


def gaussian_closed(nbar: float, r: float) -> tuple[float, float, float]:
    """Wehrl entropy, Fisher information and complexity of a Gaussian state.

    Args:
        nbar: Thermal photon number.
        r: Squeezing magnitude.

    Returns:
        (S_W, I, C) with S_W = 1 + ln(Delta)/2, I = A/(2 Delta) and
        C = A/(2 sqrt(Delta)).
    """
    if nbar < 0 or r < 0:
        raise BadParameter(f"nbar and r must be >= 0, got nbar={nbar}, r={r}")
    m = gaussian_moments(nbar, r)
    return (
        1.0 + 0.5 * math.log(m.delta),
        m.a / (2.0 * m.delta),
        m.a / (2.0 * math.sqrt(m.delta)),
    )


def s_gaussian_closed(nbar: float, r: float, s: float) -> tuple[float, float, float]:
    """s-ordered entropy, Fisher information and complexity of a Gaussian state.

    Raises:
        OrderingNotAdmissible: If s reaches (2 nbar + 1) e^{-2r}, where the
            quasiprobability stops being a normalizable Gaussian.
    """
    if nbar < 0 or r < 0:
        raise BadParameter(f"nbar and r must be >= 0, got nbar={nbar}, r={r}")
    bound = gaussian_ordering_bound(nbar, r)
    if not s < bound:
        raise OrderingNotAdmissible(
            f"s={s} is not below the Gaussian ordering bound {bound:.6g}"
        )
    m = gaussian_moments(nbar, r, s)
    return (
        1.0 + 0.5 * math.log(m.delta),
        m.a / (2.0 * m.delta),
        m.a / (2.0 * math.sqrt(m.delta)),
    )


def fock_closed(k: int) -> tuple[float, float]:
    """Wehrl entropy and complexity of the number state |k>.

    S_W = 1 + k + ln k! - k psi(k+1) and C = k! e^{k - k psi(k+1)}, both
    assembled in log-space.
    """
    if k < 0:
        raise BadParameter(f"k must be >= 0, got {k}")
    log_c = log_factorial(k) + k - k * digamma_int(k + 1)
    return 1.0 + log_c, math.exp(log_c)


# ---------------------------------------------------------------------------
# Energy-constrained Gaussian states
# ---------------------------------------------------------------------------


def optimal_gaussian_at_energy(energy: float) -> tuple[Gaussian, float, float]:
    """Most and least complex Gaussian states of mean photon number `energy`.

    The maximum is the squeezed vacuum with r = ln(sqrt(E) + sqrt(E + 1)),
    where C = sqrt(E + 1); the minimum 1 is reached by every displaced thermal
    state with nbar + |xi|^2 = E.

    Returns:
        (squeezed vacuum spec, C_max, C_min).
    """
    if energy < 0:
        raise BadParameter(f"energy must be >= 0, got {energy}")
    r = math.asinh(math.sqrt(energy))
    return Gaussian(nbar=0.0, r=r), math.sqrt(energy + 1.0), 1.0


def gaussian_complexity_at_energy(energy: float, nbar: float) -> float:
    """Largest complexity at fixed energy and thermal photon number.

    With no displacement all remaining energy goes into squeezing, which gives
    C = (E + 1) / sqrt(nbar (nbar + 1) + E + 1), decreasing in nbar.
    """
    if not 0.0 <= nbar <= energy:
        raise BadParameter(f"nbar must lie in [0, {energy}], got {nbar}")
    return (energy + 1.0) / math.sqrt(nbar * (nbar + 1.0) + energy + 1.0)


def _constraint_point(energy: float, nbar: float, t: float) -> tuple[float, float]:
    """(r, |xi|) on the constraint surface with |xi|^2 = t (E - nbar)."""
    budget = max(energy - nbar, 0.0)
    u = t * budget
    sinh2 = max(budget - u, 0.0) / (2.0 * nbar + 1.0)
    return math.asinh(math.sqrt(sinh2)), math.sqrt(u)


def _grid_complexity(energy: float, nbar: np.ndarray, t: np.ndarray) -> np.ndarray:
    budget = np.maximum(energy - nbar, 0.0)
    sinh2 = np.maximum(budget * (1.0 - t), 0.0) / (2.0 * nbar + 1.0)
    delta = (nbar + 1.0) ** 2 + (2.0 * nbar + 1.0) * sinh2
    a = 1.0 + (2.0 * nbar + 1.0) * (1.0 + 2.0 * sinh2)
    return a / (2.0 * np.sqrt(delta))


def search_gaussian_extrema(
    energy: float,
    points: int = 201,
    refinements: int = 4,
    zoom: float = 10.0,
) -> GaussianExtrema:
    """Grid search for the extreme complexities over the energy surface.

    The surface nbar + |xi|^2 + (2 nbar + 1) sinh^2 r = E is parametrized by
    nbar in [0, E] and t = |xi|^2 / (E - nbar) in [0, 1]; r follows from the
    constraint. A dense grid is refined `refinements` times around each
    extremum, shrinking the window by `zoom` each round.

    Args:
        energy: Mean photon number E >= 0.
        points: Grid points per axis.
        refinements: Number of local refinement rounds.
        zoom: Window shrink factor per round.

    Returns:
        The maximal and minimal points found with the number of evaluations.
    """
    if energy < 0:
        raise BadParameter(f"energy must be >= 0, got {energy}")
    if points < 2:
        raise BadParameter(f"points must be >= 2, got {points}")

    evaluations = 0

    def best(lo_n, hi_n, lo_t, hi_t, pick):
        nonlocal evaluations
        ns = np.linspace(lo_n, hi_n, points)
        ts = np.linspace(lo_t, hi_t, points)
        grid_n, grid_t = np.meshgrid(ns, ts, indexing="ij")
        values = _grid_complexity(energy, grid_n, grid_t)
        evaluations += values.size
        idx = np.unravel_index(pick(values), values.shape)
        return float(grid_n[idx]), float(grid_t[idx]), float(values[idx])

    def refine(pick, improves):
        n_star, t_star, c_star = best(0.0, energy, 0.0, 1.0, pick)
        half_n, half_t = 0.5 * energy, 0.5
        for _ in range(refinements):
            half_n /= zoom
            half_t /= zoom
            n_new, t_new, c_new = best(
                max(0.0, n_star - half_n),
                min(energy, n_star + half_n),
                max(0.0, t_star - half_t),
                min(1.0, t_star + half_t),
                pick,
            )
            if improves(c_new, c_star):
                n_star, t_star, c_star = n_new, t_new, c_new
        r, xi_abs = _constraint_point(energy, n_star, t_star)
        return GaussianPoint(nbar=n_star, r=r, xi_abs=xi_abs, complexity=c_star)

    maximum = refine(np.argmax, operator.ge)
    minimum = refine(np.argmin, operator.le)
    return GaussianExtrema(
        energy=energy, maximum=maximum, minimum=minimum, evaluations=evaluations
    )
