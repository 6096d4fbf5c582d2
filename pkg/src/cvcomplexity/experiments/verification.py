"""Verification suites: invariants of the complexity and the comparison table.

Every check produces a CheckResult with the measured deviation and the
tolerance it was held to. A suite passes when all of its checks pass.
"""

import functools
import math
from collections.abc import Callable, Sequence
from enum import Enum

import numpy as np

from cvcomplexity.core.closedform import (
    EULER_GAMMA,
    fock_closed,
    gaussian_closed,
    gaussian_complexity_at_energy,
    optimal_gaussian_at_energy,
    s_gaussian_closed,
    search_gaussian_extrema,
)
from cvcomplexity.core.errors import CvComplexityError
from cvcomplexity.core.functionals import (
    complexity,
    fisher_information,
    s_complexity,
)
from cvcomplexity.core.quantifiers import (
    mandel_q,
    nonclassical_depth,
    nongaussianity_fock,
    quantifier_row,
    skew_info_nonclassicality,
    wigner_negativity,
)
from cvcomplexity.core.states import haar_mixed_state, to_fock_matrix
from cvcomplexity.core.types import (
    Cat,
    CheckResult,
    Coherent,
    CoherentMixture,
    Fock,
    Gaussian,
    Method,
    PhaseAveragedCoherent,
    PhotonAddedCoherent,
    PhotonAddedThermal,
    QuadratureConfig,
    Thermal,
)

INVARIANCE_TOL = 1e-7
ORACLE_TOL = 1e-6
TABLE_TOL = 1e-8
ISOPERIMETRIC_TOL = 1e-6
MAX_RANDOM_DIM = 12
DEFAULT_SAMPLES = 200
FISHER_BOUND_TOL = 1e-8
FOCK_TOL = 1e-5
PAC_BETA = tuple(np.linspace(0.05, 4.0, 80).tolist())
PAC_FISHER_BETA = (0.1, 1.0, 3.0)
PAC_SMALL_TOL = 5e-3
PAC_LARGE_TOL = 2e-2
CAT_PHASES = (0.0, math.pi / 4, math.pi / 2, 3 * math.pi / 4, math.pi)
CAT_FISHER_BETA = (0.5, 1.0, 2.0)
CAT_ORDER_BETA = (0.5, 1.0, 1.5, 2.0)
CAT_GAP_BETA = 3.0
CAT_GAP_TOL = 1e-3
FOCK_S_K = (1, 2, 3, 4)
FOCK_S_GRID = (-1.0, -2.0, -5.0, -20.0)
FOCK_S_TOL = 0.1
PROP4_VALUE_TOL = 1e-4
PROP4_POINT_TOL = 1e-3

AddCheck = Callable[[str, Callable[[], CheckResult]], None]


class Suite(str, Enum):
    """Available verification suites."""

    propositions = "propositions"
    table2 = "table2"
    prop4 = "prop4"


def _close(
    suite: Suite,
    name: str,
    measured: float,
    expected: float,
    tol: float,
    relative: bool = False,
) -> CheckResult:
    deviation = abs(measured - expected)
    if relative:
        deviation /= max(abs(expected), 1e-300)
    return CheckResult(
        suite=suite.value,
        name=name,
        passed=bool(deviation <= tol),
        deviation=deviation,
        tolerance=tol,
        detail=f"measured={measured:.12g} expected={expected:.12g}",
    )


def _guarded(suite: Suite, name: str, check: Callable[[], CheckResult]) -> CheckResult:
    """Run one check, turning a library error into a failed result."""
    try:
        return check()
    except CvComplexityError as e:
        return CheckResult(
            suite=suite.value,
            name=name,
            passed=False,
            deviation=math.inf,
            tolerance=0.0,
            detail=f"{type(e).__name__}: {e}",
        )


# ---------------------------------------------------------------------------
# Propositions
# ---------------------------------------------------------------------------


def _quadrature_c(state, cfg: QuadratureConfig) -> float:
    return complexity(state, cfg, method=Method.quadrature).complexity


def verify_propositions(
    cfg: QuadratureConfig | None = None, samples: int = DEFAULT_SAMPLES, seed: int = 0
) -> list[CheckResult]:
    """Invariances, Fisher bounds, orderings, the lower bound C >= 1 and its equality cases.

    Args:
        cfg: Quadrature configuration; the pure-state shortcut is always
            switched off so Fisher information is integrated, except for the
            photon-added coherent and cat curves, whose Fisher values are
            checked separately.
        samples: Number of random density matrices for the lower bound.
        seed: Seed of the random generator.
    """
    suite = Suite.propositions
    cfg = (cfg or QuadratureConfig()).model_copy(update={"pure_shortcut": False})
    pure_cfg = cfg.model_copy(update={"pure_shortcut": True})
    results: list[CheckResult] = []

    def add(name: str, check: Callable[[], CheckResult]) -> None:
        results.append(_guarded(suite, name, check))

    # Displacement and rotation invariance of Gaussian states.
    base_state = Gaussian(nbar=0.5, r=0.5)
    add(
        "gaussian quadrature matches closed form",
        lambda: _close(
            suite,
            "gaussian quadrature matches closed form",
            _quadrature_c(base_state, cfg),
            gaussian_closed(0.5, 0.5)[2],
            ORACLE_TOL,
            relative=True,
        ),
    )
    for xi in (1 + 1j, 3.0):
        for theta in (0.0, math.pi / 3):
            name = f"gaussian invariance xi={xi} theta={theta:.4f}"
            moved = Gaussian(nbar=0.5, r=0.5, theta=theta, xi=xi)
            add(
                name,
                lambda name=name, moved=moved: _close(
                    suite,
                    name,
                    _quadrature_c(moved, cfg),
                    _quadrature_c(base_state, cfg),
                    INVARIANCE_TOL,
                    relative=True,
                ),
            )

    # Rotation invariance of non-Gaussian states.
    rotation = complex(math.cos(math.pi / 3), math.sin(math.pi / 3))
    for label, state, rotated in (
        ("cat", Cat(beta=1.0, phi=math.pi / 2), Cat(beta=rotation, phi=math.pi / 2)),
        (
            "photon-added coherent",
            PhotonAddedCoherent(beta=1.0),
            PhotonAddedCoherent(beta=rotation),
        ),
    ):
        name = f"{label} rotation invariance"
        add(
            name,
            lambda name=name, state=state, rotated=rotated: _close(
                suite,
                name,
                _quadrature_c(rotated, cfg),
                _quadrature_c(state, cfg),
                INVARIANCE_TOL,
                relative=True,
            ),
        )

    # Uniform scaling: photon-added thermal states share the Fock complexity.
    for k in (1, 2, 3):
        for nbar in (0.2, 1.0, 5.0):
            name = f"scaling photon-added thermal k={k} nbar={nbar:g}"
            add(
                name,
                lambda name=name, k=k, nbar=nbar: _close(
                    suite,
                    name,
                    _quadrature_c(PhotonAddedThermal(k=k, nbar=nbar), cfg),
                    fock_closed(k)[1],
                    ORACLE_TOL,
                    relative=True,
                ),
            )

    # Equality cases: coherent and thermal states have C = 1 at every admissible s.
    for nbar in (0.0, 0.5, 1.0, 5.0, 20.0):
        name = f"thermal C=1 nbar={nbar:g}"
        add(
            name,
            lambda name=name, nbar=nbar: _close(
                suite, name, _quadrature_c(Thermal(nbar=nbar), cfg), 1.0, ORACLE_TOL
            ),
        )
    for s in (-3.0, 0.0, 0.5):
        name = f"thermal C_s=1 s={s:g}"
        add(
            name,
            lambda name=name, s=s: _close(
                suite,
                name,
                s_complexity(Thermal(nbar=1.0), s, cfg, Method.quadrature).complexity,
                1.0,
                ORACLE_TOL,
            ),
        )
    name = "coherent C=1"
    add(
        name,
        lambda: _close(
            suite, name, _quadrature_c(Coherent(beta=1 + 0.5j), cfg), 1.0, ORACLE_TOL
        ),
    )

    # Pure states have unit Fisher information.
    pure_states = [Fock(k=k) for k in range(9)]
    pure_states.append(Coherent(beta=1 + 0.5j))
    pure_states += [Cat(beta=b, phi=phi) for b in CAT_FISHER_BETA for phi in CAT_PHASES[::2]]
    pure_states += [PhotonAddedCoherent(beta=b) for b in PAC_FISHER_BETA]
    for state in pure_states:
        name = f"pure Fisher {state.family} {state.model_dump_json()}"
        add(
            name,
            lambda name=name, state=state: _close(
                suite, name, fisher_information(state, cfg)[0], 1.0, ORACLE_TOL
            ),
        )

    # Mixed states have Fisher information at most 1.
    for state in (
        Thermal(nbar=1.0),
        CoherentMixture(beta=1.0),
        PhaseAveragedCoherent(beta_mod=1.0),
    ):
        name = f"mixed Fisher {state.family}"
        add(
            name,
            lambda name=name, state=state: _at_most_one(
                suite, name, fisher_information(state, cfg)[0]
            ),
        )

    # Fock complexity against k! e^{k - k psi(k+1)}.
    for k in range(11):
        name = f"fock k={k} quadrature matches closed form"
        add(
            name,
            lambda name=name, k=k: _close(
                suite,
                name,
                _quadrature_c(Fock(k=k), cfg),
                fock_closed(k)[1],
                FOCK_TOL,
                relative=True,
            ),
        )
    name = "fock k=1 equals e^gamma"
    add(
        name,
        lambda: _close(
            suite,
            name,
            _quadrature_c(Fock(k=1), cfg),
            math.exp(EULER_GAMMA),
            FOCK_TOL,
            relative=True,
        ),
    )

    _photon_added_coherent_checks(add, pure_cfg)
    _cat_checks(add, pure_cfg)
    _s_ordered_checks(add, cfg)

    # Lower bound and Fisher bound on random mixed states.
    rng = np.random.default_rng(seed)
    for i in range(samples):
        dim = int(rng.integers(2, MAX_RANDOM_DIM + 1))
        rank = int(rng.integers(1, dim + 1))
        label = f"random state #{i} dim={dim} rank={rank}"
        report = functools.cache(
            functools.partial(complexity, haar_mixed_state(dim, rank, rng), cfg)
        )

        def bound(name: str = f"lower bound {label}", report=report) -> CheckResult:
            value = report().complexity
            return CheckResult(
                suite=suite.value,
                name=name,
                passed=value >= 1.0 - ISOPERIMETRIC_TOL,
                deviation=max(0.0, 1.0 - value),
                tolerance=ISOPERIMETRIC_TOL,
                detail=f"C={value:.12g}",
            )

        add(f"lower bound {label}", bound)
        name = f"mixed Fisher {label}"
        add(
            name,
            lambda name=name, report=report: _at_most_one(suite, name, report().fisher),
        )

    return results


def _at_most_one(suite: Suite, name: str, fisher: float) -> CheckResult:
    excess = max(0.0, fisher - 1.0)
    return CheckResult(
        suite=suite.value,
        name=name,
        passed=excess <= FISHER_BOUND_TOL,
        deviation=excess,
        tolerance=FISHER_BOUND_TOL,
        detail=f"I={fisher:.12g}",
    )


def _monotone(
    suite: Suite, name: str, values: Sequence[float], decreasing: bool = False
) -> CheckResult:
    """Strict monotonicity; the deviation is the worst step against the trend."""
    sign = -1.0 if decreasing else 1.0
    worst = min((sign * (b - a) for a, b in zip(values, values[1:])), default=math.inf)
    return CheckResult(
        suite=suite.value,
        name=name,
        passed=worst > 0.0,
        deviation=max(0.0, -worst),
        tolerance=0.0,
        detail="values=" + " ".join(f"{v:.10g}" for v in values),
    )


def _photon_added_coherent_checks(add: AddCheck, cfg: QuadratureConfig) -> None:
    """C falls monotonically from e^gamma at small |beta| towards 1."""
    suite = Suite.propositions

    @functools.cache
    def curve() -> list[float]:
        return [complexity(PhotonAddedCoherent(beta=b), cfg).complexity for b in PAC_BETA]

    name = "photon-added coherent decreasing in |beta|"
    add(name, lambda: _monotone(suite, name, curve(), decreasing=True))
    for index, expected, tol in (
        (0, math.exp(EULER_GAMMA), PAC_SMALL_TOL),
        (-1, 1.0, PAC_LARGE_TOL),
    ):
        name = f"photon-added coherent |beta|={PAC_BETA[index]:g}"
        add(
            name,
            lambda name=name, index=index, expected=expected, tol=tol: _close(
                suite, name, curve()[index], expected, tol
            ),
        )


def _cat_checks(add: AddCheck, cfg: QuadratureConfig) -> None:
    """Cats order by phase and lie above the mixture; far apart they coincide."""
    suite = Suite.propositions

    @functools.cache
    def c(state: Cat | CoherentMixture) -> float:
        return complexity(state, cfg).complexity

    def mixture_below(name: str, beta: float) -> CheckResult:
        mixture = c(CoherentMixture(beta=beta))
        lowest = min(c(Cat(beta=beta, phi=phi)) for phi in CAT_PHASES)
        return CheckResult(
            suite=suite.value,
            name=name,
            passed=mixture <= lowest,
            deviation=max(0.0, mixture - lowest),
            tolerance=0.0,
            detail=f"mixture={mixture:.12g} lowest cat={lowest:.12g}",
        )

    for beta in CAT_ORDER_BETA:
        name = f"cat beta={beta:g} increasing in phi"
        add(
            name,
            lambda name=name, beta=beta: _monotone(
                suite, name, [c(Cat(beta=beta, phi=phi)) for phi in CAT_PHASES]
            ),
        )
        name = f"mixture beta={beta:g} below every cat"
        add(name, lambda name=name, beta=beta: mixture_below(name, beta))

    for phi in (CAT_PHASES[0], CAT_PHASES[-1]):
        name = f"cat beta={CAT_GAP_BETA:g} phi={phi:.4f} matches mixture"
        add(
            name,
            lambda name=name, phi=phi: _close(
                suite,
                name,
                c(Cat(beta=CAT_GAP_BETA, phi=phi)),
                c(CoherentMixture(beta=CAT_GAP_BETA)),
                CAT_GAP_TOL,
            ),
        )


def _s_ordered_checks(add: AddCheck, cfg: QuadratureConfig) -> None:
    """Gaussian reduction at s = -1, Fock smoothing and phase-averaged rescaling."""
    suite = Suite.propositions

    for nbar, r in ((0.0, 0.5), (1.0, 1.0)):
        name = f"s-gaussian nbar={nbar:g} r={r:g} reduces at s=-1"
        add(
            name,
            lambda name=name, nbar=nbar, r=r: _close(
                suite,
                name,
                s_gaussian_closed(nbar, r, -1.0)[2],
                gaussian_closed(nbar, r)[2],
                0.0,
            ),
        )

    @functools.cache
    def fock_curve(k: int) -> list[float]:
        return [s_complexity(Fock(k=k), s, cfg).complexity for s in FOCK_S_GRID]

    for k in FOCK_S_K:
        name = f"fock k={k} C_s decreasing as s falls"
        add(
            name,
            lambda name=name, k=k: _monotone(suite, name, fock_curve(k), decreasing=True),
        )
        name = f"fock k={k} C_s near 1 at s={FOCK_S_GRID[-1]:g}"
        add(
            name,
            lambda name=name, k=k: _close(suite, name, fock_curve(k)[-1], 1.0, FOCK_S_TOL),
        )

    for b in (0.5, 1.0):
        for s in (-3.0, 0.5):
            name = f"phase-averaged beta={b:g} s={s:g} rescaling"
            scaled = PhaseAveragedCoherent(beta_mod=b * math.sqrt(2.0 / (1.0 - s)))
            add(
                name,
                lambda name=name, b=b, s=s, scaled=scaled: _close(
                    suite,
                    name,
                    s_complexity(PhaseAveragedCoherent(beta_mod=b), s, cfg).complexity,
                    complexity(scaled, cfg).complexity,
                    ORACLE_TOL,
                    relative=True,
                ),
            )


# ---------------------------------------------------------------------------
# Comparison table
# ---------------------------------------------------------------------------


def _gaussian_mandel(nbar: float, r: float) -> float:
    mean = nbar + (2.0 * nbar + 1.0) * math.sinh(r) ** 2
    var = (nbar + 0.5) ** 2 * math.cosh(4.0 * r) - 0.25
    return var / mean - 1.0


def _gaussian_depth(nbar: float, r: float) -> float:
    t = math.tanh(r)
    return max(0.0, ((nbar + 1.0) * t - nbar) / (1.0 + t))


def verify_table2(cfg: QuadratureConfig | None = None) -> list[CheckResult]:
    """Quantifier rows of Fock and Gaussian states against their closed forms.

    The Fock rows go through the generic density-matrix paths so the
    table entries are reproduced independently of the closed forms.
    """
    suite = Suite.table2
    cfg = cfg or QuadratureConfig()
    results: list[CheckResult] = []

    def add(name: str, fn: Callable[[], float], expected: float, tol=TABLE_TOL) -> None:
        results.append(
            _guarded(suite, name, lambda: _close(suite, name, fn(), expected, tol))
        )

    for k in range(1, 6):
        matrix = to_fock_matrix(Fock(k=k)).matrix
        add(f"fock k={k} mandel", lambda m=matrix: mandel_q(m), -1.0)
        add(f"fock k={k} depth", lambda m=matrix: nonclassical_depth(m)[0], 1.0)
        add(f"fock k={k} skew", lambda m=matrix: skew_info_nonclassicality(m), k + 0.5)
        delta_a = 0.5 * (1.0 + 1.0 / (2 * k + 1)) - k**k / (k + 1) ** (k + 1)
        delta_b = (k + 1) * math.log(k + 1) - k * math.log(k)
        add(f"fock k={k} delta_A", lambda k=k: nongaussianity_fock(k)[0], delta_a)
        add(f"fock k={k} delta_B", lambda k=k: nongaussianity_fock(k)[1], delta_b)

    add(
        "fock k=1 wigner negativity",
        lambda: wigner_negativity(Fock(k=1), cfg)[0],
        4.0 * math.exp(-0.5) - 2.0,
        ORACLE_TOL,
    )

    for nbar in (0.0, 0.5, 1.0):
        for r in (0.0, 0.5, 1.0):
            label = f"gaussian nbar={nbar:g} r={r:g}"
            state = Gaussian(nbar=nbar, r=r)
            if nbar > 0 or r > 0:
                add(f"{label} mandel", lambda s=state: mandel_q(s), _gaussian_mandel(nbar, r))
            add(
                f"{label} depth",
                lambda s=state: nonclassical_depth(s)[0],
                _gaussian_depth(nbar, r),
            )
            add(
                f"{label} skew",
                lambda s=state: skew_info_nonclassicality(s),
                (0.5 + nbar - math.sqrt(nbar * (nbar + 1.0))) * math.cosh(2.0 * r),
            )
            row = quantifier_row(state, cfg)
            for field in ("wigner_negativity", "delta_A", "delta_B"):
                add(f"{label} {field}", lambda row=row, f=field: getattr(row, f), 0.0)

    # Displaced thermal states: the generic moment path agrees with the closed form.
    for nbar, xi in ((0.5, 1.0 + 0.5j), (1.0, 0.8)):
        state = Gaussian(nbar=nbar, xi=xi)
        matrix = to_fock_matrix(state).matrix
        add(
            f"displaced thermal nbar={nbar:g} mandel via matrix",
            lambda m=matrix: mandel_q(m),
            mandel_q(state),
            ORACLE_TOL,
        )

    return results


# ---------------------------------------------------------------------------
# Energy-constrained maximum
# ---------------------------------------------------------------------------


def verify_prop4(energy: float = 1.0) -> list[CheckResult]:
    """Squeezed vacuum maximizes, displaced thermal states minimize, C at fixed energy."""
    suite = Suite.prop4
    results: list[CheckResult] = []
    extrema = search_gaussian_extrema(energy)
    optimum, c_max, c_min = optimal_gaussian_at_energy(energy)

    results.append(
        _close(suite, f"E={energy:g} maximum value", extrema.maximum.complexity, c_max, PROP4_VALUE_TOL)
    )
    results.append(
        _close(suite, f"E={energy:g} maximum thermal photons", extrema.maximum.nbar, 0.0, PROP4_POINT_TOL)
    )
    results.append(
        _close(suite, f"E={energy:g} maximum displacement", extrema.maximum.xi_abs, 0.0, PROP4_POINT_TOL)
    )
    results.append(
        _close(suite, f"E={energy:g} maximum squeezing", extrema.maximum.r, optimum.r, PROP4_POINT_TOL)
    )
    results.append(
        _close(suite, f"E={energy:g} minimum value", extrema.minimum.complexity, c_min, PROP4_VALUE_TOL)
    )
    results.append(
        _close(suite, f"E={energy:g} minimum on unsqueezed slice", extrema.minimum.r, 0.0, PROP4_POINT_TOL)
    )
    results.append(
        _close(
            suite,
            f"E={energy:g} squeezed vacuum closed form",
            gaussian_closed(0.0, optimum.r)[2],
            c_max,
            TABLE_TOL,
        )
    )

    curve = [gaussian_complexity_at_energy(energy, n) for n in np.linspace(0.0, energy, 51)]
    increases = max((b - a for a, b in zip(curve, curve[1:])), default=0.0)
    results.append(
        CheckResult(
            suite=suite.value,
            name=f"E={energy:g} constrained curve decreasing in nbar",
            passed=increases <= 0.0,
            deviation=max(increases, 0.0),
            tolerance=0.0,
        )
    )
    return results


def run_suite(
    suite: Suite,
    cfg: QuadratureConfig | None = None,
    energy: float = 1.0,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
) -> list[CheckResult]:
    """Run one suite by name."""
    match Suite(suite):
        case Suite.propositions:
            return verify_propositions(cfg, samples=samples, seed=seed)
        case Suite.table2:
            return verify_table2(cfg)
        case Suite.prop4:
            return verify_prop4(energy)
