"""Figure data: the curves behind the complexity plots, written as CSV.

Each figure is a set of curves; each curve sweeps one parameter with the
others fixed and becomes one CSV file named after the figure and the fixed
values. Grid points are evaluated through `utils.runner`, so the files do not
depend on the worker count.
"""

import math
from collections.abc import Callable, Sequence
from enum import Enum
from pathlib import Path

import numpy as np
from pydantic import BaseModel, ConfigDict

from cvcomplexity.core.functionals import complexity, s_complexity
from cvcomplexity.core.types import (
    Cat,
    CoherentMixture,
    Fock,
    Gaussian,
    PhaseAveragedCoherent,
    PhotonAddedCoherent,
    QuadratureConfig,
)
from cvcomplexity.utils.csvio import render_csv, write_text_atomic
from cvcomplexity.utils.runner import run_points

Row = list[float]


class FigureId(str, Enum):
    """Figures whose data can be regenerated."""

    fig1a = "fig1a"
    fig1b = "fig1b"
    fig2 = "fig2"
    fig3_phase_averaged = "fig3_phase_averaged"
    fig4 = "fig4"
    fig5_fock_s = "fig5_fock_s"


class Curve(BaseModel):
    """One curve: a swept parameter, fixed parameters and a row function.

    Attributes:
        name: File stem, e.g. "fig1a_r1".
        header: CSV column names; the swept parameter comes first.
        grid: Human-readable sampling description for the metadata line.
        points: Values of the swept parameter.
        row: Maps one swept value to one CSV row.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    name: str
    header: list[str]
    grid: str
    points: list[float]
    row: Callable[[float], Row]


# Sampling grids
FIG1A_NBAR = np.linspace(0.0, 10.0, 101)
FIG1A_R = (0.5, 1.0, 1.5, 2.0)
FIG1B_R = np.linspace(0.0, 5.0, 101)
FIG1B_NBAR = (0.1, 1.0, 10.0)
FIG2_BETA = np.linspace(0.05, 4.0, 80)
FIG3_S = np.linspace(-1.0, 0.9, 39)
FIG3_BETA = (0.5, 1.0, 1.5)
FIG4_BETA = np.linspace(0.1, 3.0, 30)
FIG4_PHI = {
    "0": 0.0,
    "pi_4": math.pi / 4,
    "pi_2": math.pi / 2,
    "3pi_4": 3 * math.pi / 4,
    "9pi_10": 9 * math.pi / 10,
    "pi": math.pi,
}
FIG5_S = np.linspace(-20.0, -1.0, 39)
FIG5_K = (1, 2, 3, 4)


def _label(value: float) -> str:
    return f"{value:g}".replace(".", "p")


def _grid(name: str, values: Sequence[float]) -> str:
    step = values[1] - values[0] if len(values) > 1 else 0.0
    return f"{name}={values[0]:g}..{values[-1]:g} step={step:g} n={len(values)}"


def _fig1a(cfg: QuadratureConfig) -> list[Curve]:
    curves = []
    for r in FIG1A_R:

        def row(nbar: float, r: float = r) -> Row:
            rep = complexity(Gaussian(nbar=nbar, r=r), cfg)
            return [nbar, r, rep.entropy, rep.fisher, rep.complexity]

        curves.append(
            Curve(
                name=f"fig1a_r{_label(r)}",
                header=["nbar", "r", "entropy", "fisher", "complexity"],
                grid=_grid("nbar", FIG1A_NBAR),
                points=FIG1A_NBAR.tolist(),
                row=row,
            )
        )
    return curves


def _fig1b(cfg: QuadratureConfig) -> list[Curve]:
    curves = []
    for nbar in FIG1B_NBAR:

        def row(r: float, nbar: float = nbar) -> Row:
            rep = complexity(Gaussian(nbar=nbar, r=r), cfg)
            return [r, nbar, rep.complexity, math.log10(rep.complexity)]

        curves.append(
            Curve(
                name=f"fig1b_nbar{_label(nbar)}",
                header=["r", "nbar", "complexity", "log10_complexity"],
                grid=_grid("r", FIG1B_R),
                points=FIG1B_R.tolist(),
                row=row,
            )
        )
    return curves


def _fig2(cfg: QuadratureConfig) -> list[Curve]:
    def row(beta: float) -> Row:
        rep = complexity(PhotonAddedCoherent(beta=beta), cfg)
        return [beta, rep.complexity, rep.err_complexity]

    return [
        Curve(
            name="fig2_photon_added_coherent",
            header=["beta_abs", "complexity", "err_complexity"],
            grid=_grid("beta_abs", FIG2_BETA),
            points=FIG2_BETA.tolist(),
            row=row,
        )
    ]


def _fig3(cfg: QuadratureConfig) -> list[Curve]:
    curves = []
    for b in FIG3_BETA:

        def row(s: float, b: float = b) -> Row:
            rep = s_complexity(PhaseAveragedCoherent(beta_mod=b), s, cfg)
            return [s, b, rep.entropy, rep.fisher, rep.complexity]

        curves.append(
            Curve(
                name=f"fig3_phase_averaged_beta{_label(b)}",
                header=["s", "beta_mod", "entropy", "fisher", "complexity"],
                grid=_grid("s", FIG3_S),
                points=FIG3_S.tolist(),
                row=row,
            )
        )
    return curves


def _fig4(cfg: QuadratureConfig) -> list[Curve]:
    def mixture_row(beta: float) -> Row:
        rep = complexity(CoherentMixture(beta=beta), cfg)
        return [beta, rep.complexity]

    curves = [
        Curve(
            name="fig4_mixture",
            header=["beta", "complexity"],
            grid=_grid("beta", FIG4_BETA),
            points=FIG4_BETA.tolist(),
            row=mixture_row,
        )
    ]
    for label, phi in FIG4_PHI.items():

        def row(beta: float, phi: float = phi) -> Row:
            rep = complexity(Cat(beta=beta, phi=phi), cfg)
            return [beta, phi, rep.complexity]

        curves.append(
            Curve(
                name=f"fig4_cat_phi{label}",
                header=["beta", "phi", "complexity"],
                grid=_grid("beta", FIG4_BETA),
                points=FIG4_BETA.tolist(),
                row=row,
            )
        )
    return curves


def _fig5(cfg: QuadratureConfig) -> list[Curve]:
    curves = []
    for k in FIG5_K:

        def row(s: float, k: int = k) -> Row:
            rep = s_complexity(Fock(k=k), s, cfg)
            return [s, k, rep.complexity]

        curves.append(
            Curve(
                name=f"fig5_fock_s_k{k}",
                header=["s", "k", "complexity"],
                grid=_grid("s", FIG5_S),
                points=FIG5_S.tolist(),
                row=row,
            )
        )
    return curves


_BUILDERS: dict[FigureId, Callable[[QuadratureConfig], list[Curve]]] = {
    FigureId.fig1a: _fig1a,
    FigureId.fig1b: _fig1b,
    FigureId.fig2: _fig2,
    FigureId.fig3_phase_averaged: _fig3,
    FigureId.fig4: _fig4,
    FigureId.fig5_fock_s: _fig5,
}


def figure_curves(figure_id: FigureId, cfg: QuadratureConfig | None = None) -> list[Curve]:
    """The curves of one figure, not yet evaluated."""
    return _BUILDERS[FigureId(figure_id)](cfg or QuadratureConfig())


def evaluate_curve(curve: Curve, threads: int = 1) -> list[Row]:
    """Evaluate every grid point of a curve, in grid order."""
    return run_points(curve.row, curve.points, threads)


def generate_figure(
    figure_id: FigureId,
    out_dir: Path,
    cfg: QuadratureConfig | None = None,
    threads: int = 1,
    on_written: Callable[[Path, int], None] | None = None,
) -> list[Path]:
    """Compute a figure's curves and write one CSV per curve into out_dir.

    Args:
        figure_id: Which figure to generate.
        out_dir: Output directory, created if missing.
        cfg: Quadrature configuration shared by every point.
        threads: Concurrent workers per curve.
        on_written: Called with (path, rows) after each file is written.

    Returns:
        Paths of the written files, in curve order.

    Raises:
        NoConvergence: If any grid point of any curve fails.
        NonFiniteValue: If any curve produces NaN or infinity.

    Every curve is computed and rendered before the first file is written,
    so a failure anywhere leaves out_dir untouched.
    """
    cfg = cfg or QuadratureConfig()
    rendered = []
    for curve in figure_curves(figure_id, cfg):
        rows = evaluate_curve(curve, threads)
        content = render_csv(curve.header, rows, cfg, curve.grid)
        rendered.append((out_dir / f"{curve.name}.csv", content, len(rows)))

    written = []
    for path, content, count in rendered:
        write_text_atomic(path, content)
        written.append(path)
        if on_written is not None:
            on_written(path, count)
    return written
