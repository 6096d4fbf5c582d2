"""Figure data, parameter sweeps and verification suites."""

from cvcomplexity.experiments.figures import (
    Curve,
    FigureId,
    evaluate_curve,
    figure_curves,
    generate_figure,
)
from cvcomplexity.experiments.sweeps import (
    ParameterRange,
    Quantity,
    SweepSpec,
    parse_sweep_spec,
    run_sweep,
    sweep_config,
    write_sweep,
)
from cvcomplexity.experiments.verification import (
    Suite,
    run_suite,
    verify_prop4,
    verify_propositions,
    verify_table2,
)

__all__ = [
    # figures
    "Curve",
    "FigureId",
    "evaluate_curve",
    "figure_curves",
    "generate_figure",
    # sweeps
    "ParameterRange",
    "Quantity",
    "SweepSpec",
    "parse_sweep_spec",
    "run_sweep",
    "sweep_config",
    "write_sweep",
    # verification
    "Suite",
    "run_suite",
    "verify_prop4",
    "verify_propositions",
    "verify_table2",
]
