"""Compute command for cvcomplexity CLI."""

from pathlib import Path
from typing import Annotated

import typer

from cvcomplexity.cli.common import (
    JsonOption,
    RadiusMarginOption,
    RelTolOption,
    VerbosityOption,
    Verbosity,
    exit_on_error,
    read_input,
)
from cvcomplexity.core.functionals import complexity, s_complexity
from cvcomplexity.core.quantifiers import quantifier_row
from cvcomplexity.core.states import parse_state_spec, validate
from cvcomplexity.core.types import Method
from cvcomplexity.utils.env import initialize_environment, quadrature_config_from_env
from cvcomplexity.utils.output import create_printer


def register_command(app: typer.Typer) -> tuple:
    """Register the compute command with the Typer app."""

    @app.command(help="Compute the complexity of one state described in a JSON file.")
    def compute(
        spec_path: Annotated[
            Path,
            typer.Argument(help='State spec JSON: {"family": ..., "params": {...}}'),
        ],
        s: Annotated[
            float | None,
            typer.Option("--s", help="Ordering parameter of the s-ordered complexity"),
        ] = None,
        quantifiers: Annotated[
            bool,
            typer.Option("--quantifiers", help="Also report the comparison quantifiers"),
        ] = False,
        method: Annotated[
            Method | None,
            typer.Option(help="Force closed_form or quadrature (default: automatic)"),
        ] = None,
        rel_tol: RelTolOption = None,
        radius_margin: RadiusMarginOption = None,
        json_output: JsonOption = False,
        verbosity: VerbosityOption = Verbosity.medium,
    ) -> None:
        initialize_environment()
        printer = create_printer(verbosity.value, json_output)

        with exit_on_error(printer):
            state = validate(parse_state_spec(read_input(spec_path)))
            cfg = quadrature_config_from_env(
                target_rel_tol=rel_tol, radius_margin=radius_margin
            )
            printer.diagnostic(f"state: {state.spec.model_dump_json()}")
            printer.diagnostic(f"config: {cfg.model_dump_json()}")

            if s is None:
                report = complexity(state, cfg, method)
            else:
                report = s_complexity(state, s, cfg, method)
            row = quantifier_row(state, cfg) if quantifiers else None

        printer.print_report(report, row)

    return (compute,)
