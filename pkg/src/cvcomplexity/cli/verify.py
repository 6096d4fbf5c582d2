"""Verify command for cvcomplexity CLI."""

from typing import Annotated

import typer

from cvcomplexity.cli.common import (
    EXIT_CHECK_FAILED,
    JsonOption,
    RadiusMarginOption,
    RelTolOption,
    VerbosityOption,
    Verbosity,
    exit_on_error,
)
from cvcomplexity.experiments.verification import DEFAULT_SAMPLES, Suite, run_suite
from cvcomplexity.utils.env import initialize_environment, quadrature_config_from_env
from cvcomplexity.utils.output import create_printer


def register_command(app: typer.Typer) -> tuple:
    """Register the verify command with the Typer app."""

    @app.command(help="Run a verification suite and report every check.")
    def verify(
        suite: Annotated[Suite, typer.Argument(help="Suite to run")],
        energy: Annotated[
            float,
            typer.Option(help="Mean photon number for the prop4 suite"),
        ] = 1.0,
        samples: Annotated[
            int,
            typer.Option(min=0, help="Random density matrices in the propositions suite"),
        ] = DEFAULT_SAMPLES,
        seed: Annotated[
            int,
            typer.Option(help="Seed for the random density matrices"),
        ] = 0,
        rel_tol: RelTolOption = None,
        radius_margin: RadiusMarginOption = None,
        json_output: JsonOption = False,
        verbosity: VerbosityOption = Verbosity.medium,
    ) -> None:
        initialize_environment()
        printer = create_printer(verbosity.value, json_output)

        with exit_on_error(printer):
            cfg = quadrature_config_from_env(
                target_rel_tol=rel_tol, radius_margin=radius_margin
            )
            results = run_suite(suite, cfg, energy=energy, samples=samples, seed=seed)

        printer.print_checks(results)
        if not all(r.passed for r in results):
            raise typer.Exit(code=EXIT_CHECK_FAILED)

    return (verify,)
