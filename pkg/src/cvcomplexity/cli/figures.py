"""Figures command for cvcomplexity CLI."""

from pathlib import Path
from typing import Annotated

import typer

from cvcomplexity.cli.common import (
    JsonOption,
    RadiusMarginOption,
    RelTolOption,
    ThreadsOption,
    VerbosityOption,
    Verbosity,
    exit_on_error,
)
from cvcomplexity.experiments.figures import FigureId, generate_figure
from cvcomplexity.utils.env import (
    get_threads,
    initialize_environment,
    quadrature_config_from_env,
)
from cvcomplexity.utils.output import create_printer


def register_command(app: typer.Typer) -> tuple:
    """Register the figures command with the Typer app."""

    @app.command(help="Regenerate the data behind a figure as CSV files.")
    def figures(
        figure_id: Annotated[FigureId, typer.Argument(help="Figure to regenerate")],
        out_dir: Annotated[
            Path,
            typer.Option("--out-dir", "-o", help="Directory for the CSV files"),
        ] = Path("figures"),
        threads: ThreadsOption = None,
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
            workers = threads or get_threads()
            printer.diagnostic(f"{figure_id.value}: {workers} worker(s)")
            paths = generate_figure(
                figure_id, out_dir, cfg, workers, on_written=printer.print_written
            )

        printer.print_files(paths)

    return (figures,)
