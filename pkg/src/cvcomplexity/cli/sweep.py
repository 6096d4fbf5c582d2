"""Sweep command for cvcomplexity CLI."""

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
    read_input,
)
from cvcomplexity.experiments.sweeps import parse_sweep_spec, sweep_config, write_sweep
from cvcomplexity.utils.env import get_threads, initialize_environment
from cvcomplexity.utils.output import create_printer


def register_command(app: typer.Typer) -> tuple:
    """Register the sweep command with the Typer app."""

    @app.command(help="Evaluate a quantity over a parameter grid and write one CSV.")
    def sweep(
        sweep_path: Annotated[
            Path,
            typer.Argument(help="Sweep spec JSON with one or two ranged parameters"),
        ],
        output: Annotated[
            Path,
            typer.Option("--output", "-o", help="Destination CSV file"),
        ],
        threads: ThreadsOption = None,
        rel_tol: RelTolOption = None,
        radius_margin: RadiusMarginOption = None,
        json_output: JsonOption = False,
        verbosity: VerbosityOption = Verbosity.medium,
    ) -> None:
        initialize_environment()
        printer = create_printer(verbosity.value, json_output)

        with exit_on_error(printer):
            spec = parse_sweep_spec(read_input(sweep_path))
            cfg = sweep_config(spec, target_rel_tol=rel_tol, radius_margin=radius_margin)
            workers = threads or get_threads()
            printer.diagnostic(
                f"{len(spec.points())} grid points, {workers} worker(s), "
                f"config {cfg.model_dump_json()}"
            )
            rows = write_sweep(spec, output, cfg, workers)

        printer.print_written(output, rows)
        printer.print_files([output])

    return (sweep,)
