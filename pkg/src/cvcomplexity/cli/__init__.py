"""CLI entry point for cvcomplexity using Typer."""

import typer

from cvcomplexity.cli import compute, figures, sweep, verify

app = typer.Typer(
    help="Phase-space complexity of single-mode continuous-variable states.",
    no_args_is_help=True,
)

compute.register_command(app)
sweep.register_command(app)
figures.register_command(app)
verify.register_command(app)

if __name__ == "__main__":
    app()
