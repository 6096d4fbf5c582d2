"""Options and error handling shared by the CLI commands.

Exit codes:
    0: success
    1: a verification check failed
    2: the input could not be parsed or validated
    3: a numerical result could not be obtained (non-convergence)
"""

from collections.abc import Iterator
from contextlib import contextmanager
from enum import Enum
from pathlib import Path
from typing import Annotated

import typer
from pydantic import ValidationError

from cvcomplexity.core.errors import CvComplexityError, NoConvergence, SpecParseError
from cvcomplexity.utils.csvio import NonFiniteValue
from cvcomplexity.utils.output import ReportPrinter

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_NUMERICAL_ERROR = 3


class Verbosity(str, Enum):
    """Output verbosity level."""

    minimal = "minimal"
    medium = "medium"
    verbose = "verbose"


RelTolOption = Annotated[
    float | None,
    typer.Option("--rel-tol", help="Relative tolerance of every integral"),
]
RadiusMarginOption = Annotated[
    float | None,
    typer.Option(
        "--radius-margin", help="Integration half-width in units of the state's spread"
    ),
]
ThreadsOption = Annotated[
    int | None,
    typer.Option("--threads", min=1, help="Concurrent workers (default: CVCOMPLEX_THREADS or 1)"),
]
JsonOption = Annotated[
    bool,
    typer.Option("--json", help="Output raw JSON without Rich formatting."),
]
VerbosityOption = Annotated[
    Verbosity,
    typer.Option(help="Output verbosity level"),
]


def read_input(path: Path) -> str:
    """Read an input document.

    Raises:
        SpecParseError: If the file cannot be read.
    """
    try:
        return path.read_text(encoding="utf-8")
    except OSError as e:
        raise SpecParseError(f"Cannot read {path}: {e.strerror or e}") from e


@contextmanager
def exit_on_error(printer: ReportPrinter) -> Iterator[None]:
    """Translate library errors into the exit-code contract."""
    try:
        yield
    except (NoConvergence, NonFiniteValue) as e:
        printer.error(str(e))
        raise typer.Exit(code=EXIT_NUMERICAL_ERROR) from e
    except (CvComplexityError, ValidationError) as e:
        printer.error(str(e))
        raise typer.Exit(code=EXIT_INPUT_ERROR) from e
