"""Utility modules for cvcomplexity."""

from cvcomplexity.utils.csvio import (
    NonFiniteValue,
    config_hash,
    format_value,
    read_csv,
    write_csv,
    write_text_atomic,
)
from cvcomplexity.utils.env import (
    InvalidEnvironmentValue,
    get_threads,
    initialize_environment,
    quadrature_config_from_env,
)
from cvcomplexity.utils.output import ReportPrinter, Verbosity, create_printer
from cvcomplexity.utils.runner import map_points, run_points

__all__ = [
    # csvio
    "NonFiniteValue",
    "config_hash",
    "format_value",
    "read_csv",
    "write_csv",
    "write_text_atomic",
    # env
    "InvalidEnvironmentValue",
    "get_threads",
    "initialize_environment",
    "quadrature_config_from_env",
    # output
    "ReportPrinter",
    "Verbosity",
    "create_printer",
    # runner
    "map_points",
    "run_points",
]
