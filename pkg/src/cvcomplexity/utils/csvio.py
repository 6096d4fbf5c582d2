"""Deterministic CSV output for sweeps and figure data.

Layout of every file:

    # cvcomplexity 0.1.0 config=<sha256 prefix> <grid description>
    header,row
    value,...

Values are written with "%.10g" so repeated runs produce identical bytes.
Files are written to a temporary sibling and renamed into place; a failure
leaves no partial file behind.
"""

import csv
import hashlib
import io
import math
from collections.abc import Iterable, Sequence
from pathlib import Path

from cvcomplexity import __version__
from cvcomplexity.core.errors import CvComplexityError
from cvcomplexity.core.types import QuadratureConfig

VALUE_FORMAT = "%.10g"
HASH_LENGTH = 12


class NonFiniteValue(CvComplexityError):
    """Raised when a NaN or infinity would be written to a CSV file."""

    pass


def config_hash(cfg: QuadratureConfig) -> str:
    """SHA-256 prefix of the canonical JSON form of a configuration."""
    digest = hashlib.sha256(cfg.model_dump_json().encode("utf-8")).hexdigest()
    return digest[:HASH_LENGTH]


def metadata_line(cfg: QuadratureConfig, grid: str = "") -> str:
    line = f"# cvcomplexity {__version__} config={config_hash(cfg)}"
    if grid:
        line += f" {grid}"
    return line


def format_value(value: float | int | str) -> str:
    """Format one cell.

    Raises:
        NonFiniteValue: For NaN or infinite floats.
    """
    if isinstance(value, str):
        return value
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, int):
        return str(value)
    if not math.isfinite(value):
        raise NonFiniteValue(f"Refusing to write non-finite value {value!r}")
    return VALUE_FORMAT % value


def render_csv(
    header: Sequence[str],
    rows: Iterable[Sequence[float | int | str]],
    cfg: QuadratureConfig,
    grid: str = "",
) -> str:
    """Render the full file content as a string."""
    buffer = io.StringIO()
    buffer.write(metadata_line(cfg, grid) + "\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        if len(row) != len(header):
            raise ValueError(
                f"Row has {len(row)} cells but the header has {len(header)}"
            )
        writer.writerow([format_value(v) for v in row])
    return buffer.getvalue()


def write_csv(
    path: Path,
    header: Sequence[str],
    rows: Iterable[Sequence[float | int | str]],
    cfg: QuadratureConfig,
    grid: str = "",
) -> int:
    """Write a CSV file atomically.

    Args:
        path: Destination file. Parent directories are created.
        header: Column names.
        rows: Data rows, one cell per column.
        cfg: Configuration hashed into the metadata line.
        grid: Free-form description of the sampling grid.

    Returns:
        The number of data rows written.

    Raises:
        NonFiniteValue: If any cell is NaN or infinite; nothing is written.
    """
    rows = list(rows)
    write_text_atomic(path, render_csv(header, rows, cfg, grid))
    return len(rows)


def write_text_atomic(path: Path, content: str) -> None:
    """Write content to a temporary sibling and rename it over `path`."""
    path.parent.mkdir(parents=True, exist_ok=True)
    temp_path = path.with_suffix(path.suffix + ".tmp")
    try:
        temp_path.write_text(content, encoding="utf-8")
        temp_path.replace(path)
    except BaseException:
        temp_path.unlink(missing_ok=True)
        raise


def read_csv(path: Path) -> tuple[str, list[str], list[list[str]]]:
    """Read a file written by `write_csv` as (metadata, header, rows)."""
    lines = path.read_text(encoding="utf-8").splitlines()
    metadata = lines[0]
    reader = csv.reader(lines[1:])
    header = next(reader)
    return metadata, header, [row for row in reader]
