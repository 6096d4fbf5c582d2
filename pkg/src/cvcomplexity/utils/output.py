"""Output utilities for rendering reports, quantifier rows and check results."""

import json
from enum import Enum
from pathlib import Path
from typing import Any

from pydantic import BaseModel
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from cvcomplexity.core.types import CheckResult, ComplexityReport, QuantifierRow


class Verbosity(Enum):
    """Verbosity levels for console output."""

    MINIMAL = "minimal"
    MEDIUM = "medium"
    VERBOSE = "verbose"


_QUANTIFIER_LABELS = {
    "mandel_q": "Mandel Q",
    "nonclassical_depth": "Nonclassical depth",
    "nonclassical_depth_unfloored": "Nonclassical depth (unfloored)",
    "skew_info": "Skew-information nonclassicality",
    "wigner_negativity": "Wigner negativity",
    "delta_A": "Non-Gaussianity (Hilbert-Schmidt)",
    "delta_B": "Non-Gaussianity (relative entropy)",
}


def _fmt(value: float | None, digits: int = 10) -> str:
    if value is None:
        return "[dim]n/a[/dim]"
    return f"{value:.{digits}g}"


class ReportPrinter:
    """Prints results either as rich tables or as raw JSON on stdout."""

    def __init__(
        self,
        verbosity: Verbosity = Verbosity.MEDIUM,
        json_output: bool = False,
        console: Console | None = None,
        err_console: Console | None = None,
    ) -> None:
        """Initialize the printer.

        Args:
            verbosity: The verbosity level for human output.
            json_output: Emit machine-readable JSON instead of tables.
            console: Optional console for results. Creates one if not provided.
            err_console: Optional console for errors and diagnostics; defaults
                to a stderr console.
        """
        self.verbosity = verbosity
        self.json_output = json_output
        self.console = console or Console()
        self.err_console = err_console or Console(stderr=True)

    def emit_json(self, payload: Any) -> None:
        """Write a JSON document to stdout without wrapping or markup."""
        if isinstance(payload, BaseModel):
            payload = payload.model_dump(mode="json")
        self.console.out(json.dumps(payload, indent=2), highlight=False)

    def print_report(
        self, report: ComplexityReport, quantifiers: QuantifierRow | None = None
    ) -> None:
        """Print a complexity report, optionally with its quantifier row."""
        if self.json_output:
            payload: dict[str, Any] = {"report": report.model_dump(mode="json")}
            if quantifiers is not None:
                payload["quantifiers"] = quantifiers.model_dump(mode="json")
            self.emit_json(payload)
            return

        if self.verbosity == Verbosity.MINIMAL:
            self.console.print(f"{report.complexity:.12g}")
            return

        table = Table(title=f"{report.family} (s = {report.s:g})", show_header=True)
        table.add_column("Quantity")
        table.add_column("Value", justify="right")
        table.add_column("Error estimate", justify="right")
        table.add_row("Entropy", _fmt(report.entropy, 12), f"{report.err_entropy:.2e}")
        table.add_row("Fisher information", _fmt(report.fisher, 12), f"{report.err_fisher:.2e}")
        table.add_row(
            "[bold]Complexity[/bold]",
            f"[bold]{report.complexity:.12g}[/bold]",
            f"{report.err_complexity:.2e}",
        )
        self.console.print(table)
        self.console.print(f"[dim]method: {report.method.value}[/dim]")

        if self.verbosity == Verbosity.VERBOSE:
            self.console.print(
                f"[dim]config: {escape(report.config.model_dump_json())}[/dim]"
            )
        if quantifiers is not None:
            self.print_quantifiers(quantifiers)

    def print_quantifiers(self, row: QuantifierRow) -> None:
        if self.json_output:
            self.emit_json(row)
            return
        table = Table(title="Comparison quantifiers", show_header=True)
        table.add_column("Quantifier")
        table.add_column("Value", justify="right")
        for field, label in _QUANTIFIER_LABELS.items():
            table.add_row(label, _fmt(getattr(row, field)))
        self.console.print(table)

    def print_checks(self, results: list[CheckResult]) -> None:
        """Print verification results, one row per check.

        Minimal verbosity only lists failures plus the summary line.
        """
        passed = sum(r.passed for r in results)
        if self.json_output:
            self.emit_json(
                {
                    "passed": passed,
                    "failed": len(results) - passed,
                    "checks": [r.model_dump(mode="json") for r in results],
                }
            )
            return

        shown = results
        if self.verbosity == Verbosity.MINIMAL:
            shown = [r for r in results if not r.passed]
        if shown:
            table = Table(show_header=True)
            table.add_column("Suite")
            table.add_column("Check")
            table.add_column("Result")
            table.add_column("Deviation", justify="right")
            table.add_column("Tolerance", justify="right")
            if self.verbosity == Verbosity.VERBOSE:
                table.add_column("Detail")
            for r in shown:
                status = "[green]pass[/green]" if r.passed else "[red]FAIL[/red]"
                cells = [
                    r.suite,
                    escape(r.name),
                    status,
                    f"{r.deviation:.3e}",
                    f"{r.tolerance:.1e}",
                ]
                if self.verbosity == Verbosity.VERBOSE:
                    cells.append(escape(r.detail))
                table.add_row(*cells)
            self.console.print(table)

        color = "green" if passed == len(results) else "red"
        self.console.print(f"[{color}]{passed}/{len(results)} checks passed[/{color}]")

    def print_written(self, path: Path, rows: int) -> None:
        """Report one CSV file written."""
        if self.json_output:
            return
        if self.verbosity != Verbosity.MINIMAL:
            self.console.print(f"[green]Wrote[/green] {escape(str(path))} ({rows} rows)")

    def print_files(self, paths: list[Path]) -> None:
        if self.json_output:
            self.emit_json({"files": [str(p) for p in paths]})

    def diagnostic(self, message: str) -> None:
        """Print a diagnostic on stderr, shown only at verbose level."""
        if self.verbosity == Verbosity.VERBOSE:
            self.err_console.print(f"[dim]{escape(message)}[/dim]")

    def error(self, message: str) -> None:
        self.err_console.print(f"[red]Error:[/red] {escape(message)}")


def create_printer(
    verbosity: str = "medium", json_output: bool = False
) -> ReportPrinter:
    """Create a ReportPrinter from a verbosity name.

    Args:
        verbosity: One of "minimal", "medium" or "verbose".
        json_output: Emit JSON instead of tables.

    Returns:
        A configured ReportPrinter.
    """
    verbosity_map = {
        "minimal": Verbosity.MINIMAL,
        "medium": Verbosity.MEDIUM,
        "verbose": Verbosity.VERBOSE,
    }
    level = verbosity_map.get(verbosity.lower(), Verbosity.MEDIUM)
    return ReportPrinter(verbosity=level, json_output=json_output)
