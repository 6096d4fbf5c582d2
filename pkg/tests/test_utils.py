"""Tests for the utility modules.

Test organization:
- TestEnvironment: CVCOMPLEX_* overrides and their validation
- TestCsvOutput: deterministic CSV formatting and atomic writes
- TestReportPrinter: JSON and table output
"""

import json
import math
from pathlib import Path

import pytest
from pydantic import ValidationError
from rich.console import Console

from cvcomplexity import __version__
from cvcomplexity.core.types import (
    CheckResult,
    ComplexityReport,
    Method,
    QuadratureConfig,
    QuantifierRow,
)
from cvcomplexity.utils.csvio import (
    NonFiniteValue,
    config_hash,
    format_value,
    read_csv,
    render_csv,
    write_csv,
)
from cvcomplexity.utils.env import (
    DEFAULT_THREADS,
    InvalidEnvironmentValue,
    get_pure_shortcut,
    get_threads,
    initialize_environment,
    quadrature_config_from_env,
)
from cvcomplexity.utils.output import ReportPrinter, Verbosity, create_printer


def make_report(**overrides) -> ComplexityReport:
    fields = dict(
        family="fock",
        entropy=1.5772156649,
        fisher=1.0,
        complexity=1.7810724180,
        method=Method.quadrature,
        config=QuadratureConfig(),
    )
    fields.update(overrides)
    return ComplexityReport(**fields)


def capture_printer(verbosity=Verbosity.MEDIUM, json_output=False):
    out = Console(record=True, width=120)
    err = Console(record=True, width=120)
    printer = ReportPrinter(verbosity, json_output, console=out, err_console=err)
    return printer, out, err


# =============================================================================
# TestEnvironment
# =============================================================================


class TestEnvironment:
    """Tests for the CVCOMPLEX_* environment layer."""

    def test_defaults_without_environment(self):
        assert quadrature_config_from_env() == QuadratureConfig()
        assert get_threads() == DEFAULT_THREADS

    def test_environment_overrides_defaults(self, monkeypatch):
        monkeypatch.setenv("CVCOMPLEX_REL_TOL", "1e-6")
        monkeypatch.setenv("CVCOMPLEX_RADIUS_MARGIN", " 10 ")
        monkeypatch.setenv("CVCOMPLEX_MAX_SUBDIVISIONS", "5")
        cfg = quadrature_config_from_env()
        assert cfg.target_rel_tol == 1e-6
        assert cfg.radius_margin == 10.0
        assert cfg.max_subdivisions == 5

    def test_explicit_overrides_win(self, monkeypatch):
        """Flags override the environment; None flags are ignored."""
        monkeypatch.setenv("CVCOMPLEX_REL_TOL", "1e-6")
        cfg = quadrature_config_from_env(target_rel_tol=1e-9, radius_margin=None)
        assert cfg.target_rel_tol == 1e-9
        assert cfg.radius_margin == QuadratureConfig().radius_margin

    def test_empty_value_is_unset(self, monkeypatch):
        monkeypatch.setenv("CVCOMPLEX_REL_TOL", "  ")
        assert quadrature_config_from_env().target_rel_tol == QuadratureConfig().target_rel_tol

    @pytest.mark.parametrize(
        "raw, expected", [("true", True), ("ON", True), ("0", False), ("no", False)]
    )
    def test_boolean_values(self, monkeypatch, raw, expected):
        monkeypatch.setenv("CVCOMPLEX_PURE_SHORTCUT", raw)
        assert get_pure_shortcut() is expected

    def test_malformed_boolean(self, monkeypatch):
        monkeypatch.setenv("CVCOMPLEX_PURE_SHORTCUT", "maybe")
        with pytest.raises(InvalidEnvironmentValue, match="boolean"):
            get_pure_shortcut()

    def test_malformed_number(self, monkeypatch):
        monkeypatch.setenv("CVCOMPLEX_REL_TOL", "tight")
        with pytest.raises(InvalidEnvironmentValue, match="CVCOMPLEX_REL_TOL"):
            quadrature_config_from_env()

    def test_out_of_range_value(self, monkeypatch):
        """Values that parse but violate the config bounds fail validation."""
        monkeypatch.setenv("CVCOMPLEX_REL_TOL", "2.0")
        with pytest.raises(ValidationError):
            quadrature_config_from_env()

    @pytest.mark.parametrize("raw", ["0", "-2", "four"])
    def test_bad_threads(self, monkeypatch, raw):
        monkeypatch.setenv("CVCOMPLEX_THREADS", raw)
        with pytest.raises(InvalidEnvironmentValue):
            get_threads()

    def test_threads(self, monkeypatch):
        monkeypatch.setenv("CVCOMPLEX_THREADS", "3")
        assert get_threads() == 3

    def test_dotenv_file_in_working_directory(self, tmp_path: Path, monkeypatch):
        """A .env file fills in unset variables; exported ones win."""
        (tmp_path / ".env").write_text("CVCOMPLEX_THREADS=4\nCVCOMPLEX_REL_TOL=1e-5\n")
        monkeypatch.chdir(tmp_path)
        # registered so teardown removes whatever the .env file sets
        monkeypatch.setenv("CVCOMPLEX_THREADS", "")
        monkeypatch.delenv("CVCOMPLEX_THREADS")
        monkeypatch.setenv("CVCOMPLEX_REL_TOL", "1e-7")

        assert initialize_environment()
        assert get_threads() == 4
        assert quadrature_config_from_env().target_rel_tol == 1e-7

    def test_no_dotenv_file(self, tmp_path: Path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        assert not initialize_environment()


# =============================================================================
# TestCsvOutput
# =============================================================================


class TestCsvOutput:
    """Tests for the CSV writer."""

    def test_value_formatting(self):
        assert format_value(1.0 / 3.0) == "0.3333333333"
        assert format_value(2.0) == "2"
        assert format_value(1e-12) == "1e-12"
        assert format_value(4) == "4"
        assert format_value(True) == "1"
        assert format_value("") == ""

    @pytest.mark.parametrize("value", [math.nan, math.inf, -math.inf])
    def test_non_finite_rejected(self, value):
        with pytest.raises(NonFiniteValue):
            format_value(value)

    def test_layout(self, cfg):
        content = render_csv(["x", "y"], [[0.0, 1.5], [1.0, 2.25]], cfg, "x=0..1 n=2")
        lines = content.splitlines()
        assert lines[0] == f"# cvcomplexity {__version__} config={config_hash(cfg)} x=0..1 n=2"
        assert lines[1:] == ["x,y", "0,1.5", "1,2.25"]
        assert content.endswith("\n")

    def test_config_hash_tracks_config(self, cfg):
        assert len(config_hash(cfg)) == 12
        assert config_hash(cfg) == config_hash(QuadratureConfig())
        assert config_hash(cfg) != config_hash(QuadratureConfig(target_rel_tol=1e-7))

    def test_row_length_mismatch(self, cfg):
        with pytest.raises(ValueError, match="cells"):
            render_csv(["a", "b"], [[1.0]], cfg)

    def test_write_and_read(self, tmp_path: Path, cfg):
        path = tmp_path / "nested" / "out.csv"
        count = write_csv(path, ["a", "b"], [[1.0, 2.0], [3.0, 4.5]], cfg, "grid")
        assert count == 2
        metadata, header, rows = read_csv(path)
        assert metadata.startswith("# cvcomplexity")
        assert header == ["a", "b"]
        assert rows == [["1", "2"], ["3", "4.5"]]
        assert not path.with_suffix(".csv.tmp").exists()

    def test_failed_write_leaves_nothing(self, tmp_path: Path, cfg):
        """A non-finite cell aborts the write before any file appears."""
        path = tmp_path / "out.csv"
        with pytest.raises(NonFiniteValue):
            write_csv(path, ["a"], [[1.0], [math.nan]], cfg)
        assert list(tmp_path.iterdir()) == []

    def test_failed_write_keeps_previous_file(self, tmp_path: Path, cfg):
        path = tmp_path / "out.csv"
        write_csv(path, ["a"], [[1.0]], cfg)
        before = path.read_bytes()
        with pytest.raises(NonFiniteValue):
            write_csv(path, ["a"], [[math.inf]], cfg)
        assert path.read_bytes() == before

    def test_identical_bytes(self, tmp_path: Path, cfg):
        rows = [[0.1 * i, math.exp(0.1 * i)] for i in range(10)]
        write_csv(tmp_path / "a.csv", ["x", "y"], rows, cfg)
        write_csv(tmp_path / "b.csv", ["x", "y"], rows, cfg)
        assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()


# =============================================================================
# TestReportPrinter
# =============================================================================


class TestReportPrinter:
    """Tests for ReportPrinter."""

    def test_report_json(self):
        printer, out, _ = capture_printer(json_output=True)
        printer.print_report(make_report(), QuantifierRow(mandel_q=-1.0))
        payload = json.loads(out.export_text())
        assert payload["report"]["complexity"] == pytest.approx(1.7810724180)
        assert payload["report"]["method"] == "quadrature"
        assert payload["quantifiers"]["mandel_q"] == -1.0
        assert payload["quantifiers"]["skew_info"] is None

    def test_report_json_without_quantifiers(self):
        printer, out, _ = capture_printer(json_output=True)
        printer.print_report(make_report())
        assert "quantifiers" not in json.loads(out.export_text())

    def test_minimal_prints_complexity_only(self):
        printer, out, _ = capture_printer(Verbosity.MINIMAL)
        printer.print_report(make_report())
        assert out.export_text().strip() == "1.781072418"

    def test_table(self):
        printer, out, _ = capture_printer(Verbosity.VERBOSE)
        printer.print_report(make_report(), QuantifierRow(mandel_q=-1.0))
        text = out.export_text()
        assert "Complexity" in text
        assert "Fisher information" in text
        assert "Mandel Q" in text
        assert "n/a" in text
        assert "config:" in text

    def test_checks_json(self):
        printer, out, _ = capture_printer(json_output=True)
        results = [
            CheckResult(suite="prop4", name="a", passed=True, deviation=0.0, tolerance=1e-6),
            CheckResult(suite="prop4", name="b", passed=False, deviation=1.0, tolerance=1e-6),
        ]
        printer.print_checks(results)
        payload = json.loads(out.export_text())
        assert payload["passed"] == 1
        assert payload["failed"] == 1
        assert [c["name"] for c in payload["checks"]] == ["a", "b"]

    def test_checks_summary(self):
        printer, out, _ = capture_printer(Verbosity.MINIMAL)
        printer.print_checks(
            [CheckResult(suite="prop4", name="a", passed=True, deviation=0.0, tolerance=1.0)]
        )
        text = out.export_text()
        assert "1/1 checks passed" in text
        assert "prop4" not in text

    def test_files_json(self, tmp_path: Path):
        printer, out, _ = capture_printer(json_output=True)
        printer.print_written(tmp_path / "a.csv", 3)
        printer.print_files([tmp_path / "a.csv"])
        assert json.loads(out.export_text()) == {"files": [str(tmp_path / "a.csv")]}

    def test_diagnostics_only_when_verbose(self):
        printer, _, err = capture_printer(Verbosity.MEDIUM)
        printer.diagnostic("hidden")
        assert err.export_text() == ""
        printer, _, err = capture_printer(Verbosity.VERBOSE)
        printer.diagnostic("shown [not markup]")
        assert "shown [not markup]" in err.export_text()

    def test_error_goes_to_stderr_console(self):
        printer, out, err = capture_printer()
        printer.error("bad input")
        assert "Error: bad input" in err.export_text()
        assert out.export_text() == ""

    def test_create_printer(self):
        assert create_printer("verbose").verbosity == Verbosity.VERBOSE
        assert create_printer("unknown").verbosity == Verbosity.MEDIUM
        assert create_printer(json_output=True).json_output
