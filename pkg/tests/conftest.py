"""Shared fixtures for the cvcomplexity test suite."""

import pytest

from cvcomplexity.core.types import QuadratureConfig


@pytest.fixture
def cfg() -> QuadratureConfig:
    """Default quadrature configuration."""
    return QuadratureConfig()


@pytest.fixture
def integral_cfg() -> QuadratureConfig:
    """Configuration that always integrates the Fisher density."""
    return QuadratureConfig(pure_shortcut=False)


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Keep CVCOMPLEX_* overrides from the developer's shell out of the tests."""
    for name in (
        "CVCOMPLEX_REL_TOL",
        "CVCOMPLEX_RADIUS_MARGIN",
        "CVCOMPLEX_MAX_SUBDIVISIONS",
        "CVCOMPLEX_THREADS",
        "CVCOMPLEX_PURE_SHORTCUT",
    ):
        monkeypatch.delenv(name, raising=False)
