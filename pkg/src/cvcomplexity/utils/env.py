"""Environment variable utilities with optional loading from .env files.

Nothing is required from the environment: every setting has a default in
`QuadratureConfig` or the runner. The environment only overrides those
defaults, and command-line flags override the environment.

Key features:
- Loads a .env file from the current or a parent directory when one exists
- Reads CVCOMPLEX_* prefixed overrides for the quadrature policy and workers
- Rejects malformed values with InvalidEnvironmentValue instead of ignoring them
"""

import os
from typing import Any

from dotenv import find_dotenv, load_dotenv

from cvcomplexity.core.errors import CvComplexityError
from cvcomplexity.core.types import QuadratureConfig

ENV_PREFIX = "CVCOMPLEX_"
DEFAULT_THREADS = 1

_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


class InvalidEnvironmentValue(CvComplexityError):
    """Raised when an environment variable cannot be converted to its type."""

    pass


def initialize_environment() -> bool:
    """Load a .env file if one can be found.

    Values already present in the process environment take precedence over the
    file, so an exported CVCOMPLEX_REL_TOL always wins.

    Returns:
        True if a .env file was loaded.
    """
    return load_dotenv(find_dotenv(usecwd=True), override=False)


def _raw(name: str) -> str | None:
    value = os.getenv(ENV_PREFIX + name)
    if value is None or not value.strip():
        return None
    return value.strip()


def _convert(name: str, value: str, kind: type) -> Any:
    if kind is bool:
        lowered = value.lower()
        if lowered in _TRUE:
            return True
        if lowered in _FALSE:
            return False
        raise InvalidEnvironmentValue(
            f"{ENV_PREFIX}{name}={value!r} is not a boolean (use true/false)"
        )
    try:
        return kind(value)
    except ValueError as e:
        raise InvalidEnvironmentValue(
            f"{ENV_PREFIX}{name}={value!r} is not a valid {kind.__name__}"
        ) from e


def get_rel_tol() -> float | None:
    """Relative tolerance override from CVCOMPLEX_REL_TOL."""
    value = _raw("REL_TOL")
    return None if value is None else _convert("REL_TOL", value, float)


def get_radius_margin() -> float | None:
    """Integration half-width override from CVCOMPLEX_RADIUS_MARGIN."""
    value = _raw("RADIUS_MARGIN")
    return None if value is None else _convert("RADIUS_MARGIN", value, float)


def get_max_subdivisions() -> int | None:
    value = _raw("MAX_SUBDIVISIONS")
    return None if value is None else _convert("MAX_SUBDIVISIONS", value, int)


def get_pure_shortcut() -> bool | None:
    value = _raw("PURE_SHORTCUT")
    return None if value is None else _convert("PURE_SHORTCUT", value, bool)


def get_threads() -> int:
    """Worker count from CVCOMPLEX_THREADS, defaulting to DEFAULT_THREADS.

    Raises:
        InvalidEnvironmentValue: If the value is not a positive integer.
    """
    value = _raw("THREADS")
    if value is None:
        return DEFAULT_THREADS
    threads = _convert("THREADS", value, int)
    if threads < 1:
        raise InvalidEnvironmentValue(f"{ENV_PREFIX}THREADS must be >= 1, got {threads}")
    return threads


def quadrature_config_from_env(**overrides: Any) -> QuadratureConfig:
    """Build a QuadratureConfig from defaults, the environment and overrides.

    Args:
        **overrides: QuadratureConfig fields set explicitly (for example from
            CLI flags). None values are skipped.

    Returns:
        The merged configuration.
    """
    fields: dict[str, Any] = {
        "target_rel_tol": get_rel_tol(),
        "radius_margin": get_radius_margin(),
        "max_subdivisions": get_max_subdivisions(),
        "pure_shortcut": get_pure_shortcut(),
    }
    fields.update(overrides)
    return QuadratureConfig(**{k: v for k, v in fields.items() if v is not None})
