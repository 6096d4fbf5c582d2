"""Parameter sweeps over a state template.

A sweep document names a state family in its wire form, with one or two
parameters replaced by ranges, and the quantity to evaluate:

    {
      "state": {"family": "gaussian",
                "params": {"nbar": {"from": 0, "to": 10, "steps": 11}, "r": 1.0}},
      "quantity": "complexity",
      "config": {"target_rel_tol": 1e-7}
    }

The grid is the Cartesian product of the ranges, first range outermost.
"""

import itertools
import json
from collections.abc import Callable, Mapping
from enum import Enum
from pathlib import Path
from typing import Any

import numpy as np
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationError,
    model_validator,
)

from cvcomplexity.core.errors import SpecParseError
from cvcomplexity.core.functionals import (
    complexity,
    fisher_information,
    s_complexity,
    wehrl_entropy,
)
from cvcomplexity.core.quantifiers import quantifier_row
from cvcomplexity.core.states import parse_state_spec, validate
from cvcomplexity.core.types import QuadratureConfig, QuantifierRow, StateSpec
from cvcomplexity.utils.csvio import write_csv
from cvcomplexity.utils.env import quadrature_config_from_env
from cvcomplexity.utils.runner import run_points

Cell = float | str


class Scale(str, Enum):
    linear = "linear"
    log = "log"


class Quantity(str, Enum):
    """What a sweep evaluates at each grid point."""

    complexity = "complexity"
    s_complexity = "s_complexity"
    wehrl = "wehrl"
    fisher = "fisher"
    quantifier_row = "quantifier_row"


class ParameterRange(BaseModel):
    """A swept parameter: `steps` values from `from` to `to` inclusive."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    start: float = Field(alias="from")
    to: float
    steps: int = Field(ge=2)
    scale: Scale = Scale.linear

    @model_validator(mode="after")
    def _positive_for_log(self) -> "ParameterRange":
        if self.scale is Scale.log and (self.start <= 0 or self.to <= 0):
            raise ValueError("log-scaled ranges need positive endpoints")
        return self

    def values(self) -> list[float]:
        if self.scale is Scale.log:
            return np.geomspace(self.start, self.to, self.steps).tolist()
        return np.linspace(self.start, self.to, self.steps).tolist()


class StateTemplate(BaseModel):
    """State wire form whose params may hold ranges."""

    family: str
    params: dict[str, Any] = Field(default_factory=dict)


class SweepSpec(BaseModel):
    """A parsed sweep document.

    Attributes:
        state: The state template.
        quantity: Quantity evaluated at every grid point.
        s: Ordering parameter, required for `s_complexity`.
        config: QuadratureConfig fields overriding the environment defaults.
    """

    model_config = ConfigDict(frozen=True)

    state: StateTemplate
    quantity: Quantity = Quantity.complexity
    s: float | None = None
    config: dict[str, Any] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _check(self) -> "SweepSpec":
        count = len(self.ranges)
        if not 1 <= count <= 2:
            raise ValueError(f"a sweep needs one or two ranged parameters, got {count}")
        if self.quantity is Quantity.s_complexity and self.s is None:
            raise ValueError("quantity 's_complexity' needs 's'")
        return self

    @property
    def ranges(self) -> dict[str, ParameterRange]:
        return {
            name: ParameterRange.model_validate(value)
            for name, value in self.state.params.items()
            if isinstance(value, Mapping) and "from" in value
        }

    def points(self) -> list[dict[str, float]]:
        """Grid points as {parameter: value}, first range outermost."""
        ranges = self.ranges
        names = list(ranges)
        return [
            dict(zip(names, combo))
            for combo in itertools.product(*(ranges[n].values() for n in names))
        ]

    def state_at(self, point: Mapping[str, float]) -> StateSpec:
        params = {**self.state.params, **point}
        return parse_state_spec({"family": self.state.family, "params": params})


def parse_sweep_spec(payload: str | bytes | Mapping[str, Any]) -> SweepSpec:
    """Parse a sweep document and check that its first grid point is a valid state.

    Raises:
        SpecParseError: On malformed JSON, bad ranges, or an invalid template.
    """
    if isinstance(payload, (str, bytes)):
        try:
            payload = json.loads(payload)
        except json.JSONDecodeError as e:
            raise SpecParseError(f"Sweep spec is not valid JSON: {e}") from e
    try:
        spec = SweepSpec.model_validate(payload)
    except ValidationError as e:
        raise SpecParseError(f"Invalid sweep spec: {e}") from e
    validate(spec.state_at(spec.points()[0]))
    return spec


def sweep_config(spec: SweepSpec, **flags: Any) -> QuadratureConfig:
    """Environment defaults, then the document's config, then explicit flags."""
    overrides = {**spec.config, **{k: v for k, v in flags.items() if v is not None}}
    try:
        return quadrature_config_from_env(**overrides)
    except ValidationError as e:
        raise SpecParseError(f"Invalid quadrature config: {e}") from e


def _columns(spec: SweepSpec) -> list[str]:
    match spec.quantity:
        case Quantity.complexity | Quantity.s_complexity:
            return ["entropy", "fisher", "complexity", "err_complexity"]
        case Quantity.wehrl:
            return ["entropy", "err_entropy"]
        case Quantity.fisher:
            return ["fisher", "err_fisher"]
        case Quantity.quantifier_row:
            return list(QuantifierRow.model_fields)


def _evaluator(
    spec: SweepSpec, cfg: QuadratureConfig
) -> Callable[[dict[str, float]], list[Cell]]:
    names = list(spec.ranges)

    def evaluate(point: dict[str, float]) -> list[Cell]:
        state = validate(spec.state_at(point))
        head: list[Cell] = [point[n] for n in names]
        match spec.quantity:
            case Quantity.complexity:
                rep = complexity(state, cfg)
                return head + [rep.entropy, rep.fisher, rep.complexity, rep.err_complexity]
            case Quantity.s_complexity:
                rep = s_complexity(state, spec.s, cfg)
                return head + [rep.entropy, rep.fisher, rep.complexity, rep.err_complexity]
            case Quantity.wehrl:
                return head + list(wehrl_entropy(state, cfg))
            case Quantity.fisher:
                return head + list(fisher_information(state, cfg))
            case Quantity.quantifier_row:
                row = quantifier_row(state, cfg).model_dump()
                return head + ["" if v is None else v for v in row.values()]

    return evaluate


def run_sweep(
    spec: SweepSpec, cfg: QuadratureConfig | None = None, threads: int = 1
) -> tuple[list[str], list[list[Cell]]]:
    """Evaluate the sweep; returns (header, rows) in grid order."""
    cfg = cfg or QuadratureConfig()
    header = list(spec.ranges) + _columns(spec)
    rows = run_points(_evaluator(spec, cfg), spec.points(), threads)
    return header, rows


def write_sweep(
    spec: SweepSpec,
    path: Path,
    cfg: QuadratureConfig | None = None,
    threads: int = 1,
) -> int:
    """Run a sweep and write it as one CSV; returns the number of rows."""
    cfg = cfg or QuadratureConfig()
    header, rows = run_sweep(spec, cfg, threads)
    grid = " ".join(
        f"{name}={r.start:g}..{r.to:g} steps={r.steps} {r.scale.value}"
        for name, r in spec.ranges.items()
    )
    if spec.quantity is Quantity.s_complexity:
        grid += f" s={spec.s:g}"
    return write_csv(path, header, rows, cfg, grid)
