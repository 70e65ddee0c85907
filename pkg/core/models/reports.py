"""Run configuration and verification report models."""

import math
from typing import List, Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

CommandName = Literal["action", "family", "verify", "spectrum"]
SuiteName = Literal["riccati", "darboux", "limits", "entropy", "fdt", "all"]


class GridSpec(BaseModel):
    """Sample grid given either as start:stop:count or as explicit values."""
    model_config = ConfigDict(extra="forbid", frozen=True)

    start: Optional[float] = None
    stop: Optional[float] = None
    count: Optional[int] = None
    values: Optional[List[float]] = None
    log: bool = False

    @model_validator(mode="after")
    def _check_form(self) -> "GridSpec":
        if self.values is not None:
            if len(self.values) < 1:
                raise ValueError("explicit grid must contain at least one value")
            if any(b <= a for a, b in zip(self.values, self.values[1:])):
                raise ValueError("explicit grid must be strictly increasing")
            return self
        if self.start is None or self.stop is None or self.count is None:
            raise ValueError("range grid needs start, stop and count")
        if self.count < 2:
            raise ValueError(f"grid count must be >= 2, got {self.count}")
        if self.stop <= self.start:
            raise ValueError("grid stop must exceed start")
        if self.log and self.start <= 0:
            raise ValueError("log-spaced grid needs a positive start")
        return self

    @classmethod
    def parse(cls, text: str, log: bool = False) -> "GridSpec":
        """Parse 'start:stop:count' or a comma-separated list of values.

        Raises:
            ValueError: If the text is malformed
        """
        text = text.strip()
        if ":" in text:
            parts = text.split(":")
            if len(parts) != 3:
                raise ValueError(f"grid '{text}' must have the form start:stop:count")
            return cls(start=float(parts[0]), stop=float(parts[1]), count=int(parts[2]), log=log)
        values = [float(v) for v in text.split(",") if v.strip()]
        return cls(values=values, log=log)

    def points(self) -> List[float]:
        """Materialize the grid.

        Returns:
            Strictly increasing list of sample points
        """
        if self.values is not None:
            return list(self.values)
        if self.log:
            pts = np.logspace(math.log10(self.start), math.log10(self.stop), self.count)
        else:
            pts = np.linspace(self.start, self.stop, self.count)
        return [float(p) for p in pts]


class RunConfig(BaseModel):
    """Validated settings of one CLI invocation. Unknown keys are rejected."""
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    command: CommandName
    hbar: float = Field(default=1.0, gt=0)
    grid: Optional[GridSpec] = None
    lambdas: List[float] = Field(default_factory=lambda: [math.inf], alias="lambda")
    family: str = "planck"
    seed: str = "planck"
    A: float = 0.5
    B: float = -0.5
    scale: float = 1.0
    omega: Optional[float] = Field(default=None, gt=0)
    resistance: str = "constant:R=1"
    beta: float = 1.0
    output_format: Literal["csv", "json"] = "csv"
    output_path: Optional[str] = None
    tolerance: float = Field(default=1e-8, gt=0)
    strict_lambda: bool = True
    suite: SuiteName = "all"
    include_seed: bool = False
    allow_negative_x: bool = False
    i0_mode: Optional[Literal["closed_form", "quadrature"]] = None

    @field_validator("grid", mode="before")
    @classmethod
    def _parse_grid(cls, value):
        if isinstance(value, str):
            return GridSpec.parse(value)
        return value

    @field_validator("lambdas", mode="before")
    @classmethod
    def _parse_lambdas(cls, value):
        if isinstance(value, str):
            return [float(v) for v in value.split(",") if v.strip()]
        if isinstance(value, (int, float)):
            return [value]
        return value

    @field_validator("lambdas")
    @classmethod
    def _check_lambdas(cls, value: List[float]) -> List[float]:
        if not value:
            raise ValueError("at least one lambda is required")
        if any(math.isnan(v) for v in value):
            raise ValueError("lambda must not be NaN")
        return value


class CheckResult(BaseModel):
    """Outcome of one verification check."""
    model_config = ConfigDict(frozen=True)

    name: str
    max_residual: float
    tolerance: float
    passed: bool


class VerifyReport(BaseModel):
    """Machine-readable result of a verification run."""

    suite: SuiteName
    checks: List[CheckResult]
    overall: bool

    @model_validator(mode="after")
    def _check_overall(self) -> "VerifyReport":
        if self.overall != all(check.passed for check in self.checks):
            raise ValueError("overall must be the conjunction of all checks")
        return self

    @classmethod
    def from_checks(cls, suite: str, checks: List[CheckResult]) -> "VerifyReport":
        """Build a report whose overall flag is the conjunction of its checks."""
        return cls(suite=suite, checks=checks, overall=all(c.passed for c in checks))

    def failed(self) -> List[CheckResult]:
        """Checks that did not pass."""
        return [check for check in self.checks if not check.passed]
