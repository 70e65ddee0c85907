"""Configuration data models."""

from dataclasses import dataclass, field
from typing import Any, Dict, List


@dataclass
class NumericsConfig:
    """Configuration for the numerical kernels."""
    quad_tolerance: float = 1e-10
    quad_limit: int = 200
    validation_grid_density: int = 256


@dataclass
class VerifyConfig:
    """Configuration for the verification suites."""
    tolerance: float = 1e-8
    hbar_values: List[float] = field(default_factory=lambda: [0.5, 1.0, 2.0])
    grid_start: float = 0.1
    grid_stop: float = 10.0
    grid_count: int = 64
    symmetric_half_width: float = 10.0
    lambdas: List[float] = field(default_factory=lambda: [1.0, 2.0, 10.0, 1000.0, float("inf")])
    vacuum_lambdas: List[float] = field(default_factory=lambda: [1.5, 2.0, 10.0, 1000.0])
    kink_lambdas: List[float] = field(default_factory=lambda: [1.5, 4.0, 10.0])
    kink_half_width: float = 20.0
    kink_grid_count: int = 801
    fd_tolerance: float = 1e-6
    quad_agreement: float = 1e-9
    closed_form_tolerance: float = 1e-12


@dataclass
class LoggingConfig:
    """Configuration for logging."""
    level: str = "INFO"
    format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    console_colors: bool = True


@dataclass
class ThermoDarbouxConfig:
    """Complete thermodarboux configuration."""
    numerics: NumericsConfig = field(default_factory=NumericsConfig)
    verify: VerifyConfig = field(default_factory=VerifyConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)
    run: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ThermoDarbouxConfig":
        """Build a typed configuration from a loaded YAML dictionary.

        Args:
            data: Dictionary with optional numerics/verify/logging/run sections

        Returns:
            Typed configuration

        Raises:
            TypeError: If a section contains an unknown key
        """
        data = data or {}
        return cls(
            numerics=NumericsConfig(**(data.get("numerics") or {})),
            verify=VerifyConfig(**(data.get("verify") or {})),
            logging=LoggingConfig(**(data.get("logging") or {})),
            run=dict(data.get("run") or {}),
        )
