"""Resistance models R(omega, beta) for Nyquist-Johnson spectra."""

import logging
import math
from typing import Any, Dict

from core.interfaces.errors import ArgumentError
from core.interfaces.resistance import IResistanceModel
from core.registry.plugin_registry import PluginRegistry

logger = logging.getLogger(__name__)


def _positive(config: Dict[str, Any], key: str, kind: str) -> float:
    if key not in config:
        raise ArgumentError(f"{kind} resistance needs parameter '{key}'")
    try:
        value = float(config[key])
    except (TypeError, ValueError):
        raise ArgumentError(f"{kind} resistance parameter '{key}' is not a number: {config[key]!r}")
    if not (value > 0 and math.isfinite(value)):
        raise ArgumentError(f"{kind} resistance parameter '{key}' must be positive, got {value!r}")
    return value


def _check_omega(omega: float) -> None:
    if not omega > 0:
        raise ArgumentError(f"omega must be positive, got {omega!r}")


class ConstantResistance(IResistanceModel):
    """Frequency-independent resistance R."""

    def __init__(self, R: float):
        self._R = _positive({"R": R}, "R", "constant")

    @classmethod
    def from_config(cls, config: Dict[str, Any]) -> "ConstantResistance":
        unknown = set(config) - {"R"}
        if unknown:
            raise ArgumentError(f"Unknown constant resistance parameters: {sorted(unknown)}")
        return cls(_positive(config, "R", "constant"))

    def resistance(self, omega: float, beta: float) -> float:
        _check_omega(omega)
        return self._R

    @property
    def kind(self) -> str:
        return "constant"

    @property
    def parameters(self) -> Dict[str, float]:
        return {"R": self._R}


class ParallelRLCResistance(IResistanceModel):
    """Real part of a parallel RLC impedance.

    R(omega) = R / (1 + Q^2 (omega/omega0 - omega0/omega)^2) with
    omega0 = 1 / sqrt(L C) and Q = R sqrt(C / L). The maximum R is reached
    only at resonance.
    """

    def __init__(self, R: float, L: float, C: float):
        self._R = _positive({"R": R}, "R", "parallel_rlc")
        self._L = _positive({"L": L}, "L", "parallel_rlc")
        self._C = _positive({"C": C}, "C", "parallel_rlc")

    @classmethod
    def from_config(cls, config: Dict[str, Any]) -> "ParallelRLCResistance":
        unknown = set(config) - {"R", "L", "C"}
        if unknown:
            raise ArgumentError(f"Unknown parallel_rlc resistance parameters: {sorted(unknown)}")
        kind = "parallel_rlc"
        return cls(_positive(config, "R", kind), _positive(config, "L", kind), _positive(config, "C", kind))

    @property
    def omega0(self) -> float:
        """Resonance frequency 1 / sqrt(L C)."""
        return 1.0 / math.sqrt(self._L * self._C)

    @property
    def quality_factor(self) -> float:
        """Q = R sqrt(C / L)."""
        return self._R * math.sqrt(self._C / self._L)

    def resistance(self, omega: float, beta: float) -> float:
        _check_omega(omega)
        detuning = omega / self.omega0 - self.omega0 / omega
        q = self.quality_factor
        return self._R / (1.0 + q * q * detuning * detuning)

    @property
    def kind(self) -> str:
        return "parallel_rlc"

    @property
    def parameters(self) -> Dict[str, float]:
        return {"R": self._R, "L": self._L, "C": self._C}


def resistance(model: IResistanceModel, omega: float, beta: float) -> float:
    """Evaluate R(omega, beta) of a model.

    Raises:
        ArgumentError: If omega <= 0
    """
    _check_omega(omega)
    return model.resistance(omega, beta)


def parse_resistance_spec(spec: str) -> IResistanceModel:
    """Build a registered resistance model from 'kind:key=value,key=value'.

    Example:
        parse_resistance_spec("parallel_rlc:R=100,L=10,C=0.1")

    Raises:
        ArgumentError: For an unknown kind or a malformed parameter list
    """
    kind, _, params = spec.partition(":")
    kind = kind.strip()
    model_class = PluginRegistry().resistance_model_for(kind)

    config: Dict[str, Any] = {}
    for item in filter(None, (p.strip() for p in params.split(","))):
        key, sep, value = item.partition("=")
        if not sep:
            raise ArgumentError(f"Malformed resistance parameter '{item}' in '{spec}' (expected key=value)")
        config[key.strip()] = value.strip()

    model = model_class.from_config(config)
    logger.debug(f"Resistance model {model.kind} with {model.parameters}")
    return model
