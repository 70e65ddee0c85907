"""Data models for thermodynamic actions and zero modes."""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from core.interfaces.action import IActionEvaluator
from core.interfaces.errors import ArgumentError, UnsupportedError

# lambda = +inf encodes the seed itself (the lambda -> infinity member)
LAMBDA_INFINITY = math.inf


def is_seed_lambda(lam: float) -> bool:
    """Check whether a Darboux parameter is the distinguished +inf value.

    Args:
        lam: Darboux parameter

    Returns:
        True if lam is +inf
    """
    return math.isinf(lam) and lam > 0


def format_lambda(lam: float) -> str:
    """Format a Darboux parameter for names and tables."""
    return "inf" if is_seed_lambda(lam) else repr(lam)


class ActionFamily(str, Enum):
    """Action families known to the registry."""

    PLANCK = "planck"
    VACUUM = "vacuum"
    THERMAL = "thermal"
    FERMI_SYMMETRIC = "fermi_symmetric"
    GENERAL_ZERO_MODE = "general_zero_mode"
    DARBOUX = "darboux"


class ZeroModeFamily(str, Enum):
    """Zero-mode families w(x) = scale * (A e^{hbar x/2} + B e^{-hbar x/2})."""

    PLANCK = "planck"        # A = -B = 1/2, antisymmetric sinh mode
    VACUUM = "vacuum"        # A arbitrary, B = 0
    SYMMETRIC = "symmetric"  # A = B = 1/2, cosh mode
    GENERAL = "general"


# Seeds a Darboux family may start from
DARBOUX_SEEDS = (
    ActionFamily.PLANCK,
    ActionFamily.VACUUM,
    ActionFamily.FERMI_SYMMETRIC,
    ActionFamily.GENERAL_ZERO_MODE,
)


def _check_hbar(hbar: float) -> None:
    if not (hbar > 0 and math.isfinite(hbar)):
        raise ArgumentError(f"hbar must be a positive finite number, got {hbar!r}")


@dataclass(frozen=True)
class ZeroMode:
    """Zero mode of w'' = (hbar/2)^2 w.

    Attributes:
        family: Which named mode this is (fixes A and B for named modes)
        hbar: Action unit (> 0)
        scale: Normalization W_a / W_s (non-zero, inert in every action)
        A: Coefficient of e^{hbar x/2}
        B: Coefficient of e^{-hbar x/2}
    """
    family: ZeroModeFamily
    hbar: float = 1.0
    scale: float = 1.0
    A: float = 0.5
    B: float = -0.5

    def __post_init__(self):
        """Validate parameters."""
        _check_hbar(self.hbar)
        if self.scale == 0 or not math.isfinite(self.scale):
            raise ArgumentError(f"Zero-mode scale must be finite and non-zero, got {self.scale!r}")
        if self.A == 0 and self.B == 0:
            raise ArgumentError("Zero-mode coefficients (A, B) must not both vanish")
        if self.family is ZeroModeFamily.PLANCK and (self.A, self.B) != (0.5, -0.5):
            raise ArgumentError("Planck zero mode requires A = -B = 1/2")
        if self.family is ZeroModeFamily.SYMMETRIC and (self.A, self.B) != (0.5, 0.5):
            raise ArgumentError("Symmetric zero mode requires A = B = 1/2")
        if self.family is ZeroModeFamily.VACUUM and self.B != 0:
            raise ArgumentError("Vacuum zero mode requires B = 0")

    @classmethod
    def planck(cls, hbar: float = 1.0, scale: float = 1.0) -> "ZeroMode":
        """Antisymmetric mode w_a = W_a sinh(hbar x / 2)."""
        return cls(ZeroModeFamily.PLANCK, hbar, scale, 0.5, -0.5)

    @classmethod
    def vacuum(cls, hbar: float = 1.0, scale: float = 1.0, A: float = 1.0) -> "ZeroMode":
        """Vacuum mode w_V = W A e^{hbar x / 2}."""
        return cls(ZeroModeFamily.VACUUM, hbar, scale, A, 0.0)

    @classmethod
    def symmetric(cls, hbar: float = 1.0, scale: float = 1.0) -> "ZeroMode":
        """Symmetric mode w_s = W_s cosh(hbar x / 2)."""
        return cls(ZeroModeFamily.SYMMETRIC, hbar, scale, 0.5, 0.5)

    @classmethod
    def general(cls, A: float, B: float, hbar: float = 1.0, scale: float = 1.0) -> "ZeroMode":
        """General mode w_g = W (A e^{hbar x/2} + B e^{-hbar x/2})."""
        return cls(ZeroModeFamily.GENERAL, hbar, scale, A, B)

    @property
    def potential(self) -> float:
        """Bosonic potential V1 = (hbar/2)^2 shared by every mode of this form."""
        return (0.5 * self.hbar) ** 2

    def node(self) -> Optional[float]:
        """Locate the real zero of the mode.

        Returns:
            x with w(x) = 0, or None if the mode has no real zero
        """
        if self.A * self.B >= 0:
            return None
        return math.log(-self.B / self.A) / self.hbar


@dataclass(frozen=True)
class ActionModel(IActionEvaluator):
    """Tagged closed-form action f(x) = U / omega.

    The family tag decides which parameters are read: A and B only for
    general_zero_mode (and a general-zero-mode Darboux seed), lam and seed only
    for darboux. Evaluation is delegated to the evaluator registered for the
    family in the PluginRegistry.

    Attributes:
        family: Action family tag
        hbar: Action unit (> 0)
        A: Zero-mode coefficient of e^{hbar x/2}
        B: Zero-mode coefficient of e^{-hbar x/2}
        lam: Darboux parameter (+inf reproduces the seed)
        seed: Seed family of a darboux model
    """
    family: ActionFamily
    hbar: float = 1.0
    A: float = 0.0
    B: float = 0.0
    lam: float = LAMBDA_INFINITY
    seed: Optional[ActionFamily] = None

    def __post_init__(self):
        """Validate parameters for the chosen family."""
        _check_hbar(self.hbar)
        uses_ab = self.family is ActionFamily.GENERAL_ZERO_MODE or (
            self.family is ActionFamily.DARBOUX and self.seed is ActionFamily.GENERAL_ZERO_MODE
        )
        if uses_ab and self.A == 0 and self.B == 0:
            raise ArgumentError("general_zero_mode requires (A, B) != (0, 0)")
        if self.family is ActionFamily.DARBOUX:
            if self.seed not in DARBOUX_SEEDS:
                raise ArgumentError(f"Invalid Darboux seed: {self.seed!r}")
            if math.isnan(self.lam):
                raise ArgumentError("Darboux parameter must not be NaN")

    @classmethod
    def planck(cls, hbar: float = 1.0) -> "ActionModel":
        return cls(ActionFamily.PLANCK, hbar)

    @classmethod
    def vacuum(cls, hbar: float = 1.0) -> "ActionModel":
        return cls(ActionFamily.VACUUM, hbar)

    @classmethod
    def thermal(cls, hbar: float = 1.0) -> "ActionModel":
        return cls(ActionFamily.THERMAL, hbar)

    @classmethod
    def fermi_symmetric(cls, hbar: float = 1.0) -> "ActionModel":
        return cls(ActionFamily.FERMI_SYMMETRIC, hbar)

    @classmethod
    def general(cls, A: float, B: float, hbar: float = 1.0) -> "ActionModel":
        return cls(ActionFamily.GENERAL_ZERO_MODE, hbar, A, B)

    @classmethod
    def darboux(
        cls,
        seed: ActionFamily,
        lam: float,
        hbar: float = 1.0,
        A: float = 0.0,
        B: float = 0.0
    ) -> "ActionModel":
        return cls(ActionFamily.DARBOUX, hbar, A, B, lam, ActionFamily(seed))

    @property
    def name(self) -> str:
        """Family name."""
        if self.family is ActionFamily.DARBOUX:
            return f"darboux[{self.seed.value}, lambda={format_lambda(self.lam)}]"
        return self.family.value

    def evaluator(self) -> IActionEvaluator:
        """Build the registered evaluator for this model.

        Returns:
            Evaluator instance bound to this model

        Raises:
            UnsupportedError: If no evaluator is registered for the family
        """
        from core.registry.plugin_registry import PluginRegistry

        return PluginRegistry().evaluator_for(self.family)(self)

    def value(self, x: float) -> float:
        """Evaluate f(x) through the registered evaluator."""
        return self.evaluator().value(x)

    def derivative(self, x: float) -> float:
        """Evaluate f'(x) through the registered evaluator."""
        return self.evaluator().derivative(x)

    def zero_mode(self, scale: float = 1.0) -> ZeroMode:
        """Zero mode whose logarithmic derivative is this action.

        Args:
            scale: Normalization of the mode

        Returns:
            Matching ZeroMode

        Raises:
            UnsupportedError: For families without a mode of the form A e^{hbar x/2} + B e^{-hbar x/2}
        """
        if self.family is ActionFamily.PLANCK:
            return ZeroMode.planck(self.hbar, scale)
        if self.family is ActionFamily.VACUUM:
            return ZeroMode.vacuum(self.hbar, scale)
        if self.family is ActionFamily.FERMI_SYMMETRIC:
            return ZeroMode.symmetric(self.hbar, scale)
        if self.family is ActionFamily.GENERAL_ZERO_MODE:
            return ZeroMode.general(self.A, self.B, self.hbar, scale)
        raise UnsupportedError(f"Action family '{self.family.value}' has no closed-form zero mode")


@dataclass(frozen=True)
class ScaledPoint:
    """A point x = beta * omega together with its frequency and inverse temperature.

    Attributes:
        x: Scaled variable (hbar x is dimensionless)
        omega: Angular frequency (> 0)
        beta: Inverse temperature; its sign is the temperature sign
    """
    x: float
    omega: float
    beta: float

    def __post_init__(self):
        """Validate consistency."""
        if not self.omega > 0:
            raise ArgumentError(f"omega must be positive, got {self.omega!r}")
        if not math.isclose(self.x, self.beta * self.omega, rel_tol=1e-12, abs_tol=1e-300):
            raise ArgumentError(
                f"Inconsistent point: x={self.x!r} but beta*omega={self.beta * self.omega!r}"
            )

    @classmethod
    def from_beta_omega(cls, beta: float, omega: float) -> "ScaledPoint":
        return cls(beta * omega, omega, beta)
